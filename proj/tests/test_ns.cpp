#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kummer/ns_lattice.hpp"

using namespace kummer;

namespace {

HalfSet hs(const std::string& s) { return HalfSet::parse(s); }

QVec nodes_sum(std::initializer_list<const char*> names) {
  QVec v = QVec::Zero(kNsDim);
  for (const char* n : names) v += node_vector(hs(n));
  return v;
}

}  // namespace

TEST_CASE("curve intersection numbers: the full 33x33 gram matrix") {
  const auto& amb = ns_model().ambient;
  QVec h = hyperplane_vector();
  CHECK(amb->inner(h, h) == 4);

  for (const HalfSet& a : all_even()) {
    CHECK(amb->inner(h, node_vector(a)) == 0);
    for (const HalfSet& a2 : all_even())
      CHECK(amb->inner(node_vector(a), node_vector(a2)) ==
            (a == a2 ? -2 : 0));
  }
  for (const HalfSet& b : all_odd()) {
    QVec t = trope_vector(b);
    CHECK(amb->inner(h, t) == 2);
    CHECK(amb->inner(t, t) == -2);
    for (const HalfSet& b2 : all_odd())
      if (!(b == b2)) CHECK(amb->inner(t, trope_vector(b2)) == 0);
    for (const HalfSet& a : all_even())
      CHECK(amb->inner(node_vector(a), t) == (incidence(a, b) ? 1 : 0));
  }
}

TEST_CASE("trope expansion in nodes") {
  QVec expect =
      (hyperplane_vector() -
       nodes_sum({"[0]", "[16]", "[26]", "[36]", "[46]", "[56]"})) /
      2;
  CHECK(trope_vector(hs("[6]")) == expect);
  CHECK(node_vector(hs("[12]")) != node_vector(hs("[13]")));
  CHECK_THROWS_AS(node_vector(hs("[1]")), std::invalid_argument);
}

TEST_CASE("lattice shape: rank, determinant, discriminant group") {
  const NsModel& m = ns_model();
  CHECK(m.lattice.rank() == 17);
  CHECK(is_even(m.lattice));
  CHECK(m.lattice.det() == 64);  // sign (-1)^16 from the signature
  CHECK(discriminant_group(m.lattice).order() == 64);

  QVec half_all = QVec::Zero(kNsDim);
  for (const HalfSet& a : all_even()) half_all += node_vector(a);
  CHECK(m.lattice.contains(half_all / 2));
  CHECK(m.lattice.contains(hyperplane_vector()));
  for (const HalfSet& b : all_odd()) CHECK(m.lattice.contains(trope_vector(b)));
  // H is not in the span of the nodes alone
  QMat node_rows(16, kNsDim);
  for (int i = 0; i < 16; ++i)
    node_rows.row(i) = node_vector(all_even()[static_cast<size_t>(i)]).transpose();
  CHECK_FALSE(Sublattice(m.ambient, node_rows).contains(hyperplane_vector()));
}

TEST_CASE("discriminant classes over (e1,f1,e2,f2,g)") {
  const NsModel& m = ns_model();
  QVec g = m.disc_basis.row(4).transpose();
  CHECK(disc_class(g) == m.disc_form.reduce({0, 0, 0, 0, 1}));

  QVec v = hyperplane_vector() / 4 +
           nodes_sum({"[0]", "[12]", "[23]", "[13]"}) / 2;
  CHECK(disc_class(v) == m.disc_form.reduce({1, 0, 0, 1, 1}));

  CHECK(disc_class(hyperplane_vector() / 2) ==
        m.disc_form.reduce({0, 0, 0, 0, 2}));

  CHECK_THROWS_AS(disc_class(hyperplane_vector() / 4), std::invalid_argument);

  // classes are consistent under lattice translation and addition
  CHECK(disc_class(g + m.lattice.basis_row(3)) == disc_class(g));
  CHECK(disc_class(g + v) == m.disc_form.add(disc_class(g), disc_class(v)));
}

TEST_CASE("the disc basis verifies and generates") {
  auto log = verify_disc_basis();
  CHECK(log.size() > 70);  // 64 coverage checks plus the identity checks
}

TEST_CASE("discriminant form identifications") {
  const NsModel& m = ns_model();
  CHECK(forms_isometric(m.disc_form, u2_pow_plus_quarter(2)).has_value());
  CHECK(distinguished_element(m.disc_form) ==
        disc_class(hyperplane_vector() / 2));

  // sign-reversed form matches the transcendental model U(2)^2 + <-4>
  std::vector<Rational> nq;
  QMat nb(5, 5);
  const Rational two = 2, one = 1;
  for (int i = 0; i < 5; ++i) {
    nq.push_back(mod_into(-m.disc_form.q(m.disc_form.generator(i)), two));
    for (int j = 0; j < 5; ++j)
      nb(i, j) = mod_into(
          -m.disc_form.b(m.disc_form.generator(i), m.disc_form.generator(j)),
          one);
  }
  FiniteQuadraticForm minus_ns({2, 2, 2, 2, 4}, std::move(nq), std::move(nb));
  Sublattice t(make_ambient(gram_t()), QMat::Identity(5, 5));
  CHECK(forms_isometric(minus_ns, from_lattice(t).form).has_value());
}

TEST_CASE("signature computation on reference lattices") {
  CHECK(signature(gram_t()) == std::make_pair(2, 3));
  CHECK(signature(gram_n()) == std::make_pair(2, 10));
  CHECK(signature(gram_m()) == std::make_pair(1, 9));
  CHECK(signature(gram_e7(2)) == std::make_pair(0, 7));
  CHECK(signature(gram_ns_abstract()) == std::make_pair(1, 16));
  CHECK(signature(ns_model().lattice.gram()) == std::make_pair(1, 16));
  QMat zero = QMat::Zero(2, 2);
  CHECK_THROWS_AS(signature(zero), std::invalid_argument);
}

TEST_CASE("curve-span model matches the abstract orthogonal model") {
  GenusReport r = reconcile_abstract_model();
  CHECK(r.ok);
  for (const std::string& line : r.checks)
    CHECK(line.substr(0, 3) == "ok:");
}
