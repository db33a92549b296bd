#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/lattice.hpp"

using namespace kummer;

namespace {

QMat qdiag(std::initializer_list<long> d) {
  QMat m = QMat::Zero(static_cast<Eigen::Index>(d.size()),
                      static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (long v : d) m(i, i) = v, ++i;
  return m;
}

QMat qmat(std::initializer_list<std::initializer_list<long>> rows) {
  QMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Hyperbolic plane U, scaled variants via ambient gram.
QMat u_gram() { return qmat({{0, 1}, {1, 0}}); }

// Negated E7 Cartan matrix (bourbaki numbering), scaled by s.
QMat e7_gram(long s) {
  // Dynkin diagram: 1-3-4-5-6-7 chain with 2 attached to 4.
  int adj[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
  QMat m = QMat::Zero(7, 7);
  for (int i = 0; i < 7; ++i) m(i, i) = -2 * s;
  for (auto& e : adj) {
    m(e[0] - 1, e[1] - 1) = s;
    m(e[1] - 1, e[0] - 1) = s;
  }
  return m;
}

Sublattice full_lattice(const QMat& gram) {
  auto amb = make_ambient(gram);
  return Sublattice(amb, QMat(QMat::Identity(gram.rows(), gram.cols())));
}

}  // namespace

TEST_CASE("sublattice gram identity and evenness") {
  auto amb = make_ambient(qdiag({4, -2, -2}));
  QMat gens = qmat({{1, 0, 0}, {0, 1, 1}, {0, 1, -1}});
  Sublattice l(amb, gens);
  CHECK(l.rank() == 3);
  CHECK(l.gram() == l.basis() * amb->gram() * l.basis().transpose());
  CHECK(is_even(l));
}

TEST_CASE("membership") {
  auto amb = make_ambient(qdiag({4, -2, -2}));
  Sublattice l(amb, qmat({{2, 0, 0}, {0, 1, 1}}));
  QVec zero = QVec::Zero(3);
  CHECK(l.contains(zero));
  CHECK(l.contains(QVec(l.basis_row(0))));
  QVec half = l.basis_row(0) / Rational(2);
  CHECK_FALSE(l.contains(half));
  // denominator-bound brute force oracle: no rational combination c/2 of the
  // basis rows equals half except c = (1,0), which is not integral
  bool found = false;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      QVec v = Rational(a) * l.basis_row(0) + Rational(b) * l.basis_row(1);
      if (v == half) found = true;
    }
  CHECK_FALSE(found);
  QVec bad(2);
  CHECK_THROWS_AS(l.contains(bad), std::invalid_argument);
}

TEST_CASE("dual of rank-1 <2> and of U") {
  Sublattice l2 = full_lattice(qmat({{2}}));
  Sublattice d2 = dual_basis(l2);
  CHECK(d2.basis()(0, 0) == Rational(1, 2));

  Sublattice u = full_lattice(u_gram());
  Sublattice du = dual_basis(u);
  CHECK(du.basis() == u.basis());  // unimodular
  // L** == L by mutual containment
  Sublattice ddu = dual_basis(du);
  CHECK(ddu.contains(u));
  CHECK(u.contains(ddu));
}

TEST_CASE("dual index of E7(2) is 256") {
  Sublattice k = full_lattice(e7_gram(2));
  CHECK(k.det() == -256);  // det = (-1)^7 * 2^8
  auto g = discriminant_group(k);
  CHECK(g.order() == 256);
}

TEST_CASE("discriminant groups: U trivial, U(2) is (Z/2)^2, E7(2)") {
  auto gu = discriminant_group(full_lattice(u_gram()));
  CHECK(gu.invariant_factors.empty());

  auto gu2 = discriminant_group(full_lattice(QMat(2 * u_gram())));
  REQUIRE(gu2.invariant_factors.size() == 2);
  CHECK(gu2.invariant_factors[0] == 2);
  CHECK(gu2.invariant_factors[1] == 2);

  Sublattice e72 = full_lattice(e7_gram(2));
  auto ge = discriminant_group(e72);
  REQUIRE(ge.invariant_factors.size() == 7);
  for (int i = 0; i < 6; ++i) CHECK(ge.invariant_factors[i] == 2);
  CHECK(ge.invariant_factors[6] == 4);
  // generator reps lie in L*: pair integrally with every basis vector
  for (Eigen::Index i = 0; i < ge.generator_reps.rows(); ++i)
    for (int j = 0; j < e72.rank(); ++j) {
      Rational p = e72.ambient()->inner(
          QVec(ge.generator_reps.row(i).transpose()), e72.basis_row(j));
      CHECK(is_integer(p));
    }
}

TEST_CASE("orthogonal complement edge cases") {
  Sublattice l = full_lattice(qdiag({-2, -2, -4}));
  CHECK(orthogonal_complement(l, l).rank() == 0);
  CHECK(orthogonal_complement(l, Sublattice::zero(l.ambient())).basis() ==
        l.basis());
  Sublattice s(l.ambient(), qmat({{1, 1, 0}}));
  Sublattice c = orthogonal_complement(l, s);
  CHECK(c.rank() == 2);
  for (int i = 0; i < c.rank(); ++i)
    CHECK(l.ambient()->inner(c.basis_row(i), s.basis_row(0)) == 0);
  Sublattice outside(l.ambient(), qmat({{1, 0, 0}}) / Rational(2));
  CHECK_THROWS_AS(orthogonal_complement(l, outside), std::invalid_argument);
}

TEST_CASE("short vectors of <-4> and E7(2)") {
  Sublattice a12 = full_lattice(qmat({{-4}}));
  auto sv = short_vectors(a12, 4);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0].norm == -4);
  CHECK(sv[1].norm == -4);

  Sublattice e72 = full_lattice(e7_gram(2));
  CHECK(short_vectors(e72, 2).empty());
  auto sv4 = short_vectors(e72, 4);
  CHECK(sv4.size() == 126);
  for (auto& v : sv4) CHECK(v.norm == -4);
  // closed under negation
  for (auto& v : sv4) {
    bool neg_found = false;
    for (auto& w : sv4)
      if (w.coefficients == ZVec(-v.coefficients)) neg_found = true;
    CHECK(neg_found);
  }
}

TEST_CASE("short vector count matches brute-force box oracle") {
  Sublattice e72 = full_lattice(e7_gram(2));
  // independent oracle: exhaust the coefficient box [-4,4]^7 (the highest
  // root of E7 has a coefficient 4)
  int count = 0;
  for (long x0 = -4; x0 <= 4; ++x0)
    for (long x1 = -4; x1 <= 4; ++x1)
      for (long x2 = -4; x2 <= 4; ++x2)
        for (long x3 = -4; x3 <= 4; ++x3)
          for (long x4 = -4; x4 <= 4; ++x4)
            for (long x5 = -4; x5 <= 4; ++x5)
              for (long x6 = -4; x6 <= 4; ++x6) {
                long v[7] = {x0, x1, x2, x3, x4, x5, x6};
                QVec q(7);
                for (int i = 0; i < 7; ++i) q(i) = v[i];
                Rational n = (q.transpose() * e72.gram() * q)(0, 0);
                if (n == -4) ++count;
              }
  CHECK(count == 126);
}

TEST_CASE("isometry search") {
  Sublattice e72 = full_lattice(e7_gram(2));
  auto self = isometry_search(e72, e72);
  REQUIRE(self.has_value());
  CHECK(to_rational_matrix(*self) * e72.gram() *
            to_rational_matrix(*self).transpose() ==
        e72.gram());

  Sublattice m4 = full_lattice(qmat({{-4}}));
  auto r1 = isometry_search(m4, m4);
  REQUIRE(r1.has_value());

  // A2(2) vs diag(-4,-4): same rank but no isometry (dets 12*? differ)
  Sublattice a22 = full_lattice(qmat({{-4, 2}, {2, -4}}));
  Sublattice d44 = full_lattice(qdiag({-4, -4}));
  CHECK_FALSE(isometry_search(a22, d44).has_value());
}

TEST_CASE("eigenlattice basics") {
  Sublattice l = full_lattice(qdiag({-2, -2}));
  QMat id = QMat::Identity(2, 2);
  CHECK(eigenlattice(l, id, 1).basis() == l.basis());
  CHECK(eigenlattice(l, id, -1).rank() == 0);
  QMat swap = qmat({{0, 1}, {1, 0}});
  Sublattice plus = eigenlattice(l, swap, 1);
  Sublattice minus = eigenlattice(l, swap, -1);
  CHECK(plus.rank() == 1);
  CHECK(minus.rank() == 1);
  CHECK(l.ambient()->inner(plus.basis_row(0), minus.basis_row(0)) == 0);
  QMat not_isom = qmat({{2, 0}, {0, 1}});
  CHECK_THROWS_AS(eigenlattice(l, not_isom, 1), std::invalid_argument);
}
