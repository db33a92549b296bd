#include "kummer/ns_lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kummer {

int node_index(const HalfSet& alpha) {
  if (!alpha.is_even())
    throw std::invalid_argument("node_index: even class required");
  const HalfSetList& ev = all_even();
  auto it = std::lower_bound(ev.begin(), ev.end(), alpha);
  return static_cast<int>(it - ev.begin()) + 1;
}

QVec hyperplane_vector() {
  QVec v = QVec::Zero(kNsDim);
  v(0) = 1;
  return v;
}

QVec node_vector(const HalfSet& alpha) {
  QVec v = QVec::Zero(kNsDim);
  v(node_index(alpha)) = 1;
  return v;
}

QVec trope_vector(const HalfSet& beta) {
  QVec v = hyperplane_vector();
  for (const HalfSet& alpha : lambda_of(beta)) v -= node_vector(alpha);
  return v / 2;
}

namespace {

QVec half_node_sum(std::initializer_list<const char*> nodes) {
  QVec v = QVec::Zero(kNsDim);
  for (const char* n : nodes) v += node_vector(HalfSet::parse(n));
  return v / 2;
}

NsModel build_model() {
  QMat gram = QMat::Identity(kNsDim, kNsDim) * Rational(-2);
  gram(0, 0) = 4;
  AmbientPtr ambient = make_ambient(gram);

  QMat gens(32, kNsDim);
  for (int i = 0; i < 16; ++i)
    gens.row(i) = node_vector(all_even()[static_cast<size_t>(i)]).transpose();
  for (int i = 0; i < 16; ++i)
    gens.row(16 + i) = trope_vector(all_odd()[static_cast<size_t>(i)]).transpose();
  Sublattice ns(ambient, gens);

  QMat basis(5, kNsDim);
  basis.row(0) = half_node_sum({"[26]", "[12]", "[36]", "[13]"}).transpose();
  basis.row(1) = half_node_sum({"[16]", "[12]", "[46]", "[24]"}).transpose();
  basis.row(2) = half_node_sum({"[26]", "[12]", "[46]", "[14]"}).transpose();
  basis.row(3) = half_node_sum({"[16]", "[12]", "[36]", "[23]"}).transpose();
  basis.row(4) =
      (hyperplane_vector() / 4 + half_node_sum({"[0]", "[16]", "[26]", "[12]"}))
          .transpose();

  std::vector<long> orders{2, 2, 2, 2, 4};
  std::vector<Rational> q;
  QMat b(5, 5);
  const Rational two = 2, one = 1;
  for (int i = 0; i < 5; ++i) {
    QVec vi = basis.row(i).transpose();
    q.push_back(mod_into(ambient->inner(vi, vi), two));
    for (int j = 0; j < 5; ++j)
      b(i, j) = mod_into(ambient->inner(vi, basis.row(j).transpose()), one);
  }
  return {ambient, std::move(ns), std::move(basis),
          FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b))};
}

}  // namespace

const NsModel& ns_model() {
  static const NsModel m = build_model();
  return m;
}

FqElement disc_class(const QVec& v) {
  const NsModel& m = ns_model();
  for (int i = 0; i < m.lattice.rank(); ++i)
    if (!is_integer(m.ambient->inner(v, m.lattice.basis_row(i))))
      throw std::invalid_argument("disc_class: vector not in the dual lattice");
  for (const FqElement& x : m.disc_form.elements())
    if (m.lattice.contains(v - disc_rep(x))) return x;
  throw std::logic_error("disc_class: basis does not cover the class");
}

QVec disc_rep(const FqElement& x) {
  const NsModel& m = ns_model();
  QVec v = QVec::Zero(kNsDim);
  for (int i = 0; i < 5; ++i)
    v += Rational(x.c[static_cast<size_t>(i)]) * m.disc_basis.row(i).transpose();
  return v;
}

namespace {

void require(bool cond, const std::string& what,
             std::vector<std::string>& log) {
  if (!cond) throw std::logic_error("disc basis check failed: " + what);
  log.push_back(what);
}

}  // namespace

std::vector<std::string> verify_disc_basis() {
  const NsModel& m = ns_model();
  std::vector<std::string> log;
  const char* names[5] = {"e1", "f1", "e2", "f2", "g"};

  for (int i = 0; i < 5; ++i) {
    QVec v = m.disc_basis.row(i).transpose();
    long ord = i < 4 ? 2 : 4;
    require(!m.lattice.contains(v), std::string(names[i]) + " nonzero in A_NS", log);
    if (ord == 4)
      require(!m.lattice.contains(2 * v), "2g nonzero in A_NS", log);
    require(m.lattice.contains(Rational(ord) * v),
            std::to_string(ord) + "*" + names[i] + " in NS", log);
  }

  const Rational half(1, 2), quarter(1, 4);
  for (int i = 0; i < 4; ++i)
    require(m.disc_form.q(m.disc_form.generator(i)) == 0,
            std::string("q(") + names[i] + ") = 0", log);
  require(m.disc_form.q(m.disc_form.generator(4)) == quarter, "q(g) = 1/4", log);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Rational expect =
          ((i == 0 && j == 1) || (i == 2 && j == 3)) ? half : Rational(0);
      std::ostringstream what;
      what << "b(" << names[i] << "," << names[j] << ") = " << expect;
      require(m.disc_form.b(m.disc_form.generator(i), m.disc_form.generator(j)) ==
                  expect,
              what.str(), log);
    }

  require(discriminant_group(m.lattice).order() == 64, "|A_NS| = 64", log);
  for (const FqElement& x : m.disc_form.elements())
    if (!(x == m.disc_form.zero()))
      require(!m.lattice.contains(disc_rep(x)),
              "combination " + std::to_string(m.disc_form.element_index(x)) +
                  " nonzero in A_NS",
              log);
  return log;
}

QMat block_diag(const std::vector<QMat>& blocks) {
  Eigen::Index n = 0;
  for (const QMat& b : blocks) n += b.rows();
  QMat out = QMat::Zero(n, n);
  Eigen::Index at = 0;
  for (const QMat& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

QMat gram_u(long scale) {
  QMat g(2, 2);
  g << Rational(0), Rational(scale), Rational(scale), Rational(0);
  return g;
}

QMat gram_d(int n) {
  // negated D_n Cartan matrix: chain 1..n-1 plus node n attached to n-2
  if (n < 4) throw std::invalid_argument("gram_d: rank >= 4 required");
  QMat g = QMat::Identity(n, n) * Rational(-2);
  for (int i = 0; i + 1 < n - 1; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
  return g;
}

namespace {

QMat gram_e(int n, long scale) {
  // negated E_n Cartan: chain 1,3,4,...,n with node 2 attached to 4
  QMat g = QMat::Identity(n, n) * Rational(-2);
  auto link = [&](int a, int b) {
    g(a - 1, b - 1) = g(b - 1, a - 1) = 1;
  };
  link(1, 3);
  link(3, 4);
  link(2, 4);
  for (int i = 4; i < n; ++i) link(i, i + 1);
  return g * Rational(scale);
}

}  // namespace

QMat gram_e8(long scale) { return gram_e(8, scale); }
QMat gram_e7(long scale) { return gram_e(7, scale); }

QMat gram_t() {
  QMat d(1, 1);
  d << Rational(-4);
  return block_diag({gram_u(2), gram_u(2), d});
}

QMat gram_n() { return block_diag({gram_u(), gram_u(2), gram_e8(2)}); }

QMat gram_m() { return block_diag({gram_u(2), gram_e8(2)}); }

QMat gram_ns_abstract() {
  return block_diag({gram_u(), gram_d(4), gram_d(4), gram_d(7)});
}

GenusReport reconcile_abstract_model() {
  const NsModel& m = ns_model();
  QMat abstract = gram_ns_abstract();
  Sublattice abs_lat(make_ambient(abstract),
                     QMat::Identity(kNsDim, kNsDim));
  GenusReport r;
  r.ok = true;
  auto check = [&](bool cond, const std::string& what) {
    r.checks.push_back((cond ? "ok: " : "FAIL: ") + what);
    r.ok = r.ok && cond;
  };
  check(m.lattice.rank() == kNsDim && abs_lat.rank() == kNsDim, "rank 17");
  check(is_even(m.lattice) && is_even(abs_lat), "both even");
  check(m.lattice.det() == abs_lat.det() && m.lattice.det() == 64,
        "determinant 64");
  check(signature(m.lattice.gram()) == std::make_pair(1, 16) &&
            signature(abs_lat.gram()) == std::make_pair(1, 16),
        "signature (1,16)");
  LatticeForm abs_form = from_lattice(abs_lat);
  check(forms_isometric(m.disc_form, abs_form.form).has_value(),
        "discriminant forms isometric");
  // 17 >= 2 + 5 generators, so the genus determines the isometry class
  check(m.disc_form.generator_count() + 2 <= kNsDim,
        "rank exceeds discriminant generator count by >= 2");
  return r;
}

}  // namespace kummer
