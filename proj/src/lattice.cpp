#include "kummer/lattice.hpp"

#include <algorithm>

namespace kummer {

AmbientSpace::AmbientSpace(QMat gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw std::invalid_argument("AmbientSpace: gram must be square and nonempty");
  if (gram_ != gram_.transpose())
    throw std::invalid_argument("AmbientSpace: gram must be symmetric");
  Eigen::FullPivLU<QMat> lu(gram_);
  if (lu.rank() != gram_.rows())
    throw std::invalid_argument("AmbientSpace: gram is degenerate");
}

AmbientPtr make_ambient(const QMat& gram) {
  return std::make_shared<const AmbientSpace>(gram);
}

Sublattice::Sublattice(AmbientPtr ambient, const QMat& generators)
    : ambient_(std::move(ambient)) {
  if (generators.rows() == 0) {
    basis_ = QMat(0, ambient_->dim());
    gram_ = QMat(0, 0);
    return;
  }
  if (generators.cols() != ambient_->dim())
    throw std::invalid_argument("Sublattice: generator dimension mismatch");
  Integer den = common_denominator(generators);
  ZMat scaled(generators.rows(), generators.cols());
  for (Eigen::Index i = 0; i < generators.rows(); ++i)
    for (Eigen::Index j = 0; j < generators.cols(); ++j)
      scaled(i, j) = numerator(generators(i, j) * Rational(den));
  ZMat h = hermite_row_form(scaled);
  basis_ = to_rational_matrix(h) / Rational(den);
  gram_ = basis_ * ambient_->gram() * basis_.transpose();
  if (basis_.rows() > 0)
    solver_ = std::make_shared<const Eigen::FullPivLU<QMat>>(
        basis_.transpose());
}

Rational Sublattice::det() const {
  if (rank() == 0) return 1;
  return Eigen::FullPivLU<QMat>(gram_).determinant();
}

std::optional<QVec> Sublattice::coordinates(const QVec& v) const {
  if (v.size() != dim())
    throw std::invalid_argument("coordinates: ambient dimension mismatch");
  if (rank() == 0) {
    if (v.isZero()) return QVec(0);
    return std::nullopt;
  }
  QVec c = solver_->solve(v);
  if (basis_.transpose() * c != v) return std::nullopt;
  return c;
}

bool Sublattice::contains(const QVec& v) const {
  auto c = coordinates(v);
  if (!c) return false;
  for (Eigen::Index i = 0; i < c->size(); ++i)
    if (!is_integer((*c)(i))) return false;
  return true;
}

bool Sublattice::contains(const Sublattice& other) const {
  for (int i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

bool is_even(const Sublattice& l) {
  const QMat& g = l.gram();
  if (!is_integral(g)) return false;
  for (int i = 0; i < l.rank(); ++i)
    if (numerator(g(i, i)) % 2 != 0) return false;
  return true;
}

Sublattice dual_basis(const Sublattice& l) {
  if (l.rank() == 0)
    throw std::invalid_argument("dual_basis: zero lattice");
  Eigen::FullPivLU<QMat> lu(l.gram());
  if (lu.rank() != l.rank())
    throw std::invalid_argument("dual_basis: degenerate gram");
  QMat dual = lu.solve(l.basis());
  return Sublattice(l.ambient(), dual);
}

DiscriminantGroup discriminant_group(const Sublattice& l) {
  if (l.rank() == 0) return {};
  Eigen::FullPivLU<QMat> lu(l.gram());
  if (lu.rank() != l.rank())
    throw std::invalid_argument("discriminant_group: degenerate gram");
  SmithResult s = smith_normal_form(l.gram());
  // Dual basis rows (unreduced): gram^{-1} * basis. In these coordinates L
  // is the row space of gram; after the change of coordinates by V the
  // quotient is generated by the standard vectors with orders d_i, whose
  // original coordinates are the rows of V^{-1}.
  QMat dual = lu.solve(l.basis());
  QMat vinv = Eigen::FullPivLU<QMat>(to_rational_matrix(s.V)).inverse();
  DiscriminantGroup g;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < s.D.rows() && i < s.D.cols(); ++i)
    if (s.D(i, i) > 1) {
      g.invariant_factors.push_back(s.D(i, i));
      kept.push_back(i);
    }
  g.generator_reps = QMat(static_cast<Eigen::Index>(kept.size()), l.dim());
  for (size_t k = 0; k < kept.size(); ++k)
    g.generator_reps.row(static_cast<Eigen::Index>(k)) =
        vinv.row(kept[k]) * dual;
  return g;
}

Sublattice orthogonal_complement(const Sublattice& l, const Sublattice& s) {
  if (l.ambient() != s.ambient() && l.dim() != s.dim())
    throw std::invalid_argument("orthogonal_complement: ambient mismatch");
  if (!l.contains(s))
    throw std::invalid_argument("orthogonal_complement: S is not inside L");
  if (s.rank() == 0) return l;
  QMat pairings = l.basis() * l.ambient()->gram() * s.basis().transpose();
  Integer den = common_denominator(pairings);
  ZMat scaled(pairings.rows(), pairings.cols());
  for (Eigen::Index i = 0; i < pairings.rows(); ++i)
    for (Eigen::Index j = 0; j < pairings.cols(); ++j)
      scaled(i, j) = numerator(pairings(i, j) * Rational(den));
  ZMat ker = integer_row_kernel(scaled);
  if (ker.rows() == 0) return Sublattice::zero(l.ambient());
  return Sublattice(l.ambient(), to_rational_matrix(ker) * l.basis());
}

Sublattice eigenlattice(const Sublattice& l, const QMat& m, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("eigenlattice: sign must be +1 or -1");
  const QMat& g = l.ambient()->gram();
  if (m.transpose() * g * m != g)
    throw std::invalid_argument("eigenlattice: matrix is not an isometry");
  for (int i = 0; i < l.rank(); ++i)
    if (!l.contains(QVec(m * l.basis_row(i))))
      throw std::invalid_argument("eigenlattice: matrix does not preserve L");
  if (l.rank() == 0) return l;
  QMat w = l.basis() * m.transpose() - Rational(sign) * l.basis();
  Integer den = common_denominator(w);
  ZMat scaled(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      scaled(i, j) = numerator(w(i, j) * Rational(den));
  ZMat ker = integer_row_kernel(scaled);
  if (ker.rows() == 0) return Sublattice::zero(l.ambient());
  return Sublattice(l.ambient(), to_rational_matrix(ker) * l.basis());
}

namespace {

// Rational Cholesky data for a positive definite matrix: q(i,i) and the
// unit-upper factors q(i,j), so that
//   x^T A x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
// Throws if A is not positive definite.
QMat cholesky_q(const QMat& a) {
  QMat q = a;
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (q(i, i) <= 0)
      throw std::invalid_argument("short_vectors: gram is not definite");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Rational t = q(i, j);
      q(j, i) = t;  // keep the unscaled value for the update below
      q(i, j) = t / q(i, i);
    }
    for (Eigen::Index k = i + 1; k < n; ++k)
      for (Eigen::Index l = k; l < n; ++l)
        q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

void enumerate(const QMat& q, const Rational& bound, Eigen::Index i,
               std::vector<Rational>& center, std::vector<Rational>& budget,
               ZVec& x, std::vector<ZVec>& out) {
  // At level i, admissible x_i satisfy q_ii (x_i + center_i)^2 <= budget_i.
  const Rational& c = center[static_cast<size_t>(i)];
  const Rational& t = budget[static_cast<size_t>(i)];
  // Contiguous integer interval around -c; walk outward from floor(-c).
  Integer base = numerator(-c) / denominator(-c);
  if (-c < 0 && Rational(base) != -c) --base;  // floor
  auto fits = [&](const Integer& v) {
    Rational d = Rational(v) + c;
    return q(i, i) * d * d <= t;
  };
  Integer lo = base, hi = base + 1;
  while (fits(lo - 1)) --lo;
  if (!fits(lo)) ++lo;
  while (fits(hi)) ++hi;
  for (Integer v = lo; v < hi; ++v) {
    x(i) = v;
    if (i == 0) {
      bool nonzero = false;
      for (Eigen::Index k = 0; k < x.size(); ++k)
        if (x(k) != 0) nonzero = true;
      if (nonzero) out.push_back(x);
      continue;
    }
    Rational d = Rational(v) + c;
    budget[static_cast<size_t>(i - 1)] = t - q(i, i) * d * d;
    Rational cc = 0;
    for (Eigen::Index j = i - 1 + 1; j < x.size(); ++j)
      cc += q(i - 1, j) * Rational(x(j));
    center[static_cast<size_t>(i - 1)] = cc;
    enumerate(q, bound, i - 1, center, budget, x, out);
  }
  x(i) = 0;
}

}  // namespace

std::vector<ShortVector> short_vectors(const Sublattice& l,
                                       const Integer& bound) {
  if (bound <= 0)
    throw std::invalid_argument("short_vectors: bound must be positive");
  if (l.rank() == 0) return {};
  QMat a = -l.gram();
  QMat q = cholesky_q(a);  // throws on indefinite input
  const Eigen::Index n = a.rows();
  std::vector<Rational> center(static_cast<size_t>(n), Rational(0));
  std::vector<Rational> budget(static_cast<size_t>(n), Rational(0));
  budget[static_cast<size_t>(n - 1)] = Rational(bound);
  ZVec x = ZVec::Zero(n);
  std::vector<ZVec> coeffs;
  enumerate(q, Rational(bound), n - 1, center, budget, x, coeffs);

  std::vector<ShortVector> out;
  out.reserve(coeffs.size());
  for (const ZVec& c : coeffs) {
    QVec cq(n);
    for (Eigen::Index i = 0; i < n; ++i) cq(i) = Rational(c(i));
    Rational norm = (cq.transpose() * l.gram() * cq)(0, 0);
    ShortVector sv;
    sv.coefficients = c;
    sv.vector = l.basis().transpose() * cq;
    sv.norm = to_integer(norm);
    out.push_back(std::move(sv));
  }
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm > b.norm;  // norms negative: -2 before -4
    for (Eigen::Index i = 0; i < a.coefficients.size(); ++i)
      if (a.coefficients(i) != b.coefficients(i))
        return a.coefficients(i) < b.coefficients(i);
    return false;
  });
  return out;
}

std::optional<ZMat> isometry_search(const Sublattice& l1, const Sublattice& l2) {
  if (l1.rank() != l2.rank())
    throw std::invalid_argument("isometry_search: rank mismatch");
  const int r = l1.rank();
  if (r == 0) return ZMat(0, 0);
  if (!is_integral(l1.gram()) || !is_integral(l2.gram()))
    throw std::invalid_argument("isometry_search: non-integer gram");
  ZMat g1 = to_integer_matrix(l1.gram());
  ZMat g2 = to_integer_matrix(l2.gram());
  cholesky_q(-l1.gram());  // definiteness checks
  cholesky_q(-l2.gram());
  if (l1.det() != l2.det()) return std::nullopt;

  Integer maxnorm = 0;
  for (int i = 0; i < r; ++i) maxnorm = std::max(maxnorm, -g1(i, i));
  std::vector<ShortVector> sv = short_vectors(l2, maxnorm);

  std::vector<ZVec> chosen(static_cast<size_t>(r));
  ZMat p(r, r);
  // Backtracking over images of the l1 basis; candidates are l2 short
  // vectors of the right norm, pruned by pairings with placed images.
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == r) return true;
    for (const ShortVector& cand : sv) {
      if (cand.norm != g1(depth, depth)) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        Integer pairing = 0;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b)
            pairing += cand.coefficients(a) * g2(a, b) * chosen[static_cast<size_t>(j)](b);
        if (pairing != g1(depth, j)) ok = false;
      }
      if (!ok) continue;
      chosen[static_cast<size_t>(depth)] = cand.coefficients;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) p(i, j) = chosen[static_cast<size_t>(i)](j);
  // Same determinant and matching gram force |det p| = 1; assert it anyway.
  Rational d = Eigen::FullPivLU<QMat>(to_rational_matrix(p)).determinant();
  if (d != 1 && d != -1)
    throw std::logic_error("isometry_search: witness is not unimodular");
  return p;
}

}  // namespace kummer

namespace kummer {

std::pair<int, int> signature(const QMat& gram) {
  if (gram.rows() != gram.cols() || gram != gram.transpose())
    throw std::invalid_argument("signature: matrix not symmetric");
  QMat g = gram;
  const Eigen::Index n = g.rows();
  int pos = 0, neg = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (g(k, k) == 0) {
      Eigen::Index j = -1;
      for (Eigen::Index i = k + 1; i < n && j < 0; ++i)
        if (g(i, i) != 0) j = i;
      if (j >= 0) {
        g.row(k).swap(g.row(j));
        g.col(k).swap(g.col(j));
      } else {
        for (Eigen::Index i = k + 1; i < n && j < 0; ++i)
          if (g(k, i) != 0) j = i;
        if (j < 0) throw std::invalid_argument("signature: degenerate matrix");
        g.row(k) += g.row(j);  // diagonal becomes 2 g(k,j) != 0
        g.col(k) += g.col(j);
      }
    }
    if (g(k, k) > 0)
      ++pos;
    else
      ++neg;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      Rational f = g(i, k) / g(k, k);
      g.row(i) -= f * g.row(k);
      g.col(i) -= f * g.col(k);
    }
  }
  return {pos, neg};
}

}  // namespace kummer
