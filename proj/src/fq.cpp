#include "kummer/fq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kummer {

namespace {
const Rational kOne = 1;
const Rational kTwo = 2;
}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<long> orders,
                                         std::vector<Rational> q, QMat b)
    : orders_(std::move(orders)), q_(std::move(q)), b_(std::move(b)) {
  const size_t k = orders_.size();
  if (q_.size() != k || b_.rows() != static_cast<Eigen::Index>(k) ||
      b_.cols() != static_cast<Eigen::Index>(k))
    throw std::invalid_argument("FiniteQuadraticForm: shape mismatch");
  for (size_t i = 0; i < k; ++i) {
    if (orders_[i] < 1)
      throw std::invalid_argument("FiniteQuadraticForm: order < 1");
    q_[i] = mod_into(q_[i], kTwo);
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      b_(ii, jj) = mod_into(b_(ii, jj), kOne);
      if (b_(ii, jj) != b_(jj, ii))
        throw std::invalid_argument("FiniteQuadraticForm: b not symmetric");
      if (!is_integer(Rational(orders_[i]) * b_(ii, jj)))
        throw std::invalid_argument("FiniteQuadraticForm: d_i b(g_i,g_j) not integral");
    }
  for (size_t i = 0; i < k; ++i) {
    auto ii = static_cast<Eigen::Index>(i);
    if (mod_into(q_[i], kOne) != b_(ii, ii))
      throw std::invalid_argument("FiniteQuadraticForm: q and b incompatible");
  }
}

Integer FiniteQuadraticForm::size() const {
  Integer n = 1;
  for (long d : orders_) n *= d;
  return n;
}

FqElement FiniteQuadraticForm::zero() const {
  return {std::vector<int>(orders_.size(), 0)};
}

FqElement FiniteQuadraticForm::generator(int i) const {
  FqElement e = zero();
  e.c[static_cast<size_t>(i)] = orders_[static_cast<size_t>(i)] > 1 ? 1 : 0;
  return e;
}

FqElement FiniteQuadraticForm::reduce(std::vector<int> coeffs) const {
  for (size_t i = 0; i < coeffs.size(); ++i) {
    long d = orders_[i];
    coeffs[i] = static_cast<int>(((coeffs[i] % d) + d) % d);
  }
  return {std::move(coeffs)};
}

FqElement FiniteQuadraticForm::add(const FqElement& a, const FqElement& b) const {
  std::vector<int> c(a.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] + b.c[i];
  return reduce(std::move(c));
}

FqElement FiniteQuadraticForm::neg(const FqElement& a) const {
  std::vector<int> c(a.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -a.c[i];
  return reduce(std::move(c));
}

FqElement FiniteQuadraticForm::smul(long k, const FqElement& a) const {
  std::vector<int> c(a.c.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<int>((static_cast<long>(a.c[i]) * k) %
                            orders_[i]);
  return reduce(std::move(c));
}

long FiniteQuadraticForm::element_order(const FqElement& a) const {
  long o = 1;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    long d = orders_[i] / std::gcd(static_cast<long>(a.c[i]), orders_[i]);
    o = std::lcm(o, d);
  }
  return o;
}

Rational FiniteQuadraticForm::q(const FqElement& x) const {
  Rational v = 0;
  const size_t k = orders_.size();
  for (size_t i = 0; i < k; ++i) {
    if (x.c[i] == 0) continue;
    v += Rational(static_cast<long>(x.c[i]) * x.c[i]) * q_[i];
    for (size_t j = i + 1; j < k; ++j)
      v += Rational(2L * x.c[i] * x.c[j]) *
           b_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return mod_into(v, kTwo);
}

Rational FiniteQuadraticForm::b(const FqElement& x, const FqElement& y) const {
  Rational v = 0;
  const size_t k = orders_.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (x.c[i] != 0 && y.c[j] != 0)
        v += Rational(static_cast<long>(x.c[i]) * y.c[j]) *
             b_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return mod_into(v, kOne);
}

const std::vector<FqElement>& FiniteQuadraticForm::elements() const {
  if (!elements_.empty() || size() == 0) return elements_;
  if (size() > 256)
    throw std::invalid_argument("FiniteQuadraticForm: group too large to enumerate (> 256)");
  const size_t k = orders_.size();
  std::vector<int> c(k, 0);
  for (;;) {
    elements_.push_back({c});
    size_t i = 0;
    while (i < k && ++c[i] == orders_[i]) c[i++] = 0;
    if (i == k) break;
  }
  if (k == 0) elements_ = {FqElement{{}}};
  return elements_;
}

int FiniteQuadraticForm::element_index(const FqElement& x) const {
  long idx = 0, stride = 1;
  for (size_t i = 0; i < orders_.size(); ++i) {
    idx += x.c[i] * stride;
    stride *= orders_[i];
  }
  return static_cast<int>(idx);
}

bool FiniteQuadraticForm::nondegenerate() const {
  for (const FqElement& x : elements()) {
    if (x == zero()) continue;
    bool in_radical = true;
    for (int i = 0; i < generator_count() && in_radical; ++i)
      if (b(x, generator(i)) != 0) in_radical = false;
    if (in_radical) return false;
  }
  return true;
}

FiniteQuadraticForm standard_u2() {
  QMat b(2, 2);
  b << Rational(0), Rational(1, 2), Rational(1, 2), Rational(0);
  return FiniteQuadraticForm({2, 2}, {Rational(0), Rational(0)}, b);
}

FiniteQuadraticForm standard_one_over(long two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("standard_one_over: argument must be 2n, n >= 1");
  QMat b(1, 1);
  b(0, 0) = Rational(1, two_n);
  return FiniteQuadraticForm({two_n}, {Rational(1, two_n)}, b);
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a,
                               const FiniteQuadraticForm& b) {
  std::vector<long> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<Rational> q;
  QMat bb = QMat::Zero(static_cast<Eigen::Index>(orders.size()),
                       static_cast<Eigen::Index>(orders.size()));
  for (int i = 0; i < a.generator_count(); ++i) {
    q.push_back(a.q(a.generator(i)));
    for (int j = 0; j < a.generator_count(); ++j)
      bb(i, j) = a.b(a.generator(i), a.generator(j));
  }
  const int off = a.generator_count();
  for (int i = 0; i < b.generator_count(); ++i) {
    q.push_back(b.q(b.generator(i)));
    for (int j = 0; j < b.generator_count(); ++j)
      bb(off + i, off + j) = b.b(b.generator(i), b.generator(j));
  }
  return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(bb));
}

FiniteQuadraticForm u2_pow_plus_quarter(int m) {
  FiniteQuadraticForm f = standard_one_over(4);
  for (int i = 0; i < m; ++i) f = direct_sum(standard_u2(), f);
  return f;
}

LatticeForm from_lattice(const Sublattice& l) {
  if (!is_even(l))
    throw std::invalid_argument("from_lattice: lattice is not even");
  DiscriminantGroup g = discriminant_group(l);
  const int k = static_cast<int>(g.invariant_factors.size());
  std::vector<long> orders;
  for (const Integer& d : g.invariant_factors)
    orders.push_back(d.convert_to<long>());
  std::vector<Rational> q;
  QMat b = QMat::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    QVec vi = g.generator_reps.row(i).transpose();
    q.push_back(mod_into(l.ambient()->inner(vi, vi), kTwo));
    for (int j = 0; j < k; ++j) {
      QVec vj = g.generator_reps.row(j).transpose();
      b(i, j) = mod_into(l.ambient()->inner(vi, vj), kOne);
    }
  }
  return {FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b)),
          g.generator_reps};
}

FqElement FqIsometry::apply(const FiniteQuadraticForm& f,
                            const FqElement& x) const {
  FqElement y = f.zero();
  for (size_t i = 0; i < x.c.size(); ++i)
    if (x.c[i] != 0) y = f.add(y, f.smul(x.c[i], images[i]));
  return y;
}

namespace {

// Shared backtracking over generator images between two (possibly equal)
// nondegenerate forms of the same size. Generators of f1 are processed in
// decreasing order d_i; candidate images must match order, q, and pairings
// with already-placed images. Every full assignment is an isometry (a
// b-preserving homomorphism of a nondegenerate form is injective).
void isometry_backtrack(const FiniteQuadraticForm& f1,
                        const FiniteQuadraticForm& f2,
                        const std::function<bool(const FqIsometry&)>& cb) {
  if (f1.size() != f2.size()) return;
  {
    auto o1 = f1.orders();
    auto o2 = f2.orders();
    std::sort(o1.begin(), o1.end());
    std::sort(o2.begin(), o2.end());
    if (o1 != o2) return;
  }
  if (!f1.nondegenerate() || !f2.nondegenerate())
    throw std::invalid_argument("isometry search requires nondegenerate forms");

  const int k = f1.generator_count();
  std::vector<int> order(static_cast<size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return f1.orders()[static_cast<size_t>(a)] > f1.orders()[static_cast<size_t>(b)];
  });

  const auto& pool = f2.elements();
  const size_t n = pool.size();

  // Pairing values live in (1/m)Z for m = lcm of the orders; store them as
  // integers over that common denominator so the hot loop avoids rational
  // arithmetic entirely.
  long m = 1;
  for (long d : f1.orders()) m = std::lcm(m, d);
  auto scaled = [&](const Rational& v) {
    Rational s = v * m;
    if (!is_integer(s)) throw std::logic_error("pairing denominator exceeds lcm of orders");
    return to_integer(s).convert_to<long>();
  };

  std::vector<long> pool_b(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j)
      pool_b[i * n + j] = pool_b[j * n + i] = scaled(f2.b(pool[i], pool[j]));

  // candidate image indices per generator, filtered on (order, q)
  std::vector<std::vector<int>> cand(static_cast<size_t>(k));
  for (int gi = 0; gi < k; ++gi) {
    const long d = f1.orders()[static_cast<size_t>(gi)];
    const Rational qv = f1.q(f1.generator(gi));
    for (size_t p = 0; p < n; ++p)
      if (f2.element_order(pool[p]) == d && f2.q(pool[p]) == qv)
        cand[static_cast<size_t>(gi)].push_back(static_cast<int>(p));
  }

  std::vector<long> target_b(static_cast<size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      target_b[static_cast<size_t>(i * k + j)] =
          scaled(f1.b(f1.generator(i), f1.generator(j)));

  std::vector<int> img_idx(static_cast<size_t>(k), -1);
  bool stop = false;
  auto rec = [&](auto&& self, int depth) -> void {
    if (stop) return;
    if (depth == k) {
      FqIsometry iso;
      iso.images.reserve(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        iso.images.push_back(pool[static_cast<size_t>(img_idx[static_cast<size_t>(i)])]);
      if (!cb(iso)) stop = true;
      return;
    }
    const int gi = order[static_cast<size_t>(depth)];
    for (int p : cand[static_cast<size_t>(gi)]) {
      if (stop) return;
      bool ok = true;
      for (int prev = 0; prev < depth && ok; ++prev) {
        const int gj = order[static_cast<size_t>(prev)];
        if (pool_b[static_cast<size_t>(p) * n +
                   static_cast<size_t>(img_idx[static_cast<size_t>(gj)])] !=
            target_b[static_cast<size_t>(gi * k + gj)])
          ok = false;
      }
      if (!ok) continue;
      img_idx[static_cast<size_t>(gi)] = p;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

void for_each_isometry(const FiniteQuadraticForm& f,
                       const std::function<bool(const FqIsometry&)>& cb) {
  isometry_backtrack(f, f, cb);
}

std::vector<FqIsometry> all_isometries(const FiniteQuadraticForm& f) {
  std::vector<FqIsometry> out;
  for_each_isometry(f, [&](const FqIsometry& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Integer count_isometries(const FiniteQuadraticForm& f) {
  Integer n = 0;
  for_each_isometry(f, [&](const FqIsometry&) {
    ++n;
    return true;
  });
  return n;
}

Perm isometry_as_permutation(const FiniteQuadraticForm& f, const FqIsometry& g) {
  const auto& elems = f.elements();
  Perm p(elems.size());
  for (size_t i = 0; i < elems.size(); ++i)
    p[i] = f.element_index(g.apply(f, elems[i]));
  return p;
}

Integer group_order_generated(const FiniteQuadraticForm& f,
                              const std::vector<FqIsometry>& gens) {
  PermGroup grp(static_cast<int>(f.elements().size()));
  for (const FqIsometry& g : gens) {
    // validity: images must preserve q
    for (int i = 0; i < f.generator_count(); ++i)
      if (f.q(g.images[static_cast<size_t>(i)]) != f.q(f.generator(i)))
        throw std::invalid_argument("group_order_generated: invalid generator");
    grp.add_generator(isometry_as_permutation(f, g));
  }
  return grp.order();
}

std::vector<Orbit> orbits(const FiniteQuadraticForm& f,
                          const std::vector<FqIsometry>& gens) {
  PermGroup grp(static_cast<int>(f.elements().size()));
  for (const FqIsometry& g : gens)
    grp.add_generator(isometry_as_permutation(f, g));
  std::vector<Orbit> out;
  for (const auto& orb : grp.orbits()) {
    Orbit o;
    o.representative = f.elements()[static_cast<size_t>(orb.front())];
    o.length = static_cast<long>(orb.size());
    o.square = f.q(o.representative);
    for (int idx : orb)
      if (f.q(f.elements()[static_cast<size_t>(idx)]) != o.square)
        throw std::logic_error("orbits: q is not constant on an orbit");
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [&](const Orbit& a, const Orbit& b) {
    if (a.length != b.length) return a.length < b.length;
    return f.element_index(a.representative) < f.element_index(b.representative);
  });
  return out;
}

std::vector<Orbit> orbits(const FiniteQuadraticForm& f) {
  // Generate O(q) lazily until the stabilizer chain reaches the certified
  // order; this keeps the large (2.9M-isometry) case out of full enumeration.
  Integer target = count_isometries(f);
  PermGroup grp(static_cast<int>(f.elements().size()));
  std::vector<FqIsometry> gens;
  for_each_isometry(f, [&](const FqIsometry& g) {
    Perm p = isometry_as_permutation(f, g);
    if (!grp.contains(p)) {
      grp.add_generator(p);
      gens.push_back(g);
    }
    return grp.order() != target;
  });
  if (grp.order() != target)
    throw std::logic_error("orbits: failed to generate O(q)");
  return orbits(f, gens);
}

FqElement distinguished_element(const FiniteQuadraticForm& f) {
  std::vector<FqElement> found;
  for (const FqElement& x : f.elements()) {
    if (x == f.zero() || f.q(x) != kOne) continue;
    bool ok = true;
    for (const FqElement& y : f.elements())
      if (f.element_order(y) <= 2 && f.b(x, y) != 0) {
        ok = false;
        break;
      }
    if (ok) found.push_back(x);
  }
  if (found.size() != 1)
    throw std::invalid_argument(
        "distinguished_element: no unique orbit-length-1 element (wrong form)");
  return found.front();
}

FqSubgroup subgroup_generated(const FiniteQuadraticForm& f,
                              std::vector<FqElement> gens) {
  std::set<FqElement> closed{f.zero()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FqElement> cur(closed.begin(), closed.end());
    for (const FqElement& a : cur)
      for (const FqElement& g : gens)
        if (closed.insert(f.add(a, g)).second) grew = true;
  }
  FqSubgroup s;
  s.elements.assign(closed.begin(), closed.end());
  s.generators = std::move(gens);
  return s;
}

std::vector<FqSubgroup> subgroups_order4(const FiniteQuadraticForm& f,
                                         const CyclicWithGeneratorSquare& c) {
  Rational target = mod_into(c.square, kTwo);
  std::set<FqSubgroup> out;
  for (const FqElement& x : f.elements()) {
    if (f.element_order(x) != 4 || f.q(x) != target) continue;
    out.insert(subgroup_generated(f, {x}));
  }
  return {out.begin(), out.end()};
}

std::vector<FqSubgroup> subgroups_order4(const FiniteQuadraticForm& f,
                                         const TwoElementaryContaining& c) {
  if (f.element_order(c.element) > 2)
    throw std::invalid_argument("subgroups_order4: constraint element is not 2-torsion");
  std::set<FqSubgroup> out;
  const auto& elems = f.elements();
  for (const FqElement& a : elems) {
    if (f.element_order(a) != 2) continue;
    for (const FqElement& b : elems) {
      if (f.element_order(b) != 2 || b == a) continue;
      FqSubgroup s = subgroup_generated(f, {a, b});
      if (s.elements.size() != 4) continue;
      if (std::find(s.elements.begin(), s.elements.end(), c.element) ==
          s.elements.end())
        continue;
      s.generators = {std::min(a, b), std::max(a, b)};
      out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

std::optional<FqIsometry> forms_isometric(const FiniteQuadraticForm& f1,
                                          const FiniteQuadraticForm& f2) {
  std::optional<FqIsometry> found;
  isometry_backtrack(f1, f2, [&](const FqIsometry& g) {
    found = g;
    return false;
  });
  return found;
}

FiniteQuadraticForm negated(const FiniteQuadraticForm& f) {
  int n = f.generator_count();
  std::vector<Rational> q;
  QMat b(n, n);
  const Rational two = 2, one = 1;
  for (int i = 0; i < n; ++i) {
    q.push_back(mod_into(-f.q(f.generator(i)), two));
    for (int j = 0; j < n; ++j)
      b(i, j) = mod_into(-f.b(f.generator(i), f.generator(j)), one);
  }
  return FiniteQuadraticForm(f.orders(), std::move(q), std::move(b));
}

}  // namespace kummer
