#include "kummer/involutions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kummer {

QVec curve_vector(const Curve& c) {
  return c.trope ? trope_vector(c.index) : node_vector(c.index);
}

long intersection_number(const Curve& a, const Curve& b) {
  if (a.trope == b.trope) return a.index == b.index ? -2 : 0;
  const Curve& node = a.trope ? b : a;
  const Curve& trope = a.trope ? a : b;
  return incidence(node.index, trope.index) ? 1 : 0;
}

QVec apply(const NsIsometry& s, const QVec& v) { return s.m * v; }

NsIsometry compose(const NsIsometry& a, const NsIsometry& b) {
  return {a.m * b.m, a.provenance + " * " + b.provenance};
}

NsIsometry make_isometry(QMat m, std::string provenance,
                         bool require_involution) {
  const NsModel& model = ns_model();
  const QMat& g = model.ambient->gram();
  if (m.rows() != kNsDim || m.cols() != kNsDim)
    throw std::invalid_argument(provenance + ": wrong shape");
  if (QMat(m.transpose() * g * m) != g)
    throw std::invalid_argument(provenance + ": gram not preserved");
  if (require_involution && QMat(m * m) != QMat::Identity(kNsDim, kNsDim))
    throw std::invalid_argument(provenance + ": not an involution");
  QMat inv = m.inverse();
  for (int i = 0; i < model.lattice.rank(); ++i) {
    if (!model.lattice.contains(m * model.lattice.basis_row(i)) ||
        !model.lattice.contains(inv * model.lattice.basis_row(i)))
      throw std::invalid_argument(provenance + ": lattice not preserved");
  }
  return {std::move(m), std::move(provenance)};
}

namespace {

std::vector<Curve> all_curves() {
  std::vector<Curve> out;
  for (const HalfSet& a : all_even()) out.push_back({false, a});
  for (const HalfSet& b : all_odd()) out.push_back({true, b});
  return out;
}

std::string curve_str(const Curve& c) {
  return (c.trope ? "T" : "N") + c.index.str();
}

// fixed spanning set: the 16 nodes plus one trope reach all of NS_Q
const std::vector<Curve>& spanning_curves() {
  static const std::vector<Curve> v = [] {
    std::vector<Curve> s;
    for (const HalfSet& a : all_even()) s.push_back({false, a});
    s.push_back({true, HalfSet{6}});
    return s;
  }();
  return v;
}

const QMat& spanning_inverse() {
  static const QMat inv = [] {
    QMat c(kNsDim, kNsDim);
    for (int i = 0; i < kNsDim; ++i)
      c.col(i) = curve_vector(spanning_curves()[static_cast<size_t>(i)]);
    return QMat(c.inverse());
  }();
  return inv;
}

}  // namespace

NsIsometry config_automorphism(const CurvePerm& p, std::string provenance,
                               bool require_involution) {
  std::map<Curve, Curve> map;
  std::set<Curve> images;
  for (const auto& [from, to] : p) {
    if (!map.emplace(from, to).second || !images.insert(to).second)
      throw std::invalid_argument(provenance + ": not a bijection");
  }
  if (map.size() != 32)
    throw std::invalid_argument(provenance + ": expected all 32 curves");
  for (const auto& [a, fa] : map)
    for (const auto& [b, fb] : map)
      if (intersection_number(a, b) != intersection_number(fa, fb))
        throw std::invalid_argument(provenance + ": incidence violated at " +
                                    curve_str(a) + ", " + curve_str(b));

  QMat c2(kNsDim, kNsDim);
  for (int i = 0; i < kNsDim; ++i)
    c2.col(i) = curve_vector(map.at(spanning_curves()[static_cast<size_t>(i)]));
  QMat m = c2 * spanning_inverse();
  for (const auto& [a, fa] : map)
    if (QVec(m * curve_vector(a)) != curve_vector(fa))
      throw std::invalid_argument(provenance +
                                  ": no linear extension (relation broken at " +
                                  curve_str(a) + ")");
  return make_isometry(std::move(m), std::move(provenance), require_involution);
}

NsIsometry translation_action(const HalfSet& alpha) {
  if (!alpha.is_even())
    throw std::invalid_argument("translation_action: even class required");
  CurvePerm p;
  for (const Curve& c : all_curves())
    p.push_back({c, {c.trope, sym_diff(c.index, alpha)}});
  return config_automorphism(p, "translation " + alpha.str(), true);
}

NsIsometry s6_action(const std::array<int, 6>& image) {
  std::array<int, 6> seen{};
  for (int v : image) {
    if (v < 1 || v > 6 || seen[static_cast<size_t>(v - 1)]++)
      throw std::invalid_argument("s6_action: not a permutation of 1..6");
  }
  auto relabel = [&](const HalfSet& h) {
    unsigned m = 0;
    for (int e : h.elements()) m |= 1u << (image[static_cast<size_t>(e - 1)] - 1);
    return HalfSet::from_mask(m);
  };
  CurvePerm p;
  for (const Curve& c : all_curves()) p.push_back({c, {c.trope, relabel(c.index)}});
  std::string desc = "relabel ";
  for (int v : image) desc += static_cast<char>('0' + v);
  return config_automorphism(p, desc, false);
}

NsIsometry switch_action(const HalfSet& beta) {
  if (beta.is_even() || beta.size() != 3)
    throw std::invalid_argument("switch_action: odd class of size 3 required");
  CurvePerm p;
  for (const Curve& c : all_curves())
    p.push_back({c, {!c.trope, sym_diff(c.index, beta)}});
  return config_automorphism(p, "switch " + beta.str(), true);
}

NsIsometry involution_from_eigenspace(const Sublattice& k,
                                      std::string provenance) {
  const NsModel& model = ns_model();
  if (k.rank() == 0)
    return {QMat::Identity(kNsDim, kNsDim), std::move(provenance)};
  for (int i = 0; i < k.rank(); ++i)
    if (!model.lattice.contains(k.basis_row(i)))
      throw std::invalid_argument(provenance + ": eigenspace not inside NS");
  if (k.det() == 0)
    throw std::invalid_argument(provenance + ": degenerate eigenspace");
  const QMat& b = k.basis();
  QMat proj = b.transpose() * QMat(k.gram().inverse()) * b *
              model.ambient->gram();
  QMat m = QMat::Identity(kNsDim, kNsDim) - 2 * proj;
  return make_isometry(std::move(m), std::move(provenance), true);
}

Sublattice minus_one_eigenlattice(const NsIsometry& s) {
  return eigenlattice(ns_model().lattice, s.m, -1);
}

Sublattice plus_one_eigenlattice(const NsIsometry& s) {
  return eigenlattice(ns_model().lattice, s.m, 1);
}

namespace {

QVec nv(const char* name) { return node_vector(HalfSet::parse(name)); }
QVec tv(const char* name) { return trope_vector(HalfSet::parse(name)); }

Sublattice span_of(const std::vector<QVec>& gens) {
  QMat rows(static_cast<Eigen::Index>(gens.size()), kNsDim);
  for (size_t i = 0; i < gens.size(); ++i)
    rows.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  return Sublattice(ns_model().ambient, rows);
}

std::string set_str(const HalfSetList& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + s[i].str();
  return out + "}";
}

}  // namespace

Sublattice switch_base_eigenlattice() {
  QVec f = nv("[15]") - tv("[146]");
  QVec e2 = tv("[145]") - nv("[16]");
  QVec e3 = nv("[45]") - tv("[6]");
  QVec e4 = tv("[123]") - nv("[0]");
  QVec e5 = nv("[12]") - tv("[3]");
  QVec e6 = tv("[124]") - nv("[34]");
  QVec e7 = nv("[24]") - tv("[134]");
  QVec e1 = -(f + 2 * e2 + 3 * e3 + 4 * e4 + 3 * e5 + 2 * e6 + e7) / 2;
  return span_of({f, e2, e3, e4, e5, e6, e7, e1});
}

Sublattice hg_base_eigenlattice() {
  QVec g = nv("[0]") + nv("[12]") + nv("[34]") + nv("[56]") -
           hyperplane_vector();
  QVec e5 = tv("[1]") - tv("[2]");
  QVec e1 = tv("[3]") - tv("[4]");
  QVec e7 = tv("[5]") - tv("[6]");
  QVec f = tv("[134]") - tv("[234]");
  QVec e3 = tv("[123]") - tv("[124]");
  QVec h = tv("[125]") - tv("[126]");
  QVec e2 = (f + g + h - e3) / 2;
  QVec e4 = (f - e1 - e3 - e5) / 2;
  QVec e6 = (f + h - e5 - e7) / 2;
  return span_of({g, e5, e1, e7, f, e3, h, e2, e4, e6});
}

Sublattice hw_base_eigenlattice() {
  QVec e1 = tv("[2]") - nv("[46]");
  QVec e2 = nv("[15]") - tv("[124]");
  QVec e3 = tv("[1]") - nv("[56]");
  QVec e4 = nv("[0]") - tv("[123]");
  QVec e5 = tv("[3]") - nv("[45]");
  QVec e6 = nv("[34]") - tv("[136]");
  QVec e7 = nv("[23]") - nv("[56]") - nv("[34]") - nv("[24]") - tv("[134]") -
            tv("[124]");
  return span_of({e1, e2, e3, e4, e5, e6, e7});
}

const HalfSetList& hg_base_tetrad() {
  static const HalfSetList t = [] {
    HalfSetList s{HalfSet{}, HalfSet{1, 2}, HalfSet{3, 4}, HalfSet{5, 6}};
    std::sort(s.begin(), s.end());
    return s;
  }();
  return t;
}

const HalfSetList& hw_base_hexad() {
  static const HalfSetList w = [] {
    HalfSetList s{HalfSet{1, 2}, HalfSet{2, 3}, HalfSet{1, 3},
                  HalfSet{1, 4}, HalfSet{2, 5}, HalfSet{3, 6}};
    std::sort(s.begin(), s.end());
    return s;
  }();
  return w;
}

namespace {

HalfSet relabel_class(const std::array<int, 6>& pi, const HalfSet& h) {
  unsigned m = 0;
  for (int e : h.elements()) m |= 1u << (pi[static_cast<size_t>(e - 1)] - 1);
  return HalfSet::from_mask(m);
}

// Conjugates of a base involution covering a whole family: each target set
// is first matched as target = t (+) pi(base) (first witness in (pi, t)
// lexicographic order), then sigma_target = A sigma_base A^{-1} with
// A = translation(t) * relabel(pi).
std::map<HalfSetList, NsIsometry> build_family(
    const HalfSetList& base, const NsIsometry& sigma_base,
    const std::vector<HalfSetList>& targets, const std::string& tag) {
  std::map<HalfSetList, NsIsometry> out;
  out.emplace(base, NsIsometry{sigma_base.m, tag + " " + set_str(base)});

  std::map<std::array<int, 6>, NsIsometry> perm_cache;
  std::array<int, 6> pi{1, 2, 3, 4, 5, 6};
  do {
    HalfSetList pib;
    for (const HalfSet& x : base) pib.push_back(relabel_class(pi, x));
    std::sort(pib.begin(), pib.end());
    for (const HalfSet& t : all_even()) {
      HalfSetList img;
      for (const HalfSet& x : pib) img.push_back(sym_diff(t, x));
      std::sort(img.begin(), img.end());
      if (out.count(img)) continue;
      if (!std::binary_search(targets.begin(), targets.end(), img)) continue;
      auto pit = perm_cache.find(pi);
      if (pit == perm_cache.end())
        pit = perm_cache.emplace(pi, s6_action(pi)).first;
      NsIsometry tr = translation_action(t);
      QMat a = tr.m * pit->second.m;
      QMat sigma = a * sigma_base.m * QMat(a.inverse());
      out.emplace(img, make_isometry(std::move(sigma), tag + " " + set_str(img),
                                     true));
      if (out.size() == targets.size()) return out;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  if (out.size() != targets.size())
    throw std::logic_error(tag + ": transport did not reach every datum");
  return out;
}

const std::map<HalfSetList, NsIsometry>& hg_family() {
  static const std::map<HalfSetList, NsIsometry> fam = build_family(
      hg_base_tetrad(),
      involution_from_eigenspace(hg_base_eigenlattice(),
                                 "hg " + set_str(hg_base_tetrad())),
      gopel_tetrads(), "hg");
  return fam;
}

const std::map<HalfSetList, NsIsometry>& hw_family() {
  static const std::map<HalfSetList, NsIsometry> fam = build_family(
      hw_base_hexad(),
      involution_from_eigenspace(hw_base_eigenlattice(),
                                 "hw " + set_str(hw_base_hexad())),
      weber_hexads(), "hw");
  return fam;
}

}  // namespace

const NsIsometry& hg_action(const HalfSetList& tetrad) {
  HalfSetList key = tetrad;
  std::sort(key.begin(), key.end());
  auto it = hg_family().find(key);
  if (it == hg_family().end())
    throw std::invalid_argument("hg_action: not a Gopel tetrad");
  return it->second;
}

const NsIsometry& hw_action(const HalfSetList& hexad) {
  HalfSetList key = hexad;
  std::sort(key.begin(), key.end());
  auto it = hw_family().find(key);
  if (it == hw_family().end())
    throw std::invalid_argument("hw_action: not a Weber hexad");
  return it->second;
}

NsIsometry hw_closed_form(const HalfSetList& hexad) {
  if (!is_weber_hexad(hexad))
    throw std::invalid_argument("hw_closed_form: not a Weber hexad");
  HalfSetList w = hexad;
  std::sort(w.begin(), w.end());
  WeberMaps maps = weber_maps(w);
  std::map<HalfSet, HalfSet> mu(maps.mu.begin(), maps.mu.end());
  std::map<HalfSet, HalfSet> mu_prime(maps.mu_prime.begin(),
                                      maps.mu_prime.end());

  QVec sum_all = QVec::Zero(kNsDim), sum_w = QVec::Zero(kNsDim);
  for (const HalfSet& a : all_even()) sum_all += node_vector(a);
  for (const HalfSet& a : w) sum_w += node_vector(a);
  const QVec h = hyperplane_vector();

  QMat m(kNsDim, kNsDim);
  m.col(0) = 9 * h - sum_all - 4 * sum_w;
  for (const HalfSet& a : all_even()) {
    QVec img;
    if (std::binary_search(w.begin(), w.end(), a))
      img = 3 * h - sum_all / 2 - sum_w - trope_vector(mu.at(a));
    else
      img = trope_vector(mu_prime.at(a));
    m.col(node_index(a)) = img;
  }
  return make_isometry(std::move(m), "hw closed form " + set_str(w), true);
}

CheckReport free_necessary_check(const Sublattice& k) {
  CheckReport r;
  r.add(k.rank() == 7, "rank 7");
  if (!r.ok) return r;
  r.add(signature(k.gram()) == std::make_pair(0, 7), "negative definite");
  if (!r.ok) return r;
  auto sv = short_vectors(k, 4);
  long n2 = 0, n4 = 0;
  for (const ShortVector& v : sv) (v.norm == -2 ? n2 : n4) += 1;
  r.add(n2 == 0, "no vectors of norm -2");
  r.add(n4 == 126, "126 vectors of norm -4");
  r.add(forms_isometric(from_lattice(k).form, u2_pow_plus_quarter(3))
            .has_value(),
        "discriminant form u(2)^3 + <1/4>");
  r.add(e7_witness(k).has_value(), "explicit basis change to E7(2)");
  return r;
}

std::optional<ZMat> e7_witness(const Sublattice& k) {
  Sublattice std_e7(make_ambient(gram_e7(2)), QMat::Identity(7, 7));
  return isometry_search(std_e7, k);
}

QVec weyl_wprime() {
  QVec v = 2 * hyperplane_vector();
  for (const HalfSet& a : all_even()) v -= node_vector(a) / 2;
  return v;
}

QVec weyl_rprime(const HalfSetList& hexad) {
  QVec v = 3 * hyperplane_vector();
  for (const HalfSet& a : hexad) v -= 2 * node_vector(a);
  return v / 4;
}

CheckReport weyl_identities() {
  CheckReport r;
  const QVec w = weyl_wprime();
  const Rational four = 4;
  r.add(ns_model().ambient->inner(w, w) == 8, "(w',w') = 8");

  bool shift_ok = true;
  for (const auto& [hex, sigma] : hw_family())
    if (QVec(apply(sigma, w)) != w + 8 * weyl_rprime(hex)) shift_ok = false;
  r.add(shift_ok, "sigma_W(w') = w' + 8 r'(W) for all 192 hexads");

  auto pairing_in_4z = [&](const NsIsometry& s) {
    Rational p = ns_model().ambient->inner(w, apply(s, w));
    return is_integer(p / four);
  };
  bool ok = true;
  for (const HalfSet& a : all_even()) ok = ok && pairing_in_4z(translation_action(a));
  r.add(ok, "(w', t(w')) in 4Z for the 16 translations");
  ok = true;
  for (const HalfSet& b : all_odd())
    if (b.size() == 3) ok = ok && pairing_in_4z(switch_action(b));
  r.add(ok, "(w', s(w')) in 4Z for the 10 switches");
  ok = true;
  for (const auto& [g, sigma] : hg_family()) ok = ok && pairing_in_4z(sigma);
  r.add(ok, "(w', s(w')) in 4Z for the 60 Gopel involutions");
  ok = true;
  for (const auto& [hex, sigma] : hw_family()) ok = ok && pairing_in_4z(sigma);
  r.add(ok, "(w', s(w')) in 4Z for the 192 Weber involutions");
  return r;
}

CheckReport surjectivity_check() {
  CheckReport r;
  Sublattice l(make_ambient(gram_e7(2)), QMat::Identity(7, 7));
  auto sv = short_vectors(l, 4);
  std::vector<QVec> roots;
  for (const ShortVector& v : sv)
    if (v.norm == -4) roots.push_back(v.vector);
  r.add(roots.size() == 126, "126 norm -4 vectors");

  std::map<std::vector<Rational>, int> root_index;
  for (size_t i = 0; i < roots.size(); ++i) {
    std::vector<Rational> key(roots[i].data(), roots[i].data() + 7);
    root_index[key] = static_cast<int>(i);
  }

  std::set<std::vector<Rational>> seen;
  std::vector<QMat> reflections;
  for (const QVec& v : roots) {
    QMat m = QMat::Identity(7, 7) +
             (v * (v.transpose() * l.ambient()->gram())) / 2;  // (v,v) = -4
    std::vector<Rational> key(m.data(), m.data() + 49);
    if (seen.insert(key).second) reflections.push_back(std::move(m));
  }
  r.add(reflections.size() == 63, "63 distinct reflections");
  for (const QMat& m : reflections)
    if (!is_integral(m) || QMat(m.transpose() * l.ambient()->gram() * m) !=
                               l.ambient()->gram())
      r.add(false, "reflection fails to be an integral isometry");

  PermGroup on_roots(static_cast<int>(roots.size()));
  for (const QMat& m : reflections) {
    Perm p(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
      QVec img = m * roots[i];
      std::vector<Rational> key(img.data(), img.data() + 7);
      p[i] = root_index.at(key);
    }
    on_roots.add_generator(p);
  }
  const Integer target = 2903040;
  r.add(on_roots.order() == target, "|O(E7(2))| = 2903040");

  LatticeForm lf = from_lattice(l);
  const auto& elems = lf.form.elements();
  auto class_of = [&](const QVec& v) {
    for (const FqElement& x : elems) {
      QVec rep = QVec::Zero(7);
      for (int j = 0; j < lf.form.generator_count(); ++j)
        rep += Rational(x.c[static_cast<size_t>(j)]) *
               lf.reps.row(j).transpose();
      if (l.contains(rep - v)) return x;
    }
    throw std::logic_error("surjectivity_check: class not found");
  };
  std::vector<FqIsometry> induced;
  for (const QMat& m : reflections) {
    FqIsometry g;
    for (int j = 0; j < lf.form.generator_count(); ++j)
      g.images.push_back(class_of(m * QVec(lf.reps.row(j).transpose())));
    induced.push_back(std::move(g));
  }
  r.add(group_order_generated(lf.form, induced) == target,
        "image in O(q) has order 2903040");
  r.add(count_isometries(lf.form) == target, "|O(q)| = 2903040");
  return r;
}

}  // namespace kummer
