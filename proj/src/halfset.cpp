#include "kummer/halfset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace kummer {

namespace {

constexpr unsigned kFull = 0x3f;

unsigned canonicalize(unsigned m) {
  m &= kFull;
  int pc = std::popcount(m);
  if (pc % 2 == 0) return pc <= 2 ? m : m ^ kFull;
  if (pc == 1) return m;
  if (pc == 5) return m ^ kFull;
  return (m & 1u) ? m : m ^ kFull;  // size 3: keep the half containing 1
}

// bit for symbol 1 made most significant, so that descending order of
// rev() is ascending lexicographic order of the element lists
unsigned rev(unsigned m) {
  unsigned r = 0;
  for (int i = 0; i < 6; ++i)
    if (m >> i & 1u) r |= 1u << (5 - i);
  return r;
}

}  // namespace

HalfSet::HalfSet(std::initializer_list<int> elems) : mask_(0) {
  for (int e : elems) {
    if (e < 1 || e > 6) throw std::invalid_argument("HalfSet: symbol out of range");
    mask_ |= 1u << (e - 1);
  }
  mask_ = canonicalize(mask_);
}

HalfSet HalfSet::from_mask(unsigned mask) {
  HalfSet h;
  h.mask_ = canonicalize(mask);
  return h;
}

HalfSet HalfSet::parse(const std::string& s) {
  if (s.size() < 3 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("HalfSet: bad notation " + s);
  std::string body = s.substr(1, s.size() - 2);
  if (body == "0") return HalfSet{};
  unsigned m = 0;
  for (char c : body) {
    if (c < '1' || c > '6')
      throw std::invalid_argument("HalfSet: bad notation " + s);
    m |= 1u << (c - '1');
  }
  return from_mask(m);
}

bool HalfSet::is_even() const { return std::popcount(mask_) % 2 == 0; }

int HalfSet::size() const { return std::popcount(mask_); }

std::vector<int> HalfSet::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= 6; ++i)
    if (mask_ >> (i - 1) & 1u) out.push_back(i);
  return out;
}

std::string HalfSet::str() const {
  if (mask_ == 0) return "[0]";
  std::string s = "[";
  for (int e : elements()) s += static_cast<char>('0' + e);
  return s + "]";
}

bool HalfSet::operator<(const HalfSet& o) const {
  if (size() != o.size()) return size() < o.size();
  return rev(mask_) > rev(o.mask_);
}

HalfSet sym_diff(const HalfSet& a, const HalfSet& b) {
  return HalfSet::from_mask(a.mask() ^ b.mask());
}

int symplectic(const HalfSet& a, const HalfSet& b) {
  if (!a.is_even() || !b.is_even())
    throw std::invalid_argument("symplectic: even classes only");
  // complement-invariant because all canonical sizes are even
  return std::popcount(a.mask() & b.mask()) % 2;
}

bool incidence(const HalfSet& node, const HalfSet& trope) {
  if (!node.is_even() || trope.is_even())
    throw std::invalid_argument("incidence: expects (even, odd)");
  return sym_diff(node, trope).size() == 1;
}

HalfSetList lambda_of(const HalfSet& trope) {
  HalfSetList out;
  for (const HalfSet& a : all_even())
    if (incidence(a, trope)) out.push_back(a);
  if (out.size() != 6) throw std::logic_error("lambda_of: expected 6 nodes");
  return out;
}

namespace {

HalfSetList classes_of_parity(bool even) {
  std::set<HalfSet> s;
  for (unsigned m = 0; m <= kFull; ++m) {
    HalfSet h = HalfSet::from_mask(m);
    if (h.is_even() == even) s.insert(h);
  }
  return {s.begin(), s.end()};
}

}  // namespace

const HalfSetList& all_even() {
  static const HalfSetList v = classes_of_parity(true);
  return v;
}

const HalfSetList& all_odd() {
  static const HalfSetList v = classes_of_parity(false);
  return v;
}

HalfSetList set_sym_diff(const HalfSetList& a, const HalfSetList& b) {
  HalfSetList out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

namespace {

std::vector<HalfSetList> subspaces(bool isotropic) {
  std::set<HalfSetList> out;
  const HalfSetList& ev = all_even();
  for (const HalfSet& a : ev) {
    if (a.size() == 0) continue;
    for (const HalfSet& b : ev) {
      if (b.size() == 0 || b == a) continue;
      if ((symplectic(a, b) == 0) != isotropic) continue;
      HalfSetList g{HalfSet{}, a, b, sym_diff(a, b)};
      std::sort(g.begin(), g.end());
      out.insert(std::move(g));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<HalfSetList> translates(const std::vector<HalfSetList>& groups) {
  std::set<HalfSetList> out;
  for (const HalfSetList& g : groups)
    for (const HalfSet& t : all_even()) {
      HalfSetList c;
      for (const HalfSet& x : g) c.push_back(sym_diff(t, x));
      std::sort(c.begin(), c.end());
      out.insert(std::move(c));
    }
  return {out.begin(), out.end()};
}

}  // namespace

const std::vector<HalfSetList>& gopel_subgroups() {
  static const std::vector<HalfSetList> v = subspaces(true);
  return v;
}

const std::vector<HalfSetList>& gopel_tetrads() {
  static const std::vector<HalfSetList> v = translates(gopel_subgroups());
  return v;
}

const std::vector<HalfSetList>& rosenhain_subgroups() {
  static const std::vector<HalfSetList> v = subspaces(false);
  return v;
}

const std::vector<HalfSetList>& rosenhain_tetrads() {
  static const std::vector<HalfSetList> v = translates(rosenhain_subgroups());
  return v;
}

const std::vector<HalfSetList>& weber_hexads() {
  static const std::vector<HalfSetList> v = [] {
    std::set<HalfSetList> out;
    for (const HalfSetList& g : gopel_tetrads())
      for (const HalfSetList& r : rosenhain_tetrads()) {
        HalfSetList w = set_sym_diff(g, r);
        if (w.size() == 6) out.insert(std::move(w));
      }
    return std::vector<HalfSetList>(out.begin(), out.end());
  }();
  return v;
}

bool is_weber_hexad(const HalfSetList& w) {
  HalfSetList s = w;
  std::sort(s.begin(), s.end());
  const auto& all = weber_hexads();
  return std::binary_search(all.begin(), all.end(), s);
}

HalfSetList hexad_from_shape(const WeberShapeWitness& s) {
  const auto& y = s.symbols;
  HalfSetList w;
  if (s.shape == WeberShape::kWithZero)
    w = {HalfSet{},        HalfSet{y[0], y[1]}, HalfSet{y[1], y[2]},
         HalfSet{y[2], y[3]}, HalfSet{y[3], y[4]}, HalfSet{y[4], y[0]}};
  else
    w = {HalfSet{y[0], y[1]}, HalfSet{y[1], y[2]}, HalfSet{y[2], y[0]},
         HalfSet{y[0], y[3]}, HalfSet{y[1], y[4]}, HalfSet{y[2], y[5]}};
  std::sort(w.begin(), w.end());
  return w;
}

WeberShapeWitness weber_shape(const HalfSetList& w) {
  if (!is_weber_hexad(w))
    throw std::invalid_argument("weber_shape: not a Weber hexad");
  HalfSetList sorted = w;
  std::sort(sorted.begin(), sorted.end());
  const bool with_zero =
      std::binary_search(sorted.begin(), sorted.end(), HalfSet{});
  std::array<int, 6> p{1, 2, 3, 4, 5, 6};
  do {
    WeberShapeWitness cand{
        with_zero ? WeberShape::kWithZero : WeberShape::kWithoutZero, p};
    if (hexad_from_shape(cand) == sorted) return cand;
  } while (std::next_permutation(p.begin(), p.end()));
  throw std::logic_error("weber_shape: no witness found");
}

std::pair<HalfSetList, HalfSetList> rosenhain_pair(const HalfSet& beta) {
  if (beta.is_even() || beta.size() != 3)
    throw std::invalid_argument("rosenhain_pair: expects an odd class of size 3");
  HalfSetList target = lambda_of(beta);
  const auto& rs = rosenhain_subgroups();
  std::vector<std::pair<HalfSetList, HalfSetList>> found;
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j)
      if (set_sym_diff(rs[i], rs[j]) == target) found.push_back({rs[i], rs[j]});
  if (found.size() != 1)
    throw std::runtime_error("rosenhain_pair: decomposition not unique");
  return found.front();
}

namespace {

// W = G (+) R with G a Gopel tetrad, R Rosenhain, G cap R = {alpha};
// unique for every node alpha outside the hexad.
std::pair<HalfSetList, HalfSetList> decompose_at(const HalfSetList& w,
                                                 const HalfSet& alpha) {
  std::vector<std::pair<HalfSetList, HalfSetList>> found;
  const auto& rts = rosenhain_tetrads();
  for (const HalfSetList& g : gopel_tetrads()) {
    if (!std::binary_search(g.begin(), g.end(), alpha)) continue;
    HalfSetList r = set_sym_diff(g, w);
    if (r.size() != 4 || !std::binary_search(rts.begin(), rts.end(), r))
      continue;
    HalfSetList meet;
    std::set_intersection(g.begin(), g.end(), r.begin(), r.end(),
                          std::back_inserter(meet));
    if (meet == HalfSetList{alpha}) found.push_back({g, r});
  }
  if (found.size() != 1)
    throw std::runtime_error("decompose_at: decomposition not unique");
  return found.front();
}

}  // namespace

WeberMaps weber_maps(const HalfSetList& w) {
  if (!is_weber_hexad(w))
    throw std::invalid_argument("weber_maps: not a Weber hexad");
  HalfSetList hex = w;
  std::sort(hex.begin(), hex.end());

  WeberMaps out;
  for (const HalfSet& beta : all_odd()) {
    int deg = 0;
    for (const HalfSet& a : hex) deg += incidence(a, beta) ? 1 : 0;
    if (deg == 1) out.degree_one.push_back(beta);
  }
  if (out.degree_one.size() != 6)
    throw std::logic_error("weber_maps: degree-1 part is not a 6-set");
  for (const HalfSet& a : hex) {
    HalfSetList hits;
    for (const HalfSet& beta : out.degree_one)
      if (incidence(a, beta)) hits.push_back(beta);
    if (hits.size() != 1) throw std::logic_error("weber_maps: mu not a bijection");
    out.mu.push_back({a, hits.front()});
  }

  for (const HalfSet& alpha : all_even()) {
    if (std::binary_search(hex.begin(), hex.end(), alpha)) continue;
    auto [g, r] = decompose_at(hex, alpha);
    // subspace behind R, its symplectic complement, translated back to alpha
    HalfSetList r0, r0p;
    for (const HalfSet& x : r) r0.push_back(sym_diff(alpha, x));
    std::sort(r0.begin(), r0.end());
    for (const HalfSet& x : all_even()) {
      bool perp = true;
      for (const HalfSet& y : r0)
        if (symplectic(x, y) != 0) perp = false;
      if (perp) r0p.push_back(x);
    }
    const auto& rsubs = rosenhain_subgroups();
    if (r0p.size() != 4 ||
        !std::binary_search(rsubs.begin(), rsubs.end(), r0p))
      throw std::logic_error("weber_maps: orthogonal complement not Rosenhain");
    HalfSetList rp;
    for (const HalfSet& x : r0p) rp.push_back(sym_diff(alpha, x));
    std::sort(rp.begin(), rp.end());

    HalfSetList wp = set_sym_diff(g, rp);
    if (!is_weber_hexad(wp))
      throw std::logic_error("weber_maps: conjugate set is not a Weber hexad");
    out.perp.push_back({alpha, wp});

    HalfSetList rr = set_sym_diff(r, rp);
    HalfSetList betas;
    for (const HalfSet& beta : all_odd())
      if (lambda_of(beta) == rr) betas.push_back(beta);
    if (betas.size() != 1)
      throw std::logic_error("weber_maps: mu' trope not unique");
    out.mu_prime.push_back({alpha, betas.front()});
  }
  return out;
}

const std::vector<std::vector<HalfSetList>>& weber_classes() {
  static const std::vector<std::vector<HalfSetList>> v = [] {
    const auto& hex = weber_hexads();
    std::map<HalfSetList, int> index;
    for (size_t i = 0; i < hex.size(); ++i) index[hex[i]] = static_cast<int>(i);

    std::vector<int> root(hex.size());
    for (size_t i = 0; i < hex.size(); ++i) root[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (root[static_cast<size_t>(x)] != x) x = root[static_cast<size_t>(x)];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) root[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };

    for (size_t i = 0; i < hex.size(); ++i) {
      for (const HalfSet& t : all_even()) {
        HalfSetList tw;
        for (const HalfSet& x : hex[i]) tw.push_back(sym_diff(t, x));
        std::sort(tw.begin(), tw.end());
        unite(static_cast<int>(i), index.at(tw));
      }
      for (const auto& [alpha, wp] : weber_maps(hex[i]).perp)
        unite(static_cast<int>(i), index.at(wp));
    }

    std::map<int, std::vector<HalfSetList>> classes;
    for (size_t i = 0; i < hex.size(); ++i)
      classes[find(static_cast<int>(i))].push_back(hex[i]);
    std::vector<std::vector<HalfSetList>> out;
    for (auto& [r, members] : classes) out.push_back(std::move(members));
    if (out.size() != 6)
      throw std::logic_error("weber_classes: expected 6 classes");
    for (const auto& c : out)
      if (c.size() != 32)
        throw std::logic_error("weber_classes: expected classes of 32");
    return out;
  }();
  return v;
}

std::vector<HalfSetList> class_members_avoiding_zero(
    const std::vector<HalfSetList>& cls) {
  std::vector<HalfSetList> out;
  for (const HalfSetList& w : cls)
    if (!std::binary_search(w.begin(), w.end(), HalfSet{})) out.push_back(w);
  return out;
}

const std::vector<Syntheme>& all_synthemes() {
  static const std::vector<Syntheme> v = [] {
    std::vector<Syntheme> out;
    std::array<int, 6> p{1, 2, 3, 4, 5, 6};
    std::set<Syntheme> seen;
    do {
      Syntheme s{HalfSet{p[0], p[1]}, HalfSet{p[2], p[3]}, HalfSet{p[4], p[5]}};
      std::sort(s.begin(), s.end());
      seen.insert(std::move(s));
    } while (std::next_permutation(p.begin(), p.end()));
    return std::vector<Syntheme>(seen.begin(), seen.end());
  }();
  return v;
}

bool is_total(const std::vector<Syntheme>& s) {
  if (s.size() != 5) return false;
  std::set<HalfSet> duads;
  for (const Syntheme& t : s)
    for (const HalfSet& d : t)
      if (!duads.insert(d).second) return false;
  return duads.size() == 15;
}

SynthemeDuality syntheme_duality(const std::vector<HalfSetList>& family) {
  std::set<Syntheme> present;
  for (const HalfSetList& w : family) {
    if (!is_weber_hexad(w) ||
        std::binary_search(w.begin(), w.end(), HalfSet{}))
      throw std::invalid_argument(
          "syntheme_duality: family members must be Weber hexads avoiding [0]");
    auto [g, r] = decompose_at(w, HalfSet{});
    Syntheme s;
    for (const HalfSet& x : g)
      if (x.size() != 0) s.push_back(x);
    present.insert(std::move(s));
  }
  SynthemeDuality out;
  out.present.assign(present.begin(), present.end());
  for (const Syntheme& s : all_synthemes())
    if (!present.count(s)) out.absent.push_back(s);
  return out;
}

}  // namespace kummer
