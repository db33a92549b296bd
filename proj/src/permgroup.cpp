#include "kummer/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace kummer {

Perm perm_identity(int n) {
  Perm p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm p(b.size());
  for (size_t i = 0; i < b.size(); ++i)
    p[i] = a[static_cast<size_t>(b[i])];
  return p;
}

Perm perm_inverse(const Perm& a) {
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    p[static_cast<size_t>(a[i])] = static_cast<int>(i);
  return p;
}

PermGroup::PermGroup(int n) : n_(n) {}

bool PermGroup::strip(const Perm& g, Perm& residue, size_t& level) const {
  residue = g;
  for (level = 0; level < levels_.size(); ++level) {
    const Level& lv = levels_[level];
    int img = residue[static_cast<size_t>(lv.base)];
    if (img == lv.base) continue;
    if (!lv.in_orbit[static_cast<size_t>(img)]) return false;
    residue = perm_compose(perm_inverse(lv.transversal[static_cast<size_t>(img)]), residue);
  }
  // residue fixes all base points; it is in the group iff it is identity
  for (int i = 0; i < n_; ++i)
    if (residue[static_cast<size_t>(i)] != i) return false;
  return true;
}

void PermGroup::extend_orbit(size_t level) {
  Level& lv = levels_[level];
  std::deque<int> queue;
  for (int p = 0; p < n_; ++p)
    if (lv.in_orbit[static_cast<size_t>(p)]) queue.push_back(p);
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (const Perm& g : lv.gens) {
      int q = g[static_cast<size_t>(p)];
      if (!lv.in_orbit[static_cast<size_t>(q)]) {
        lv.in_orbit[static_cast<size_t>(q)] = 1;
        lv.transversal[static_cast<size_t>(q)] =
            perm_compose(g, lv.transversal[static_cast<size_t>(p)]);
        queue.push_back(q);
      }
    }
  }
}

void PermGroup::add_generator(const Perm& g) {
  if (static_cast<int>(g.size()) != n_)
    throw std::invalid_argument("PermGroup: degree mismatch");
  gens_.push_back(g);

  // Recursive sifting: add g at the first level it moves, creating levels
  // as needed, then close all Schreier generators.
  std::vector<std::pair<size_t, Perm>> pending{{0, g}};
  while (!pending.empty()) {
    auto [start, h] = pending.back();
    pending.pop_back();
    Perm residue;
    size_t level;
    if (strip(h, residue, level)) continue;
    if (level == levels_.size()) {
      // new base point: first point moved by the residue
      int base = -1;
      for (int i = 0; i < n_; ++i)
        if (residue[static_cast<size_t>(i)] != i) {
          base = i;
          break;
        }
      Level lv;
      lv.base = base;
      lv.transversal.assign(static_cast<size_t>(n_), Perm());
      lv.in_orbit.assign(static_cast<size_t>(n_), 0);
      lv.in_orbit[static_cast<size_t>(base)] = 1;
      lv.transversal[static_cast<size_t>(base)] = perm_identity(n_);
      levels_.push_back(std::move(lv));
    }
    // add residue as a generator to this level and all above it get new
    // Schreier generators via re-closure
    Level& lv = levels_[level];
    lv.gens.push_back(residue);
    std::vector<char> old_orbit = lv.in_orbit;
    extend_orbit(level);
    // Schreier generators of the stabilizer: u_{g(p)}^{-1} * g * u_p
    for (int p = 0; p < n_; ++p) {
      if (!lv.in_orbit[static_cast<size_t>(p)]) continue;
      for (const Perm& gen : lv.gens) {
        int q = gen[static_cast<size_t>(p)];
        Perm schreier = perm_compose(
            perm_inverse(lv.transversal[static_cast<size_t>(q)]),
            perm_compose(gen, lv.transversal[static_cast<size_t>(p)]));
        Perm res2;
        size_t lvl2;
        if (!strip(schreier, res2, lvl2))
          pending.push_back({level + 1, schreier});
      }
    }
  }
}

Integer PermGroup::order() const {
  Integer o = 1;
  for (const Level& lv : levels_) {
    long cnt = 0;
    for (char c : lv.in_orbit) cnt += c;
    o *= cnt;
  }
  return o;
}

bool PermGroup::contains(const Perm& g) const {
  Perm residue;
  size_t level;
  return strip(g, residue, level);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> root(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) root[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const Perm& g : gens_)
    for (int i = 0; i < n_; ++i) {
      int a = find(i), b = find(g[static_cast<size_t>(i)]);
      if (a != b) root[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> index(static_cast<size_t>(n_), -1);
  for (int i = 0; i < n_; ++i) {
    int r = find(i);
    if (index[static_cast<size_t>(r)] < 0) {
      index[static_cast<size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<size_t>(index[static_cast<size_t>(r)])].push_back(i);
  }
  return out;
}

}  // namespace kummer
