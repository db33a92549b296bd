#pragma once

// Incremental Schreier-Sims for permutation groups on a small point set.
// Base points are chosen deterministically (first moved point), so orders
// and membership tests are reproducible.

#include "kummer/exact.hpp"

#include <vector>

namespace kummer {

using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);

class PermGroup {
 public:
  explicit PermGroup(int n);

  void add_generator(const Perm& g);
  Integer order() const;
  bool contains(const Perm& g) const;
  int degree() const { return n_; }

  // Orbit partition of {0..n-1} under the current generators, each orbit
  // sorted, orbits ordered by smallest element.
  std::vector<std::vector<int>> orbits() const;

 private:
  struct Level {
    int base = -1;
    std::vector<Perm> transversal;  // transversal[p] maps base -> p (empty if unreachable)
    std::vector<char> in_orbit;
    std::vector<Perm> gens;
  };

  bool strip(const Perm& g, Perm& residue, size_t& level) const;
  void extend_orbit(size_t level);

  int n_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

}  // namespace kummer
