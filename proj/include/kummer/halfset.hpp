#pragma once

// Index combinatorics of the (16)_6 configuration: partitions of {1,...,6}
// into halves modulo complement, the symplectic F_2^4 of even classes, the
// node/trope incidence, and the Gopel / Rosenhain / Weber enumerations.

#include <array>
#include <string>
#include <vector>

namespace kummer {

// A subset of {1,...,6} identified with its complement. Even classes (size
// 0 or 2 canonically) index nodes, odd classes (size 1, or 3 containing 1)
// index tropes.
class HalfSet {
 public:
  HalfSet() : mask_(0) {}
  HalfSet(std::initializer_list<int> elems);
  static HalfSet from_mask(unsigned mask);
  static HalfSet parse(const std::string& s);  // "[0]", "[12]", "[123]"

  bool is_even() const;
  int size() const;  // of the canonical representative
  std::vector<int> elements() const;
  unsigned mask() const { return mask_; }
  std::string str() const;

  bool operator==(const HalfSet&) const = default;
  // size first, then lexicographic on elements: [0] < [12] < ... < [56]
  bool operator<(const HalfSet& o) const;

 private:
  unsigned mask_;  // canonical representative, bit i-1 <-> symbol i
};

using HalfSetList = std::vector<HalfSet>;  // sorted, duplicate-free

HalfSet sym_diff(const HalfSet& a, const HalfSet& b);
int symplectic(const HalfSet& a, const HalfSet& b);  // even classes only
bool incidence(const HalfSet& node, const HalfSet& trope);
HalfSetList lambda_of(const HalfSet& trope);  // the 6 incident nodes

const HalfSetList& all_even();  // 16, canonical order
const HalfSetList& all_odd();   // 16, canonical order

HalfSetList set_sym_diff(const HalfSetList& a, const HalfSetList& b);

// 2-dimensional subspaces of the even classes and their translates.
// Gopel: totally isotropic; Rosenhain: not. Sizes 15 / 60 / 20 / 80 / 192.
const std::vector<HalfSetList>& gopel_subgroups();
const std::vector<HalfSetList>& gopel_tetrads();
const std::vector<HalfSetList>& rosenhain_subgroups();
const std::vector<HalfSetList>& rosenhain_tetrads();
const std::vector<HalfSetList>& weber_hexads();

bool is_weber_hexad(const HalfSetList& w);

enum class WeberShape { kWithZero, kWithoutZero };

// Shape witness: symbols (i,j,k,l,m,n). With zero: {0, ij, jk, kl, lm, mi}
// (n unused); without zero: {ij, jk, ki, il, jm, kn}.
struct WeberShapeWitness {
  WeberShape shape;
  std::array<int, 6> symbols;
};

WeberShapeWitness weber_shape(const HalfSetList& w);
HalfSetList hexad_from_shape(const WeberShapeWitness& s);

// The unique unordered pair of Rosenhain subgroups with R1 (+) R2 =
// lambda_of(beta), for beta an odd class of canonical size 3.
std::pair<HalfSetList, HalfSetList> rosenhain_pair(const HalfSet& beta);

// Incidence data of a Weber hexad: its degree-1 tropes W1, the bijection
// mu: W -> W1, the pairing mu' on the 10 nodes outside W, and the conjugate
// hexads W_alpha_perp obtained through the orthogonal Rosenhain tetrad.
struct WeberMaps {
  HalfSetList degree_one;                              // W1
  std::vector<std::pair<HalfSet, HalfSet>> mu;         // alpha in W -> trope
  std::vector<std::pair<HalfSet, HalfSet>> mu_prime;   // alpha not in W -> trope
  std::vector<std::pair<HalfSet, HalfSetList>> perp;   // alpha not in W -> hexad
};

WeberMaps weber_maps(const HalfSetList& w);

// Equivalence classes of the 192 hexads under translations together with
// W ~ W_alpha_perp: 6 classes of 32.
const std::vector<std::vector<HalfSetList>>& weber_classes();

// The 20 members of one class that avoid [0].
std::vector<HalfSetList> class_members_avoiding_zero(
    const std::vector<HalfSetList>& cls);

using Syntheme = HalfSetList;  // 3 disjoint duads

const std::vector<Syntheme>& all_synthemes();  // 15
bool is_total(const std::vector<Syntheme>& s);  // 5 pairwise duad-disjoint

struct SynthemeDuality {
  std::vector<Syntheme> present;  // from the 20 decompositions at [0]
  std::vector<Syntheme> absent;   // the complement in the 15
};

SynthemeDuality syntheme_duality(const std::vector<HalfSetList>& family);

}  // namespace kummer
