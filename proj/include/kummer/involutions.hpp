#pragma once

// Isometries of the Neron-Severi model: translations, configuration
// relabelings, switches, and the two Hutchinson families, together with
// their eigenlattice extraction and the certification helpers (E7(2)
// eigenlattice checks, Weyl-vector identities, surjectivity of
// O(E7(2)) -> O(q)).

#include "kummer/ns_lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace kummer {

struct Curve {
  bool trope = false;
  HalfSet index;

  bool operator==(const Curve&) const = default;
  bool operator<(const Curve& o) const {
    if (trope != o.trope) return !trope;
    return index < o.index;
  }
};

QVec curve_vector(const Curve& c);
long intersection_number(const Curve& a, const Curve& b);  // label-level

using CurvePerm = std::vector<std::pair<Curve, Curve>>;  // all 32 curves

struct NsIsometry {
  QMat m;  // 17 x 17, acts by v -> m v
  std::string provenance;
};

QVec apply(const NsIsometry& s, const QVec& v);
NsIsometry compose(const NsIsometry& a, const NsIsometry& b);

// Validates m^T G m = G and m(NS) = NS (and m^2 = 1 when an involution is
// claimed); throws std::invalid_argument otherwise.
NsIsometry make_isometry(QMat m, std::string provenance,
                         bool require_involution);

NsIsometry translation_action(const HalfSet& alpha);

// Relabeling of the six symbols; image[i-1] is the image of symbol i.
NsIsometry s6_action(const std::array<int, 6>& image);

// Unique linear extension of an incidence-preserving permutation of the 32
// curve labels; rejects permutations that break intersection numbers or the
// linear relations among the curves.
NsIsometry config_automorphism(const CurvePerm& p, std::string provenance,
                               bool require_involution = true);

// beta one of the ten odd classes of size 3: nodes and tropes are swapped
// through translation by beta.
NsIsometry switch_action(const HalfSet& beta);

// Hutchinson involutions attached to Gopel tetrads and Weber hexads. The
// base cases are built as x -> x - 2 proj_K(x) from the explicit eigenspace
// generators; every other datum is reached by conjugating with a
// translation and a symbol relabeling.
const NsIsometry& hg_action(const HalfSetList& tetrad);
const NsIsometry& hw_action(const HalfSetList& hexad);

// Direct closed-form matrix for a Weber hexad from the incidence data
// (degree-one tropes and the mu/mu' pairings).
NsIsometry hw_closed_form(const HalfSetList& hexad);

// x -> x - 2 proj_K(x); defined whenever the result preserves NS.
NsIsometry involution_from_eigenspace(const Sublattice& k,
                                      std::string provenance);

Sublattice minus_one_eigenlattice(const NsIsometry& s);
Sublattice plus_one_eigenlattice(const NsIsometry& s);

// Explicit eigenspace generator spans of the three base involutions.
Sublattice switch_base_eigenlattice();  // sigma at beta = [123]
Sublattice hg_base_eigenlattice();      // G0 = {[0],[12],[34],[56]}
Sublattice hw_base_eigenlattice();      // W0 = {12,23,13,14,25,36}

const HalfSetList& hg_base_tetrad();
const HalfSetList& hw_base_hexad();

struct CheckReport {
  bool ok = true;
  std::vector<std::string> checks;

  void add(bool cond, const std::string& what) {
    checks.push_back((cond ? "ok: " : "FAIL: ") + what);
    ok = ok && cond;
  }
};

// Negative definite, no -2 vectors, exactly 126 of norm -4, discriminant
// form u(2)^3 + <1/4>, and an explicit basis change to standard E7(2).
CheckReport free_necessary_check(const Sublattice& k);

// Witness returned by the last free_necessary_check E7(2) stage, exposed
// for reporting. Row i holds the k-coordinates of the image of the i-th
// standard basis vector.
std::optional<ZMat> e7_witness(const Sublattice& k);

QVec weyl_wprime();                           // 2H - (1/2) sum of all nodes
QVec weyl_rprime(const HalfSetList& hexad);   // (3H - 2 sum_W nodes)/4

// sigma_W(w') = w' + 8 r'(W) for all 192 hexads, and (w', s(w')) in 4Z for
// every generator s (16 translations, 10 switches, 60 + 192 Hutchinson).
CheckReport weyl_identities();

// O(E7(2)) generated by reflections in the norm -4 vectors: order
// 2,903,040, equal to the order of its image in O(q) and to |O(q)| itself.
CheckReport surjectivity_check();

}  // namespace kummer
