#pragma once

// Patching subgroups of the free involutions and the 31-class
// classification: the order-4 glue subgroup of A_NS attached to each
// involution, closed-form generators per family, the collapse
// 10 + 60 + 192 -> 10 + 15 + 6, and the table/report renderers.

#include "kummer/fq.hpp"
#include "kummer/involutions.hpp"

#include <string>
#include <vector>

namespace kummer {

struct PatchingSubgroup {
  FqSubgroup subgroup;  // canonical sorted elements of A_NS
  FqElement generator;  // reported generator (sign convention below)
  bool cyclic = false;
  std::string provenance;
};

// Glue subgroup {[x] in A_NS | exists y in K*/K with x - y in NS} for the
// -1-eigenlattice K of s. The default path tests x against the sum lattice
// NS + K*; brute_force runs the verbatim 64 x 256 coset double loop. Both
// agree (asserted in tests). Throws if the subgroup order is not 4.
PatchingSubgroup patching_subgroup(const NsIsometry& s,
                                   bool brute_force = false);

// Closed-form generators: switches use H/4 + (sum over a Rosenhain subgroup
// of beta)/2; Gopel data use <H/2, (sum over G)/2>; Weber data use
// (3/4)H + (sum over W)/2. Each is checked to have order 4.
PatchingSubgroup switch_patching(const HalfSet& beta);
PatchingSubgroup hg_patching(const HalfSetList& tetrad);
PatchingSubgroup hw_patching(const HalfSetList& hexad);

// Cyclic subgroups are reported by the order-4 generator whose g-coordinate
// is 1; 2-elementary subgroups by the class of (sum over G)/2.
std::string generator_expression(const FqElement& x);  // "e1+f2+g", "2g", ...
std::string datum_string(const HalfSetList& datum);    // "[0]+[12]+[34]+[56]"

struct ClassificationRow {
  std::string family;  // "switch" | "gopel" | "weber"
  HalfSetList datum;   // {beta}, the Gopel subgroup, or the class hexad
  PatchingSubgroup patching;
};

struct ClassificationReport {
  std::vector<ClassificationRow> rows;  // 31 in canonical table order
  CheckReport certificate;
};

// Row order: switches by beta ascending; the 15 Gopel subgroups sorted; the
// Weber classes by their published representative hexads.
const std::vector<HalfSetList>& weber_table_hexads();

// Computes all 10 + 60 + 192 patching subgroups (closed form cross-checked
// against the eigenlattice computation on every datum), certifies the
// collapse to 10 + 15 + 6 distinct subgroups with no cross-family
// collisions, and the constancy on translation orbits / Weber classes.
ClassificationReport classify_all(int threads = 1);

// The three concrete families coincide with the abstract order-4 subgroup
// census of A_NS: cyclic with q(gen) = 1/4 (switches), 2-elementary
// containing the distinguished class (Gopel), cyclic with q(gen) = -3/4
// (Weber).
CheckReport abstract_concrete_bijection(const ClassificationReport& r);

// One markdown table per family (also the golden-file format), their
// concatenation, and csv / json over all 31 rows.
std::string render_table_markdown(const ClassificationReport& r,
                                  const std::string& family);
std::string render_markdown(const ClassificationReport& r);
std::string render_csv(const ClassificationReport& r);
std::string render_json(const ClassificationReport& r);

}  // namespace kummer
