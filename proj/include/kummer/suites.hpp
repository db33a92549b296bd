#pragma once

// Criterion-level verification suites shared by the command-line front end
// and the acceptance runner. Each returns a CheckReport with one line per
// verified fact.

#include "kummer/classifier.hpp"

#include <string>

namespace kummer {

// Discriminant basis identities, curve-span vs abstract model genus
// reconciliation.
CheckReport ns_suite();

// A_NS = u(2)^2 + <1/4>, -q_NS matches the transcendental model
// U(2)^2 + <-4>, [H/2] is the distinguished class.
CheckReport form_identifications_check();

// Orbit decompositions of u(2)^m + <1/4> for m = 1, 2, 3: lengths
// (1, 1, 2^2m-1, 2^2m-1, 2^2m+2^m, 2^2m-2^m), squares (0,1,0,1,1/4,-3/4).
CheckReport orbit_tables_check();

// Order-4 subgroup census of A_NS: 10 cyclic q = 1/4, 15 2-elementary with
// [H/2], 6 cyclic q = -3/4.
CheckReport census_counts_check();

// Enumeration counts 15/60/20/80/192, Weber shape round trips with the
// 72/120 split, unique Rosenhain pair for each even theta characteristic.
CheckReport combinatorics_check();

// E7(2) certification of all 10 + 15 + 192 eigenlattices (negative
// definite, no -2 vectors, 126 of norm -4, explicit witness).
CheckReport eigenlattice_check(int threads);

// The published base actions: the three constructions of the base Weber
// involution agree, and the base Gopel involution reproduces its action
// list.
CheckReport cross_construction_check();

// Golden-file byte equality of the three rendered tables.
CheckReport golden_check(const ClassificationReport& r,
                         const std::string& golden_dir);

}  // namespace kummer
