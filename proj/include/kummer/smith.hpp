#pragma once

// Integer normal forms: Smith normal form, canonical row Hermite form and
// saturated integer row kernels. These are the primitives behind discriminant
// groups, lattice membership and orthogonal complements.

#include "kummer/exact.hpp"

namespace kummer {

struct SmithResult {
  ZMat D;  // diagonal, d_i >= 0, d_i | d_{i+1}
  ZMat U;  // unimodular, rows
  ZMat V;  // unimodular, cols
  int rank = 0;
  // invariant: U * M * V == D
};

// Smith normal form of an integer matrix. Throws std::invalid_argument if a
// rational matrix with non-integer entries is passed through the QMat overload.
SmithResult smith_normal_form(const ZMat& m);
SmithResult smith_normal_form(const QMat& m);

// Canonical row Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows dropped. Unique for a given row space.
ZMat hermite_row_form(const ZMat& m);

// Basis (rows) of {c in Z^r : c * m = 0}. Saturated by construction and
// returned in canonical Hermite form.
ZMat integer_row_kernel(const ZMat& m);

}  // namespace kummer
