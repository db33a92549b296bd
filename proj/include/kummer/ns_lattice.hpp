#pragma once

// The Neron-Severi lattice of the nodal Kummer quartic inside Q^17, over the
// orthogonal basis (H, N_[0], N_[12], ..., N_[56]) with Gram
// diag(4, -2, ..., -2). Tropes are the half-integral classes
// T = (H - sum of the six incident nodes)/2; the lattice is the Z-span of
// all 32 curve classes. The discriminant group comes with the fixed
// generator basis (e1, f1, e2, f2, g).

#include "kummer/fq.hpp"
#include "kummer/halfset.hpp"
#include "kummer/lattice.hpp"

#include <string>
#include <vector>

namespace kummer {

constexpr int kNsDim = 17;

// position of a node among the coordinates: [0] -> 1, [12] -> 2, ... [56] -> 16
int node_index(const HalfSet& alpha);

QVec hyperplane_vector();
QVec node_vector(const HalfSet& alpha);
QVec trope_vector(const HalfSet& beta);

struct NsModel {
  AmbientPtr ambient;
  Sublattice lattice;
  QMat disc_basis;                // 5 x 17 rows: e1, f1, e2, f2, g (in NS*)
  FiniteQuadraticForm disc_form;  // orders (2,2,2,2,4) over that basis
};

// Built once, immutable and shared afterwards.
const NsModel& ns_model();

// Coefficients of a dual vector over (e1,f1,e2,f2,g), as an element of
// ns_model().disc_form. Throws if v does not pair integrally with NS.
FqElement disc_class(const QVec& v);

// Representative dual vector of a discriminant class (the plain coefficient
// combination of the basis rows).
QVec disc_rep(const FqElement& x);

// Re-derives every defining property of the (e1,f1,e2,f2,g) basis: orders,
// q-values, pairing matrix, and that the 64 combinations exhaust A_NS.
// Returns the list of verified identities; throws std::logic_error naming
// the first identity that fails.
std::vector<std::string> verify_disc_basis();

// Reference gram matrices (negative-definite root lattices use the negated
// Cartan matrices).
QMat block_diag(const std::vector<QMat>& blocks);
QMat gram_u(long scale = 1);
QMat gram_d(int n);
QMat gram_e8(long scale = 1);
QMat gram_e7(long scale = 1);
QMat gram_t();            // U(2)^2 + <-4>
QMat gram_n();            // U + U(2) + E8(2)
QMat gram_m();            // U(2) + E8(2)
QMat gram_ns_abstract();  // U + D4 + D4 + D7

struct GenusReport {
  bool ok = false;
  std::vector<std::string> checks;
};

// Certifies that the curve-span lattice and the abstract model U+D4^2+D7
// agree in rank, parity, signature, determinant, and discriminant form.
// Even indefinite lattices are unique in their genus once
// rank >= 2 + minimal generator count of the discriminant group, so these
// checks certify the isometry itself.
GenusReport reconcile_abstract_model();

}  // namespace kummer
