#pragma once

// Lattices sitting inside an explicit rational quadratic space. A Sublattice
// stores a canonical (Hermite-reduced) row basis in ambient coordinates
// together with its Gram matrix; all derived objects (duals, discriminant
// groups, complements, eigenlattices) live in the same ambient space so that
// vectors from different lattices can be compared directly.

#include "kummer/exact.hpp"
#include "kummer/smith.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace kummer {

class AmbientSpace {
 public:
  explicit AmbientSpace(QMat gram);

  int dim() const { return static_cast<int>(gram_.rows()); }
  const QMat& gram() const { return gram_; }

  Rational inner(const QVec& a, const QVec& b) const {
    return (a.transpose() * gram_ * b)(0, 0);
  }

 private:
  QMat gram_;  // symmetric, nondegenerate
};

using AmbientPtr = std::shared_ptr<const AmbientSpace>;

AmbientPtr make_ambient(const QMat& gram);

class Sublattice {
 public:
  // Basis is extracted from the generator rows by Hermite reduction (after
  // clearing denominators), so equal row spans yield identical objects.
  Sublattice(AmbientPtr ambient, const QMat& generators);

  static Sublattice zero(AmbientPtr ambient) {
    return Sublattice(std::move(ambient), QMat(0, 0));
  }

  const AmbientPtr& ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return ambient_->dim(); }
  const QMat& basis() const { return basis_; }      // rank x dim, rows
  const QMat& gram() const { return gram_; }        // rank x rank
  QVec basis_row(int i) const { return basis_.row(i).transpose(); }

  Rational det() const;  // det of gram; 1 for the zero lattice

  // Rational coordinates of v in the basis, if v lies in the rational span.
  std::optional<QVec> coordinates(const QVec& v) const;

  // Integer-combination membership, decided exactly.
  bool contains(const QVec& v) const;
  bool contains(const Sublattice& other) const;

  bool operator==(const Sublattice& o) const { return basis_ == o.basis_; }

 private:
  AmbientPtr ambient_;
  QMat basis_;
  QMat gram_;
  std::shared_ptr<const Eigen::FullPivLU<QMat>> solver_;  // of basis_^T
};

struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;  // d_1 | d_2 | ..., each > 1
  QMat generator_reps;                     // rows, in L*, one per factor

  Integer order() const {
    Integer n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
  }
};

bool is_even(const Sublattice& l);

// Dual lattice L* in the same ambient space.
Sublattice dual_basis(const Sublattice& l);

// L*/L with explicit generator representatives.
DiscriminantGroup discriminant_group(const Sublattice& l);

// {x in L : (x, s) = 0 for all s in S}; S must be contained in L.
Sublattice orthogonal_complement(const Sublattice& l, const Sublattice& s);

// {x in L : m x = sign * x} for an isometry m of the ambient space
// preserving L. Primitive in L by construction.
Sublattice eigenlattice(const Sublattice& l, const QMat& m, int sign);

struct ShortVector {
  QVec vector;        // ambient coordinates
  ZVec coefficients;  // in the lattice basis
  Integer norm;       // (v, v), negative
};

// All v in L with 0 < -(v,v) <= bound, for negative definite L. Exhaustive
// Fincke-Pohst enumeration with exact rational Cholesky data; both v and -v
// are listed. Sorted by (|norm|, coefficient lex) for determinism.
std::vector<ShortVector> short_vectors(const Sublattice& l, const Integer& bound);

// Sylvester signature (positive count, negative count) of a nondegenerate
// symmetric rational matrix, computed by exact congruence reduction.
std::pair<int, int> signature(const QMat& gram);

// Searches for p (integer, unimodular) with p * gram(l2) * p^T = gram(l1).
// Both lattices must be negative definite of equal rank. Row i of p gives the
// l2-coordinates of the image of the i-th basis vector of l1. Exhaustive
// backtracking over short-vector images; nullopt means no isometry exists.
std::optional<ZMat> isometry_search(const Sublattice& l1, const Sublattice& l2);

}  // namespace kummer
