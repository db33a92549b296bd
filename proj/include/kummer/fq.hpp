#pragma once

// Finite quadratic forms (A, q, b): q takes values in Q/2Z, b in Q/Z.
// Values are stored normalized (q in [0,2), b in [0,1)) so that canonical
// comparisons are bit-exact. Standard forms u(2) and <1/2n>, exhaustive
// isometry enumeration, orbit decompositions and the order-4 subgroup
// families used by the classification.

#include "kummer/exact.hpp"
#include "kummer/lattice.hpp"
#include "kummer/permgroup.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace kummer {

struct FqElement {
  std::vector<int> c;  // coefficient i reduced mod d_i

  bool operator==(const FqElement&) const = default;
  bool operator<(const FqElement& o) const { return c < o.c; }
};

class FiniteQuadraticForm {
 public:
  // orders d_i; q values of the generators (mod 2Z); b the pairing matrix of
  // the generators (mod Z). The group is the direct sum of Z/d_i.
  FiniteQuadraticForm(std::vector<long> orders, std::vector<Rational> q,
                      QMat b);

  int generator_count() const { return static_cast<int>(orders_.size()); }
  const std::vector<long>& orders() const { return orders_; }
  Integer size() const;

  FqElement zero() const;
  FqElement generator(int i) const;
  FqElement reduce(std::vector<int> coeffs) const;
  FqElement add(const FqElement& a, const FqElement& b) const;
  FqElement neg(const FqElement& a) const;
  FqElement smul(long k, const FqElement& a) const;
  long element_order(const FqElement& a) const;

  Rational q(const FqElement& x) const;                      // in [0,2)
  Rational b(const FqElement& x, const FqElement& y) const;  // in [0,1)

  // All elements in deterministic (mixed-radix) order; guarded to <= 256.
  const std::vector<FqElement>& elements() const;
  int element_index(const FqElement& x) const;

  bool nondegenerate() const;

 private:
  std::vector<long> orders_;
  std::vector<Rational> q_;
  QMat b_;
  mutable std::vector<FqElement> elements_;  // built lazily
};

FiniteQuadraticForm standard_u2();
FiniteQuadraticForm standard_one_over(long two_n);  // <1/2n> for the lattice <2n>
FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a,
                               const FiniteQuadraticForm& b);

// u(2)^m + <1/4>, the discriminant form family of the classification.
FiniteQuadraticForm u2_pow_plus_quarter(int m);

struct LatticeForm {
  FiniteQuadraticForm form;
  QMat reps;  // rows: ambient vectors representing the generators
};

// Discriminant form of an even nondegenerate lattice, with explicit
// representatives in L*.
LatticeForm from_lattice(const Sublattice& l);

struct FqIsometry {
  std::vector<FqElement> images;  // one per generator

  FqElement apply(const FiniteQuadraticForm& f, const FqElement& x) const;
  bool operator==(const FqIsometry&) const = default;
};

// Exhaustive backtracking over generator images; guarded to |A| <= 256.
std::vector<FqIsometry> all_isometries(const FiniteQuadraticForm& f);

// Number of isometries, counted by the same backtracking without storing
// them. No size guard beyond elements() (<= 256).
Integer count_isometries(const FiniteQuadraticForm& f);

// Lazily yields isometries in the backtracking order until the callback
// returns false.
void for_each_isometry(const FiniteQuadraticForm& f,
                       const std::function<bool(const FqIsometry&)>& cb);

Perm isometry_as_permutation(const FiniteQuadraticForm& f, const FqIsometry& g);

// Exact order of the permutation group on A generated by the given
// isometries (stabilizer chain).
Integer group_order_generated(const FiniteQuadraticForm& f,
                              const std::vector<FqIsometry>& gens);

struct Orbit {
  FqElement representative;  // smallest element in element order
  long length;
  Rational square;  // q value, constant on the orbit
};

// Orbit partition of A under the full O(q). For |O(q)| beyond enumeration
// range the group is generated lazily until its certified order |O(q)| is
// reached. Orbits are sorted by (length, representative).
std::vector<Orbit> orbits(const FiniteQuadraticForm& f);
std::vector<Orbit> orbits(const FiniteQuadraticForm& f,
                          const std::vector<FqIsometry>& gens);

// The unique nonzero element whose O(q)-orbit has length 1 in
// u(2)^m + <1/4>: q(x) = 1 and x pairs to 0 with all 2-torsion. Throws if no
// such element exists or it is not unique.
FqElement distinguished_element(const FiniteQuadraticForm& f);

struct FqSubgroup {
  std::vector<FqElement> elements;  // sorted canonical form
  std::vector<FqElement> generators;

  bool operator==(const FqSubgroup& o) const { return elements == o.elements; }
  bool operator<(const FqSubgroup& o) const { return elements < o.elements; }
};

FqSubgroup subgroup_generated(const FiniteQuadraticForm& f,
                              std::vector<FqElement> gens);

struct CyclicWithGeneratorSquare {
  Rational square;  // q(generator) mod 2Z
};
struct TwoElementaryContaining {
  FqElement element;
};

// Order-4 subgroups matching the constraint; complete, duplicate-free,
// canonically sorted.
std::vector<FqSubgroup> subgroups_order4(const FiniteQuadraticForm& f,
                                         const CyclicWithGeneratorSquare& c);
std::vector<FqSubgroup> subgroups_order4(const FiniteQuadraticForm& f,
                                         const TwoElementaryContaining& c);

// The form with q and b negated (values renormalized into [0,2) / [0,1)).
FiniteQuadraticForm negated(const FiniteQuadraticForm& f);

// Witness isometry F1 -> F2 or nullopt after exhaustive search.
std::optional<FqIsometry> forms_isometric(const FiniteQuadraticForm& f1,
                                          const FiniteQuadraticForm& f2);

}  // namespace kummer
