#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/smith.hpp"

using namespace kummer;

namespace {

ZMat zmat(std::initializer_list<std::initializer_list<long>> rows) {
  ZMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

void check_snf(const ZMat& m, const SmithResult& s) {
  CHECK(s.U * m * s.V == s.D);
  for (Eigen::Index i = 0; i + 1 < std::min(s.D.rows(), s.D.cols()); ++i) {
    if (s.D(i + 1, i + 1) != 0) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
  }
  // off-diagonal zero
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  // U, V unimodular: integer inverses exist iff |det| = 1; verify via SNF of
  // identity products would be circular, so check D(identity) through
  // elimination determinant signs using the fact U*M*V = D and the SNF of U
  // itself is the identity chain. A direct determinant is simplest:
  auto det = [](const ZMat& a) {
    Eigen::FullPivLU<QMat> lu(to_rational_matrix(a));
    return lu.determinant();
  };
  Rational du = det(s.U), dv = det(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
}

}  // namespace

TEST_CASE("snf of identity") {
  ZMat id = ZMat::Identity(3, 3);
  auto s = smith_normal_form(id);
  CHECK(s.D == id);
  CHECK(s.rank == 3);
  check_snf(id, s);
}

TEST_CASE("snf of negated A2 Cartan is diag(1,3)") {
  // Hand row/column reduction: [[-2,1],[1,-2]] -> swap to put 1 at pivot,
  // clear row and column, remaining entry -2-(-2*... ) = 3 up to sign.
  ZMat m = zmat({{-2, 1}, {1, -2}});
  auto s = smith_normal_form(m);
  CHECK(s.D(0, 0) == 1);
  CHECK(s.D(1, 1) == 3);
  check_snf(m, s);
}

TEST_CASE("snf of diag(2,4) is itself") {
  ZMat m = zmat({{2, 0}, {0, 4}});
  auto s = smith_normal_form(m);
  CHECK(s.D == m);
  check_snf(m, s);
}

TEST_CASE("snf rejects non-integer input") {
  QMat m(1, 1);
  m(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(smith_normal_form(m), std::invalid_argument);
}

TEST_CASE("snf divisibility chain on a dense example") {
  ZMat m = zmat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  auto s = smith_normal_form(m);
  check_snf(m, s);
  // invariant factors of this classical example: 2, 2, 156
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 2);
  CHECK(s.D(2, 2) == 156);
}

TEST_CASE("hermite row form is canonical") {
  ZMat m = zmat({{4, 0, 1}, {2, 1, 0}});
  ZMat h1 = hermite_row_form(m);
  ZMat m2 = zmat({{2, 1, 0}, {6, 1, 1}, {4, 0, 1}});  // same row span
  ZMat h2 = hermite_row_form(m2);
  CHECK(h1 == h2);
  CHECK(h1.rows() == 2);
  // pivots positive, entries above pivots reduced
  CHECK(h1(0, 0) > 0);
}

TEST_CASE("integer row kernel is saturated") {
  // rows c with c * m = 0 for m mapping Z^3 -> Z^2
  ZMat m = zmat({{2, 0}, {0, 2}, {2, 2}});
  ZMat k = integer_row_kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK(k * m == ZMat::Zero(1, 2));
  // kernel vector must be primitive: (1,1,-1), not a multiple
  Integer g = gcd(gcd(k(0, 0), k(0, 1)), k(0, 2));
  CHECK(g == 1);
}
