#include "kummer/smith.hpp"

#include <sstream>

namespace kummer {

std::string to_string(const QMat& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << m(i, j) << (j + 1 < m.cols() ? " " : "");
    os << "\n";
  }
  return os.str();
}

namespace {

// Floor division for arbitrary-precision integers.
Integer fdiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const ZMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithResult res;
  ZMat a = m;
  res.U = ZMat::Identity(rows, rows);
  res.V = ZMat::Identity(cols, cols);

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    // Pivot: entry of minimal nonzero absolute value in the trailing block,
    // ties broken by position for determinism.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (a(i, j) != 0 &&
            (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))))
          pi = i, pj = j;
    if (pi < 0) break;

    a.row(t).swap(a.row(pi));
    res.U.row(t).swap(res.U.row(pi));
    a.col(t).swap(a.col(pj));
    res.V.col(t).swap(res.V.col(pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear column t below the pivot.
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = fdiv(a(i, t), a(t, t));
        if (q != 0) {
          a.row(i) -= a.row(t) * q;
          res.U.row(i) -= res.U.row(t) * q;
        }
        if (a(i, t) != 0) {  // remainder: swap up and restart
          a.row(t).swap(a.row(i));
          res.U.row(t).swap(res.U.row(i));
          clean = false;
        }
      }
      if (!clean) continue;
      // Clear row t right of the pivot.
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = fdiv(a(t, j), a(t, t));
        if (q != 0) {
          a.col(j) -= a.col(t) * q;
          res.V.col(j) -= res.V.col(t) * q;
        }
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          res.V.col(t).swap(res.V.col(j));
          clean = false;
          break;  // column op may have disturbed column t below the pivot
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide every entry of the trailing block.
      for (Eigen::Index i = t + 1; i < rows && clean; ++i)
        for (Eigen::Index j = t + 1; j < cols && clean; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.col(t) += a.col(j);
            res.V.col(t) += res.V.col(j);
            clean = false;
          }
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      res.U.row(t) = -res.U.row(t);
    }
    ++res.rank;
  }
  res.D = a;
  return res;
}

SmithResult smith_normal_form(const QMat& m) {
  if (!is_integral(m))
    throw std::invalid_argument(
        "smith_normal_form: matrix has non-integer entries");
  return smith_normal_form(to_integer_matrix(m));
}

ZMat hermite_row_form(const ZMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  ZMat a = m;
  Eigen::Index r = 0;  // current pivot row
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination of column c among rows r..end.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best < 0 || abs(a(i, c)) < abs(a(best, c))))
          best = i;
      if (best < 0) break;
      a.row(r).swap(a.row(best));
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer q = fdiv(a(i, c), a(r, c));
        a.row(i) -= a.row(r) * q;
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.row(r) = -a.row(r);
    // Reduce entries above the pivot into [0, pivot).
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = fdiv(a(i, c), a(r, c));
      if (q != 0) a.row(i) -= a.row(r) * q;
    }
    ++r;
  }
  return a.topRows(r);
}

ZMat integer_row_kernel(const ZMat& m) {
  SmithResult s = smith_normal_form(m);
  const Eigen::Index r = s.rank;
  ZMat ker = s.U.bottomRows(m.rows() - r);
  return hermite_row_form(ker);
}

}  // namespace kummer
