#pragma once

// Exact scalar types and dense matrix aliases used across the project.
// All arithmetic is rational with arbitrary-precision integers; there is
// no floating point anywhere.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <stdexcept>

namespace kummer {

namespace mp = boost::multiprecision;

using Integer  = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline Integer to_integer(const Rational& x) {
  if (!is_integer(x))
    throw std::invalid_argument("expected an integer, got " + x.str());
  return numerator(x);
}

inline bool is_integral(const QMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

inline ZMat to_integer_matrix(const QMat& m) {
  ZMat z(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      z(i, j) = to_integer(m(i, j));
  return z;
}

inline QMat to_rational_matrix(const ZMat& m) {
  QMat q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      q(i, j) = Rational(m(i, j));
  return q;
}

// Least common multiple of all entry denominators.
inline Integer common_denominator(const QMat& m) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = lcm(l, denominator(m(i, j)));
  return l;
}

// x mod m, normalized into [0, m).
inline Rational mod_into(const Rational& x, const Rational& m) {
  Rational r = x;
  Integer q = numerator(r) / (denominator(r) * numerator(m) / denominator(m));
  r -= Rational(q) * m;
  while (r < 0) r += m;
  while (r >= m) r -= m;
  return r;
}

std::string to_string(const QMat& m);

}  // namespace kummer
