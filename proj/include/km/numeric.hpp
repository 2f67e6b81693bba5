#pragma once

#include <cstdint>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace km {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using IMat = Mat<Int>;
using IVec = Vec<Int>;
using QMat = Mat<Rational>;
using QVec = Vec<Rational>;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Exact dot product of an integer vector against a rational vector.
inline Rational dot(const IVec& x, const QVec& y) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += Rational(x[i]) * y[i];
  return s;
}

inline Int height(const IVec& v) {
  Int h = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) h += v[i];
  return h;
}

inline Int content_gcd(const IVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v[i]);
  return g;
}

}  // namespace km
