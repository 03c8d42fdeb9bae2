#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "precision.hpp"

namespace lxf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact B_k with B_1 = -1/2. Cached; safe for concurrent readers.
Rational bernoulli(int k);
template <class T> T bernoulli_v(int k);

template <class T> T rational_to(const Rational& q);
template <class T> T bigint_to(const BigInt& n);

template <class T> Cx<T> gamma(const Cx<T>& z);
template <class T> Cx<T> log_gamma(const Cx<T>& z);
// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
template <class T> Cx<T> rgamma(const Cx<T>& z);
template <class T> Cx<T> digamma(const Cx<T>& z);

template <class T> Cx<T> zeta(const Cx<T>& s);
// sum_{n>=K} n^{-s} (deriv = 0) or its s-derivative sum_{n>=K} -log(n) n^{-s}
// (deriv = 1). Needs Re(s) > 1 and K >= 1.
template <class T> Cx<T> zeta_tail(const Cx<T>& s, long K, int deriv = 0);

template <class T> Cx<T> shi(const Cx<T>& z);
template <class T> Cx<T> chi(const Cx<T>& z);
// sinh(z) Shi(z) - cosh(z) Chi(z), |arg z| < pi.
template <class T> Cx<T> sinhshi_coshchi(const Cx<T>& z);
// e^z E1(z) by continued fraction; intended for |z| >~ 2 off the negative axis.
template <class T> Cx<T> scaled_e1(const Cx<T>& z);

template <class T> bool near_nonpositive_integer(const Cx<T>& z, double tol = 1e-12);

} // namespace lxf
