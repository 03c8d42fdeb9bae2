#pragma once

// Helpers shared by the identities_*.cpp translation units.

#include <algorithm>
#include <cmath>
#include <string>

#include "arithmetic.hpp"
#include "identities.hpp"
#include "special.hpp"

namespace lxf::idd {

template <class T> Cx<T> cv(const cdd& z) {
    if constexpr (std::is_same_v<T, dd>) return z;
    else return cd(z);
}

template <class T> Cx<T> cr(double v) { return Cx<T>(T(v)); }

inline const char* tier_name(Tier t) { return t == Tier::Double ? "double" : "extended"; }

inline IdentityReport start(const std::string& name, const TruncationPolicy& pol, double tol) {
    pol.validate();
    IdentityReport r;
    r.identity = name;
    r.tier = pol.tier;
    r.tol = tol;
    return r;
}

inline BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// B_i B_j / (i! j!) exactly, then rounded to T; zero when an index is negative
template <class T> T bernoulli_pair(int i, int j) {
    if (i < 0 || j < 0) return T(0.0);
    Rational q = bernoulli(i) * bernoulli(j) / Rational(factorial_big(i) * factorial_big(j));
    return rational_to<T>(q);
}

inline double sgn_pow(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// n^p for real p at tier precision
template <class T> T rpow_n(long n, const T& p) {
    using std::exp;
    using std::log;
    return exp(log(T(double(n))) * p);
}

// Sums term(n), n = 1, 2, ..., whose modulus behaves like n^p e^(-c n^(1/N))
// with c > 0. Stops once the remainder estimate
// |t_n| n / max(1/2, (c/N) n^(1/N) - p) drops below rel_tol |S| + abs_tol
// small_run times in a row.
template <class T, class F>
SeriesResult<T> stretched_sum(F&& term, double c, double p, int N, const TruncationPolicy& pol) {
    SeriesResult<T> r;
    if (!(c > 0.0)) throw Error(ErrorCode::Domain, "stretched_sum: non-decaying rotated series");
    Cx<T> s{};
    int run = 0;
    long n = 1;
    double last = 0.0;
    for (; n <= pol.max_terms; ++n) {
        Cx<T> t = term(n);
        s += t;
        double dn = double(n);
        double rate = std::max(0.5, c / N * std::pow(dn, 1.0 / N) - p);
        last = absd(t) * dn / rate;
        bool past_peak = c / N * std::pow(dn, 1.0 / N) > p;
        if (past_peak && last <= pol.rel_tol * absd(s) + pol.abs_tol) {
            if (++run >= pol.small_run) {
                r.converged = true;
                break;
            }
        } else {
            run = 0;
        }
    }
    r.value = s;
    r.terms_used = std::min(n, pol.max_terms);
    r.tail_bound = last;
    return r;
}

// sum_{n >= 1} n^(-s) / (exp((2n)^(1/N) beta e) - 1)
template <class T>
SeriesResult<T> rotated_lambert(const Cx<T>& s, int N, const Cx<T>& beta, const Cx<T>& e, const TruncationPolicy& pol) {
    Cx<T> be = beta * e;
    T inv = T(1.0) / T(double(N));
    double c = to_double(be.re) * std::pow(2.0, 1.0 / N);
    return stretched_sum<T>(
        [&](long n) {
            using std::exp;
            using std::log;
            T ln = log(T(double(n)));
            T root = exp((ln + log(T(2.0))) * inv);
            Cx<T> den = exp(be * root) - cr<T>(1.0);
            return exp(-(s * ln)) / den;
        },
        c, -to_double(s.re), N, pol);
}

// marks the report when a constituent series stopped at max_terms
template <class T> void track(IdentityReport& r, const SeriesResult<T>& s, bool lhs, const char* what) {
    (lhs ? r.lhs_terms : r.rhs_terms) += s.terms_used;
    if (!s.converged && r.error == ErrorCode::Ok) {
        r.error = ErrorCode::NonConverged;
        r.message = std::string(what) + " hit max_terms";
    }
}

template <class T> void set_sides(IdentityReport& r, const Cx<T>& lhs, const Cx<T>& rhs) {
    r.lhs = cdd(lhs);
    r.rhs = cdd(rhs);
    r.finish();
}

} // namespace lxf::idd
