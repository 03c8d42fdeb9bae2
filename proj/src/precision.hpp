#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "complex.hpp"

namespace lxf {

enum class Tier { Double = 0, Extended = 1 };

enum class ErrorCode {
    Ok = 0,
    Pole,
    Domain,
    NonConverged,
    ReductionPole,
    QuadratureFail,
    DivergentTail,
    UnstableFit,
    Config,
};

const char* error_name(ErrorCode c);

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct TruncationPolicy {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    long max_terms = 10000;
    int small_run = 3;
    Tier tier = Tier::Double;

    static TruncationPolicy for_tier(Tier t) {
        TruncationPolicy p;
        p.tier = t;
        p.rel_tol = t == Tier::Double ? 1e-12 : 1e-24;
        return p;
    }
    void validate() const;
};

template <class T> struct SeriesResult {
    Cx<T> value;
    long terms_used = 0;
    bool converged = false;
    double tail_bound = 0.0;
};

// Sums term_at(n), n = 0, 1, ... until small_run consecutive terms satisfy
// |term| <= rel_tol*|partial| + abs_tol, or max_terms is reached.
template <class T, class F> SeriesResult<T> sum_series(F&& term_at, const TruncationPolicy& pol) {
    SeriesResult<T> r;
    Cx<T> s{};
    int run = 0;
    double last = 0.0;
    long n = 0;
    for (; n < pol.max_terms; ++n) {
        Cx<T> t = term_at(n);
        s += t;
        last = absd(t);
        if (last <= pol.rel_tol * absd(s) + pol.abs_tol) {
            if (++run >= pol.small_run) {
                ++n;
                r.converged = true;
                break;
            }
        } else {
            run = 0;
        }
    }
    r.value = s;
    r.terms_used = n;
    r.tail_bound = last;
    return r;
}

// Principal branch z^s = exp(s (log|z| + i arg z)), arg in (-pi, pi].
template <class T> Cx<T> cpow(const Cx<T>& z, const Cx<T>& s) {
    if (z.re == T(0.0) && z.im == T(0.0)) {
        if (s.re <= T(0.0)) throw Error(ErrorCode::Domain, "cpow: zero base with Re(s) <= 0");
        return {};
    }
    if (s.im == T(0.0) && z.im == T(0.0) && z.re > T(0.0)) {
        using std::exp;
        using std::log;
        return Cx<T>(exp(s.re * log(z.re)));
    }
    return exp(s * log(z));
}

template <class T> Cx<T> cpow(const Cx<T>& z, int m) {
    Cx<T> base = z, r(T(1.0));
    unsigned k = m < 0 ? unsigned(-(long)m) : unsigned(m);
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return m < 0 ? Cx<T>(T(1.0)) / r : r;
}

// Real-positive base, complex exponent: exp(s log x) with the real log.
template <class T> Cx<T> rpow(const T& x, const Cx<T>& s) {
    using std::log;
    T lx = log(x);
    return exp(s * lx);
}

inline double tier_eps(Tier t) { return t == Tier::Double ? 2.220446049250313e-16 : ddc::eps; }

template <class T> constexpr Tier tier_of() { return std::is_same_v<T, dd> ? Tier::Extended : Tier::Double; }

template <class T> T from_string_v(const std::string& s);

} // namespace lxf
