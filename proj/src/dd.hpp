#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Algorithms follow the usual error-free transformations (Dekker, Knuth) and
// give roughly 31 decimal digits.

#include <cmath>
#include <cstdint>
#include <string>

namespace lxf {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    constexpr dd(int v) : hi(static_cast<double>(v)), lo(0.0) {}
    constexpr dd(long v) : hi(static_cast<double>(v)), lo(static_cast<double>(v - static_cast<long>(static_cast<double>(v)))) {}
    constexpr dd(long long v) : hi(static_cast<double>(v)), lo(static_cast<double>(v - static_cast<long long>(static_cast<double>(v)))) {}

    explicit operator double() const { return hi + lo; }
};

namespace ddi {

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

} // namespace ddi

inline dd operator-(const dd& a) { return dd(-a.hi, -a.lo); }

inline dd operator+(const dd& a, const dd& b) {
    double s1, s2, t1, t2;
    ddi::two_sum(a.hi, b.hi, s1, s2);
    ddi::two_sum(a.lo, b.lo, t1, t2);
    s2 += t1;
    ddi::quick_two_sum(s1, s2, s1, s2);
    s2 += t2;
    ddi::quick_two_sum(s1, s2, s1, s2);
    return dd(s1, s2);
}

inline dd operator+(const dd& a, double b) {
    double s1, s2;
    ddi::two_sum(a.hi, b, s1, s2);
    s2 += a.lo;
    ddi::quick_two_sum(s1, s2, s1, s2);
    return dd(s1, s2);
}
inline dd operator+(double a, const dd& b) { return b + a; }

inline dd operator-(const dd& a, const dd& b) { return a + (-b); }
inline dd operator-(const dd& a, double b) { return a + (-b); }
inline dd operator-(double a, const dd& b) { return (-b) + a; }

inline dd operator*(const dd& a, const dd& b) {
    double p1, p2;
    ddi::two_prod(a.hi, b.hi, p1, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    ddi::quick_two_sum(p1, p2, p1, p2);
    return dd(p1, p2);
}

inline dd operator*(const dd& a, double b) {
    double p1, p2;
    ddi::two_prod(a.hi, b, p1, p2);
    p2 += a.lo * b;
    ddi::quick_two_sum(p1, p2, p1, p2);
    return dd(p1, p2);
}
inline dd operator*(double a, const dd& b) { return b * a; }

inline dd operator/(const dd& a, const dd& b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    double s, e;
    ddi::quick_two_sum(q1, q2, s, e);
    return dd(s, e) + q3;
}
inline dd operator/(const dd& a, double b) { return a / dd(b); }
inline dd operator/(double a, const dd& b) { return dd(a) / b; }

inline dd& operator+=(dd& a, const dd& b) { return a = a + b; }
inline dd& operator-=(dd& a, const dd& b) { return a = a - b; }
inline dd& operator*=(dd& a, const dd& b) { return a = a * b; }
inline dd& operator/=(dd& a, const dd& b) { return a = a / b; }

inline bool operator==(const dd& a, const dd& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(const dd& a, const dd& b) { return !(a == b); }
inline bool operator<(const dd& a, const dd& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(const dd& a, const dd& b) { return b < a; }
inline bool operator<=(const dd& a, const dd& b) { return !(b < a); }
inline bool operator>=(const dd& a, const dd& b) { return !(a < b); }

inline dd ldexp(const dd& a, int e) { return dd(std::ldexp(a.hi, e), std::ldexp(a.lo, e)); }
inline dd fabs(const dd& a) { return a.hi < 0 ? -a : a; }
inline dd abs(const dd& a) { return fabs(a); }
inline bool isfinite(const dd& a) { return std::isfinite(a.hi); }
inline bool isnan(const dd& a) { return std::isnan(a.hi); }

inline dd floor(const dd& a) {
    double h = std::floor(a.hi);
    if (h != a.hi) return dd(h);
    double l = std::floor(a.lo);
    double s, e;
    ddi::quick_two_sum(h, l, s, e);
    return dd(s, e);
}

inline dd nearbyint(const dd& a) { return floor(a + 0.5); }

inline dd sqr(const dd& a) { return a * a; }

inline dd sqrt(const dd& a) {
    if (a.hi <= 0.0) return dd(a.hi == 0.0 ? 0.0 : std::nan(""));
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    dd r = a - sqr(dd(ax));
    return dd(ax) + r.hi * (x * 0.5);
}

namespace ddc {
inline constexpr dd pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd half_pi{1.5707963267948966, 6.123233995736766e-17};
inline constexpr dd ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd euler{0.5772156649015329, -4.942915152430645e-18};
inline constexpr dd ln_sqrt_2pi{0.9189385332046728, -3.8782941580672414e-17};
inline constexpr dd e{2.718281828459045, 1.4456468917292502e-16};
inline constexpr dd ln10{2.302585092994046, -2.1707562233822494e-16};
inline constexpr double eps = 4.93038065763132e-32; // 2^-104
} // namespace ddc

dd exp(const dd& a);
dd log(const dd& a);
dd expm1(const dd& a);
dd log1p(const dd& a);
void sincos(const dd& a, dd& s, dd& c);
dd sin(const dd& a);
dd cos(const dd& a);
dd atan2(const dd& y, const dd& x);
dd atan(const dd& x);
dd sinh(const dd& a);
dd cosh(const dd& a);
dd pow(const dd& a, const dd& b);
dd pow(const dd& a, int n);

// Parse a decimal literal ("1.25e-3") to full double-double accuracy.
dd dd_from_string(const std::string& s);
std::string to_string(const dd& a, int digits = 32);

} // namespace lxf
