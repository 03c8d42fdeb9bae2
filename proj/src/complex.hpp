#pragma once

// Minimal complex arithmetic over double and dd. std::complex<dd> is not
// usable (only float/double/long double are specified), so one template
// covers both tiers.

#include <cmath>
#include <type_traits>

#include "dd.hpp"

namespace lxf {

template <class T> struct real_traits;

template <> struct real_traits<double> {
    static constexpr double eps = 2.220446049250313e-16;
    static double pi() { return 3.141592653589793; }
    static double two_pi() { return 6.283185307179586; }
    static double euler() { return 0.5772156649015329; }
    static double ln2() { return 0.6931471805599453; }
    static double ln_sqrt_2pi() { return 0.9189385332046728; }
    static double e() { return 2.718281828459045; }
};

template <> struct real_traits<dd> {
    static constexpr double eps = ddc::eps;
    static dd pi() { return ddc::pi; }
    static dd two_pi() { return ddc::two_pi; }
    static dd euler() { return ddc::euler; }
    static dd ln2() { return ddc::ln2; }
    static dd ln_sqrt_2pi() { return ddc::ln_sqrt_2pi; }
    static dd e() { return ddc::e; }
};

inline double to_double(double x) { return x; }
inline double to_double(const dd& x) { return x.hi + x.lo; }
inline double sqr(double x) { return x * x; }

template <class T> T pi_v() { return real_traits<T>::pi(); }

template <class T> struct Cx {
    T re{};
    T im{};

    Cx() = default;
    Cx(const T& r) : re(r), im(T(0.0)) {}
    Cx(const T& r, const T& i) : re(r), im(i) {}
    template <class U, class = std::enable_if_t<std::is_arithmetic_v<U> && !std::is_same_v<U, T>>>
    Cx(U r) : re(T(double(r))), im(T(0.0)) {}
    template <class U, class = std::enable_if_t<!std::is_same_v<U, T>>>
    explicit Cx(const Cx<U>& o) : re(T(o.re)), im(T(o.im)) {}

    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o) { return *this = *this * o; }
    Cx& operator/=(const Cx& o) { return *this = *this / o; }

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const Cx& a, const T& s) { return {a.re * s, a.im * s}; }
    friend Cx operator*(const T& s, const Cx& a) { return {a.re * s, a.im * s}; }
    friend Cx operator/(const Cx& a, const T& s) { return {a.re / s, a.im / s}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        using std::fabs;
        // Smith's algorithm
        if (fabs(b.re) >= fabs(b.im)) {
            T r = b.im / b.re;
            T d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        T r = b.re / b.im;
        T d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

template <class T> Cx<T> conj(const Cx<T>& z) { return {z.re, -z.im}; }
template <class T> T norm(const Cx<T>& z) { return z.re * z.re + z.im * z.im; }

template <class T> T abs(const Cx<T>& z) {
    using std::fabs;
    using std::sqrt;
    T a = fabs(z.re), b = fabs(z.im);
    if (a < b) std::swap(a, b);
    if (a == T(0.0)) return T(0.0);
    T r = b / a;
    return a * sqrt(1.0 + r * r);
}

template <class T> double absd(const Cx<T>& z) { return std::hypot(to_double(z.re), to_double(z.im)); }

template <class T> T arg(const Cx<T>& z) {
    using std::atan2;
    if (z.im == T(0.0) && z.re < T(0.0)) return pi_v<T>(); // arg in (-pi, pi]
    return atan2(z.im, z.re);
}

template <class T> Cx<T> polar(const T& r, const T& theta) {
    using std::cos;
    using std::sin;
    return {r * cos(theta), r * sin(theta)};
}

template <class T> Cx<T> expi(const T& theta) { return polar(T(1.0), theta); }

template <class T> Cx<T> exp(const Cx<T>& z) {
    using std::exp;
    T m = exp(z.re);
    if (z.im == T(0.0)) return {m, T(0.0)};
    return polar(m, z.im);
}

template <class T> Cx<T> log(const Cx<T>& z) {
    using std::log;
    return {log(abs(z)), arg(z)};
}

template <class T> Cx<T> sqrt(const Cx<T>& z) {
    using std::fabs;
    using std::sqrt;
    if (z.re == T(0.0) && z.im == T(0.0)) return {};
    T r = abs(z);
    if (z.re >= T(0.0)) {
        T t = sqrt((r + z.re) * 0.5);
        return {t, z.im / (t * 2.0)};
    }
    T t = sqrt((r - z.re) * 0.5);
    // principal root: imaginary part carries the sign of z.im (z.im = +0 on the cut gives +i)
    if (z.im < T(0.0)) return {fabs(z.im) / (t * 2.0), -t};
    return {fabs(z.im) / (t * 2.0), t};
}

template <class T> Cx<T> sin(const Cx<T>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class T> Cx<T> cos(const Cx<T>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

template <class T> Cx<T> sinh(const Cx<T>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

template <class T> Cx<T> cosh(const Cx<T>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

template <class T> bool is_finite(const Cx<T>& z) {
    using std::isfinite;
    return isfinite(z.re) && isfinite(z.im);
}

using cd = Cx<double>;
using cdd = Cx<dd>;

} // namespace lxf
