#pragma once

#include <vector>

#include "precision.hpp"

namespace lxf {

template <class T> struct GLRule {
    std::vector<T> x; // nodes on [-1, 1], ascending
    std::vector<T> w;
};

// Cached n-point Gauss-Legendre rule. Thread-safe; references stay valid.
template <class T> const GLRule<T>& gauss_legendre(int n);

// f: T -> Cx<T>, integrated over [a, b] with one n-point panel.
template <class T, class F> Cx<T> gl_panel(F&& f, const T& a, const T& b, int n) {
    const GLRule<T>& r = gauss_legendre<T>(n);
    T h = (b - a) * 0.5, c = (b + a) * 0.5;
    Cx<T> s{};
    for (int i = 0; i < n; ++i) s += f(c + h * r.x[i]) * r.w[i];
    return s * h;
}

// Sum of panels between consecutive breakpoints.
template <class T, class F> Cx<T> gl_panels(F&& f, const std::vector<T>& brk, int n) {
    Cx<T> s{};
    for (size_t i = 0; i + 1 < brk.size(); ++i) s += gl_panel<T>(f, brk[i], brk[i + 1], n);
    return s;
}

} // namespace lxf
