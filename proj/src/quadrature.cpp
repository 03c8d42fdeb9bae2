#include "quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace lxf {

namespace {

// P_n and P_n' at x by the three-term recurrence
template <class T> void legendre(int n, const T& x, T& p, T& dp) {
    T p0(1.0), p1 = x;
    for (int k = 2; k <= n; ++k) {
        T p2 = (x * p1 * double(2 * k - 1) - p0 * double(k - 1)) / T(double(k));
        p0 = p1;
        p1 = p2;
    }
    p = n == 0 ? T(1.0) : p1;
    dp = (x * p1 - p0) * double(n) / (x * x - T(1.0));
}

template <class T> GLRule<T> build(int n) {
    GLRule<T> r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        T x = T(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
        T p, dp;
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, p, dp);
            T dx = p / dp;
            x = x - dx;
            if (std::fabs(to_double(dx)) < 1e-34) break;
        }
        legendre(n, x, p, dp);
        T w = T(2.0) / ((T(1.0) - x * x) * dp * dp);
        r.x[n - 1 - i] = x;
        r.x[i] = -x;
        r.w[i] = r.w[n - 1 - i] = w;
    }
    return r;
}

template <class T> struct RuleCache {
    std::mutex mu;
    std::map<int, std::unique_ptr<GLRule<T>>> rules;
};

} // namespace

template <class T> const GLRule<T>& gauss_legendre(int n) {
    if (n < 1) throw Error(ErrorCode::Config, "gauss_legendre: n must be >= 1");
    static RuleCache<T> cache;
    std::lock_guard<std::mutex> lk(cache.mu);
    auto it = cache.rules.find(n);
    if (it != cache.rules.end()) return *it->second;
    GLRule<T> r;
    if constexpr (std::is_same_v<T, double>) {
        // round the dd rule so double nodes are correctly rounded
        GLRule<dd> hi = build<dd>(n);
        r.x.resize(n);
        r.w.resize(n);
        for (int i = 0; i < n; ++i) {
            r.x[i] = hi.x[i].hi;
            r.w[i] = hi.w[i].hi;
        }
    } else {
        r = build<T>(n);
    }
    auto& slot = cache.rules[n];
    slot = std::make_unique<GLRule<T>>(std::move(r));
    return *slot;
}

template const GLRule<double>& gauss_legendre<double>(int);
template const GLRule<dd>& gauss_legendre<dd>(int);

} // namespace lxf
