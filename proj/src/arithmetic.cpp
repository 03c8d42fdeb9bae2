#include "arithmetic.hpp"

#include <sstream>

namespace lxf {

long iroot(long n, int N) {
    if (n < 0 || N < 1) throw Error(ErrorCode::Domain, "iroot: bad argument");
    if (N == 1 || n < 2) return n;
    long r = static_cast<long>(std::pow(double(n), 1.0 / N));
    auto le = [&](long x) {
        __int128 p = 1;
        for (int i = 0; i < N; ++i) {
            p *= x;
            if (p > n) return false;
        }
        return true;
    };
    while (r > 0 && !le(r)) --r;
    while (le(r + 1)) ++r;
    return r;
}

long ipow(long n, int N) {
    __int128 p = 1;
    for (int i = 0; i < N; ++i) {
        p *= n;
        if (p > (__int128)LONG_MAX) throw Error(ErrorCode::Domain, "ipow: overflow");
    }
    return static_cast<long>(p);
}

namespace {

void check_args(int N, long n) {
    if (N < 1) throw Error(ErrorCode::Domain, "N must be >= 1");
    if (n < 1) throw Error(ErrorCode::Domain, "n must be >= 1");
}

template <class T> Cx<T> dpow(long d, const Cx<T>& a) {
    if (d == 1) return Cx<T>(T(1.0));
    double ar = to_double(a.re);
    if (a.im == T(0.0) && a.re == T(std::nearbyint(ar)) && std::fabs(ar) <= 64.0) {
        T v = pow(T(double(d)), int(ar));
        return Cx<T>(v);
    }
    return rpow(T(double(d)), a);
}

// tail / last-term ratio for terms decaying at least like exp(-Re(y)) per step
inline double geometric_factor(double yr) { return 1.0 / -std::expm1(-yr); }

template <class T> T real_pow_n(long n, int N) {
    T x(1.0);
    for (int i = 0; i < N; ++i) x = x * T(double(n));
    return x;
}

// 1 / (exp(x) - 1), accurate for small |x| and for Re x large
template <class T> Cx<T> inv_expm1(const Cx<T>& x) {
    Cx<T> one(T(1.0));
    if (absd(x) < 0.5) {
        // expm1 by series
        Cx<T> t = x, s = x;
        for (int k = 2; k < 60; ++k) {
            t = t * x / T(double(k));
            s += t;
            if (absd(t) <= real_traits<T>::eps * absd(s)) break;
        }
        return one / s;
    }
    if (x.re > T(0.0)) {
        Cx<T> e = exp(-x);
        return e / (one - e);
    }
    return one / (exp(x) - one);
}

} // namespace

template <class T> Cx<T> sigma(const Cx<T>& a, int N, long n) {
    check_args(N, n);
    long dmax = iroot(n, N);
    Cx<T> s{};
    for (long d = 1; d <= dmax; ++d)
        if (n % ipow(d, N) == 0) s += dpow(d, a);
    return s;
}

template <class T> Cx<T> s_weight(const Cx<T>& a, int N, long n) {
    check_args(N, n);
    Cx<T> c = (a + Cx<T>(T(1.0))) / T(double(N)) - Cx<T>(T(1.0));
    long dmax = iroot(n, N);
    Cx<T> s{};
    for (long d1 = 1; d1 <= dmax; ++d1) {
        long p = ipow(d1, N);
        if (n % p == 0) s += dpow(n / p, c);
    }
    return s;
}

template <class T> std::vector<Cx<T>> sigma_table(const Cx<T>& a, int N, long M) {
    if (N < 1 || M < 0) throw Error(ErrorCode::Domain, "sigma_table: bad argument");
    std::vector<Cx<T>> t(M + 1);
    long dmax = iroot(M, N);
    for (long d = 1; d <= dmax; ++d) {
        long p = ipow(d, N);
        Cx<T> v = dpow(d, a);
        for (long j = p; j <= M; j += p) t[j] += v;
    }
    return t;
}

template <class T> std::vector<Cx<T>> s_weight_table(const Cx<T>& a, int N, long M) {
    if (N < 1 || M < 0) throw Error(ErrorCode::Domain, "s_weight_table: bad argument");
    Cx<T> c = (a + Cx<T>(T(1.0))) / T(double(N)) - Cx<T>(T(1.0));
    std::vector<Cx<T>> pw(M + 1);
    for (long d = 1; d <= M; ++d) pw[d] = dpow(d, c);
    std::vector<Cx<T>> t(M + 1);
    long dmax = iroot(M, N);
    for (long d1 = 1; d1 <= dmax; ++d1) {
        long p = ipow(d1, N);
        for (long d2 = 1; d2 * p <= M; ++d2) t[d2 * p] += pw[d2];
    }
    return t;
}

template <class T> IdentityReport s_dirichlet(const Cx<T>& a, int N, const Cx<T>& s, const TruncationPolicy& pol) {
    pol.validate();
    if (N < 1) throw Error(ErrorCode::Domain, "s_dirichlet: N must be >= 1");
    double sr = to_double(s.re);
    double need = std::max(1.0 / N, (1.0 + to_double(a.re)) / N);
    if (!(sr > need)) throw Error(ErrorCode::Domain, "s_dirichlet: outside the half-plane of convergence");
    IdentityReport r;
    r.identity = "s-dirichlet";
    r.param("N", double(N));
    r.param("a", cd(a));
    r.param("s", cd(s));
    r.tier = tier_of<T>();
    long M = pol.max_terms;
    auto S = s_weight_table(a, N, M);
    Cx<T> lhs{};
    for (long n = M; n >= 1; --n) lhs += S[n] * rpow(T(double(n)), -s);
    Cx<T> one(T(1.0));
    Cx<T> rhs = zeta(s * T(double(N))) * zeta(s + one - (a + one) / T(double(N)));
    r.lhs = cdd(lhs);
    r.rhs = cdd(rhs);
    r.lhs_terms = M;
    r.rhs_terms = 2;
    r.finish();
    return r;
}

template <class T>
SeriesResult<T> lambert_direct(const Cx<T>& k, int N, const Cx<T>& y, const TruncationPolicy& pol) {
    pol.validate();
    if (!(to_double(y.re) > 0.0)) throw Error(ErrorCode::Domain, "lambert_direct: needs Re(y) > 0");
    double kr = std::max(to_double(k.re), 0.0);
    double peak = std::pow(kr / (N * to_double(y.re)) + 1.0, 1.0 / N);
    double g = geometric_factor(to_double(y.re));
    SeriesResult<T> r;
    Cx<T> s{};
    int run = 0;
    long n = 1;
    double last = 0.0;
    for (; n <= pol.max_terms; ++n) {
        Cx<T> x = y * real_pow_n<T>(n, N);
        Cx<T> t = dpow(n, k) * inv_expm1(x);
        s += t;
        last = absd(t);
        if (n > peak && last * g <= pol.rel_tol * absd(s) + pol.abs_tol) {
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

template <class T>
SeriesResult<T> lambert_divisor(const Cx<T>& a, int N, const Cx<T>& y, const TruncationPolicy& pol) {
    pol.validate();
    double yr = to_double(y.re);
    if (!(yr > 0.0)) throw Error(ErrorCode::Domain, "lambert_divisor: needs Re(y) > 0");
    double ex = std::max(to_double(a.re), 0.0) + 1.0;
    double peak = ex / yr;
    double g = geometric_factor(yr);
    auto bound = [&](long n) { return g * std::exp(-double(n) * yr + ex * std::log(double(n))); };
    SeriesResult<T> r;
    long M = 64;
    while (true) {
        M = std::min(M, pol.max_terms);
        auto sg = sigma_table(a, N, M);
        Cx<T> s{};
        for (long n = M; n >= 1; --n) s += sg[n] * exp(-(y * T(double(n))));
        double b = bound(M);
        r.value = s;
        r.terms_used = M;
        r.tail_bound = b;
        if (M > peak && b <= pol.rel_tol * absd(s) + pol.abs_tol) {
            r.converged = true;
            break;
        }
        if (M >= pol.max_terms) break;
        M *= 2;
    }
    return r;
}

std::string PartitionTable::to_csv() const {
    std::ostringstream os;
    os << "n,count\n";
    for (size_t n = 0; n < counts.size(); ++n) os << n << ',' << counts[n] << '\n';
    return os.str();
}

PartitionTable partition_counts(int N, long n_max) {
    if (N < 1) throw Error(ErrorCode::Domain, "partition_counts: N must be >= 1");
    if (n_max < 0) throw Error(ErrorCode::Domain, "partition_counts: n_max must be >= 0");
    PartitionTable t;
    t.N = N;
    t.counts.assign(n_max + 1, BigInt(0));
    t.counts[0] = 1;
    std::vector<BigInt> sg(n_max + 1, BigInt(0));
    long dmax = iroot(n_max, N);
    for (long d = 1; d <= dmax; ++d) {
        BigInt v = boost::multiprecision::pow(BigInt(d), 3 * N - 1);
        long p = ipow(d, N);
        for (long j = p; j <= n_max; j += p) sg[j] += v;
    }
    std::vector<long> support;
    for (long j = 1; j <= n_max; ++j)
        if (sg[j] != 0) support.push_back(j);
    for (long n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (long j : support) {
            if (j > n) break;
            acc += sg[j] * t.counts[n - j];
        }
        t.counts[n] = acc / n;
    }
    return t;
}

#define LXF_INST(T)                                                                                                    \
    template Cx<T> sigma<T>(const Cx<T>&, int, long);                                                                  \
    template Cx<T> s_weight<T>(const Cx<T>&, int, long);                                                               \
    template std::vector<Cx<T>> sigma_table<T>(const Cx<T>&, int, long);                                               \
    template std::vector<Cx<T>> s_weight_table<T>(const Cx<T>&, int, long);                                            \
    template IdentityReport s_dirichlet<T>(const Cx<T>&, int, const Cx<T>&, const TruncationPolicy&);                  \
    template SeriesResult<T> lambert_direct<T>(const Cx<T>&, int, const Cx<T>&, const TruncationPolicy&);              \
    template SeriesResult<T> lambert_divisor<T>(const Cx<T>&, int, const Cx<T>&, const TruncationPolicy&);

LXF_INST(double)
LXF_INST(dd)

} // namespace lxf
