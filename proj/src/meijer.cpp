#include "meijer.hpp"

#include <algorithm>
#include <memory>

#include "gfamily.hpp"
#include "hypergeometric.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace lxf {

namespace {

template <class T> Cx<T> cexpi(const T& th) { return expi(th); }

template <class T> void guard_trig(const Cx<T>& a, int N, Cx<T>& trig) {
    const T pi = pi_v<T>();
    Cx<T> h = a * (pi * 0.5);
    trig = (N % 2) ? sin(h) : cos(h);
    if (absd(trig) < 1e-9) throw Error(ErrorCode::ReductionPole, "reduction prefactor vanishes at this a");
}

} // namespace

template <class T> Cx<T> script_e(const Cx<T>& a, int N, const Cx<T>& z, int k, int b) {
    if (z == Cx<T>()) throw Error(ErrorCode::Domain, "script_e: z = 0");
    const T pi = pi_v<T>();
    T th = pi * double(2 * k + b) / T(double(2 * N));
    Cx<T> root = cpow(z, Cx<T>(T(1.0) / T(double(2 * N))));
    Cx<T> one(T(1.0));
    Cx<T> ex = cexpi(th) * root * T(double(2 * N)) + Cx<T>(T(0.0), th) * (a + one);
    Cx<T> v = exp(ex);
    return (k % 2) ? -v : v;
}

template <class T> Cx<T> a_term(const Cx<T>& a, int N, const Cx<T>& z) {
    if (N < 1) throw Error(ErrorCode::Domain, "a_term: N must be >= 1");
    Cx<T> trig;
    guard_trig(a, N, trig);
    const T pi = pi_v<T>();
    Cx<T> I(T(0.0), T(1.0));
    Cx<T> e1 = exp(-I * a * pi), e2 = e1 * e1;
    int b = N % 2 ? 0 : 1;
    auto block = [&](int k0, int k1) {
        Cx<T> s{};
        for (int k = k0; k <= k1; ++k) s += script_e(a, N, z, k, b);
        return s;
    };
    Cx<T> sum, pre;
    using std::sqrt;
    T root = sqrt(pi / T(double(N)));
    if (N % 2) {
        sum = block(0, (N - 1) / 2) + e1 * block((N + 1) / 2, (3 * N - 1) / 2) + e2 * block((3 * N + 1) / 2, 2 * N - 1);
        pre = Cx<T>(T(((N + 1) / 2) % 2 ? -1.0 : 1.0));
    } else {
        sum = block(0, N / 2 - 1) - e1 * block(N / 2, 3 * N / 2 - 1) + e2 * block(3 * N / 2, 2 * N - 1);
        pre = cexpi(pi * double(N + 1) / T(2.0));
    }
    Cx<T> zn = cpow(z, Cx<T>(T(1.0) / T(double(N))));
    return pre * zn * root / (trig * T(2.0)) * sum;
}

namespace {

// Both tiers run in dd with the series driven to dd precision: the exponential
// block cancels against the 1F_2N term, losing about e^{2N|z|^{1/2N}}.
template <class T> Cx<T> reduced_impl(const Cx<T>& a, int N, const Cx<T>& z, const TruncationPolicy& pol) {
    if (N < 1) throw Error(ErrorCode::Domain, "meijer_g_reduced: N must be >= 1");
    if (z == Cx<T>()) throw Error(ErrorCode::Domain, "meijer_g_reduced: z = 0");
    Cx<T> A = a_term(a, N, z);
    Cx<T> one(T(1.0)), half(T(0.5));
    T n = T(double(N)), n2 = T(double(2 * N));
    Cx<T> g1 = (one - n + a) * T(0.5);
    if (near_nonpositive_integer(g1, 1e-9)) throw Error(ErrorCode::Pole, "meijer_g_reduced: Gamma((1-N+a)/2) pole");
    using std::log;
    Cx<T> coef = exp((Cx<T>(n - T(0.5)) - a) * Cx<T>(log(n))) * gamma(g1) * rgamma((n - a) * T(0.5));
    std::vector<Cx<T>> bs;
    for (int i = 1; i <= 2 * N; ++i) bs.push_back(half - (a + one) / n2 + Cx<T>(T(double(i)) / n2));
    Cx<T> arg = N % 2 ? z : -z;
    SeriesResult<T> F = hyper_1fq(one, bs, arg, pol);
    if (!F.converged) throw Error(ErrorCode::NonConverged, "meijer_g_reduced: 1F_2N did not converge");
    Cx<T> b1 = half + (one - a) / n2;
    return coef * cpow(z, b1) * F.value + A;
}

} // namespace

template <class T> Cx<T> meijer_g_reduced(const Cx<T>& a, int N, const Cx<T>& z, const TruncationPolicy& pol) {
    TruncationPolicy p = pol;
    p.rel_tol = std::min(pol.rel_tol, 1e-31);
    p.abs_tol = 0.0;
    return Cx<T>(reduced_impl<dd>(cdd(a), N, cdd(z), p));
}

namespace {

struct MBIntegrand {
    cd a1, X, lnX;
    std::vector<cd> bm, brest;
    double c;
    long evals = 0;

    cd operator()(double t) {
        ++evals;
        cd w(c, t), one(1.0);
        cd lg = lnX * w;
        for (const cd& b : brest) {
            cd u = one - b + w;
            if (near_nonpositive_integer(u, 1e-13)) return {};
            lg -= log_gamma(u);
        }
        for (const cd& b : bm) lg += log_gamma(b - w);
        lg += log_gamma(one - a1 + w);
        return exp(lg);
    }
};

} // namespace

cd meijer_g_mb(const cd& a1, const std::vector<cd>& bm, const std::vector<cd>& brest, const cd& X, const MBConfig& cfg,
               MBInfo* info) {
    if (bm.empty()) throw Error(ErrorCode::Domain, "meijer_g_mb: empty m-list");
    if (X == cd()) throw Error(ErrorCode::Domain, "meijer_g_mb: X = 0");
    double lo = a1.re - 1.0, hi = INFINITY;
    for (const cd& b : bm) hi = std::min(hi, b.re);
    if (!(hi > lo)) throw Error(ErrorCode::Domain, "meijer_g_mb: pole families overlap");
    double c = std::isnan(cfg.c) ? 0.5 * (lo + hi) : cfg.c;
    if (!(c > lo && c < hi)) throw Error(ErrorCode::Config, "meijer_g_mb: c outside the separating strip");
    if (cfg.panel_nodes < 4 || !(cfg.panel_width > 0.0) || !(cfg.decay > 0.0))
        throw Error(ErrorCode::Config, "meijer_g_mb: bad quadrature config");

    MBIntegrand f{a1, X, log(X), bm, brest, c};
    const int n1 = cfg.panel_nodes, n2 = std::max(4, (2 * cfg.panel_nodes) / 3);
    cd s1{}, s2{};
    double peak = absd(f(0.0));
    double end_ratio = 0.0, tail = 0.0, T = 0.0;
    for (int dir : {1, -1}) {
        double t0 = 0.0;
        cd last{};
        for (int p = 0;; ++p) {
            double t1 = t0 + dir * cfg.panel_width;
            auto g = [&](double t) { return f(t); };
            double a = std::min(t0, t1), b = std::max(t0, t1);
            cd p1 = gl_panel<double>(g, a, b, n1);
            cd p2 = gl_panel<double>(g, a, b, n2);
            s1 += p1;
            s2 += p2;
            last = p1;
            double fe = absd(f(t1));
            peak = std::max(peak, fe);
            t0 = t1;
            // past the X^w / Gamma growth region once the endpoint is tiny
            if (fe < cfg.decay * peak && p >= 3) {
                end_ratio = std::max(end_ratio, fe / peak);
                break;
            }
            if (std::fabs(t0) > 2000.0)
                throw Error(ErrorCode::QuadratureFail, "meijer_g_mb: integrand does not decay on the line");
        }
        tail += absd(last);
        T = std::max(T, std::fabs(t0));
    }
    cd r = s1 / (2.0 * M_PI), r2 = s2 / (2.0 * M_PI);
    double mag = std::max(absd(r), 1e-300);
    double err = (absd(r - r2) + tail / (2.0 * M_PI)) / mag;
    if (info) {
        info->c = c;
        info->T = T;
        info->peak = peak;
        info->end_ratio = end_ratio;
        info->err_est = err;
        info->evals = f.evals;
    }
    if (!(err <= cfg.tol) || !is_finite(r))
        throw Error(ErrorCode::QuadratureFail, "meijer_g_mb: error estimate above tolerance");
    return r;
}

cd mellin_barnes_oracle(const cd& a, int N, const cd& z, const MBConfig& cfg, MBInfo* info) {
    if (N < 1) throw Error(ErrorCode::Domain, "mellin_barnes_oracle: N must be >= 1");
    double n = N;
    cd b1 = cd(0.5) + (cd(1.0) - a) / (2.0 * n);
    std::vector<cd> bm{b1}, brest;
    for (int i = 1; i <= N; ++i) {
        bm.emplace_back(i / n);
        brest.emplace_back(1.0 + 1.5 / n - i / n);
    }
    return meijer_g_mb(b1, bm, brest, z, cfg, info);
}

namespace {

cdd cd_lg(const cdd& z) {
    if (near_nonpositive_integer(z, 1e-12)) throw Error(ErrorCode::Pole, "C_mN: Gamma argument at a pole");
    return log_gamma(z);
}

double sign_k(int k, int N) { return ((long(k) * (N + 1) + N) % 2) ? -1.0 : 1.0; }

// log of the k-th C_{m,N} term without the sign
cdd cmn_product_log(int k, int N, const cdd& mu, const cdd& nu, const cdd& w, const cdd& z) {
    cdd s = mu + nu + w;
    cdd one(dd(1.0)), half(dd(0.5));
    cdd lg = cd_lg(half + mu + w + cdd(dd(k))) + cd_lg(one + mu + nu + cdd(dd(k)));
    for (int i = 1; i <= 2 * N - 1; ++i) lg += cd_lg(s + cdd(dd(double(i)) / dd(double(2 * N)) + dd(k)));
    lg -= log_gamma(cdd(dd(k + 1.0)));
    if (k) lg -= log(z * dd(0.5)) * dd(2.0 * k);
    return lg;
}

std::vector<cdd> cmn_terms(int m, int N, const cdd& mu, const cdd& nu, const cdd& w, const cdd& z) {
    std::vector<cdd> t;
    for (int k = 0; k <= m; ++k) t.push_back(exp(cmn_product_log(k, N, mu, nu, w, z)) * dd(sign_k(k, N)));
    return t;
}

void check_args(int m, int N, const cdd& z) {
    if (N < 1 || m < 0) throw Error(ErrorCode::Domain, "C_mN: needs N >= 1, m >= 0");
    if (z == cdd()) throw Error(ErrorCode::Domain, "C_mN: z = 0");
}

} // namespace

cdd c_mn(int m, int N, const cdd& mu, const cdd& nu, const cdd& w, const cdd& z) {
    check_args(m, N, z);
    cdd s = mu + nu + w;
    cdd one(dd(1.0)), half(dd(0.5));
    dd n2 = dd(double(2 * N));
    dd ln2n = log(n2);
    cdd pre = cdd(log(ddc::two_pi) * (double(N) - 0.5)) - (half + s * n2) * ln2n;
    cdd sum{};
    for (int k = 0; k <= m; ++k) {
        cdd kk = cdd(dd(double(k)));
        cdd den = one + s + kk;
        cdd lg = pre + cd_lg(half + mu + w + kk) + cd_lg(one + mu + nu + kk) + cd_lg(one + (s + kk) * n2);
        lg -= log_gamma(cdd(dd(k + 1.0)));
        lg -= cdd(ln2n * (2.0 * N * k));
        if (k) lg -= log(z * dd(0.5)) * dd(2.0 * k);
        sum += exp(lg) * rgamma(den) * dd(sign_k(k, N));
    }
    return sum;
}

cdd c_mn_product(int m, int N, const cdd& mu, const cdd& nu, const cdd& w, const cdd& z) {
    check_args(m, N, z);
    cdd sum{};
    for (const cdd& t : cmn_terms(m, N, mu, nu, w, z)) sum += t;
    return sum;
}

cdd mu_k_nu_asymptotic(const cdd& mu, const cdd& nu, const cdd& w, int N, const cdd& z, int m) {
    check_args(m, N, z);
    const dd pi = ddc::pi;
    dd n = dd(double(N));
    cdd s = mu + nu + w;
    cdd sp = sin((mu + nu) * pi);
    for (int i = 2; i <= N; ++i) sp = sp * sin((s - cdd(dd(double(i - 1)) / n)) * pi);
    if (sp == cdd()) return {};
    std::vector<cdd> t = cmn_terms(m, N, mu, nu, w, z);
    for (int k = 1; k <= m; ++k)
        if (absd(t[k]) > absd(t[k - 1])) throw Error(ErrorCode::DivergentTail, "mu_k_nu_asymptotic: terms grow before k = m");
    cdd sum{};
    for (const cdd& v : t) sum += v;
    cdd one(dd(1.0));
    cdd e2 = mu * dd(3.0) + nu * dd(2.0) + w * dd(2.0) + cdd(one.re / n) - one;
    cdd epi = nu * (dd(1.0) - n) - cdd(n);
    cdd ez = -(mu * dd(2.0) + nu + w + cdd(one.re / n));
    cdd pre = exp(e2 * ddc::ln2 + epi * log(pi)) * cpow(z, ez);
    return pre * sp * sum;
}

cdd mu_k_nu(const cdd& mu, const cdd& nu, const cdd& w, int N, const cdd& z, const TruncationPolicy& pol) {
    if (N < 1) throw Error(ErrorCode::Domain, "mu_k_nu: N must be >= 1");
    if (z == cdd()) throw Error(ErrorCode::Domain, "mu_k_nu: z = 0");
    const dd pi = ddc::pi;
    dd n = dd(double(N)), n2 = dd(double(2 * N));
    cdd one(dd(1.0)), half(dd(0.5));
    cdd X = z * z * dd(0.25);
    cdd pre = exp((mu + cdd(dd(2.0) / n) - one) * ddc::ln2 + nu * (dd(1.0) - n) * log(pi)) *
              cpow(z, w + nu - cdd(dd(2.0) / n));
    if (mu == half && w == cdd()) {
        cdd a = nu * n2;
        double mag = to_double(n2) * std::pow(absd(X), 1.0 / to_double(n2));
        if (mag <= 10.0) {
            try {
                return pre * meijer_g_reduced<dd>(a, N, X, pol);
            } catch (const Error&) {
                // integer-a reduction poles: the line integral has no such restriction
            }
        }
        cdd lnC = log(X) + cdd(log(n) * n2);
        double lr = std::fabs(to_double(lnC.re)), la = std::fabs(to_double(lnC.im));
        // consecutive calls usually share (a, N); rebuilding the line per call dominates otherwise
        struct Cache {
            std::unique_ptr<GFamily> g;
            double lr = 0.0, la = 0.0;
        };
        thread_local Cache cache;
        if (!cache.g || cache.g->a() != a || cache.g->N() != N || lr + 1.0 > cache.lr || la > cache.la) {
            cache.lr = std::max(lr + 1.0, cache.g && cache.g->a() == a && cache.g->N() == N ? 2.0 * cache.lr : 0.0);
            cache.la = std::min(3.0 - 1e-9, std::max(la, 1e-3) * 1.5);
            cache.g = std::make_unique<GFamily>(a, N, cache.lr, cache.la);
        }
        return pre * cache.g->eval(X);
    }
    cd a1 = cd(one + half / n - mu - nu - w);
    std::vector<cd> bm{cd(half + half / n - nu)}, brest{cd(one + half / n - w)};
    for (int i = 1; i <= N; ++i) bm.emplace_back(double(i) / N);
    for (int i = 2; i <= N; ++i) brest.emplace_back(1.0 + 1.5 / N - double(i) / N);
    MBConfig cfg;
    cfg.tol = std::max(1e-10, pol.rel_tol);
    return pre * cdd(meijer_g_mb(a1, bm, brest, cd(X), cfg));
}

#define LXF_INST(T)                                                                                                    \
    template Cx<T> script_e<T>(const Cx<T>&, int, const Cx<T>&, int, int);                                             \
    template Cx<T> a_term<T>(const Cx<T>&, int, const Cx<T>&);                                                         \
    template Cx<T> meijer_g_reduced<T>(const Cx<T>&, int, const Cx<T>&, const TruncationPolicy&);
LXF_INST(double)
LXF_INST(dd)
#undef LXF_INST

} // namespace lxf
