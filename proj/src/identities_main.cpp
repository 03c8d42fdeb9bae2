#include <cmath>
#include <functional>

#include "gfamily.hpp"
#include "identities_detail.hpp"
#include "meijer.hpp"

namespace lxf {

using namespace idd;

TruncationPolicy identity_policy(Tier t) {
    TruncationPolicy p = TruncationPolicy::for_tier(t);
    p.max_terms = 4000000;
    return p;
}

void RamanujanPair::validate() const {
    if (N < 1) throw Error(ErrorCode::Domain, "RamanujanPair: N must be >= 1");
    if (!(to_double(alpha.re) > 0.0) || !(to_double(beta.re) > 0.0))
        throw Error(ErrorCode::Domain, "RamanujanPair: needs Re(alpha), Re(beta) > 0");
    dd target = exp(log(ddc::pi) * double(N + 1));
    cdd prod = alpha * cpow(beta, N);
    if (!(absd(prod - cdd(target)) <= 1e-13 * to_double(target)))
        throw Error(ErrorCode::Domain, "RamanujanPair: alpha beta^N != pi^(N+1)");
}

RamanujanPair RamanujanPair::from_alpha(int N, const cdd& alpha) {
    if (N < 1) throw Error(ErrorCode::Domain, "RamanujanPair: N must be >= 1");
    dd lt = log(ddc::pi) * double(N + 1);
    RamanujanPair p;
    p.N = N;
    p.alpha = alpha;
    p.beta = exp((cdd(lt) - log(alpha)) / dd(double(N)));
    return p;
}

RamanujanPair RamanujanPair::from_beta(int N, const cdd& beta) {
    if (N < 1) throw Error(ErrorCode::Domain, "RamanujanPair: N must be >= 1");
    dd lt = log(ddc::pi) * double(N + 1);
    RamanujanPair p;
    p.N = N;
    p.beta = beta;
    p.alpha = exp(cdd(lt) - log(beta) * dd(double(N)));
    return p;
}

template <class T> Cx<T> s_dirichlet_tail(const Cx<T>& a, int N, const Cx<T>& s, long n1) {
    using std::log;
    if (N < 1) throw Error(ErrorCode::Domain, "s_dirichlet_tail: N must be >= 1");
    n1 = std::max(n1, 1L);
    Cx<T> one = cr<T>(1.0);
    Cx<T> sh = s + one - (one + a) / T(double(N));
    Cx<T> Ns = s * T(double(N));
    Cx<T> sum{};
    long d = 1;
    for (; ipow(d, N) < n1; ++d) {
        long dN = ipow(d, N);
        long K = (n1 + dN - 1) / dN;
        sum += exp(-(Ns * log(T(double(d))))) * zeta_tail(sh, K);
    }
    sum += zeta(sh) * zeta_tail(Ns, d);
    return sum;
}

template Cx<double> s_dirichlet_tail<double>(const Cx<double>&, int, const Cx<double>&, long);
template Cx<dd> s_dirichlet_tail<dd>(const Cx<dd>&, int, const Cx<dd>&, long);

namespace {

const cdd one(dd(1.0));

cdd dv(double v) { return cdd(dd(v)); }

// -zeta(-a)/2 + zeta(N-a)/y + Gamma((1+a)/N) zeta((1+a)/N) / (N y^((1+a)/N))
cdd elementary(const cdd& a, int N, const cdd& y) {
    dd n = dd(double(N));
    cdd e = (one + a) / n;
    return -zeta(-a) * dd(0.5) + zeta(cdd(n) - a) / y + gamma(e) * zeta(e) / (cpow(y, e) * n);
}

// y/(2 pi^2) sum_{k<=m} (-y^2/4pi^2)^k zeta(-2kN-N-a) zeta(2k+2)
cdd zeta_products(const cdd& a, int N, const cdd& y, int m) {
    const dd pi = ddc::pi;
    cdd q = -(y * y) / (pi * pi * 4.0), qk = one, s{};
    for (int k = 0; k <= m; ++k) {
        s += qk * zeta(-a - dv(2.0 * k * N + N)) * zeta(dv(2.0 * k + 2));
        qk = qk * q;
    }
    return s * y / (pi * pi * 2.0);
}

// All singular points of the elementary terms are integers; within 0.2 of one
// the combination is analytic (the identity says so) and is taken as the mean
// over a circle of radius 0.4, whose other singularities are >= 0.8 away.
bool near_integer(const cdd& a) {
    double re = to_double(a.re), im = to_double(a.im);
    return std::hypot(re - std::nearbyint(re), im) < 0.2;
}

cdd circle_mean(const std::function<cdd(const cdd&)>& f, const cdd& a) {
    const int K = 96;
    cdd s{};
    for (int j = 0; j < K; ++j) s += f(a + expi(ddc::two_pi * (double(j) / K)) * dd(0.4));
    return s / dd(double(K));
}

struct GSum {
    cdd direct, tail;
    long n1 = 1;
    int k_used = 0;
    bool tail_ok = true;
    double tail_last = 0.0;
    double cancel_digits = 0.0;
};

// sum_n S_a(n) n^(-2/N) [G - sum_{k<=m} Res_k](X_n), X_n = 4 pi^(2N+2) n^2 / (y^2 N^(2N)).
// Direct line integrals for n < n1, residue series against Dirichlet tails beyond,
// with n1 chosen so that the exponentially small part is below e^-L.
GSum g_weighted_sum(const cdd& a, int N, const cdd& y, int m, const TruncationPolicy& pol, bool k_form) {
    const dd pi = ddc::pi;
    dd n = dd(double(N));
    cdd lnX1 = cdd(log(dd(4.0)) + log(pi) * double(2 * N + 2) - log(n) * double(2 * N)) - log(y) * dd(2.0);
    double argX = std::fabs(to_double(lnX1.im));
    double L = std::min(-std::log(pol.rel_tol), 75.0) + 5.0;
    double kap = 2.0 * N * std::sin((M_PI - argX) / (2.0 * N));
    if (!(kap > 0.05)) throw Error(ErrorCode::Domain, "transform: |arg y| too close to pi/2");
    double root1 = std::exp(to_double(lnX1.re) / (2.0 * N));
    double nn = std::ceil(std::pow(L / kap / root1, N));
    GSum r;
    if (nn > double(pol.max_terms)) throw Error(ErrorCode::NonConverged, "transform: direct range exceeds max_terms");
    r.n1 = std::max(1L, static_cast<long>(nn));
    cdd lnC1 = lnX1 + cdd(log(n) * double(2 * N));
    double lnCmax = std::max(std::fabs(to_double(lnC1.re)), std::fabs(to_double(lnC1.re) + 2.0 * std::log(double(r.n1)))) + 1.0;
    GFamily G(a, N, lnCmax, argX);

    auto S = s_weight_table<dd>(a, N, r.n1);
    cdd nu = a / (n * 2.0);
    cdd Z1 = exp(cdd(log(dd(4.0)) + log(pi) * double(N + 1) - log(n) * double(N)) - log(y));
    for (long k = 1; k < r.n1; ++k) {
        dd lk = log(dd(double(k)));
        if (k_form) {
            cdd K = mu_k_nu(dv(0.5), nu, cdd(), N, Z1 * dd(double(k)), pol);
            r.direct += S[k] * exp(-(nu * lk)) * K;
        } else {
            cdd X = exp(lnX1 + cdd(lk * 2.0));
            cdd g = m < 0 ? G.eval(X) : G.eval_shifted(m, X);
            r.direct += S[k] * exp(lk * (-2.0 / N)) * g;
        }
    }

    // residue tail
    double prev = INFINITY;
    int run = 0;
    for (int k = std::max(m + 1, 0); k <= std::max(m + 1, 0) + 400; ++k) {
        cdd wk = G.pole(k);
        cdd sk = dv(2.0 / N) - wk * dd(2.0);
        cdd t = G.residue_coeff(k) * exp(wk * lnC1) * s_dirichlet_tail(a, N, sk, r.n1);
        double at = absd(t);
        r.k_used = k;
        r.tail_last = at;
        if (at > prev && k > m + 3) {
            // asymptotic series turned; the exponentially small part dominates from here
            r.tail_ok = at <= pol.rel_tol * absd(r.tail + r.direct) * 10.0;
            break;
        }
        r.tail += t;
        prev = at;
        if (at <= pol.rel_tol * absd(r.tail + r.direct) + pol.abs_tol) {
            if (++run >= 2) break;
        } else {
            run = 0;
        }
    }

    // digits a direct K - correction subtraction would lose at n = 1
    if (m >= 0) {
        double big = 0.0;
        for (int k = 0; k <= m; ++k) {
            try {
                big = std::max(big, absd(G.residue_term(k, exp(lnX1))));
            } catch (const Error& e) {
                // coinciding poles: the individual correction term is singular
                if (e.code != ErrorCode::Pole) throw;
                big = INFINITY;
            }
        }
        double br = absd(G.eval_shifted(m, exp(lnX1)));
        if (std::isfinite(big) && br > 0.0) r.cancel_digits = std::max(0.0, std::log10(big / br));
        else if (!std::isfinite(big)) r.cancel_digits = INFINITY;
    }
    return r;
}

// N^(3/2)/pi^(5/2) (2pi/y)^((a-1)/N)
cdd g_prefactor(const cdd& a, int N, const cdd& y) {
    const dd pi = ddc::pi;
    dd n = dd(double(N));
    return exp((a - one) / n * (cdd(log(ddc::two_pi)) - log(y))) * (n * sqrt(n) / (pi * pi * sqrt(pi)));
}

// 2 (2pi)^(1/N-1/2) N^((a-1)/2) / y^(1/N + a/2N)
cdd k_prefactor(const cdd& a, int N, const cdd& y) {
    dd n = dd(double(N));
    cdd e1 = cdd(dd(1.0) / n - dd(0.5)) * log(ddc::two_pi);
    cdd e2 = (a - one) * dd(0.5) * log(n);
    cdd e3 = -(cdd(dd(1.0) / n) + a / (n * 2.0)) * log(y);
    return exp(e1 + e2 + e3) * dd(2.0);
}

void check_transform_args(int N, const cdd& y) {
    if (N < 1) throw Error(ErrorCode::Domain, "transform: N must be >= 1");
    if (!(to_double(y.re) > 0.0)) throw Error(ErrorCode::Domain, "transform: needs Re(y) > 0");
}

void note_tail(IdentityReport& r, const GSum& g) {
    r.notes.push_back("direct terms n < " + std::to_string(g.n1) + ", residue tail k <= " + std::to_string(g.k_used));
    if (!g.tail_ok && r.error == ErrorCode::Ok) {
        r.error = ErrorCode::NonConverged;
        r.message = "residue tail stalled at " + fmt_num(g.tail_last);
    }
}

} // namespace

IdentityReport thm_main_transform(int N, const cdd& a, const cdd& y, const TruncationPolicy& pol, MainForm form) {
    check_transform_args(N, y);
    if (!(to_double(a.re) > -1.0)) throw Error(ErrorCode::Domain, "thm_main_transform: needs Re(a) > -1");
    IdentityReport r = start("main-transform", pol, 1e-8);
    r.param("N", N);
    r.param("a", cd(a));
    r.param("y", cd(y));
    r.param("form", form == MainForm::G ? "G" : "K");

    auto lam = lambert_divisor<dd>(a, N, y, pol);
    track(r, lam, true, "lambert series");
    GSum g = g_weighted_sum(a, N, y, -1, pol, form == MainForm::K);
    cdd pre = g_prefactor(a, N, y);
    cdd el;
    if (near_integer(a)) {
        el = circle_mean([&](const cdd& b) { return elementary(b, N, y); }, a);
        r.notes.push_back("elementary terms by circle mean");
    } else {
        el = elementary(a, N, y);
    }
    cdd sum = form == MainForm::K ? k_prefactor(a, N, y) * g.direct + pre * g.tail : pre * (g.direct + g.tail);
    r.rhs_terms = std::max(0L, g.n1 - 1) + g.k_used + 1;
    note_tail(r, g);
    set_sides(r, lam.value, el + sum);
    return r;
}

IdentityReport thm_analytic_continuation(int N, const cdd& a, const cdd& y, int m, const TruncationPolicy& pol) {
    check_transform_args(N, y);
    if (m < 0) throw Error(ErrorCode::Domain, "thm_analytic_continuation: needs m >= 0");
    if (!(to_double(a.re) > -(2.0 * m + 2.0) * N - 1.0))
        throw Error(ErrorCode::Domain, "thm_analytic_continuation: needs Re(a) > -(2m+2)N-1");
    IdentityReport r = start("analytic-continuation", pol, 1e-7);
    r.param("N", N);
    r.param("a", cd(a));
    r.param("y", cd(y));
    r.param("m", m);

    auto lam = lambert_divisor<dd>(a, N, y, pol);
    track(r, lam, true, "lambert series");
    GSum g = g_weighted_sum(a, N, y, m, pol, false);
    cdd sum = g_prefactor(a, N, y) * (g.direct + g.tail);
    r.rhs_terms = std::max(0L, g.n1 - 1) + g.k_used + 1;
    note_tail(r, g);
    if (std::isinf(g.cancel_digits))
        r.notes.push_back("CANCELLATION_WARNING: K - correction is singular here (double pole); shifted contour used");
    else if (g.cancel_digits > 10.0)
        r.notes.push_back("CANCELLATION_WARNING: K - correction would lose " + fmt_num(std::round(g.cancel_digits)) +
                          " digits; shifted contour used");
    if (near_integer(a)) {
        cdd q = circle_mean([&](const cdd& b) { return elementary(b, N, y) + zeta_products(b, N, y, m); }, a);
        r.notes.push_back("elementary terms by circle mean");
        set_sides(r, lam.value - q, sum);
    } else {
        set_sides(r, lam.value - elementary(a, N, y), sum + zeta_products(a, N, y, m));
    }
    return r;
}

} // namespace lxf
