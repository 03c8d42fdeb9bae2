#include "identities_detail.hpp"

namespace lxf {

using namespace idd;

namespace {

template <class T> IdentityReport power_partition(int N, int m, const cdd& yv, const TruncationPolicy& pol) {
    IdentityReport r = start("power-partition", pol, 1e-8);
    r.param("N", N);
    r.param("m", m);
    r.param("y", cd(yv));
    using std::cos;
    using std::exp;
    using std::log;
    const T pi = pi_v<T>(), two_pi = real_traits<T>::two_pi();
    Cx<T> y = cv<T>(yv);
    double yr = to_double(y.re);
    if (yr < 0.3 || yr > 10.0) r.notes.push_back("Re(y) outside the characterised range [0.3, 10]");
    long a = 2L * N * m - 1 + N;
    Cx<T> ca = cr<T>(double(a));
    T inv = T(1.0) / T(double(N));

    auto lam = lambert_divisor<T>(ca, N, y, pol);
    track(r, lam, true, "lambert series");
    Cx<T> lhs = lam.value + Cx<T>(bernoulli_v<T>(2 * N * m)) / (y * T(2.0 * N * m));
    T fm = T(1.0);
    for (int i = 2; i <= 2 * m; ++i) fm *= T(double(i));
    lhs -= zeta(cr<T>(2.0 * m + 1)) * fm / (cpow(y, 2 * m + 1) * T(double(N)));

    // w_n = (2 pi)^(N+1) n / y; the kernels' exponentially small parts decay like
    // exp(-kappa |w_n|^(1/N)) with kappa the smallest cos over the rotations
    Cx<T> w1 = Cx<T>(exp(log(two_pi) * T(double(N + 1)))) / y;
    Cx<T> lw1 = log(w1);
    double aw = to_double(lw1.im) / N;
    double kap = 1.0;
    for (int k = -(N - 1) / 2; k <= (N - 1) / 2; ++k) kap = std::min(kap, std::cos(aw + M_PI * k / N));
    if (!(kap > 0.05)) throw Error(ErrorCode::Domain, "thm_power_partition: |arg y| too large");
    double L = std::min(-std::log(pol.rel_tol), 75.0) + 5.0;
    double root1 = std::exp(to_double(lw1.re) / N);
    double nn = std::ceil(std::pow(L / (kap * root1), N));
    if (nn > double(pol.max_terms)) throw Error(ErrorCode::NonConverged, "thm_power_partition: direct range exceeds max_terms");
    long n1 = std::max(1L, static_cast<long>(nn));

    auto S = s_weight_table<T>(ca, N, n1);
    Cx<T> sum{};
    for (long n = 1; n < n1; ++n) {
        T ln = log(T(double(n)));
        Cx<T> lw = lw1 + Cx<T>(ln);
        Cx<T> zr = exp(lw * inv);
        Cx<T> avg{};
        for (int k = -(N - 1) / 2; k <= (N - 1) / 2; ++k) avg += sinhshi_coshchi(zr * expi(pi * T(double(k)) * inv));
        Cx<T> br = avg * inv;
        for (int j = 1; j <= m; ++j) {
            T lf = log_gamma(cr<T>(2.0 * N * j)).re;
            br += exp(Cx<T>(lf) - lw * T(2.0 * j));
        }
        sum += S[n] * br;
    }
    // bracket ~ -sum_{i>m} (2Ni-1)! w^(-2i) beyond n1
    double prev = INFINITY;
    int iu = m;
    for (int i = m + 1; i <= m + 400; ++i) {
        T lf = log_gamma(cr<T>(2.0 * N * i)).re;
        Cx<T> t = exp(Cx<T>(lf) - lw1 * T(2.0 * i)) * s_dirichlet_tail(ca, N, cr<T>(2.0 * i), n1);
        double at = absd(t);
        if (at > prev) break;
        sum -= t;
        prev = at;
        iu = i;
        if (at <= pol.rel_tol * absd(sum) + pol.abs_tol) break;
    }
    r.rhs_terms = (n1 - 1) * N + (iu - m);
    r.notes.push_back("direct terms n < " + std::to_string(n1) + ", factorial tail to order " + std::to_string(iu));
    Cx<T> pre = exp((Cx<T>(log(two_pi)) - log(y)) * T(2.0 * m + 1)) * (T(2.0 * sgn_pow(m)) / pi);
    set_sides(r, lhs, pre * sum);
    return r;
}

template <class T> IdentityReport mittag_leffler(int N, const cdd& zv, const TruncationPolicy& pol) {
    IdentityReport r = start("mittag-leffler", pol, 1e-9);
    r.param("N", N);
    r.param("z", cd(zv));
    using std::sin;
    const T pi = pi_v<T>();
    Cx<T> z = cv<T>(zv);
    bool even = N % 2 == 0;
    T inv = T(1.0) / T(double(N));
    Cx<T> I(T(0.0), T(1.0));
    Cx<T> shift = log(z);
    if (even) shift += I * pi / T(2.0 * N);

    // term z^(2Nh)/(2Nh)! with psi(2Nh+1) = -gamma + H_(2Nh)
    Cx<T> z2 = z * z, zN = cpow(z2, N);
    Cx<T> t = cr<T>(1.0);
    T H = T(0.0);
    long h_done = 0;
    auto lhs_s = sum_series<T>(
        [&](long h) {
            if (h > 0) {
                for (long i = 2 * N * (h - 1) + 1; i <= 2 * N * h; ++i) {
                    t = t / T(double(i));
                    H += T(1.0) / T(double(i));
                }
                t = t * zN;
            }
            h_done = h;
            return (Cx<T>(H - real_traits<T>::euler()) - shift) * t;
        },
        pol);
    track(r, lhs_s, true, "psi-weighted series");

    Cx<T> rhs{};
    int k0 = even ? -N / 2 + 1 : -(N - 1) / 2, k1 = even ? N / 2 : (N - 1) / 2;
    for (int k = k0; k <= k1; ++k) rhs += sinhshi_coshchi(z * expi(pi * T(double(k)) * inv));
    rhs = rhs * inv;
    for (int j = 1; j < N; ++j) {
        // sum_h z^(2Nh+2j)/(2Nh+2j)!
        Cx<T> u = cpow(z2, j);
        for (int i = 2; i <= 2 * j; ++i) u = u / T(double(i));
        Cx<T> v = u;
        auto lj = sum_series<T>(
            [&](long h) {
                if (h > 0) {
                    for (long i = 2 * N * (h - 1) + 2 * j + 1; i <= 2 * N * h + 2 * j; ++i) v = v / T(double(i));
                    v = v * zN;
                }
                return v;
            },
            pol);
        track(r, lj, false, "lacunary series");
        Cx<T> c = Cx<T>(pi / (T(2.0 * N) * sin(pi * T(double(j)) * inv)) * T(sgn_pow(j)));
        if (even) c = c * expi(pi * T(double(j)) * inv);
        rhs += c * lj.value;
    }
    r.rhs_terms += k1 - k0 + 1;
    set_sides(r, lhs_s.value, rhs);
    return r;
}

cdd i_pow(int j) {
    switch (((j % 4) + 4) % 4) {
    case 0: return cdd(dd(1.0));
    case 1: return cdd(dd(0.0), dd(1.0));
    case 2: return cdd(dd(-1.0));
    default: return cdd(dd(0.0), dd(-1.0));
    }
}

} // namespace

IdentityReport thm_power_partition(int N, int m, const cdd& y, const TruncationPolicy& pol) {
    if (N < 1 || N % 2 == 0) throw Error(ErrorCode::Domain, "thm_power_partition: N must be odd");
    if (m < 1) throw Error(ErrorCode::Domain, "thm_power_partition: m must be >= 1");
    if (!(to_double(y.re) > 0.0)) throw Error(ErrorCode::Domain, "thm_power_partition: needs Re(y) > 0");
    return pol.tier == Tier::Extended ? power_partition<dd>(N, m, y, pol) : power_partition<double>(N, m, y, pol);
}

IdentityReport prop_mittag_leffler(int N, const cdd& z, const TruncationPolicy& pol) {
    if (N < 1) throw Error(ErrorCode::Domain, "prop_mittag_leffler: N must be >= 1");
    if (!(to_double(z.re) > 0.0)) throw Error(ErrorCode::Domain, "prop_mittag_leffler: needs Re(z) > 0");
    return pol.tier == Tier::Extended ? mittag_leffler<dd>(N, z, pol) : mittag_leffler<double>(N, z, pol);
}

std::vector<IdentityReport> trig_sum_check(int N, const cdd& z) {
    if (N < 1) throw Error(ErrorCode::Domain, "trig_sum_check: N must be >= 1");
    TruncationPolicy pol = TruncationPolicy::for_tier(Tier::Extended);
    cdd sz = sin(z), cz = cos(z), nz = z * dd(double(N));
    cdd I(dd(0.0), dd(1.0));
    std::vector<IdentityReport> out;

    if (absd(sz) < 1e-200) throw Error(ErrorCode::Domain, "trig_sum_check: sin z = 0");
    IdentityReport a = start("trig-sin", pol, 1e-13);
    a.param("N", N);
    a.param("z", cd(z));
    cdd s{};
    for (int j = -(N - 1); j <= N - 1; j += 2) s += exp(I * z * dd(double(j)));
    a.rhs_terms = N;
    set_sides(a, sin(nz) / sz, s);
    out.push_back(a);

    if (absd(cz) < 1e-200) throw Error(ErrorCode::Domain, "trig_sum_check: cos z = 0");
    bool odd = N % 2 == 1;
    IdentityReport b = start(odd ? "trig-cos-odd" : "trig-sin-even", pol, 1e-13);
    b.param("N", N);
    b.param("z", cd(z));
    cdd u{};
    for (int j = -(N - 1); j <= N - 1; j += 2) u += i_pow(j) * exp(I * z * dd(double(odd ? -j : j)));
    u = u * dd(odd ? sgn_pow((N - 1) / 2) : sgn_pow(N / 2));
    b.rhs_terms = N;
    set_sides(b, (odd ? cos(nz) : sin(nz)) / cz, u);
    out.push_back(b);
    return out;
}

} // namespace lxf
