#include "identities_detail.hpp"

namespace lxf {

using namespace idd;

namespace {

template <class T> T frac(long num, long den) { return T(double(num)) / T(double(den)); }

template <class T> T two_pow(const T& x) {
    using std::exp;
    return exp(x * real_traits<T>::ln2());
}

template <class T> Cx<T> rpow_c(const Cx<T>& z, const T& e) { return cpow(z, Cx<T>(e)); }

void check_odd(int N, const char* who) {
    if (N < 1 || N % 2 == 0) throw Error(ErrorCode::Domain, std::string(who) + ": N must be odd");
}

void check_even(int N, const char* who) {
    if (N < 2 || N % 2 != 0) throw Error(ErrorCode::Domain, std::string(who) + ": N must be even");
}

void check_pair(const RamanujanPair& p, int N) {
    if (p.N != N) throw Error(ErrorCode::Domain, "pair built for a different N");
    p.validate();
}

void pair_params(IdentityReport& r, int N, int m, const RamanujanPair& p) {
    r.param("N", N);
    r.param("m", m);
    r.param("alpha", cd(p.alpha));
    r.param("beta", cd(p.beta));
}

// alpha^(-e) (zeta(-k)/2 + sum n^k / (exp((2n)^N alpha) - 1)), k = -(exponent of n)
template <class T>
Cx<T> lambert_block(IdentityReport& r, int N, long k, const Cx<T>& al, const T& e, const TruncationPolicy& pol) {
    Cx<T> y = al * T(std::ldexp(1.0, N));
    auto s = lambert_direct<T>(cr<T>(double(k)), N, y, pol);
    track(r, s, true, "lambert series");
    return rpow_c(al, -e) * (zeta(cr<T>(double(-k))) * T(0.5) + s.value);
}

template <class T> IdentityReport ramanujan_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    IdentityReport r = start("ramanujan-gen", pol, 1e-8);
    pair_params(r, N, m, p);
    const T pi = pi_v<T>();
    Cx<T> al = cv<T>(p.alpha), be = cv<T>(p.beta);
    T ex = frac<T>(2L * N * m + N - 1, N + 1);
    Cx<T> lhs = lambert_block(r, N, -(2L * N * m + N), al, ex, pol);

    Cx<T> s = cr<T>(2.0 * m + 2) - Cx<T>(frac<T>(1, N));
    using std::sin;
    Cx<T> inner = zeta(s) / (T(2.0) * sin(pi / T(2.0 * N)));
    for (int j = -(N - 1) / 2; j <= (N - 1) / 2; ++j) {
        Cx<T> e = expi(pi * frac<T>(j, N));
        auto rl = rotated_lambert(s, N, be, e, pol);
        track(r, rl, false, "rotated lambert series");
        inner += e * rl.value;
    }
    T p2 = two_pow(T(double((N - 1) * (2 * m + 1))) - frac<T>(N - 1, N));
    Cx<T> rhs = rpow_c(be, -ex) * inner * (p2 * T(sgn_pow(std::abs(m))) / T(double(N)));
    Cx<T> bs{};
    for (int j = 0; j <= m + 1; ++j) {
        int k = 2 * N * (m - j + 1);
        if (k < 0) continue;
        T c = bernoulli_pair<T>(2 * j, k) * T(sgn_pow(j));
        bs += rpow_c(al, frac<T>(2 * j, N + 1)) * rpow_c(be, frac<T>(2L * N * N * (m - j + 1), N + 1)) * c;
    }
    rhs += bs * (T(sgn_pow(std::abs(m))) * two_pow(T(double(2 * N * m + N - 1))));
    set_sides(r, lhs, rhs);
    return r;
}

template <class T> IdentityReport ramanujan_classical(int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    IdentityReport r = start("ramanujan-classical", pol, 1e-10);
    r.param("m", m);
    r.param("alpha", cd(p.alpha));
    r.param("beta", cd(p.beta));
    Cx<T> al = cv<T>(p.alpha), be = cv<T>(p.beta);
    Cx<T> z = zeta(cr<T>(2.0 * m + 1)) * T(0.5);
    auto la = lambert_direct<T>(cr<T>(-2.0 * m - 1), 1, al * T(2.0), pol);
    auto lb = lambert_direct<T>(cr<T>(-2.0 * m - 1), 1, be * T(2.0), pol);
    track(r, la, true, "lambert series");
    track(r, lb, false, "lambert series");
    Cx<T> lhs = cpow(al, -m) * (z + la.value);
    Cx<T> rhs = cpow(-be, -m) * (z + lb.value);
    Cx<T> bs{};
    for (int j = 0; j <= m + 1; ++j) {
        T c = bernoulli_pair<T>(2 * j, 2 * m + 2 - 2 * j) * T(sgn_pow(j));
        bs += cpow(al, m + 1 - j) * cpow(be, j) * c;
    }
    rhs -= bs * two_pow(T(2.0 * m));
    set_sides(r, lhs, rhs);
    return r;
}

template <class T> IdentityReport dixit_maji(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    IdentityReport r = start("dixit-maji-gen", pol, 1e-8);
    pair_params(r, N, m, p);
    const T pi = pi_v<T>();
    Cx<T> al = cv<T>(p.alpha), be = cv<T>(p.beta);
    Cx<T> lhs = lambert_block(r, N, -(2L * N * m + 1), al, frac<T>(2L * N * m, N + 1), pol);

    double sN = sgn_pow((N + 3) / 2);
    Cx<T> s = cr<T>(2.0 * m + 1);
    Cx<T> rot{};
    for (int j = -(N - 1) / 2; j <= (N - 1) / 2; ++j) {
        auto rl = rotated_lambert(s, N, be, expi(pi * frac<T>(j, N)), pol);
        track(r, rl, false, "rotated lambert series");
        rot += rl.value * T(sgn_pow(std::abs(j)));
    }
    Cx<T> inner = zeta(s) * T(0.5) + rot * T(sN);
    Cx<T> rhs = rpow_c(be, -frac<T>(2L * N * m, N + 1)) * inner *
                (T(sgn_pow(std::abs(m))) * two_pow(T(2.0 * m * (N - 1))) / T(double(N)));
    // floor((N+1)/(2N) + m)
    long num = N + 1 + 2L * N * m, den = 2L * N;
    long J = num >= 0 ? num / den : -((-num + den - 1) / den);
    Cx<T> bs{};
    for (long j = 0; j <= J; ++j) {
        long k = N + 1 + 2L * N * (m - j);
        if (k < 0) continue;
        T c = bernoulli_pair<T>(int(2 * j), int(k)) * T(sgn_pow(j));
        T eb = T(double(N)) + frac<T>(2L * N * N * (m - j), N + 1);
        bs += rpow_c(al, frac<T>(2 * j, N + 1)) * rpow_c(be, eb) * c;
    }
    rhs += bs * (T(sgn_pow(std::abs(m + (N + 3) / 2))) * two_pow(T(2.0 * N * m)));
    set_sides(r, lhs, rhs);
    return r;
}

// sum_j w_j part(e_j rot(s, beta e_j)), e_j = e^(i pi (2j+1)/2N), j = 0..N/2-1
template <class T, class Part>
T even_rotated(IdentityReport& r, int N, const Cx<T>& s, const Cx<T>& be, const TruncationPolicy& pol, bool alternate,
               Part part) {
    const T pi = pi_v<T>();
    T acc = T(0.0);
    for (int j = 0; j < N / 2; ++j) {
        Cx<T> e = expi(pi * frac<T>(2 * j + 1, 2 * N));
        auto rl = rotated_lambert(s, N, be, e, pol);
        track(r, rl, false, "rotated lambert series");
        acc += part(e * rl.value) * T(alternate ? sgn_pow(j) : 1.0);
    }
    return acc;
}

void check_real_pair(const RamanujanPair& p) {
    if (to_double(p.alpha.im) != 0.0 || to_double(p.beta.im) != 0.0)
        throw Error(ErrorCode::Domain, "even-N identities need real alpha, beta > 0");
}

template <class T> IdentityReport wigert_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    IdentityReport r = start("wigert-gen", pol, 1e-9);
    pair_params(r, N, m, p);
    const T pi = pi_v<T>();
    Cx<T> al = cv<T>(p.alpha), be = cv<T>(p.beta);
    T ex = frac<T>(2L * N * m - 1, N + 1);
    Cx<T> lhs = lambert_block(r, N, -2L * N * m, al, ex, pol);

    Cx<T> s = cr<T>(2.0 * m + 1) - Cx<T>(frac<T>(1, N));
    using std::cos;
    T im_sum = even_rotated(r, N, s, be, pol, true, [](const Cx<T>& v) { return v.im; });
    Cx<T> inner = zeta(s) / (T(2.0) * cos(pi / T(2.0 * N))) - Cx<T>(im_sum * T(2.0 * sgn_pow(N / 2)));
    T p2 = two_pow(T(double((N - 1) * 2 * m)) - frac<T>(N - 1, N));
    Cx<T> rhs = rpow_c(be, -ex) * inner * (T(sgn_pow(std::abs(m))) * p2 / T(double(N)));
    Cx<T> bs{};
    for (int j = 0; j <= m; ++j) {
        T c = bernoulli_pair<T>(2 * j, (2 * m + 1 - 2 * j) * N);
        T eb = T(double(N)) + frac<T>(2L * N * N * (m - j) - N, N + 1);
        bs += rpow_c(al, frac<T>(2 * j, N + 1)) * rpow_c(be, eb) * c;
    }
    rhs += bs * (T(sgn_pow(N / 2 + 1)) * two_pow(T(2.0 * N * m - 1)));
    set_sides(r, lhs, rhs);
    return r;
}

template <class T> IdentityReport even_shift(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    IdentityReport r = start("even-shift", pol, 1e-8);
    pair_params(r, N, m, p);
    const T pi = pi_v<T>();
    Cx<T> al = cv<T>(p.alpha), be = cv<T>(p.beta);
    T ex = frac<T>(2L * N * m - 1, N + 1);
    Cx<T> y = al * T(std::ldexp(1.0, N));
    auto ld = lambert_direct<T>(cr<T>(double(-2L * N * m + N)), N, y, pol);
    track(r, ld, true, "lambert series");
    Cx<T> brace = zeta(cr<T>(2.0 * N * m)) - y * ld.value;
    for (int j = 1; j <= m; ++j) {
        T c = rational_to<T>(bernoulli(2 * j) / Rational(factorial_big(2 * j)));
        brace += zeta(cr<T>(2.0 * N * (m - j))) * cpow(y, 2 * j) * c;
    }
    Cx<T> lhs = rpow_c(al, -ex) * brace;

    Cx<T> e = Cx<T>(frac<T>(1 - 2L * N * m, N));
    Cx<T> s = cr<T>(2.0 * m) - Cx<T>(frac<T>(1, N));
    T re_sum = even_rotated(r, N, s, be, pol, false, [](const Cx<T>& v) { return v.re; });
    using std::log;
    Cx<T> inner = -(e * exp(-(e * log(pi))) * gamma(e) * zeta(e + cr<T>(1.0)));
    inner -= Cx<T>(pi * T(4.0 * sgn_pow(std::abs(m + 1))) * two_pow(e.re) * re_sum);
    Cx<T> rhs = rpow_c(be, -ex) * inner * (two_pow(T(2.0 * N * m - 1)) / T(double(N)));
    int kb = (2 * m - 1) * N;
    if (kb >= 0) {
        T c = rational_to<T>(bernoulli(kb) / Rational(factorial_big(kb)));
        T eb = T(double(N)) + frac<T>(2L * N * N * (m - 1) - N, N + 1);
        rhs += rpow_c(al, frac<T>(2, N + 1)) * rpow_c(be, eb) *
               (c * T(0.5 * sgn_pow(N / 2 + 1)) * two_pow(T(2.0 * N * m - 1)));
    }
    set_sides(r, lhs, rhs);
    return r;
}

template <class T> IdentityReport herglotz(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    IdentityReport r = start("herglotz", pol, 1e-6);
    pair_params(r, N, m, p);
    using std::exp;
    using std::log;
    const T pi = pi_v<T>();
    Cx<T> al = cv<T>(p.alpha), be = cv<T>(p.beta);
    T ea = frac<T>(2L * N * m, N + 1) - T(0.5);
    Cx<T> lhs = lambert_block(r, N, -(2L * N * m + 1 - N), al, ea, pol);
    for (int j = 0; j < m; ++j) {
        T c = rational_to<T>(bernoulli(2 * j) / Rational(factorial_big(2 * j)));
        lhs -= zeta(cr<T>(2.0 * N * m + 1 - 2.0 * N * j)) * rpow_c(al, T(2.0 * j) - frac<T>(2L * N * m, N + 1) - T(0.5)) *
               (c * two_pow(T(double(N * (2 * j - 1)))));
    }

    // psi(x) + psi(-x), x = c_j n^(1/N); direct below n1, asymptotic above
    double L = std::min(-std::log(pol.rel_tol), 75.0) + 5.0;
    Cx<T> I(T(0.0), T(1.0));
    Cx<T> psum{};
    long n1_max = 0;
    int kmax = 0;
    T inv = T(1.0) / T(double(N));
    T s2m = T(2.0 * m);
    for (int j = -(N - 1) / 2; j <= (N - 1) / 2; ++j) {
        Cx<T> c = I * be * expi(pi * frac<T>(j, N)) * (exp(real_traits<T>::ln2() * inv) / (T(2.0) * pi));
        double imc = to_double(c.im);
        if (!(std::fabs(imc) > 1e-3)) throw Error(ErrorCode::Domain, "herglotz: psi argument too close to the real axis");
        double nn = std::ceil(std::pow(L / (2.0 * M_PI * std::fabs(imc)), N));
        if (nn > double(pol.max_terms)) throw Error(ErrorCode::NonConverged, "herglotz: direct range exceeds max_terms");
        long n1 = std::max(2L, static_cast<long>(nn));
        n1_max = std::max(n1_max, n1);
        Cx<T> direct{};
        for (long n = 1; n < n1; ++n) {
            T ln = log(T(double(n)));
            Cx<T> x = c * exp(ln * inv);
            direct += (digamma(x) + digamma(-x)) * exp(-(s2m * ln));
        }
        // 2 log x - i pi sgn(Im x) - sum_k B_2k/k x^(-2k)
        Cx<T> sg = imc > 0 ? I * pi : -(I * pi);
        Cx<T> tail = (log(c) * T(2.0) - sg) * zeta_tail(Cx<T>(s2m), n1) - zeta_tail(Cx<T>(s2m), n1, 1) * (T(2.0) * inv);
        Cx<T> c2 = cr<T>(1.0) / (c * c), ck = c2;
        double prev = INFINITY;
        for (int k = 1; k < 400; ++k) {
            T b = rational_to<T>(bernoulli(2 * k) / Rational(k));
            Cx<T> t = ck * b * zeta_tail(Cx<T>(s2m + T(2.0 * k) * inv), n1);
            double at = absd(t);
            if (at > prev) break;
            tail -= t;
            prev = at;
            kmax = std::max(kmax, k);
            if (at <= pol.rel_tol * absd(tail + direct)) break;
            ck = ck * c2;
        }
        psum += direct + tail;
    }
    r.rhs_terms += n1_max * N;
    r.notes.push_back("psi tail accelerated from n = " + std::to_string(n1_max) + " with " + std::to_string(kmax) +
                      " asymptotic terms");

    T g = real_traits<T>::euler();
    Cx<T> br = zeta(Cx<T>(s2m)) * (T(double(N)) * g / two_pow(T(double(N - 1)))) + psum / two_pow(T(double(N)));
    T pre = two_pow(T(2.0 * m * (N - 1))) / (T(double(N)) * exp(log(pi) * frac<T>(N + 1, 2))) * T(sgn_pow(m + 1));
    Cx<T> rhs = rpow_c(be, -(frac<T>(2L * N * m, N + 1) - frac<T>(N, 2))) * br * pre;
    set_sides(r, lhs, rhs);
    return r;
}

} // namespace

#define LXF_DISPATCH(fn, ...) \
    return pol.tier == Tier::Extended ? fn<dd>(__VA_ARGS__) : fn<double>(__VA_ARGS__)

IdentityReport thm_ramanujan_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    check_odd(N, "thm_ramanujan_gen");
    if (m == 0) throw Error(ErrorCode::Domain, "thm_ramanujan_gen: m must be nonzero");
    check_pair(p, N);
    LXF_DISPATCH(ramanujan_gen, N, m, p, pol);
}

IdentityReport thm_ramanujan_classical(int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    if (m == 0) throw Error(ErrorCode::Domain, "thm_ramanujan_classical: m must be nonzero");
    check_pair(p, 1);
    LXF_DISPATCH(ramanujan_classical, m, p, pol);
}

IdentityReport dixit_maji_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    check_odd(N, "dixit_maji_gen");
    if (m == 0) throw Error(ErrorCode::Domain, "dixit_maji_gen: m must be nonzero");
    check_pair(p, N);
    LXF_DISPATCH(dixit_maji, N, m, p, pol);
}

IdentityReport cor_wigert_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    check_even(N, "cor_wigert_gen");
    check_pair(p, N);
    check_real_pair(p);
    LXF_DISPATCH(wigert_gen, N, m, p, pol);
}

IdentityReport eq_even_shift(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    check_even(N, "eq_even_shift");
    check_pair(p, N);
    check_real_pair(p);
    LXF_DISPATCH(even_shift, N, m, p, pol);
}

IdentityReport cor_herglotz(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol) {
    check_odd(N, "cor_herglotz");
    if (m < 1) throw Error(ErrorCode::Domain, "cor_herglotz: m must be >= 1");
    check_pair(p, N);
    LXF_DISPATCH(herglotz, N, m, p, pol);
}

#undef LXF_DISPATCH

} // namespace lxf
