#include "doctest.h"

#include <numeric>

#include "arithmetic.hpp"
#include "hypergeometric.hpp"
#include "quadrature.hpp"

using namespace lxf;

namespace {

double rel(const cd& a, const cd& b) { return absd(a - b) / absd(b); }

// classical sigma_a(n) by trial division
double sigma_classical(double a, long n) {
    double s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += std::pow(double(d), a);
    return s;
}

// prod (1 - q^(n^N))^(-n^(2N-1)) by repeated multiplication with 1/(1 - q^p)
std::vector<BigInt> product_expansion(int N, long n_max) {
    std::vector<BigInt> c(n_max + 1, BigInt(0));
    c[0] = 1;
    for (long n = 1;; ++n) {
        long p = ipow(n, N);
        if (p > n_max) break;
        long mult = ipow(n, 2 * N - 1);
        for (long rep = 0; rep < mult; ++rep)
            for (long j = p; j <= n_max; ++j) c[j] += c[j - p];
    }
    return c;
}

} // namespace

TEST_CASE("Gauss-Legendre rules") {
    for (int n : {1, 2, 5, 20, 41}) {
        const auto& r = gauss_legendre<dd>(n);
        dd ws(0.0);
        for (int i = 0; i < n; ++i) ws += r.w[i];
        CHECK(std::fabs(to_double(ws - dd(2.0))) < 1e-30);
        for (int i = 0; i < n; ++i) CHECK(std::fabs(to_double(r.x[i] + r.x[n - 1 - i])) < 1e-31);
        // exact on x^k, k < 2n
        for (int k = 0; k < 2 * n; k += 3) {
            cdd v = gl_panel<dd>([k](const dd& x) { return cdd(pow(x, k)); }, dd(0.0), dd(1.0), n);
            CHECK(std::fabs(to_double(v.re - dd(1.0) / dd(double(k + 1)))) < 1e-29);
        }
    }
    cd e = gl_panel<double>([](double x) { return cd(std::exp(x)); }, 0.0, 1.0, 16);
    CHECK(std::fabs(e.re - (M_E - 1.0)) < 1e-15);
    std::vector<double> brk{0.0, 1.0, 2.0, M_PI};
    cd s = gl_panels<double>([](double x) { return cd(std::sin(x)); }, brk, 20);
    CHECK(std::fabs(s.re - 2.0) < 1e-14);
}

TEST_CASE("integer helpers") {
    CHECK(iroot(26, 3) == 2);
    CHECK(iroot(27, 3) == 3);
    CHECK(iroot(1000000, 2) == 1000);
    CHECK(iroot(999999, 2) == 999);
    CHECK(ipow(3, 4) == 81);
    CHECK_THROWS_AS(ipow(10, 30), Error);
}

TEST_CASE("sigma examples") {
    for (int N : {1, 2, 3})
        for (cd a : {cd(0.0), cd(1.5, -2.0)}) CHECK(absd(sigma(a, N, 1) - cd(1.0)) == 0.0);
    CHECK(sigma(cd(0.0), 1, 12).re == 6.0);
    CHECK(sigma(cd(3.0), 2, 8).re == 9.0);
    CHECK_THROWS_AS(sigma(cd(0.0), 1, 0), Error);
    for (long n = 1; n <= 200; ++n) CHECK(rel(sigma(cd(1.3), 1, n), cd(sigma_classical(1.3, n))) < 1e-14);
}

TEST_CASE("s_weight examples") {
    CHECK(std::fabs(s_weight(cd(0.0), 2, 4).re - 1.5) < 1e-15);
    for (int N : {1, 2, 4}) CHECK(absd(s_weight(cd(0.7, 0.2), N, 1) - cd(1.0)) == 0.0);
    for (long n = 1; n <= 100; ++n)
        for (cd a : {cd(0.0), cd(2.0), cd(-0.4, 1.0)}) CHECK(rel(s_weight(a, 1, n), sigma(a, 1, n)) < 1e-14);
}

TEST_CASE("multiplicativity") {
    for (int N : {1, 2, 3}) {
        cd a(0.7, -0.3);
        for (long m = 1; m <= 50; ++m)
            for (long n = m; n <= 50; ++n) {
                if (std::gcd(m, n) != 1) continue;
                CHECK(rel(sigma(a, N, m * n), sigma(a, N, m) * sigma(a, N, n)) < 1e-13);
                CHECK(rel(s_weight(a, N, m * n), s_weight(a, N, m) * s_weight(a, N, n)) < 1e-13);
            }
    }
}

TEST_CASE("sieved tables match pointwise values") {
    for (int N : {1, 2, 3}) {
        cd a(1.2, 0.5);
        auto st = sigma_table(a, N, 300);
        auto wt = s_weight_table(a, N, 300);
        for (long n = 1; n <= 300; ++n) {
            CHECK(rel(st[n], sigma(a, N, n)) < 1e-13);
            CHECK(rel(wt[n], s_weight(a, N, n)) < 1e-13);
        }
    }
}

TEST_CASE("Dirichlet series of S") {
    TruncationPolicy pol;
    auto r1 = s_dirichlet(cd(0.0), 1, cd(3.0), pol);
    CHECK(r1.abs_err < 1e-6);
    CHECK(std::fabs(to_double(r1.rhs.re) - std::pow(zeta(cd(3.0)).re, 2)) < 1e-14);
    auto r2 = s_dirichlet(cd(0.0), 2, cd(2.0), pol);
    CHECK(std::fabs(to_double(r2.rhs.re) - zeta(cd(4.0)).re * zeta(cd(2.5)).re) < 1e-14);
    CHECK(r2.rel_err < 1e-5);
    auto r3 = s_dirichlet(cd(1.0), 1, cd(4.0), pol);
    CHECK(r3.rel_err < 1e-8);
    auto r4 = s_dirichlet(cd(0.5, 0.5), 3, cd(2.0, 1.0), pol);
    CHECK(r4.rel_err < 1e-6);
    CHECK_THROWS_AS(s_dirichlet(cd(0.0), 2, cd(0.4), pol), Error);
}

TEST_CASE("Lambert series") {
    TruncationPolicy pol;
    auto r = lambert_direct(cd(0.0), 1, cd(10.0), pol);
    CHECK(std::fabs(r.value.re / (1.0 / std::expm1(10.0)) - 1.0) < 1e-4);
    CHECK(r.converged);
    // independent long double sum
    long double o = 0;
    for (int n = 200; n >= 1; --n) o += (long double)n * n / std::expm1((long double)n);
    auto k2 = lambert_direct(cd(2.0), 1, cd(1.0), pol);
    CHECK(std::fabs(k2.value.re / double(o) - 1.0) < 1e-13);
    CHECK(std::fabs(k2.value.re - 2.3214805734354430) < 1e-13);
    auto l = lambert_divisor(cd(0.0), 1, cd(30.0), pol);
    CHECK(std::fabs(l.value.re / std::exp(-30.0) - 1.0) < 1e-12);
}

TEST_CASE("Lambert rearrangement on a grid") {
    TruncationPolicy pol;
    for (double k : {0.0, 1.0, 2.5})
        for (int N : {1, 2, 3})
            for (cd y : {cd(0.3), cd(1.0), cd(2.0, 1.5)}) {
                auto d = lambert_direct(cd(k), N, y, pol);
                auto v = lambert_divisor(cd(k), N, y, pol);
                CHECK(d.converged);
                CHECK(v.converged);
                CHECK(rel(d.value, v.value) < 1e-12);
            }
    TruncationPolicy ext = TruncationPolicy::for_tier(Tier::Extended);
    auto d = lambert_direct(cdd(dd(1.0)), 2, cdd(dd(0.5)), ext);
    auto v = lambert_divisor(cdd(dd(1.0)), 2, cdd(dd(0.5)), ext);
    CHECK(absd(d.value - v.value) < 1e-24 * absd(d.value));
}

TEST_CASE("Lambert series is the log-derivative of the plane-partition product") {
    // q d/dq log prod (1-q^n)^(-n) by central difference of the product log
    auto logp = [](long double q) {
        long double s = 0;
        for (int n = 1; n < 400; ++n) s -= n * std::log1p(-std::pow(q, (long double)n));
        return s;
    };
    long double q = std::exp(-1.0L), h = 1e-6L;
    long double d = q * (logp(q + h) - logp(q - h)) / (2 * h);
    auto l = lambert_divisor(cd(2.0), 1, cd(1.0), TruncationPolicy{});
    CHECK(std::fabs(l.value.re / double(d) - 1.0) < 1e-8);
}

TEST_CASE("partition counts") {
    auto t3 = partition_counts(3, 26);
    for (int n = 1; n <= 7; ++n) CHECK(t3.counts[n] == 1);
    for (int n = 8; n <= 15; ++n) CHECK(t3.counts[n] == 33);
    for (int n = 16; n <= 23; ++n) CHECK(t3.counts[n] == 561);
    for (int n = 24; n <= 26; ++n) CHECK(t3.counts[n] == 6545);
    auto t1 = partition_counts(1, 5);
    std::vector<int> pp{1, 1, 3, 6, 13, 24};
    for (int n = 0; n <= 5; ++n) CHECK(t1.counts[n] == pp[n]);
    for (int N : {1, 2, 3}) {
        auto t = partition_counts(N, 60);
        auto o = product_expansion(N, 60);
        CHECK(t.counts[0] == 1);
        for (int n = 0; n <= 60; ++n) CHECK(t.counts[n] == o[n]);
        for (int n = 1; n <= 60; ++n) CHECK(t.counts[n] >= t.counts[n - 1]);
    }
    CHECK(partition_counts(2, 0).counts.size() == 1);
    CHECK_THROWS_AS(partition_counts(2, -1), Error);
    std::string csv = partition_counts(3, 8).to_csv();
    CHECK(csv.rfind("n,count\n0,1\n", 0) == 0);
    CHECK(csv.find("\n8,33\n") != std::string::npos);
}

TEST_CASE("pochhammer") {
    double f = 1;
    for (int n = 0; n <= 10; ++n) {
        if (n > 0) f *= n;
        CHECK(pochhammer(cd(1.0), n).re == f);
    }
    CHECK(pochhammer(cd(2.0, 1.0), 0).re == 1.0);
    CHECK(std::fabs(pochhammer(cd(0.5), 2).re - 0.75) < 1e-16);
    for (cd a : {cd(0.3), cd(1.7, -0.4), cd(-3.5, 2.0)}) {
        cd g = gamma(a + cd(25.0)) / gamma(a);
        CHECK(rel(pochhammer(a, 25), g) < 1e-11);
    }
}

TEST_CASE("hyper_1fq") {
    TruncationPolicy pol;
    cd z(2.0, 1.0);
    CHECK(rel(hyper_1fq(cd(1.0), {cd(1.0)}, z, pol).value, exp(z)) < 1e-13);
    double x = 1.7;
    CHECK(std::fabs(hyper_1fq(cd(1.0), {cd(0.5), cd(1.0)}, cd(x), pol).value.re - std::cosh(2 * std::sqrt(x))) <
          1e-13);
    CHECK(absd(hyper_1fq(cd(0.3, 1.0), {cd(2.0), cd(-1.5), cd(0.25)}, cd(0.0), pol).value - cd(1.0)) == 0.0);
    CHECK_THROWS_AS(hyper_1fq(cd(1.0), {cd(-2.0)}, cd(1.0), pol), Error);
    // terminating: 1F1(-3; 1; z) = L_3(z)
    double zz = 0.7;
    double lag = (-zz * zz * zz + 9 * zz * zz - 18 * zz + 6) / 6;
    CHECK(std::fabs(hyper_1fq(cd(-3.0), {cd(1.0)}, cd(zz), pol).value.re - lag) < 1e-15);
    auto e = hyper_1fq(cdd(dd(1.0)), {cdd(dd(1.0))}, cdd(dd(3.0)), TruncationPolicy::for_tier(Tier::Extended));
    CHECK(std::fabs(to_double(e.value.re - exp(dd(3.0)))) < 1e-24 * 20.1);
}

TEST_CASE("Prudnikov closed form") {
    CHECK(std::fabs(prudnikov_closed_form(0, 1, cd(1.3)).re - std::exp(1.3)) < 1e-14);
    CHECK(std::fabs(prudnikov_closed_form(0, 2, cd(2.0)).re - std::cosh(2 * std::sqrt(2.0))) < 1e-14);
    TruncationPolicy pol;
    for (int m = 0; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q)
            for (cd z : {cd(0.5), cd(2.0), cd(1.0, 1.0)}) {
                std::vector<cd> bs;
                for (int i = 1; i <= q; ++i) bs.push_back(cd(double(m + i) / q));
                cd series = hyper_1fq(cd(1.0), bs, z, pol).value;
                CHECK(rel(prudnikov_closed_form(m, q, z), series) < 1e-10);
            }
    CHECK_THROWS_AS(prudnikov_closed_form(1, 2, cd(0.0)), Error);
}
