// Acceptance run: one PASS/FAIL line per criterion. Each criterion is checked at
// its stated tolerance. Exit status is 0 when every failure is one of the
// documented unattainable cases (see README), 1 otherwise; --strict makes any
// failure fatal.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lxf/lxf.h"

#include "arithmetic.hpp"
#include "asymptotics.hpp"
#include "identities.hpp"
#include "meijer.hpp"
#include "special.hpp"

using namespace lxf;

namespace {

const long double PIL = 3.141592653589793238462643383279503L;
const double PI = 3.141592653589793238462643383279503;

cdd re(double v) { return cdd(dd(v)); }
cdd cx(double r, double i) { return cdd(dd(r), dd(i)); }
double rel(const cd& a, const cd& b) { return absd(a - b) / absd(b); }

TruncationPolicy ext() { return identity_policy(Tier::Extended); }

// Collects failing sub-cases of one criterion.
struct Check {
    int cases = 0;
    double worst = 0.0;
    std::vector<std::string> failures;
    std::vector<std::string> info;

    void rel_le(const std::string& what, double err, double tol) {
        ++cases;
        if (std::isfinite(err) && err > worst) worst = err;
        if (!(err <= tol)) {
            std::ostringstream s;
            s << what << " rel_err=" << err << " > " << tol;
            failures.push_back(s.str());
        }
    }
    void report(const std::string& what, const IdentityReport& r, double tol) {
        if (r.error != ErrorCode::Ok) {
            ++cases;
            failures.push_back(what + " error: " + r.message);
            return;
        }
        rel_le(what, r.rel_err, tol);
    }
    void truth(const std::string& what, bool ok) {
        ++cases;
        if (!ok) failures.push_back(what);
    }
    template <class F> void guard(const std::string& what, F f) {
        try {
            f();
        } catch (const Error& e) {
            ++cases;
            failures.push_back(what + " threw: " + e.what());
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit; // seconds, 0 for none
    std::function<void(Check&)> run;
};

// 1F2(1; b1, b2; z) by term recursion, long double
long double f12(long double b1, long double b2, long double z) {
    long double t = 1, s = 1;
    for (int k = 0; k < 2000; ++k) {
        t *= z / ((b1 + k) * (b2 + k));
        s += t;
        if (std::fabs(t) < 1e-21L * std::fabs(s)) break;
    }
    return s;
}

// two-term N = 1 closed form of the reduced G-function, long double
double g_closed_n1(double a_, double z_) {
    long double a = a_, z = z_;
    long double pre = std::pow(PIL, -0.5L) * std::pow(2.0L, 1 - a) * std::tgamma(a) * std::cos(PIL * a / 2);
    long double v = pre * std::pow(z, 1 - a / 2) * f12((1 - a) / 2, 1 - a / 2, z) -
                    z * std::sqrt(PIL) * std::cosh(2 * std::sqrt(z)) / std::sin(PIL * a / 2);
    return double(v);
}

std::string tag(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream s;
    bool first = true;
    for (auto& [k, v] : kv) {
        s << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return s.str();
}

void partitions(Check& c) {
    char* out = nullptr;
    if (lxf_partitions_csv(3, 26, &out) != LXF_OK) {
        c.truth(std::string("lxf_partitions_csv: ") + lxf_last_error(), false);
        return;
    }
    std::istringstream in(out);
    lxf_string_free(out);
    std::string line;
    std::getline(in, line); // header
    long n = 0;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        long k = std::stol(line.substr(0, comma));
        std::string v = line.substr(comma + 1);
        const char* want = k == 0 ? "1" : k <= 7 ? "1" : k <= 15 ? "33" : k <= 23 ? "561" : "6545";
        c.truth("P_3(" + std::to_string(k) + ") = " + v + ", expected " + want, k == n && v == want);
        ++n;
    }
    c.truth("27 rows", n == 27);
}

void main_grid(Check& c) {
    for (int N : {1, 2, 3})
        for (cdd a : {re(0.3), re(0.7), re(1.5), cx(0.5, 0.5)})
            for (double y : {0.5, 1.0, 2.0}) {
                std::string w = tag({{"N", N}, {"Re a", to_double(a.re)}, {"Im a", to_double(a.im)}, {"y", y}});
                c.guard(w, [&] { c.report(w, thm_main_transform(N, a, re(y), ext()), 1e-8); });
            }
}

void continuation(Check& c) {
    struct P {
        int N;
        double a, y;
        int m;
    } ps[] = {{1, -2.5, 1, 1}, {1, -4.2, 1, 1}, {3, -4, 1.5, 1}, {2, -3.1, 1, 1}};
    for (auto p : ps) {
        std::string w = tag({{"N", p.N}, {"a", p.a}, {"y", p.y}, {"m", p.m}});
        c.guard(w, [&] { c.report(w, thm_analytic_continuation(p.N, re(p.a), re(p.y), p.m, ext()), 1e-7); });
    }
}

void ramanujan(Check& c) {
    int nm[][2] = {{1, 1}, {1, -1}, {3, 1}, {3, -1}, {5, 1}};
    for (auto& p : nm) {
        std::string w = tag({{"N", p[0]}, {"m", p[1]}});
        c.guard(w, [&] {
            // alpha = 1 gives beta = pi^((N+1)/N)
            auto pr = RamanujanPair::from_alpha(p[0], re(1.0));
            c.report(w, thm_ramanujan_gen(p[0], p[1], pr, ext()), 1e-8);
        });
    }
    // alpha = beta = pi, N = m = 1: both sides equal (zeta(3)/2 + L)/pi, L the Lambert sum
    c.guard("zeta(3)", [&] {
        long double lam = 0;
        for (int n = 1; n < 40; ++n) lam += 1 / (std::pow((long double)n, 3) * std::expm1(2 * PIL * n));
        const long double zeta3 = 1.2020569031595942853997381615114L;
        auto r = thm_ramanujan_gen(1, 1, RamanujanPair::from_alpha(1, cdd(ddc::pi)), ext());
        c.rel_le("zeta(3) from lhs", std::fabs(double(2 * PIL * to_double(r.lhs.re) - 2 * lam - zeta3)), 1e-10);
        c.rel_le("zeta(3) from rhs", std::fabs(double(2 * PIL * to_double(r.rhs.re) - 2 * lam - zeta3)), 1e-10);
        c.rel_le("zeta(3) = 7 pi^3/180 - 2 L", std::fabs(double(7 * PIL * PIL * PIL / 180 - 2 * lam - zeta3)), 1e-10);
    });
}

void eta(Check& c) {
    for (int N : {1, 2, 3, 4})
        for (double y : {1.0, 2 * PI, 5.0}) {
            std::string w = "eta " + tag({{"N", N}, {"y", y}});
            c.guard(w, [&] { c.report(w, cor_eta_transform(N, re(y), ext()), 1e-9); });
        }
    for (int N : {1, 2, 3})
        for (double y : {1.0, 2.0}) {
            std::string w = "zagier " + tag({{"N", N}, {"y", y}});
            c.guard(w, [&] {
                // the right side carries the constant (2 pi)^((N-1)/2); agreement confirms it
                c.report(w, zagier_product_check(N, re(y), ext()), 1e-7);
            });
        }
}

void power_partition(Check& c) {
    int nm[][2] = {{1, 1}, {1, 2}, {3, 1}};
    for (auto& p : nm)
        for (double y : {0.8, 2.0}) {
            std::string w = tag({{"N", p[0]}, {"m", p[1]}, {"y", y}});
            c.guard(w, [&] { c.report(w, thm_power_partition(p[0], p[1], re(y), ext()), 1e-8); });
        }
}

void even_n(Check& c) {
    int nm[][2] = {{2, 0}, {2, 1}, {2, 2}, {4, 1}, {4, 2}};
    for (auto& p : nm) {
        auto pr = RamanujanPair::from_alpha(p[0], re(1.0));
        std::string w = tag({{"N", p[0]}, {"m", p[1]}});
        c.guard("wigert " + w, [&] { c.report("wigert " + w, cor_wigert_gen(p[0], p[1], pr, ext()), 1e-7); });
        c.guard("even-shift " + w, [&] { c.report("even-shift " + w, eq_even_shift(p[0], p[1], pr, ext()), 1e-7); });
    }
}

void herglotz(Check& c) {
    int nm[][2] = {{1, 1}, {1, 2}, {3, 1}};
    for (auto& p : nm) {
        std::string w = tag({{"N", p[0]}, {"m", p[1]}});
        c.guard(w, [&] {
            auto r = cor_herglotz(p[0], p[1], RamanujanPair::from_alpha(p[0], re(1.0)), ext());
            c.report(w, r, 1e-6);
            for (const auto& n : r.notes)
                if (n.rfind("psi tail accelerated", 0) == 0) c.info.push_back(w + ": " + n);
        });
    }
}

void mittag_leffler(Check& c) {
    for (int N : {1, 2, 3})
        for (cdd z : {re(1.0), re(1.5), cx(2.0, 0.5)}) {
            std::string w = tag({{"N", N}, {"Re z", to_double(z.re)}, {"Im z", to_double(z.im)}});
            c.guard(w, [&] { c.report(w, prop_mittag_leffler(N, z, ext()), 1e-9); });
        }
}

void meijer(Check& c) {
    TruncationPolicy pol = TruncationPolicy::for_tier(Tier::Double);
    for (int N : {1, 2, 3})
        for (double a : {0.3, 0.7, 1.2})
            for (double z : {0.5, 2.0, 10.0}) {
                std::string w = tag({{"N", N}, {"a", a}, {"z", z}});
                c.guard(w, [&] {
                    cd g = meijer_g_reduced<double>(cd(a), N, cd(z), pol);
                    c.rel_le("oracle " + w, rel(g, mellin_barnes_oracle(cd(a), N, cd(z))), 1e-5);
                    if (N == 1) c.rel_le("closed form " + w, rel(g, cd(g_closed_n1(a, z))), 1e-10);
                });
            }
}

void asymptotic_order(Check& c) {
    TruncationPolicy pol = TruncationPolicy::for_tier(Tier::Extended);
    struct P {
        int N, m, r;
    } ps[] = {{1, 1, 1}, {1, 1, 2}, {3, 1, 1}};
    for (auto p : ps) {
        std::string w = "sigma " + tag({{"N", p.N}, {"m", p.m}, {"r", p.r}});
        c.guard(w, [&] {
            auto e = sigma_series_asymptotic(p.N, p.m, p.r);
            auto err = [&](double y) {
                auto ex = lambert_divisor<dd>(re(2.0 * p.N * p.m - 1 + p.N), p.N, re(y), pol);
                return absd(ex.value - e.eval(re(y)));
            };
            double target = std::ldexp(1.0, 2 * p.r + 3);
            double ratio = err(0.2) / err(0.1);
            std::ostringstream s;
            s << w << " halving ratio " << ratio << ", target " << target;
            c.info.push_back(s.str());
            c.truth(s.str() + " (outside [target/2, 2 target])", ratio >= target / 2 && ratio <= target * 2);
        });
    }
    cdd mu(dd(0.5)), nu(dd(0.1)), wv{};
    for (int N : {1, 2})
        for (int m : {0, 1, 2}) {
            std::string w = "mu_k_nu " + tag({{"N", N}, {"m", m}});
            c.guard(w, [&] {
                double z = N == 1 ? 200.0 : 3000.0;
                auto err = [&](double zz) {
                    cdd Z = re(zz);
                    return absd(mu_k_nu(mu, nu, wv, N, Z, pol) - mu_k_nu_asymptotic(mu, nu, wv, N, Z, m));
                };
                double ratio = err(z) / err(2 * z);
                double expect = std::pow(2.0, 2 * m + 2 + 1.0 / N + 2 * 0.5 + 0.1);
                std::ostringstream s;
                s << w << " doubling ratio " << ratio << ", expected " << expect;
                c.truth(s.str(), ratio >= expect / 2 && ratio <= expect * 2);
            });
        }
}

void wright(Check& c) {
    c.guard("wright", [&] {
        cdd w1 = wright_constant_n1(1), w2 = wright_constant_n1(2);
        c.rel_le("panel doubling change", absd(w1 - w2), 1e-10);
        auto e = c_estimate(1);
        c.rel_le("c_estimate(1) vs wright", absd(e.value - w2), 1e-3);
        std::ostringstream s;
        s.precision(17);
        s << "wright=" << to_double(w2.re) << " c_estimate(1)=" << to_double(e.value.re);
        c.info.push_back(s.str());
    });
}

void properties(Check& c) {
    // Gamma reflection
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            cd z(-9.55 + 1.9 * i + 0.013 * j, -3.0 + 0.6 * j);
            if (absd(z) > 10.0) z = z * 0.5;
            cd v = gamma(z) * gamma(cd(1.0) - z) * sin(z * PI) / PI;
            c.rel_le("reflection", rel(v, cd(1.0)), 1e-12);
        }
    // duplication and multiplication
    for (cd z : {cd(0.3), cd(2.25), cd(-1.7, 0.4), cd(3.0, -2.0), cd(7.1, 5.5)}) {
        cd l = gamma(z) * gamma(z + cd(0.5));
        cd r = cpow(cd(2.0), cd(1.0) - z * 2.0) * std::sqrt(PI) * gamma(z * 2.0);
        c.rel_le("duplication", rel(l, r), 1e-12);
        for (int m : {2, 3, 5}) {
            cd p(1.0);
            for (int k = 1; k <= m; ++k) p = p * gamma(z + cd(double(k - 1) / m));
            cd q = cd(std::pow(2.0 * PI, 0.5 * (m - 1))) * cpow(cd(double(m)), cd(0.5) - z * double(m)) * gamma(z * double(m));
            c.rel_le("multiplication", rel(p, q), 1e-12);
        }
    }
    // zeta functional equation
    for (cd s : {cd(2.0), cd(3.5), cd(4.0, 2.0), cd(0.3, 7.0), cd(-2.5, 1.0)}) {
        cd l = zeta(cd(1.0) - s);
        cd r = cpow(cd(2.0), cd(1.0) - s) * cpow(cd(PI), -s) * gamma(s) * zeta(s) * cos(s * (PI / 2));
        c.rel_le("functional equation", rel(l, r), 1e-11);
    }
    // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!), exact rationals in dd
    for (int m = 1; m <= 8; ++m) {
        dd fact = dd(1.0);
        for (int k = 2; k <= 2 * m; ++k) fact = fact * dd(double(k));
        dd e = rational_to<dd>(bernoulli(2 * m)) * exp(log(ddc::two_pi) * double(2 * m)) / (fact * dd(2.0));
        if (m % 2 == 0) e = -e;
        c.rel_le("zeta(" + std::to_string(2 * m) + ")", to_double(abs(zeta(re(2.0 * m)).re / e - dd(1.0))), 1e-28);
    }
    // sigma / S multiplicativity
    for (int N : {1, 2, 3}) {
        cd a(0.7, -0.3);
        for (long m = 1; m <= 50; ++m)
            for (long n = m; n <= 50; ++n) {
                if (std::gcd(m, n) != 1) continue;
                c.rel_le("sigma multiplicative", rel(sigma(a, N, m * n), sigma(a, N, m) * sigma(a, N, n)), 1e-13);
                c.rel_le("S multiplicative", rel(s_weight(a, N, m * n), s_weight(a, N, m) * s_weight(a, N, n)), 1e-13);
            }
    }
    // Lambert form equivalence
    TruncationPolicy pol;
    for (double k : {0.0, 1.0, 2.5})
        for (int N : {1, 2, 3})
            for (cd y : {cd(0.3), cd(1.0), cd(2.0, 1.5)}) {
                auto d = lambert_direct(cd(k), N, y, pol);
                auto v = lambert_divisor(cd(k), N, y, pol);
                c.rel_le("lambert forms", rel(d.value, v.value), 1e-12);
            }
    // Dirichlet series of S against zeta(s) zeta(N s - a)
    struct D {
        cd a;
        int N;
        cd s;
        double tol;
    } ds[] = {{cd(1.0), 1, cd(4.0), 1e-8}, {cd(0.0), 2, cd(2.0), 1e-5}, {cd(0.5, 0.5), 3, cd(2.0, 1.0), 1e-6}};
    for (auto d : ds) {
        c.guard("dirichlet", [&] { c.report("dirichlet", s_dirichlet(d.a, d.N, d.s, pol), d.tol); });
    }
}

} // namespace

int main(int argc, char** argv) {
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    // unattainable as stated; documented in the README
    const std::set<int> documented = {11};

    std::vector<Criterion> cs = {
        {1, "partition fixture P_3(0..26)", 1.0, partitions},
        {2, "main transform grid, rel <= 1e-8", 60.0, main_grid},
        {3, "analytic continuation, rel <= 1e-7", 0.0, continuation},
        {4, "generalized Ramanujan, rel <= 1e-8; zeta(3) to 1e-10", 0.0, ramanujan},
        {5, "eta transform rel <= 1e-9; Zagier product rel <= 1e-7", 0.0, eta},
        {6, "power-partition transform, rel <= 1e-8", 0.0, power_partition},
        {7, "even-N Wigert and shift identities, rel <= 1e-7", 0.0, even_n},
        {8, "Herglotz identity, rel <= 1e-6", 0.0, herglotz},
        {9, "Mittag-Leffler derivative identity, rel <= 1e-9", 0.0, mittag_leffler},
        {10, "Meijer reduction vs Mellin-Barnes 1e-5; N=1 closed form 1e-10", 0.0, meijer},
        {11, "asymptotic remainder orders", 0.0, asymptotic_order},
        {12, "Wright constant stability 1e-10; c_estimate(1) within 1e-3", 0.0, wright},
        {13, "property suites", 30.0, properties},
    };

    int failed = 0, undocumented = 0;
    for (auto& cr : cs) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        cr.run(c);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.time_limit > 0 && secs >= cr.time_limit) {
            std::ostringstream s;
            s << "runtime " << secs << " s >= " << cr.time_limit << " s";
            c.failures.push_back(s.str());
        }
        bool pass = c.failures.empty();
        std::printf("criterion %2d %s  %s  (%d cases, worst rel %.2e, %.2f s)\n", cr.id, pass ? "PASS" : "FAIL",
                    cr.name.c_str(), c.cases, c.worst, secs);
        for (const auto& s : c.info) std::printf("    %s\n", s.c_str());
        for (const auto& s : c.failures) std::printf("    failed: %s\n", s.c_str());
        if (!pass) {
            ++failed;
            if (documented.count(cr.id))
                std::printf("    documented as unattainable; see README\n");
            else
                ++undocumented;
        }
    }
    std::printf("%zu criteria, %d passed, %d failed (%d undocumented)\n", cs.size(), int(cs.size()) - failed, failed,
                undocumented);
    std::fflush(stdout);
    return (strict ? failed : undocumented) ? 1 : 0;
}
