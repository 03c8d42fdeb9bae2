#include "asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace lxf {

namespace {

cdd re(double v) { return cdd(dd(v)); }

void check_odd(int N, const char* who) {
    if (N < 1 || N % 2 == 0) throw Error(ErrorCode::Domain, std::string(who) + ": N must be odd");
}

nlohmann::ordered_json cjson(const cdd& z) { return {to_double(z.re), to_double(z.im)}; }

// B_2N/2N log y + zeta(3)/(N y^2) - sum_{j <= r+1} delta_j y^(2j), y = -log q > 0;
// the delta sum stops at its smallest term when that comes first
dd known_terms(int N, dd y, int r_max, int* r_used) {
    dd s = bernoulli_v<dd>(2 * N) / dd(2.0 * N) * log(y) + zeta(re(3.0)).re / (dd(double(N)) * y * y);
    double prev = INFINITY;
    int used = -1;
    for (int j = 1; j <= r_max + 1; ++j) {
        dd t = delta_j(N, j).re * exp(log(y) * double(2 * j));
        if (to_double(abs(t)) > prev) break;
        prev = to_double(abs(t));
        s -= t;
        used = j - 1;
    }
    if (r_used) *r_used = used;
    return s;
}

} // namespace

cdd AsymptoticExpansion::eval_leading(const cdd& y) const {
    cdd s{};
    for (const auto& [p, c] : leading) s += c * cpow(y, p);
    return s;
}

cdd AsymptoticExpansion::eval(const cdd& y) const {
    cdd s = eval_leading(y);
    for (size_t j = 0; j < coefficients.size(); ++j) s += coefficients[j] * cpow(y, int(2 * j + 1));
    return s;
}

std::vector<double> AsymptoticExpansion::term_sizes(double y) const {
    std::vector<double> t;
    for (size_t j = 0; j < coefficients.size(); ++j) t.push_back(absd(coefficients[j]) * std::pow(y, 2.0 * j + 1));
    return t;
}

int AsymptoticExpansion::smallest_term(double y) const {
    auto t = term_sizes(y);
    return t.empty() ? 0 : int(std::min_element(t.begin(), t.end()) - t.begin());
}

std::string AsymptoticExpansion::to_json() const {
    nlohmann::ordered_json j;
    j["N"] = N;
    j["m"] = m;
    j["r"] = r;
    nlohmann::ordered_json lead = nlohmann::ordered_json::array();
    for (const auto& [p, c] : leading) lead.push_back({{"power", p}, {"coeff", cjson(c)}});
    j["leading"] = lead;
    nlohmann::ordered_json co = nlohmann::ordered_json::array();
    for (const auto& c : coefficients) co.push_back(cjson(c));
    j["coefficients"] = co;
    return j.dump();
}

AsymptoticExpansion sigma_series_asymptotic(int N, int m, int r) {
    check_odd(N, "sigma_series_asymptotic");
    if (m < 1) throw Error(ErrorCode::Domain, "sigma_series_asymptotic: m must be >= 1");
    if (r < 0) throw Error(ErrorCode::Domain, "sigma_series_asymptotic: r must be >= 0");
    AsymptoticExpansion e;
    e.N = N;
    e.m = m;
    e.r = r;
    dd fm = exp(log_gamma(re(2.0 * m + 1)).re);
    e.leading.emplace_back(-2 * m - 1, zeta(re(2.0 * m + 1)) * fm / dd(double(N)));
    e.leading.emplace_back(-1, re(0.0) - cdd(bernoulli_v<dd>(2 * N * m) / dd(2.0 * N * m)));
    dd l2pi = log(ddc::two_pi);
    // -(-1)^m 4 (2pi)^(-2Nm) Gamma(2Nm+2Nj) zeta(2Nm+2Nj) zeta(2j) (2pi)^(-2j(N+1))
    dd sg = dd(m % 2 == 0 ? -4.0 : 4.0);
    for (int j = 1; j <= r + 1; ++j) {
        double k = 2.0 * N * m + 2.0 * N * j;
        dd lg = log_gamma(re(k)).re - l2pi * (2.0 * N * m + 2.0 * j * (N + 1));
        e.coefficients.push_back(zeta(re(k)) * zeta(re(2.0 * j)) * (exp(lg) * sg));
    }
    return e;
}

cdd delta_j(int N, int j) {
    check_odd(N, "delta_j");
    if (j < 1) throw Error(ErrorCode::Domain, "delta_j: j must be >= 1");
    double k = 2.0 * N + 2.0 * N * j;
    dd lg = log_gamma(re(k)).re - log(ddc::two_pi) * (2.0 * N + 2.0 * j * (N + 1)) - log(dd(double(j)));
    return zeta(re(k)) * zeta(re(2.0 * j)) * (exp(lg) * dd(2.0));
}

LogFn log_fn_exact(int N, double q) {
    check_odd(N, "log_fn_exact");
    if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::Domain, "log_fn_exact: q must lie in (0, 1)");
    dd y = -log(dd(q));
    LogFn r;
    dd s = dd(0.0);
    for (long n = 1;; ++n) {
        dd nn = dd(double(n));
        dd x = exp(-(y * exp(log(nn) * double(N))));
        dd t = -(exp(log(nn) * double(2 * N - 1)) * log(dd(1.0) - x));
        s += t;
        r.terms = n;
        // past the peak of n^(2N-1) q^(n^N) the tail is below a geometric bound
        double ratio = std::exp(-to_double(y) * N * std::pow(double(n), N - 1)) * std::pow(1.0 + 1.0 / n, 2 * N - 1);
        if (ratio < 1.0 && to_double(t) < 1e-34 * to_double(s) * (1.0 - ratio)) {
            r.tail_bound = to_double(t) * ratio / (1.0 - ratio);
            break;
        }
        if (n > 100000000) throw Error(ErrorCode::NonConverged, "log_fn_exact: q too close to 1");
    }
    r.value = s;
    return r;
}

FnAsymptotic fn_asymptotic(int N, double q, int r, const cdd& c) {
    check_odd(N, "fn_asymptotic");
    if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::Domain, "fn_asymptotic: q must lie in (0, 1)");
    if (r < 0) throw Error(ErrorCode::Domain, "fn_asymptotic: r must be >= 0");
    FnAsymptotic f;
    f.r = r;
    dd y = -log(dd(q));
    dd b = bernoulli_v<dd>(2 * N) / dd(2.0 * N);
    dd s = b * log(y) + zeta(re(3.0)).re / (dd(double(N)) * y * y);
    double prev = INFINITY;
    bool turned = false;
    for (int j = 1; j <= r + 1; ++j) {
        dd t = delta_j(N, j).re * exp(log(y) * double(2 * j));
        if (to_double(abs(t)) > prev) turned = true;
        prev = to_double(abs(t));
        s -= t;
    }
    if (turned) f.notes.push_back("delta terms grow before j = r+1; past the smallest term");
    f.log_value = c + cdd(s);
    f.phase = to_double(b) * M_PI;
    return f;
}

cdd wright_constant_n1(int refine) {
    if (refine < 0 || refine > 8) throw Error(ErrorCode::Domain, "wright_constant_n1: refine must be in [0, 8]");
    auto f = [](const dd& y) {
        return cdd(y * log(y) / (exp(y * ddc::two_pi) - dd(1.0)));
    };
    // geometric panels toward the log singularity, unit panels out to y = 14
    std::vector<dd> brk{dd(0.0)};
    for (int k = 60; k >= 1; --k) brk.push_back(dd(std::ldexp(1.0, -k)));
    for (int k = 1; k <= 14; ++k) brk.push_back(dd(double(k)));
    std::vector<dd> fine{brk[0]};
    int split = 1 << refine;
    for (size_t i = 0; i + 1 < brk.size(); ++i)
        for (int s = 1; s <= split; ++s) fine.push_back(brk[i] + (brk[i + 1] - brk[i]) * (double(s) / split));
    return gl_panels<dd>(f, fine, 20) * dd(2.0);
}

cdd wright_constant_n1() {
    cdd a = wright_constant_n1(0), b = wright_constant_n1(1);
    if (!(absd(a - b) < 1e-10)) throw Error(ErrorCode::QuadratureFail, "wright_constant_n1: panel doubling moved the result");
    return b;
}

std::string CEstimate::to_json() const {
    nlohmann::ordered_json j;
    j["value"] = cjson(value);
    j["spread"] = spread;
    j["r"] = r;
    nlohmann::ordered_json p = nlohmann::ordered_json::array();
    for (const auto& [q, v] : points) p.push_back({q, v});
    j["points"] = p;
    return j.dump();
}

CEstimate c_estimate(int N, double q_lo, double q_hi, int points) {
    check_odd(N, "c_estimate");
    if (!(0.0 < q_lo && q_lo < q_hi && q_hi < 1.0) || points < 2)
        throw Error(ErrorCode::Domain, "c_estimate: needs 0 < q_lo < q_hi < 1 and points >= 2");
    CEstimate e;
    dd sum = dd(0.0);
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < points; ++i) {
        double q = q_lo + (q_hi - q_lo) * i / (points - 1);
        dd y = -log(dd(q));
        int used = 0;
        dd v = log_fn_exact(N, q).value - known_terms(N, y, 8, &used);
        e.r = std::max(e.r, used);
        double vd = to_double(v);
        e.points.emplace_back(q, vd);
        sum += v;
        lo = std::min(lo, vd);
        hi = std::max(hi, vd);
    }
    e.value = cdd(sum / dd(double(points)));
    e.spread = hi - lo;
    if (!(e.spread <= 1e-2))
        throw Error(ErrorCode::UnstableFit, "c_estimate: pointwise constants spread by " + std::to_string(e.spread));
    return e;
}

} // namespace lxf
