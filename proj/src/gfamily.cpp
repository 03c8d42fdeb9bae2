#include "gfamily.hpp"

#include <algorithm>

#include "special.hpp"

namespace lxf {

double gfamily_kappa(int N) { return 2.0 * N * std::sin(M_PI / (2.0 * N)); }

GFamily::GFamily(const cdd& a, int N, double lnC_max, double arg_max)
    : a_(a), N_(N), lnC_max_(std::max(std::fabs(lnC_max), 1.0)), arg_max_(std::fabs(arg_max)) {
    if (N < 1) throw Error(ErrorCode::Domain, "GFamily: N must be >= 1");
    if (!(arg_max_ < 3.0)) throw Error(ErrorCode::Domain, "GFamily: |arg X| too close to pi");
    cdd one(dd(1.0));
    b1_ = cdd(dd(0.5)) + (one - a) / dd(double(2 * N));
    lnN2N_ = log(dd(double(N))) * double(2 * N);
    double rb = to_double(b1_.re);
    double lo = rb - 1.0, hi = std::min(1.0 / N, rb);
    // Re a <= -N-1 leaves no straight main line; only shifted lines are usable then
    has_main_ = hi - lo > 1e-6;
    if (has_main_) main_ = build_line(dd(0.5 * (lo + hi)), 0.5 * (hi - lo));
}

cdd GFamily::integrand(const cdd& w) const {
    const dd pi = ddc::pi;
    dd n = dd(double(N_));
    cdd one(dd(1.0));
    cdd nw = w * n;
    cdd g = gamma(one - nw) * rgamma(nw - cdd(dd(0.5)));
    cdd cs = cos((w + (a_ - one) / dd(double(2 * N_))) * pi);
    return g / cs * (pi / (n * sqrt(n)));
}

GFamily::Line GFamily::build_line(const dd& c, double hw) const {
    Line L;
    L.c = c;
    double d = 0.8 * hw;
    const double lneps = 80.0;
    L.h = dd(2.0 * M_PI * d / (lneps + (d + hw) * lnC_max_));
    // outward until the integrand (with the worst-case arg growth) is negligible
    double thr = std::exp(-lneps - hw * lnC_max_);
    std::vector<cdd> pos{integrand(cdd(c))}, neg;
    double peak = absd(pos[0]);
    const long cap = 400000;
    for (long j = 1; j < cap; ++j) {
        dd t = L.h * double(j);
        cdd fp = integrand(cdd(c, t));
        cdd fn = integrand(cdd(c, -t));
        pos.push_back(fp);
        neg.push_back(fn);
        double grow = std::exp(to_double(t) * arg_max_);
        double mp = absd(fp) * grow, mn = absd(fn) * grow;
        peak = std::max({peak, absd(fp), absd(fn)});
        if (mp < thr * peak && mn < thr * peak && to_double(t) > 2.0) break;
        if (j == cap - 1) throw Error(ErrorCode::QuadratureFail, "GFamily: integrand does not decay");
    }
    L.J = static_cast<long>(neg.size());
    L.f.reserve(2 * L.J + 1);
    for (long j = L.J - 1; j >= 0; --j) L.f.push_back(neg[j]);
    for (auto& v : pos) L.f.push_back(v);
    return L;
}

cdd GFamily::eval_line(const Line& L, const cdd& X) const {
    if (absd(X) == 0.0) throw Error(ErrorCode::Domain, "GFamily: X = 0");
    cdd lnC = log(X) + cdd(lnN2N_);
    if (std::fabs(to_double(lnC.im)) > arg_max_ + 1e-12 || std::fabs(to_double(lnC.re)) > lnC_max_ + 1e-9)
        throw Error(ErrorCode::Domain, "GFamily: X outside the configured range");
    cdd I(dd(0.0), dd(1.0));
    dd t0 = -(L.h * double(L.J));
    cdd r = exp((cdd(L.c) + I * t0) * lnC);
    cdd step = exp(I * L.h * lnC);
    cdd s{};
    for (const cdd& f : L.f) {
        s += f * r;
        r = r * step;
    }
    return s * (L.h / ddc::two_pi);
}

cdd GFamily::eval(const cdd& X) const {
    if (!has_main_) throw Error(ErrorCode::Domain, "GFamily: empty fundamental strip (Re a <= -N-1)");
    return eval_line(main_, X);
}

cdd GFamily::eval_shifted(int m, const cdd& X) const {
    if (m < 0) return eval(X);
    const Line* L;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = shifted_.find(m);
        if (it == shifted_.end()) {
            double c = to_double(b1_.re) - 1.5 - m;
            double hw = std::min(0.5, 1.0 / N_ - c);
            if (!(hw > 0.0)) throw Error(ErrorCode::Domain, "GFamily: shifted line crosses the right poles");
            it = shifted_.emplace(m, std::make_unique<Line>(build_line(dd(c), hw))).first;
        }
        L = it->second.get();
    }
    return eval_line(*L, X);
}

cdd GFamily::pole(int k) const { return b1_ - cdd(dd(1.0 + k)); }

cdd GFamily::residue_coeff(int k) const {
    // Gamma(p)/Gamma(-N/2-Nk-a/2) with p = 1/2+N/2+Nk+a/2, reflected and duplicated:
    // -(-1)^(k(N+1)) sin(pi(N+a)/2) 2^(1-2p) Gamma(2p) / sqrt(pi)
    cdd two_p = a_ + cdd(dd(1.0 + N_ + 2.0 * N_ * k));
    dd n = dd(double(N_));
    cdd s = sin((a_ + cdd(n)) * (ddc::pi * 0.5));
    if (absd(s) == 0.0) return {};
    cdd lg = log_gamma(two_p) + (cdd(dd(1.0)) - two_p) * ddc::ln2;
    double sg = ((long(k) * (N_ + 1)) % 2 == 0) ? -1.0 : 1.0;
    return exp(lg) * s * (dd(sg) / (sqrt(ddc::pi) * n * sqrt(n)));
}

cdd GFamily::residue_term(int k, const cdd& X) const {
    cdd two_p = a_ + cdd(dd(1.0 + N_ + 2.0 * N_ * k));
    dd n = dd(double(N_));
    cdd s = sin((a_ + cdd(n)) * (ddc::pi * 0.5));
    if (absd(s) == 0.0) return {};
    cdd lnC = log(X) + cdd(lnN2N_);
    cdd lg = log_gamma(two_p) + (cdd(dd(1.0)) - two_p) * ddc::ln2 + pole(k) * lnC;
    double sg = ((long(k) * (N_ + 1)) % 2 == 0) ? -1.0 : 1.0;
    return exp(lg) * s * (dd(sg) / (sqrt(ddc::pi) * n * sqrt(n)));
}

double GFamily::asymptotic_threshold(double L) const { return L / gfamily_kappa(N_); }

long GFamily::nodes() const {
    long n = static_cast<long>(main_.f.size());
    std::lock_guard<std::mutex> lk(mu_);
    for (const auto& [m, l] : shifted_) n += static_cast<long>(l->f.size());
    return n;
}

} // namespace lxf
