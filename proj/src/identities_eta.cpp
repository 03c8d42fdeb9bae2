#include "identities_detail.hpp"

namespace lxf {

using namespace idd;

namespace {

template <class T> IdentityReport eta_transform(int N, const cdd& yv, const TruncationPolicy& pol) {
    IdentityReport r = start("eta-transform", pol, 1e-9);
    r.param("N", N);
    r.param("y", cd(yv));
    using std::exp;
    using std::log;
    using std::sin;
    const T pi = pi_v<T>(), two_pi = real_traits<T>::two_pi();
    Cx<T> y = cv<T>(yv);
    T nN = T(double(N)), inv = T(1.0) / nN;
    auto lam = lambert_divisor<T>(cr<T>(double(N)), N, y, pol);
    track(r, lam, true, "lambert series");
    Cx<T> lhs = lam.value + zeta(cr<T>(-double(N))) * T(0.5);

    // (2 pi / y)^(1 + 1/N)
    Cx<T> q = Cx<T>(two_pi) / y;
    Cx<T> qp = exp(log(q) * (T(1.0) + inv));
    Cx<T> qr = exp(log(q) * inv);
    Cx<T> rhs = -(cr<T>(0.5) / y) - qp * zeta(Cx<T>(-inv)) / (T(2.0) * nN * sin(pi / (T(2.0) * nN)));
    int b = N % 2 == 0 ? 1 : 0;
    Cx<T> rot{};
    for (int j = -(N - 1 + b) / 2; j <= (N - 1 - b) / 2; ++j) {
        Cx<T> e = expi(pi * T(double(2 * j + b)) / (T(2.0) * nN));
        Cx<T> ce = e * qr * two_pi;
        auto s = stretched_sum<T>(
            [&](long n) {
                T root = exp(log(T(double(n))) * inv);
                return e * root / (exp(ce * root) - cr<T>(1.0));
            },
            to_double(ce.re), 1.0 / N, N, pol);
        track(r, s, false, "rotated lambert series");
        rot += s.value;
    }
    rhs -= qp * rot / nN;
    set_sides(r, lhs, rhs);
    return r;
}

template <class T> IdentityReport zagier(int N, const cdd& yv, const TruncationPolicy& pol) {
    IdentityReport r = start("zagier-product", pol, 1e-7);
    r.param("N", N);
    r.param("y", cd(yv));
    using std::exp;
    using std::log;
    const T pi = pi_v<T>(), two_pi = real_traits<T>::two_pi();
    Cx<T> y = cv<T>(yv);
    T inv = T(1.0) / T(double(N));

    // log eta_N(i/y) = pi zeta(-N)/y - sum sigma_N^(N)(n) e^(-2 pi n/y)/n
    Cx<T> u = Cx<T>(two_pi) / y;
    double ur = to_double(u.re);
    if (!(ur > 0.0)) throw Error(ErrorCode::Domain, "zagier_product_check: needs Re(y) > 0");
    long M = static_cast<long>(std::ceil((-std::log(pol.rel_tol) + 10.0) / ur)) + 1;
    if (M > pol.max_terms) throw Error(ErrorCode::NonConverged, "zagier_product_check: sigma sum exceeds max_terms");
    auto sg = sigma_table<T>(cr<T>(double(N)), N, M);
    Cx<T> ls{};
    for (long n = M; n >= 1; --n) ls += sg[n] * exp(-(u * T(double(n)))) / T(double(n));
    r.lhs_terms = M;
    Cx<T> lhs = zeta(cr<T>(-double(N))) * pi / y - ls;

    // roots of w^(2N) = -y^2 in the upper half plane: N of them
    Cx<T> rhs = Cx<T>(log(two_pi) * T(0.5 * (N - 1))) + log(y) * T(0.5);
    T ry = exp(log(abs(y)) * inv), ay = arg(y);
    Cx<T> z1 = zeta(Cx<T>(-inv));
    Cx<T> I(T(0.0), T(1.0));
    int roots = 0;
    for (int sgn = -1; sgn <= 1; sgn += 2) {
        for (int k = 0; k < N; ++k) {
            T th = (ay + pi * T(0.5 * sgn) + two_pi * T(double(k))) * inv;
            Cx<T> w = polar(ry, th);
            if (!(to_double(w.im) > 1e-12)) continue;
            ++roots;
            Cx<T> tw = I * w * two_pi;
            auto s = stretched_sum<T>(
                [&](long n) {
                    Cx<T> qn = exp(tw * exp(log(T(double(n))) * inv));
                    return log(cr<T>(1.0) - qn);
                },
                to_double(-tw.re), 0.0, N, pol);
            track(r, s, false, "log-eta series");
            rhs += s.value - I * pi * z1 * w;
        }
    }
    r.notes.push_back("roots in H: " + std::to_string(roots));
    set_sides(r, lhs, rhs);
    return r;
}

} // namespace

IdentityReport cor_eta_transform(int N, const cdd& y, const TruncationPolicy& pol) {
    if (N < 1) throw Error(ErrorCode::Domain, "cor_eta_transform: N must be >= 1");
    if (!(to_double(y.re) > 0.0)) throw Error(ErrorCode::Domain, "cor_eta_transform: needs Re(y) > 0");
    return pol.tier == Tier::Extended ? eta_transform<dd>(N, y, pol) : eta_transform<double>(N, y, pol);
}

IdentityReport zagier_product_check(int N, const cdd& y, const TruncationPolicy& pol) {
    if (N < 1) throw Error(ErrorCode::Domain, "zagier_product_check: N must be >= 1");
    if (!(to_double(y.re) > 0.0)) throw Error(ErrorCode::Domain, "zagier_product_check: needs Re(y) > 0");
    return pol.tier == Tier::Extended ? zagier<dd>(N, y, pol) : zagier<double>(N, y, pol);
}

} // namespace lxf
