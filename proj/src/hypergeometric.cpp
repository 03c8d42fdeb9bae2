#include "hypergeometric.hpp"

#include "special.hpp"

namespace lxf {

template <class T> Cx<T> pochhammer(const Cx<T>& a, int n) {
    if (n < 0) throw Error(ErrorCode::Domain, "pochhammer: n must be >= 0");
    Cx<T> p(T(1.0));
    for (int k = 0; k < n; ++k) p = p * (a + Cx<T>(T(double(k))));
    return p;
}

template <class T>
SeriesResult<T> hyper_1fq(const Cx<T>& a, const std::vector<Cx<T>>& bs, const Cx<T>& z, const TruncationPolicy& pol) {
    pol.validate();
    if (bs.empty()) throw Error(ErrorCode::Domain, "hyper_1fq: needs q >= 1");
    for (const auto& b : bs)
        if (near_nonpositive_integer(b, 1e-9)) throw Error(ErrorCode::Pole, "hyper_1fq: denominator parameter at a pole");
    SeriesResult<T> r;
    Cx<T> t(T(1.0)), s(T(1.0));
    int run = 0;
    long n = 0;
    double last = 1.0;
    for (; n + 1 < pol.max_terms; ++n) {
        T nn = T(double(n));
        Cx<T> num = (a + Cx<T>(nn)) * z;
        Cx<T> den(T(double(n + 1)));
        for (const auto& b : bs) den = den * (b + Cx<T>(nn));
        Cx<T> ratio = num / den;
        t = t * ratio;
        s += t;
        last = absd(t);
        if (last == 0.0) {
            r.converged = true; // terminating series
            ++n;
            break;
        }
        if (absd(ratio) < 1.0 && last <= pol.rel_tol * absd(s) + pol.abs_tol) {
            if (++run >= pol.small_run) {
                r.converged = true;
                ++n;
                break;
            }
        } else {
            run = 0;
        }
    }
    r.value = s;
    r.terms_used = n + 1;
    r.tail_bound = last;
    return r;
}

template <class T> Cx<T> prudnikov_closed_form(int m, int q, const Cx<T>& z) {
    if (m < 0 || q < 1) throw Error(ErrorCode::Domain, "prudnikov_closed_form: needs m >= 0, q >= 1");
    if (absd(z) == 0.0) throw Error(ErrorCode::Domain, "prudnikov_closed_form: z = 0");
    const T pi = pi_v<T>();
    Cx<T> r = cpow(z, Cx<T>(T(1.0) / T(double(q))));
    Cx<T> zmq = cpow(r, m); // z^(m/q), principal
    Cx<T> s{};
    for (int k = 0; k < q; ++k) {
        Cx<T> th = expi(T(2.0 * k) * pi / T(double(q)));
        s += exp(th * r * T(double(q))) / cpow(th, m);
    }
    T qm1(1.0);
    for (int i = 0; i <= m; ++i) qm1 = qm1 * T(double(q));
    Cx<T> poly{};
    for (int k = 1; k <= m / q; ++k) {
        T fct(1.0);
        for (int i = 2; i <= m - q * k; ++i) fct = fct * T(double(i));
        T qq(1.0);
        for (int i = 0; i < q * k; ++i) qq = qq * T(double(q));
        poly += cpow(r, m - q * k) / (qq * fct); // z^(m/q - k)
    }
    T mf(1.0);
    for (int i = 2; i <= m; ++i) mf = mf * T(double(i));
    return (s - poly * qm1) * mf / (zmq * qm1);
}

#define LXF_INST(T)                                                                                                    \
    template Cx<T> pochhammer<T>(const Cx<T>&, int);                                                                   \
    template SeriesResult<T> hyper_1fq<T>(const Cx<T>&, const std::vector<Cx<T>>&, const Cx<T>&,                       \
                                          const TruncationPolicy&);                                                    \
    template Cx<T> prudnikov_closed_form<T>(int, int, const Cx<T>&);

LXF_INST(double)
LXF_INST(dd)

} // namespace lxf
