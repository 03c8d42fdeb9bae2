#include "special.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace lxf {

template <> double bigint_to<double>(const BigInt& n) { return n.convert_to<double>(); }

template <> dd bigint_to<dd>(const BigInt& n) {
    double hi = n.convert_to<double>();
    if (!std::isfinite(hi)) return dd(hi);
    BigInt r = n - BigInt(hi);
    double lo = r.convert_to<double>();
    double s, e;
    ddi::quick_two_sum(hi, lo, s, e);
    return dd(s, e);
}

template <class T> T rational_to(const Rational& q) {
    return bigint_to<T>(boost::multiprecision::numerator(q)) / bigint_to<T>(boost::multiprecision::denominator(q));
}

namespace {

std::mutex bern_mu;
std::vector<Rational> bern_cache;
std::vector<double> bern_double;
std::vector<dd> bern_dd;

// Akiyama-Tanigawa; after step m, A[0] holds B_m with the B_1 = +1/2 convention.
void extend_bernoulli(int n) {
    if (static_cast<int>(bern_cache.size()) > n) return;
    int target = std::max({n, 64, 2 * static_cast<int>(bern_cache.size())});
    std::vector<Rational> A(target + 1), out(target + 1);
    for (int m = 0; m <= target; ++m) {
        A[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) A[j - 1] = j * (A[j - 1] - A[j]);
        out[m] = A[0];
    }
    out[1] = Rational(-1, 2);
    bern_cache = std::move(out);
    bern_double.clear();
    bern_dd.clear();
    for (const auto& q : bern_cache) {
        bern_double.push_back(rational_to<double>(q));
        bern_dd.push_back(rational_to<dd>(q));
    }
}

template <class T> struct gamma_cfg;
template <> struct gamma_cfg<double> {
    static constexpr double R = 10.0;
    static constexpr int K = 10;
    static constexpr int zk = 12;
};
template <> struct gamma_cfg<dd> {
    static constexpr double R = 24.0;
    static constexpr int K = 22;
    static constexpr int zk = 24;
};

template <class T> T factorial_v(int n) {
    T f(1.0);
    for (int i = 2; i <= n; ++i) f = f * T(double(i));
    return f;
}

// Number of unit shifts that bring |z + k| above R.
template <class T> long shift_count(const Cx<T>& z, double R) {
    double re = to_double(z.re), im = to_double(z.im);
    double need = R * R - im * im;
    if (need <= 0.0) return 0;
    double tgt = std::sqrt(need);
    return re < tgt ? static_cast<long>(std::ceil(tgt - re)) : 0;
}

// log Gamma for Re z > 0, principal branch, continuous there.
template <class T> Cx<T> lgamma_pos(const Cx<T>& z) {
    using std::log;
    const double R = gamma_cfg<T>::R;
    long K = shift_count(z, R);
    Cx<T> w = z + Cx<T>(T(double(K)));
    Cx<T> lw = log(w);
    Cx<T> res = (w - Cx<T>(T(0.5))) * lw - w + Cx<T>(real_traits<T>::ln_sqrt_2pi());
    Cx<T> winv = Cx<T>(T(1.0)) / w;
    Cx<T> w2inv = winv * winv;
    Cx<T> p = winv;
    for (int k = 1; k <= gamma_cfg<T>::K; ++k) {
        T c = bernoulli_v<T>(2 * k) / T(double((2 * k) * (2 * k - 1)));
        res += p * c;
        p = p * w2inv;
    }
    if (K > 0) {
        Cx<T> P(T(1.0));
        double argsum = 0.0;
        double re = to_double(z.re), im = to_double(z.im);
        for (long k = 0; k < K; ++k) {
            P = P * (z + Cx<T>(T(double(k))));
            argsum += std::atan2(im, re + double(k));
        }
        Cx<T> lp = log(P);
        double turns = std::nearbyint((argsum - to_double(lp.im)) / 6.283185307179586);
        lp.im = lp.im + real_traits<T>::two_pi() * turns;
        res -= lp;
    }
    return res;
}

template <class T> Cx<T> cot_pi(const Cx<T>& z) {
    const T pi = pi_v<T>();
    Cx<T> iw(-(z.im * pi), z.re * pi); // i*pi*z
    Cx<T> I(T(0.0), T(1.0));
    if (z.im >= T(0.0)) {
        Cx<T> q = exp(iw * T(2.0));
        return I * (q + Cx<T>(T(1.0))) / (q - Cx<T>(T(1.0)));
    }
    Cx<T> q = exp(-(iw * T(2.0)));
    return -(I * (q + Cx<T>(T(1.0))) / (q - Cx<T>(T(1.0))));
}

template <class T> Cx<T> zeta_em(const Cx<T>& s) {
    using std::log;
    const int K = gamma_cfg<T>::zk;
    double as = absd(s);
    long M = std::max(10L, static_cast<long>(std::ceil((as + 2.0 * K) / 3.0)));
    Cx<T> sum{};
    for (long n = 1; n < M; ++n) sum += rpow(T(double(n)), -s);
    T Mt = T(double(M));
    Cx<T> Ms = rpow(Mt, -s);
    Cx<T> one(T(1.0));
    sum += Ms * Mt / (s - one) + Ms * T(0.5);
    Cx<T> p = s * Ms / Mt;
    T fact(2.0);
    for (int k = 1; k <= K; ++k) {
        sum += p * (bernoulli_v<T>(2 * k) / fact);
        Cx<T> a = s + Cx<T>(T(double(2 * k - 1)));
        Cx<T> b = s + Cx<T>(T(double(2 * k)));
        p = p * a * b / (Mt * Mt);
        fact = fact * T(double((2 * k + 1) * (2 * k + 2)));
    }
    return sum;
}

} // namespace

Rational bernoulli(int k) {
    if (k < 0) throw Error(ErrorCode::Domain, "bernoulli: negative index");
    std::lock_guard<std::mutex> lk(bern_mu);
    extend_bernoulli(k);
    return bern_cache[k];
}

template <> double bernoulli_v<double>(int k) {
    if (k < 0) throw Error(ErrorCode::Domain, "bernoulli: negative index");
    std::lock_guard<std::mutex> lk(bern_mu);
    extend_bernoulli(k);
    return bern_double[k];
}

template <> dd bernoulli_v<dd>(int k) {
    if (k < 0) throw Error(ErrorCode::Domain, "bernoulli: negative index");
    std::lock_guard<std::mutex> lk(bern_mu);
    extend_bernoulli(k);
    return bern_dd[k];
}

template <class T> bool near_nonpositive_integer(const Cx<T>& z, double tol) {
    double re = to_double(z.re), im = to_double(z.im);
    if (re > 0.5) return false;
    double r = std::nearbyint(re);
    return std::hypot(re - r, im) < tol;
}

template <class T> Cx<T> log_gamma(const Cx<T>& z) {
    if (near_nonpositive_integer(z)) throw Error(ErrorCode::Pole, "log_gamma: pole");
    if (z.re > T(0.0)) return lgamma_pos(z);
    const T pi = pi_v<T>();
    Cx<T> one(T(1.0));
    using std::log;
    return Cx<T>(log(pi)) - log(sin(z * pi)) - lgamma_pos(one - z);
}

template <class T> Cx<T> gamma(const Cx<T>& z) {
    if (near_nonpositive_integer(z)) throw Error(ErrorCode::Pole, "gamma: pole at non-positive integer");
    if (z.im == T(0.0)) {
        double r = to_double(z.re);
        if (r >= 1.0 && r <= 40.0 && r == std::floor(r) && z.re == T(r)) return Cx<T>(factorial_v<T>(int(r) - 1));
    }
    if (to_double(z.re) >= 0.5) return exp(lgamma_pos(z));
    const T pi = pi_v<T>();
    Cx<T> one(T(1.0));
    return Cx<T>(pi) / (sin(z * pi) * exp(lgamma_pos(one - z)));
}

template <class T> Cx<T> rgamma(const Cx<T>& z) {
    if (z.im == T(0.0) && z.re <= T(0.0) && z.re == floor(z.re)) return {};
    if (to_double(z.re) >= 0.5) return exp(-lgamma_pos(z));
    const T pi = pi_v<T>();
    Cx<T> one(T(1.0));
    return sin(z * pi) * exp(lgamma_pos(one - z)) / pi;
}

template <class T> Cx<T> digamma(const Cx<T>& z) {
    using std::log;
    if (near_nonpositive_integer(z)) throw Error(ErrorCode::Pole, "digamma: pole");
    Cx<T> one(T(1.0));
    if (to_double(z.re) < 0.5) return digamma(one - z) - cot_pi(z) * pi_v<T>();
    const double R = gamma_cfg<T>::R;
    long K = shift_count(z, R);
    Cx<T> acc{};
    for (long k = 0; k < K; ++k) acc += one / (z + Cx<T>(T(double(k))));
    Cx<T> w = z + Cx<T>(T(double(K)));
    Cx<T> winv = one / w;
    Cx<T> w2inv = winv * winv;
    Cx<T> res = log(w) - winv * T(0.5);
    Cx<T> p = w2inv;
    for (int k = 1; k <= gamma_cfg<T>::K; ++k) {
        res -= p * (bernoulli_v<T>(2 * k) / T(double(2 * k)));
        p = p * w2inv;
    }
    return res - acc;
}

template <class T> Cx<T> zeta(const Cx<T>& s) {
    double sr = to_double(s.re), si = to_double(s.im);
    if (std::hypot(sr - 1.0, si) < 1e-12) throw Error(ErrorCode::Pole, "zeta: pole at s = 1");
    if (s.im == T(0.0) && sr <= 0.0 && s.re == T(std::floor(sr))) {
        int n = static_cast<int>(-sr);
        if (n == 0) return Cx<T>(T(-0.5));
        return Cx<T>(-bernoulli_v<T>(n + 1) / T(double(n + 1)));
    }
    if (sr >= 0.5) return zeta_em(s);
    const T pi = pi_v<T>();
    Cx<T> one(T(1.0));
    Cx<T> t = one - s;
    return rpow(T(2.0), s) * rpow(pi, s - one) * sin(s * (pi * 0.5)) * gamma(t) * zeta_em(t);
}

template <class T> Cx<T> zeta_tail(const Cx<T>& s, long K, int deriv) {
    using std::log;
    if (K < 1) K = 1;
    if (to_double(s.re) <= 1.0) throw Error(ErrorCode::Domain, "zeta_tail: needs Re(s) > 1");
    const int KB = gamma_cfg<T>::zk;
    double as = absd(s);
    long M = std::max({K, 10L, static_cast<long>(std::ceil((as + 2.0 * KB) / 3.0))});
    Cx<T> one(T(1.0));
    Cx<T> sum{};
    for (long n = K; n < M; ++n) {
        T nt = T(double(n));
        Cx<T> v = rpow(nt, -s);
        sum += deriv ? -(v * log(nt)) : v;
    }
    T Mt = T(double(M));
    T lM = log(Mt);
    Cx<T> Ms = rpow(Mt, -s);
    Cx<T> sm1 = s - one;
    if (deriv == 0) {
        sum += Ms * Mt / sm1 + Ms * T(0.5);
    } else {
        sum += Ms * Mt * (-(Cx<T>(lM) / sm1) - one / (sm1 * sm1)) - Ms * (lM * 0.5);
    }
    // p = (s)_{2k-1} M^{-s-2k+1}; h = sum_{i<2k-1} 1/(s+i)
    Cx<T> p = s * Ms / Mt;
    Cx<T> h = one / s;
    T fact(2.0);
    for (int k = 1; k <= KB; ++k) {
        T c = bernoulli_v<T>(2 * k) / fact;
        sum += deriv ? p * (h - Cx<T>(lM)) * c : p * c;
        Cx<T> a = s + Cx<T>(T(double(2 * k - 1)));
        Cx<T> b = s + Cx<T>(T(double(2 * k)));
        p = p * a * b / (Mt * Mt);
        h += one / a + one / b;
        fact = fact * T(double((2 * k + 1) * (2 * k + 2)));
    }
    return sum;
}

template <class T> Cx<T> shi(const Cx<T>& z) {
    Cx<T> z2 = z * z;
    Cx<T> t = z;
    Cx<T> s = z;
    for (int k = 1; k < 2000; ++k) {
        t = t * z2 / T(double((2 * k) * (2 * k + 1)));
        Cx<T> d = t / T(double(2 * k + 1));
        s += d;
        if (absd(d) <= real_traits<T>::eps * 0.5 * absd(s) && k > 2) break;
    }
    return s;
}

template <class T> Cx<T> chi(const Cx<T>& z) {
    if (z.im == T(0.0) && z.re <= T(0.0)) throw Error(ErrorCode::Domain, "chi: argument on the branch cut");
    Cx<T> z2 = z * z;
    Cx<T> t(T(1.0));
    Cx<T> s{};
    for (int k = 1; k < 2000; ++k) {
        t = t * z2 / T(double((2 * k - 1) * (2 * k)));
        Cx<T> d = t / T(double(2 * k));
        s += d;
        if (absd(d) <= real_traits<T>::eps * 0.5 * absd(s) && k > 2) break;
    }
    return Cx<T>(real_traits<T>::euler()) + log(z) + s;
}

template <class T> Cx<T> scaled_e1(const Cx<T>& z) {
    // e^z E1(z) = 1/(z+1 - 1/(z+3 - 4/(z+5 - ...))), modified Lentz
    const T tiny(1e-300);
    const double eps = real_traits<T>::eps;
    Cx<T> one(T(1.0));
    Cx<T> f = z + one;
    if (absd(f) == 0.0) f = Cx<T>(tiny);
    Cx<T> C = f, D{};
    for (int j = 1; j < 200000; ++j) {
        Cx<T> a(T(-double(j) * double(j)));
        Cx<T> b = z + Cx<T>(T(double(2 * j + 1)));
        D = b + a * D;
        if (absd(D) == 0.0) D = Cx<T>(tiny);
        D = one / D;
        C = b + a / C;
        if (absd(C) == 0.0) C = Cx<T>(tiny);
        Cx<T> delta = C * D;
        f = f * delta;
        if (absd(delta - one) < eps) return one / f;
    }
    throw Error(ErrorCode::NonConverged, "scaled_e1: continued fraction did not converge");
}

namespace {

// e^{-z} Ei(z) for |arg z| < pi/4, via the power series at dd (|z| <= 120)
// or the divergent asymptotic series truncated at its smallest term.
template <class T> Cx<T> scaled_ei_right(const Cx<T>& z) {
    double r = absd(z);
    if (r <= 120.0) {
        cdd w(z);
        cdd t(dd(1.0)), s{};
        for (int k = 1; k < 4000; ++k) {
            t = t * w / dd(double(k));
            cdd d = t / dd(double(k));
            s += d;
            if (absd(d) <= ddc::eps * absd(s) && k > r) break;
        }
        cdd v = exp(-w) * (cdd(ddc::euler) + log(w) + s);
        return Cx<T>(v);
    }
    Cx<T> one(T(1.0));
    Cx<T> zi = one / z;
    Cx<T> t = zi, s = zi;
    double prev = absd(t);
    for (int k = 1; k < 10000; ++k) {
        Cx<T> nt = t * zi * T(double(k));
        double m = absd(nt);
        if (m > prev) break;
        s += nt;
        t = nt;
        prev = m;
        if (m <= real_traits<T>::eps * absd(s)) break;
    }
    return s;
}

} // namespace

template <class T> Cx<T> sinhshi_coshchi(const Cx<T>& z) {
    if (z.im == T(0.0) && z.re <= T(0.0)) throw Error(ErrorCode::Domain, "sinhshi_coshchi: arg z = pi or z = 0");
    double r = absd(z);
    if (r <= 20.0) {
        // direct form cancels about 2|z|/ln 10 digits; always run it at dd
        cdd w(z);
        cdd v = sinh(w) * shi(w) - cosh(w) * chi(w);
        return Cx<T>(v);
    }
    Cx<T> A = scaled_e1(z);
    double th = std::fabs(std::atan2(to_double(z.im), to_double(z.re)));
    Cx<T> B;
    if (th < 0.7853981633974483) {
        B = scaled_ei_right(z);
    } else {
        T sg = z.im > T(0.0) ? T(1.0) : T(-1.0);
        Cx<T> ipi(T(0.0), pi_v<T>() * sg);
        B = -scaled_e1(-z) + ipi * exp(-z);
    }
    return (A - B) * T(0.5);
}

#define LXF_INST(T)                                                                                                    \
    template T rational_to<T>(const Rational&);                                                                        \
    template bool near_nonpositive_integer<T>(const Cx<T>&, double);                                                   \
    template Cx<T> gamma<T>(const Cx<T>&);                                                                             \
    template Cx<T> log_gamma<T>(const Cx<T>&);                                                                         \
    template Cx<T> rgamma<T>(const Cx<T>&);                                                                            \
    template Cx<T> digamma<T>(const Cx<T>&);                                                                           \
    template Cx<T> zeta<T>(const Cx<T>&);                                                                              \
    template Cx<T> zeta_tail<T>(const Cx<T>&, long, int);                                                              \
    template Cx<T> shi<T>(const Cx<T>&);                                                                               \
    template Cx<T> chi<T>(const Cx<T>&);                                                                               \
    template Cx<T> sinhshi_coshchi<T>(const Cx<T>&);                                                                   \
    template Cx<T> scaled_e1<T>(const Cx<T>&);

LXF_INST(double)
LXF_INST(dd)

} // namespace lxf
