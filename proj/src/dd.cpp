#include "dd.hpp"

#include <cstdio>
#include <cstdlib>
#include <limits>

namespace lxf {

namespace {

// Taylor series of e^r - 1 for tiny |r|.
dd expm1_small(const dd& r) {
    dd s = r;
    dd t = r;
    for (int k = 2; k < 30; ++k) {
        t = t * r / double(k);
        s += t;
        if (std::fabs(t.hi) < ddc::eps * std::fabs(s.hi)) break;
    }
    return s;
}

} // namespace

dd exp(const dd& a) {
    if (a.hi > 709.78) return dd(std::numeric_limits<double>::infinity());
    if (a.hi < -745.0) return dd(0.0);
    if (a.hi == 0.0) return dd(1.0 + a.lo);
    double k = std::nearbyint(a.hi / ddc::ln2.hi);
    dd r = a - ddc::ln2 * k;
    r = ldexp(r, -10);
    dd s = expm1_small(r);
    for (int i = 0; i < 10; ++i) s = ldexp(s, 1) + sqr(s);
    s = s + 1.0;
    return ldexp(s, static_cast<int>(k));
}

dd expm1(const dd& a) {
    if (std::fabs(a.hi) > 0.5) return exp(a) - 1.0;
    dd r = ldexp(a, -10);
    dd s = expm1_small(r);
    for (int i = 0; i < 10; ++i) s = ldexp(s, 1) + sqr(s);
    return s;
}

dd log(const dd& a) {
    if (a.hi <= 0.0) return dd(a.hi == 0.0 ? -std::numeric_limits<double>::infinity() : std::nan(""));
    if (a.hi == 1.0 && a.lo == 0.0) return dd(0.0);
    dd x = dd(std::log(a.hi));
    // one Newton step on exp(x) = a doubles the number of correct digits
    x = x + a * exp(-x) - 1.0;
    return x;
}

dd log1p(const dd& a) {
    if (std::fabs(a.hi) > 0.25) return log(a + 1.0);
    dd x = dd(std::log1p(a.hi));
    // Newton on expm1(x) = a
    dd em = expm1(x);
    x = x - (em - a) / (em + 1.0);
    return x;
}

void sincos(const dd& a, dd& s, dd& c) {
    if (a.hi == 0.0) {
        s = a;
        c = dd(1.0);
        return;
    }
    dd z = a - ddc::two_pi * nearbyint(a / ddc::two_pi);
    double q = std::nearbyint(z.hi / ddc::half_pi.hi);
    dd t = z - ddc::half_pi * q;
    int j = static_cast<int>(q);
    // sin t by Taylor, |t| <= pi/4
    dd t2 = sqr(t);
    dd st = t;
    dd term = t;
    for (int k = 1; k < 40; ++k) {
        term = -term * t2 / double((2 * k) * (2 * k + 1));
        st += term;
        if (std::fabs(term.hi) < ddc::eps * std::fabs(st.hi)) break;
    }
    dd ct = sqrt(1.0 - sqr(st));
    switch (((j % 4) + 4) % 4) {
    case 0: s = st; c = ct; break;
    case 1: s = ct; c = -st; break;
    case 2: s = -st; c = -ct; break;
    default: s = -ct; c = st; break;
    }
}

dd sin(const dd& a) {
    dd s, c;
    sincos(a, s, c);
    return s;
}

dd cos(const dd& a) {
    dd s, c;
    sincos(a, s, c);
    return c;
}

dd atan2(const dd& y, const dd& x) {
    if (x.hi == 0.0 && y.hi == 0.0) return dd(0.0);
    dd z = dd(std::atan2(y.hi, x.hi));
    dd r = sqrt(sqr(x) + sqr(y));
    dd xx = x / r, yy = y / r;
    dd s, c;
    sincos(z, s, c);
    if (std::fabs(xx.hi) > std::fabs(yy.hi))
        z = z + (yy - s) / c;
    else
        z = z - (xx - c) / s;
    return z;
}

dd atan(const dd& x) { return atan2(x, dd(1.0)); }

dd sinh(const dd& a) {
    if (std::fabs(a.hi) < 0.5) {
        dd e = expm1(a);
        // sinh a = (e + e/(e+1)) / 2 with e = expm1(a)
        return ldexp(e + e / (e + 1.0), -1);
    }
    dd e = exp(a);
    return ldexp(e - 1.0 / e, -1);
}

dd cosh(const dd& a) {
    dd e = exp(a);
    return ldexp(e + 1.0 / e, -1);
}

dd pow(const dd& a, const dd& b) { return exp(b * log(a)); }

dd pow(const dd& a, int n) {
    if (n == 0) return dd(1.0);
    dd base = a, r(1.0);
    unsigned m = n < 0 ? unsigned(-(long)n) : unsigned(n);
    while (m) {
        if (m & 1u) r *= base;
        base = sqr(base);
        m >>= 1u;
    }
    return n < 0 ? 1.0 / r : r;
}

dd dd_from_string(const std::string& str) {
    const char* p = str.c_str();
    while (*p == ' ') ++p;
    bool neg = false;
    if (*p == '+' || *p == '-') neg = (*p++ == '-');
    dd r(0.0);
    int exp10 = 0;
    bool dot = false;
    int digits = 0;
    for (; *p; ++p) {
        if (*p == '.') {
            dot = true;
            continue;
        }
        if (*p < '0' || *p > '9') break;
        if (digits < 34) {
            r = r * 10.0 + double(*p - '0');
            ++digits;
            if (dot) --exp10;
        } else if (!dot) {
            ++exp10;
        }
    }
    if (*p == 'e' || *p == 'E') exp10 += std::atoi(p + 1);
    if (exp10 != 0) {
        dd ten(10.0);
        dd scale = pow(ten, exp10 < 0 ? -exp10 : exp10);
        r = exp10 < 0 ? r / scale : r * scale;
    }
    return neg ? -r : r;
}

std::string to_string(const dd& a, int digits) {
    if (!std::isfinite(a.hi)) return std::to_string(a.hi);
    if (a.hi == 0.0) return "0";
    dd x = fabs(a);
    int e10 = static_cast<int>(std::floor(std::log10(x.hi)));
    dd scaled = e10 >= 0 ? x / pow(dd(10.0), e10) : x * pow(dd(10.0), -e10);
    if (scaled.hi >= 10.0) {
        scaled = scaled / 10.0;
        ++e10;
    } else if (scaled.hi < 1.0) {
        scaled = scaled * 10.0;
        --e10;
    }
    std::string out = a.hi < 0 ? "-" : "";
    for (int i = 0; i < digits; ++i) {
        int d = static_cast<int>(std::floor(scaled.hi));
        if (d < 0) d = 0;
        if (d > 9) d = 9;
        out += char('0' + d);
        if (i == 0) out += '.';
        scaled = (scaled - double(d)) * 10.0;
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+d", e10);
    return out + buf;
}

} // namespace lxf
