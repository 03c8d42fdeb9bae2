#include "lxf/lxf.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <regex>
#include <string>

#include "arithmetic.hpp"
#include "asymptotics.hpp"
#include "identities.hpp"
#include "json.hpp"
#include "meijer.hpp"
#include "report.hpp"

struct lxf_policy {
    lxf::TruncationPolicy pol;
};

struct lxf_report {
    lxf::IdentityReport r;
    std::string json, csv;
};

namespace {

using namespace lxf;

thread_local std::string last_error;

lxf_status status_of(ErrorCode c) { return static_cast<lxf_status>(static_cast<int>(c)); }

lxf_status fail(lxf_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

cdd to_cdd(const lxf_value& v) { return cdd(dd(v.re_hi, v.re_lo), dd(v.im_hi, v.im_lo)); }

lxf_value from_cdd(const cdd& z) { return {z.re.hi, z.re.lo, z.im.hi, z.im.lo}; }

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

const std::regex decimal_re(R"([-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)");
const std::regex const_re(R"(([-+])?(?:(\d+\.?\d*|\.\d+)\s*\*?\s*)?(2pi|pi|e)(?:\^\(?([-+]?(?:\d+\.?\d*|\.\d+))(?:/(\d+))?\)?)?)");

bool parse_real(const std::string& text, dd& out) {
    std::string s = trim(text);
    std::smatch m;
    if (std::regex_match(s, decimal_re)) {
        out = from_string_v<dd>(s);
        return true;
    }
    if (!std::regex_match(s, m, const_re)) return false;
    dd base = m[3] == "pi" ? ddc::pi : m[3] == "2pi" ? ddc::two_pi : exp(dd(1.0));
    if (m[4].matched) {
        dd p = from_string_v<dd>(m[4].str());
        if (m[5].matched) p = p / from_string_v<dd>(m[5].str());
        base = exp(log(base) * p);
    }
    if (m[2].matched) base = base * from_string_v<dd>(m[2].str());
    out = m[1] == "-" ? -base : base;
    return true;
}

lxf_report* wrap(IdentityReport r) {
    auto* h = new lxf_report;
    h->r = std::move(r);
    h->json = to_json(h->r);
    h->csv = to_csv_row(h->r);
    return h;
}

RamanujanPair pair_of(const lxf_params& p, int N) {
    bool ha = p.set & LXF_HAS_ALPHA, hb = p.set & LXF_HAS_BETA;
    if (ha && hb) {
        RamanujanPair r;
        r.alpha = to_cdd(p.alpha);
        r.beta = to_cdd(p.beta);
        r.N = N;
        return r;
    }
    if (ha) return RamanujanPair::from_alpha(N, to_cdd(p.alpha));
    if (hb) return RamanujanPair::from_beta(N, to_cdd(p.beta));
    throw Error(ErrorCode::Config, "needs --alpha or --beta");
}

cdd need(const lxf_params& p, unsigned bit, const lxf_value& v, const char* flag) {
    if (!(p.set & bit)) throw Error(ErrorCode::Config, std::string("needs --") + flag);
    return to_cdd(v);
}

using Op = std::function<IdentityReport(const lxf_params&, const TruncationPolicy&)>;

struct Entry {
    const char* name;
    Op op;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> reg = {
        {"main-transform",
         [](const lxf_params& p, const TruncationPolicy& pol) {
             return thm_main_transform(p.N, need(p, LXF_HAS_A, p.a, "a"), need(p, LXF_HAS_Y, p.y, "y"), pol,
                                       p.k_form ? MainForm::K : MainForm::G);
         }},
        {"analytic-continuation",
         [](const lxf_params& p, const TruncationPolicy& pol) {
             return thm_analytic_continuation(p.N, need(p, LXF_HAS_A, p.a, "a"), need(p, LXF_HAS_Y, p.y, "y"), p.m, pol);
         }},
        {"ramanujan-gen",
         [](const lxf_params& p, const TruncationPolicy& pol) { return thm_ramanujan_gen(p.N, p.m, pair_of(p, p.N), pol); }},
        {"ramanujan-classical",
         [](const lxf_params& p, const TruncationPolicy& pol) { return thm_ramanujan_classical(p.m, pair_of(p, 1), pol); }},
        {"dixit-maji-gen",
         [](const lxf_params& p, const TruncationPolicy& pol) { return dixit_maji_gen(p.N, p.m, pair_of(p, p.N), pol); }},
        {"eta-transform",
         [](const lxf_params& p, const TruncationPolicy& pol) {
             return cor_eta_transform(p.N, need(p, LXF_HAS_Y, p.y, "y"), pol);
         }},
        {"zagier-product",
         [](const lxf_params& p, const TruncationPolicy& pol) {
             return zagier_product_check(p.N, need(p, LXF_HAS_Y, p.y, "y"), pol);
         }},
        {"power-partition",
         [](const lxf_params& p, const TruncationPolicy& pol) {
             return thm_power_partition(p.N, p.m, need(p, LXF_HAS_Y, p.y, "y"), pol);
         }},
        {"wigert-gen",
         [](const lxf_params& p, const TruncationPolicy& pol) { return cor_wigert_gen(p.N, p.m, pair_of(p, p.N), pol); }},
        {"even-shift",
         [](const lxf_params& p, const TruncationPolicy& pol) { return eq_even_shift(p.N, p.m, pair_of(p, p.N), pol); }},
        {"herglotz",
         [](const lxf_params& p, const TruncationPolicy& pol) { return cor_herglotz(p.N, p.m, pair_of(p, p.N), pol); }},
        {"mittag-leffler",
         [](const lxf_params& p, const TruncationPolicy& pol) {
             return prop_mittag_leffler(p.N, need(p, LXF_HAS_Z, p.z, "z"), pol);
         }},
        {"trig-sin",
         [](const lxf_params& p, const TruncationPolicy&) { return trig_sum_check(p.N, need(p, LXF_HAS_Z, p.z, "z"))[0]; }},
        {"trig-parity",
         [](const lxf_params& p, const TruncationPolicy&) { return trig_sum_check(p.N, need(p, LXF_HAS_Z, p.z, "z"))[1]; }},
    };
    return reg;
}

// a report that only carries the failure, so grids keep their shape
IdentityReport error_report(const std::string& name, const lxf_params& p, Tier tier, double tol, const Error& e) {
    IdentityReport r;
    r.identity = name;
    r.param("N", p.N);
    r.param("m", p.m);
    r.tier = tier;
    r.tol = tol > 0 ? tol : 0.0;
    r.abs_err = r.rel_err = INFINITY;
    r.error = e.code;
    r.message = e.what();
    return r;
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F> lxf_status guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return fail(status_of(e.code), e.what());
    } catch (const std::exception& e) {
        return fail(LXF_INTERNAL, e.what());
    }
}

} // namespace

extern "C" {

const char* lxf_status_name(lxf_status s) {
    if (s == LXF_INTERNAL) return "INTERNAL";
    if (s < LXF_OK || s > LXF_INTERNAL) return "UNKNOWN";
    return error_name(static_cast<ErrorCode>(s));
}

const char* lxf_last_error(void) { return last_error.c_str(); }

void lxf_string_free(char* s) { std::free(s); }

lxf_value lxf_value_make(double re, double im) { return {re, 0.0, im, 0.0}; }

lxf_status lxf_value_parse(const char* text, lxf_value* out) {
    if (!text || !out) return fail(LXF_CONFIG, "null argument");
    std::string s = text;
    size_t comma = s.find(',');
    dd re, im = dd(0.0);
    if (!parse_real(s.substr(0, comma), re) || (comma != std::string::npos && !parse_real(s.substr(comma + 1), im)))
        return fail(LXF_CONFIG, "cannot parse value '" + s + "'");
    *out = from_cdd(cdd(re, im));
    return LXF_OK;
}

lxf_policy* lxf_policy_new(lxf_tier tier) {
    auto* p = new lxf_policy;
    p->pol = identity_policy(tier == LXF_TIER_DOUBLE ? Tier::Double : Tier::Extended);
    return p;
}

void lxf_policy_free(lxf_policy* p) { delete p; }

lxf_status lxf_policy_set_rel_tol(lxf_policy* p, double rel_tol) {
    if (!p) return fail(LXF_CONFIG, "null policy");
    TruncationPolicy q = p->pol;
    q.rel_tol = rel_tol;
    try {
        q.validate();
    } catch (const Error& e) {
        return fail(status_of(e.code), e.what());
    }
    p->pol = q;
    return LXF_OK;
}

lxf_status lxf_policy_set_max_terms(lxf_policy* p, long max_terms) {
    if (!p) return fail(LXF_CONFIG, "null policy");
    if (max_terms < 1) return fail(LXF_CONFIG, "max_terms must be >= 1");
    p->pol.max_terms = max_terms;
    return LXF_OK;
}

lxf_tier lxf_policy_tier(const lxf_policy* p) {
    return p && p->pol.tier == Tier::Double ? LXF_TIER_DOUBLE : LXF_TIER_EXTENDED;
}

void lxf_params_init(lxf_params* p) {
    if (!p) return;
    std::memset(p, 0, sizeof *p);
    p->N = 1;
    p->m = 1;
}

size_t lxf_identity_count(void) { return registry().size(); }

const char* lxf_identity_name(size_t i) { return i < registry().size() ? registry()[i].name : nullptr; }

lxf_status lxf_verify(const char* identity, const lxf_params* params, const lxf_policy* policy, double tol,
                      lxf_report** out) {
    if (!identity || !params || !policy || !out) return fail(LXF_CONFIG, "null argument");
    *out = nullptr;
    const Entry* e = nullptr;
    for (const auto& x : registry())
        if (identity == std::string(x.name)) e = &x;
    if (!e) return fail(LXF_CONFIG, std::string("unknown identity '") + identity + "'");
    try {
        IdentityReport r = e->op(*params, policy->pol);
        if (tol > 0) r.tol = tol;
        lxf_status s = status_of(r.error);
        if (s != LXF_OK) last_error = r.message;
        *out = wrap(std::move(r));
        return s;
    } catch (const Error& err) {
        if (err.code == ErrorCode::Config) return fail(LXF_CONFIG, err.what());
        *out = wrap(error_report(e->name, *params, policy->pol.tier, tol, err));
        return fail(status_of(err.code), err.what());
    } catch (const std::exception& err) {
        return fail(LXF_INTERNAL, err.what());
    }
}

lxf_status lxf_meijer_oracle(int N, lxf_value a, lxf_value z, const lxf_policy* policy, double tol, lxf_report** out) {
    if (!policy || !out) return fail(LXF_CONFIG, "null argument");
    *out = nullptr;
    IdentityReport r;
    r.identity = "meijer-oracle";
    r.param("N", N);
    r.param("a", cd(to_cdd(a)));
    r.param("z", cd(to_cdd(z)));
    r.tier = policy->pol.tier;
    r.tol = tol > 0 ? tol : 1e-5;
    try {
        cdd g = meijer_g_reduced<dd>(to_cdd(a), N, to_cdd(z), policy->pol);
        MBInfo info;
        cd o = mellin_barnes_oracle(cd(to_cdd(a)), N, cd(to_cdd(z)), MBConfig{}, &info);
        r.lhs = g;
        r.rhs = cdd(o);
        r.finish();
    } catch (const Error& err) {
        r.abs_err = r.rel_err = INFINITY;
        r.error = err.code;
        r.message = err.what();
    } catch (const std::exception& err) {
        return fail(LXF_INTERNAL, err.what());
    }
    lxf_status s = status_of(r.error);
    if (s != LXF_OK) last_error = r.message;
    *out = wrap(std::move(r));
    return s;
}

void lxf_report_free(lxf_report* r) { delete r; }
int lxf_report_pass(const lxf_report* r) { return r && r->r.pass() ? 1 : 0; }
double lxf_report_rel_err(const lxf_report* r) { return r ? r->r.rel_err : INFINITY; }
double lxf_report_tol(const lxf_report* r) { return r ? r->r.tol : 0.0; }
lxf_status lxf_report_status(const lxf_report* r) { return r ? status_of(r->r.error) : LXF_CONFIG; }
const char* lxf_report_identity(const lxf_report* r) { return r ? r->r.identity.c_str() : ""; }
lxf_value lxf_report_lhs(const lxf_report* r) { return r ? from_cdd(r->r.lhs) : lxf_value{}; }
lxf_value lxf_report_rhs(const lxf_report* r) { return r ? from_cdd(r->r.rhs) : lxf_value{}; }
const char* lxf_report_json(const lxf_report* r) { return r ? r->json.c_str() : ""; }
const char* lxf_report_csv_row(const lxf_report* r) { return r ? r->csv.c_str() : ""; }

const char* lxf_csv_header(void) {
    static const std::string h = csv_header();
    return h.c_str();
}

lxf_status lxf_partitions_csv(int N, long max_n, char** out) {
    if (!out) return fail(LXF_CONFIG, "null argument");
    return guarded([&] {
        *out = dup(partition_counts(N, max_n).to_csv());
        return LXF_OK;
    });
}

lxf_status lxf_asym_sigma_json(int N, int m, int r, const double* ys, size_t ny, char** out) {
    if (!out || (ny && !ys)) return fail(LXF_CONFIG, "null argument");
    return guarded([&] {
        AsymptoticExpansion e = sigma_series_asymptotic(N, m, r);
        nlohmann::ordered_json j;
        j["expansion"] = nlohmann::ordered_json::parse(e.to_json());
        TruncationPolicy pol = TruncationPolicy::for_tier(Tier::Extended);
        cdd a = cdd(dd(2.0 * N * m - 1 + N));
        std::vector<double> err(ny);
        for (size_t i = 0; i < ny; ++i) {
            cdd y = cdd(dd(ys[i]));
            err[i] = absd(lambert_divisor<dd>(a, N, y, pol).value - e.eval(y));
        }
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (size_t i = 0; i < ny; ++i) {
            cdd y = cdd(dd(ys[i]));
            nlohmann::ordered_json row;
            row["y"] = ys[i];
            row["exact"] = to_double(lambert_divisor<dd>(a, N, y, pol).value.re);
            row["expansion"] = to_double(e.eval(y).re);
            row["abs_err"] = err[i];
            row["smallest_term"] = e.smallest_term(ys[i]);
            for (size_t k = 0; k < ny; ++k)
                if (std::fabs(ys[k] - ys[i] / 2) < 1e-15 * ys[i]) row["halving_ratio"] = err[i] / err[k];
            row["target_ratio"] = std::ldexp(1.0, 2 * r + 3);
            rows.push_back(row);
        }
        j["points"] = rows;
        *out = dup(j.dump());
        return LXF_OK;
    });
}

lxf_status lxf_asym_constant_json(int N, char** out) {
    if (!out) return fail(LXF_CONFIG, "null argument");
    return guarded([&] {
        nlohmann::ordered_json j;
        cdd w0 = wright_constant_n1(0), w1 = wright_constant_n1(1);
        j["wright_constant"] = to_double(w1.re);
        j["doubling_change"] = absd(w0 - w1);
        CEstimate c = c_estimate(N);
        j["N"] = N;
        j["c_estimate"] = nlohmann::ordered_json::parse(c.to_json());
        j["c_minus_wright"] = to_double(c.value.re - w1.re);
        *out = dup(j.dump());
        return LXF_OK;
    });
}

} // extern "C"
