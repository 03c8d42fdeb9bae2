#include "report.hpp"

#include <cstdio>

#include "json.hpp"

namespace lxf {

void IdentityReport::finish(double abs_floor) {
    abs_err = absd(lhs - rhs);
    double den = std::max({absd(lhs), absd(rhs), abs_floor});
    rel_err = abs_err / den;
    if (!std::isfinite(rel_err)) {
        rel_err = INFINITY;
        if (error == ErrorCode::Ok) {
            error = ErrorCode::NonConverged;
            message = "non-finite side";
        }
    }
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void IdentityReport::param(const std::string& k, double v) { params.emplace_back(k, fmt_num(v)); }

void IdentityReport::param(const std::string& k, const cd& v) {
    if (v.im == 0.0) {
        param(k, v.re);
        return;
    }
    params.emplace_back(k, fmt_num(v.re) + (v.im < 0 ? "" : "+") + fmt_num(v.im) + "i");
}

namespace {
nlohmann::ordered_json num(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}
} // namespace

std::string to_json(const IdentityReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    j["params"] = p;
    j["lhs"] = {num(to_double(r.lhs.re)), num(to_double(r.lhs.im))};
    j["rhs"] = {num(to_double(r.rhs.re)), num(to_double(r.rhs.im))};
    j["abs_err"] = num(r.abs_err);
    j["rel_err"] = num(r.rel_err);
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    j["tier"] = r.tier == Tier::Double ? "DOUBLE" : "EXTENDED";
    j["pass"] = r.pass();
    j["tol"] = r.tol;
    if (r.error != ErrorCode::Ok) {
        j["error"] = error_name(r.error);
        j["message"] = r.message;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump();
}

std::string csv_header() {
    return "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,lhs_terms,rhs_terms,tier,pass,tol,error";
}

std::string to_csv_row(const IdentityReport& r) {
    std::string ps;
    for (const auto& [k, v] : r.params) {
        if (!ps.empty()) ps += ';';
        ps += k + "=" + v;
    }
    std::string s = r.identity + ",\"" + ps + "\"";
    for (double v : {to_double(r.lhs.re), to_double(r.lhs.im), to_double(r.rhs.re), to_double(r.rhs.im), r.abs_err,
                     r.rel_err})
        s += "," + fmt_num(v);
    s += "," + std::to_string(r.lhs_terms) + "," + std::to_string(r.rhs_terms);
    s += r.tier == Tier::Double ? ",DOUBLE" : ",EXTENDED";
    s += r.pass() ? ",true," : ",false,";
    s += fmt_num(r.tol) + ",";
    if (r.error != ErrorCode::Ok) s += error_name(r.error);
    return s;
}

} // namespace lxf
