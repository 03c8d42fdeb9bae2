#pragma once

#include <string>
#include <utility>
#include <vector>

#include "precision.hpp"

namespace lxf {

struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params; // insertion order is output order
    cdd lhs, rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    long lhs_terms = 0;
    long rhs_terms = 0;
    Tier tier = Tier::Double;
    double tol = 0.0;
    ErrorCode error = ErrorCode::Ok;
    std::string message;
    std::vector<std::string> notes;

    bool pass() const { return error == ErrorCode::Ok && rel_err <= tol; }
    // fills abs_err / rel_err from lhs, rhs
    void finish(double abs_floor = 1e-30);
    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void param(const std::string& k, double v);
    void param(const std::string& k, const cd& v);
};

std::string fmt_num(double v);
std::string to_json(const IdentityReport& r);
std::string csv_header();
std::string to_csv_row(const IdentityReport& r);

} // namespace lxf
