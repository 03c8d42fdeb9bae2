#include "precision.hpp"

#include <cstdlib>

namespace lxf {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::Ok: return "OK";
    case ErrorCode::Pole: return "POLE";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::NonConverged: return "NON_CONVERGED";
    case ErrorCode::ReductionPole: return "REDUCTION_POLE";
    case ErrorCode::QuadratureFail: return "QUADRATURE_FAIL";
    case ErrorCode::DivergentTail: return "DIVERGENT_TAIL";
    case ErrorCode::UnstableFit: return "UNSTABLE_FIT";
    case ErrorCode::Config: return "CONFIG";
    }
    return "UNKNOWN";
}

void TruncationPolicy::validate() const {
    if (!(rel_tol > 0.0)) throw Error(ErrorCode::Config, "rel_tol must be positive");
    if (max_terms < 1) throw Error(ErrorCode::Config, "max_terms must be >= 1");
    if (small_run < 1) throw Error(ErrorCode::Config, "small_run must be >= 1");
}

template <> double from_string_v<double>(const std::string& s) { return std::strtod(s.c_str(), nullptr); }
template <> dd from_string_v<dd>(const std::string& s) { return dd_from_string(s); }

} // namespace lxf
