#pragma once

#include <string>
#include <utility>
#include <vector>

#include "precision.hpp"

namespace lxf {

// Small-y expansion of sum sigma_a^(N)(n) e^(-ny), a = 2Nm - 1 + N:
//   sum over leading (power, coeff) of coeff y^power + sum_j coefficients[j] y^(2j+1)
struct AsymptoticExpansion {
    int N = 1, m = 1, r = 0;
    std::vector<cdd> coefficients;             // r+1 entries, y^1, y^3, ...
    std::vector<std::pair<int, cdd>> leading;  // y^(-2m-1), y^(-1)

    cdd eval(const cdd& y) const;
    cdd eval_leading(const cdd& y) const;
    // |coefficients[j] y^(2j+1)|
    std::vector<double> term_sizes(double y) const;
    // index of the smallest tail term at y; past it the series gets worse
    int smallest_term(double y) const;
    std::string to_json() const;
};

// Domain unless N odd, m >= 1, r >= 0
AsymptoticExpansion sigma_series_asymptotic(int N, int m, int r);

// 2 Gamma(2N+2Nj) zeta(2N+2Nj) zeta(2j) / ((2pi)^(2N) j (2pi)^(2j(N+1)))
cdd delta_j(int N, int j);

// log F_N(q) for F_N = prod (1 - q^(n^N))^(-n^(2N-1)); F_N overflows for q near 1,
// so everything here stays in the log domain.
struct LogFn {
    dd value;
    long terms = 0;
    double tail_bound = 0.0;
};
LogFn log_fn_exact(int N, double q);

// e^c |log q|^(B_2N/2N) exp(zeta(3)/(N log^2 q)) exp(-sum_{j<=r+1} delta_j (log q)^(2j)).
// The printed power (log q)^(B_2N/2N) has a negative base; the modulus uses
// |log q| and phase = pi B_2N/2N is carried separately.
struct FnAsymptotic {
    cdd log_value; // log of the |log q| branch, including c
    double phase = 0.0;
    int r = 0;
    std::vector<std::string> notes;
};
FnAsymptotic fn_asymptotic(int N, double q, int r, const cdd& c);

// 2 int_0^inf y log y / (e^(2pi y) - 1) dy on geometric Gauss panels,
// each split into 2^refine pieces. The no-argument form checks the result
// against one refinement and throws QuadratureFail above 1e-10.
cdd wright_constant_n1();
cdd wright_constant_n1(int refine);

struct CEstimate {
    cdd value;
    double spread = 0.0; // max - min of the pointwise constants
    int r = 0;
    std::vector<std::pair<double, double>> points; // (q, log F - known terms)
    std::string to_json() const;
};
// Mean of log F_N(q) - known terms over an even grid on [q_lo, q_hi].
// UnstableFit when the spread exceeds 1e-2.
CEstimate c_estimate(int N, double q_lo = 0.9, double q_hi = 0.99, int points = 10);

} // namespace lxf
