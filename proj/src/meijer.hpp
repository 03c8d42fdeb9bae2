#pragma once

#include <vector>

#include "precision.hpp"

namespace lxf {

// (-1)^k exp(2N e^{i pi (2k+b)/2N} z^{1/2N} + i pi (2k+b)(a+1)/2N), principal z^{1/2N}
template <class T> Cx<T> script_e(const Cx<T>& a, int N, const Cx<T>& z, int k, int b);

// Exponential block A_{a,N}(z) of the reduction. ReductionPole when the
// sin(pi a/2) (odd N) or cos(pi a/2) (even N) prefactor is within 1e-9 of zero.
template <class T> Cx<T> a_term(const Cx<T>& a, int N, const Cx<T>& z);

// G^{N+1,1}_{1,2N+1}(b1; b1, <i/N>; <1+3/2N-i/N> | z), b1 = 1/2+(1-a)/2N, as
// N^{N-a-1/2} Gamma((1-N+a)/2)/Gamma((N-a)/2) z^{b1} 1F_{2N}(...; (-1)^{N+1} z) + A_{a,N}(z).
// Exponential cancellation grows like e^{2N|z|^{1/2N}}; use GFamily for large |z|.
template <class T> Cx<T> meijer_g_reduced(const Cx<T>& a, int N, const Cx<T>& z, const TruncationPolicy& pol);

struct MBConfig {
    double c = NAN;         // contour abscissa; NaN picks the middle of the strip
    double tol = 1e-6;      // QuadratureFail above this relative error estimate
    int panel_nodes = 24;
    double decay = 1e-18;   // truncate once |integrand| < decay * peak
    double panel_width = 0.5;
};

struct MBInfo {
    double c = 0.0;
    double T = 0.0;          // the line was truncated at |Im w| = T
    double peak = 0.0;
    double end_ratio = 0.0;  // |integrand| at +-T relative to peak
    double err_est = 0.0;    // relative, from two panel rules plus the dropped tail
    long evals = 0;
};

// G^{m,1}_{1,q}(a1; bm; brest | X) with m = bm.size(), q = m + brest.size(), by
// Gauss-Legendre panels on Re w = c of
//   prod Gamma(bm_j - w) Gamma(1 - a1 + w) / prod Gamma(1 - brest_j + w) X^w.
// Log-space integrand in double; the line integral converges for |arg X| < (m + 1 - (q+1)/2) pi.
cd meijer_g_mb(const cd& a1, const std::vector<cd>& bm, const std::vector<cd>& brest, const cd& X,
               const MBConfig& cfg = {}, MBInfo* info = nullptr);

// The reduction's G-function evaluated by meijer_g_mb; the independent oracle.
cd mellin_barnes_oracle(const cd& a, int N, const cd& z, const MBConfig& cfg = {}, MBInfo* info = nullptr);

// C_{m,N}(mu, nu, w, z): the simplified finite sum (log-gamma, one exp per term)
cdd c_mn(int m, int N, const cdd& mu, const cdd& nu, const cdd& w, const cdd& z);
// same sum from the 2N+1 Gamma product form
cdd c_mn_product(int m, int N, const cdd& mu, const cdd& nu, const cdd& w, const cdd& z);

// _mu K_nu^{(N)}(z, w) = 2^{mu+2/N-1} pi^{(1-N)nu} z^{w+nu-2/N} G^{N+1,1}_{1,2N+1}(... | z^2/4).
// mu = 1/2, w = 0 uses the reduction when the cancellation is mild and the
// G-family line integral otherwise; other (mu, w) use meijer_g_mb.
cdd mu_k_nu(const cdd& mu, const cdd& nu, const cdd& w, int N, const cdd& z, const TruncationPolicy& pol);

// Leading m+1 terms of the large-z expansion; DivergentTail if a term grows before k = m.
cdd mu_k_nu_asymptotic(const cdd& mu, const cdd& nu, const cdd& w, int N, const cdd& z, int m);

} // namespace lxf
