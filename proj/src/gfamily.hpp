#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "precision.hpp"

namespace lxf {

// G(X) = G^{N+1,1}_{1,2N+1}(b1; b1, <i/N>; <1+3/(2N)-i/N> | X), b1 = 1/2 + (1-a)/(2N),
// evaluated as a trapezoid sum on a vertical Mellin-Barnes line of the
// simplified integrand
//   pi N^(-3/2) Gamma(1-Nw) / Gamma(Nw-1/2) / cos(pi(w + (a-1)/(2N))) C^w,  C = N^(2N) X.
// Left poles sit at w_k = b1-1-k; residue series at large X in residue_term().
class GFamily {
  public:
    // lnC_max bounds |log C| for later calls; arg_max bounds |arg C| (< pi).
    GFamily(const cdd& a, int N, double lnC_max, double arg_max = 0.0);

    const cdd& a() const { return a_; }
    int N() const { return N_; }
    dd b1() const { return b1_.re; }

    // G(X) from the main contour; Domain when Re a <= -N-1
    cdd eval(const cdd& X) const;
    // G(X) - sum_{k<=m} residue_term(k, X), from the line between w_m and w_{m+1}
    cdd eval_shifted(int m, const cdd& X) const;
    // residue at w_k: N^(-3/2)(-1)^k Gamma(1-N w_k)/Gamma(N w_k - 1/2) C^(w_k)
    cdd residue_term(int k, const cdd& X) const;
    // same without the C^(w_k) factor
    cdd residue_coeff(int k) const;
    cdd pole(int k) const;

    // smallest X^(1/2N) beyond which exponentially small corrections are below e^-L
    double asymptotic_threshold(double L) const;
    long nodes() const;

  private:
    struct Line {
        dd c, h;
        std::vector<cdd> f; // integrand sans C^w at t_j = (j - J) h
        long J = 0;
    };
    Line build_line(const dd& c, double halfwidth) const;
    cdd eval_line(const Line& L, const cdd& X) const;
    cdd integrand(const cdd& w) const;

    cdd a_, b1_;
    int N_;
    double lnC_max_, arg_max_;
    dd lnN2N_;
    Line main_;
    bool has_main_ = false;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<Line>> shifted_;
};

// Decay constant kappa_N of the exponentially small part: the smallest
// |Re| of 2N e^(i pi (2k+b)/2N) over the decaying exponentials, i.e. 2N sin(pi/2N) for N >= 2.
double gfamily_kappa(int N);

} // namespace lxf
