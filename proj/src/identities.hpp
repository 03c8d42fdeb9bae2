#pragma once

#include <vector>

#include "report.hpp"

namespace lxf {

// Each op evaluates both sides of one stated identity and returns a finished
// report. Sums run in double (DOUBLE tier) or double-double (EXTENDED); the
// Meijer-G sums of the two transformation theorems always run in dd and the
// tier only sets their truncation level. Precondition violations throw Error;
// a series that hits policy.max_terms is reported with NonConverged.

// rel_tol per tier and a term cap large enough for the slowly decaying
// rotated sums (N = 4, 5).
TruncationPolicy identity_policy(Tier t);

// alpha beta^N = pi^(N+1) with Re alpha, Re beta > 0
struct RamanujanPair {
    cdd alpha, beta;
    int N = 1;
    // Domain unless the constraint holds to rel 1e-13
    void validate() const;
    static RamanujanPair from_alpha(int N, const cdd& alpha);
    static RamanujanPair from_beta(int N, const cdd& beta);
};

enum class MainForm { G, K };

// sum sigma_a^(N)(n) e^(-ny) against the S-weighted G sum (form G) or the
// equivalent _{1/2}K_{a/2N}^(N) sum (form K).
IdentityReport thm_main_transform(int N, const cdd& a, const cdd& y, const TruncationPolicy& pol,
                                  MainForm form = MainForm::G);

// Continuation to Re a > -(2m+2)N - 1. The bracket K - correction is the
// Mellin-Barnes line shifted past the first m+1 left poles, so it is never
// formed by subtraction; near integer a the elementary terms are combined by
// a circle mean around their removable singularity.
IdentityReport thm_analytic_continuation(int N, const cdd& a, const cdd& y, int m, const TruncationPolicy& pol);

IdentityReport thm_ramanujan_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol);
IdentityReport thm_ramanujan_classical(int m, const RamanujanPair& p, const TruncationPolicy& pol);
IdentityReport dixit_maji_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol);

IdentityReport cor_eta_transform(int N, const cdd& y, const TruncationPolicy& pol);
// log eta_N(i/y) against the product over the N roots w in H of w^N = +-iy
IdentityReport zagier_product_check(int N, const cdd& y, const TruncationPolicy& pol);

IdentityReport thm_power_partition(int N, int m, const cdd& y, const TruncationPolicy& pol);

IdentityReport cor_wigert_gen(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol);
IdentityReport eq_even_shift(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol);
// psi-pair sums past the direct range are closed with the digamma asymptotic
// series summed against Hurwitz tails; the report notes the switch point.
IdentityReport cor_herglotz(int N, int m, const RamanujanPair& p, const TruncationPolicy& pol);

IdentityReport prop_mittag_leffler(int N, const cdd& z, const TruncationPolicy& pol);

// sin(Nz)/sin z and the parity-specific quotient, one report each
std::vector<IdentityReport> trig_sum_check(int N, const cdd& z);

// sum_{n >= n1} S_a^(N)(n) n^(-s); needs Re s > max(1/N, Re(1+a)/N)
template <class T> Cx<T> s_dirichlet_tail(const Cx<T>& a, int N, const Cx<T>& s, long n1);

} // namespace lxf
