#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "special.hpp"

namespace lxf {

// floor(n^(1/N)) for n >= 0
long iroot(long n, int N);
// n^N as an exact long; throws Domain on overflow
long ipow(long n, int N);

// sigma_a^(N)(n) = sum over d with d^N | n of d^a
template <class T> Cx<T> sigma(const Cx<T>& a, int N, long n);
// S_a^(N)(n) = sum over d1^N d2 = n of d2^((1+a)/N - 1)
template <class T> Cx<T> s_weight(const Cx<T>& a, int N, long n);

// Sieved tables, index 0..M (entry 0 is zero).
template <class T> std::vector<Cx<T>> sigma_table(const Cx<T>& a, int N, long M);
template <class T> std::vector<Cx<T>> s_weight_table(const Cx<T>& a, int N, long M);

// sum_{n >= 1} S_a^(N)(n) n^-s, truncated at policy.max_terms, against zeta(Ns) zeta(s + 1 - (1+a)/N)
template <class T> IdentityReport s_dirichlet(const Cx<T>& a, int N, const Cx<T>& s, const TruncationPolicy& pol);

// sum_{n >= 1} n^k / (exp(n^N y) - 1)
template <class T> SeriesResult<T> lambert_direct(const Cx<T>& k, int N, const Cx<T>& y, const TruncationPolicy& pol);
// sum_{n >= 1} sigma_a^(N)(n) exp(-n y)
template <class T> SeriesResult<T> lambert_divisor(const Cx<T>& a, int N, const Cx<T>& y, const TruncationPolicy& pol);

struct PartitionTable {
    int N = 1;
    std::vector<BigInt> counts;
    std::string to_csv() const;
};

// Coefficients of prod_{n >= 1} (1 - q^(n^N))^(-n^(2N-1)) up to q^n_max, by
// n P(n) = sum_{j=1..n} sigma_{3N-1}^(N)(j) P(n-j).
PartitionTable partition_counts(int N, long n_max);

} // namespace lxf
