#pragma once

#include <vector>

#include "precision.hpp"

namespace lxf {

// (a)_n = a (a+1) ... (a+n-1)
template <class T> Cx<T> pochhammer(const Cx<T>& a, int n);

// 1F_q(a; bs; z) by term-ratio recursion. Pole if some b_j is a non-positive integer.
template <class T>
SeriesResult<T> hyper_1fq(const Cx<T>& a, const std::vector<Cx<T>>& bs, const Cx<T>& z, const TruncationPolicy& pol);

// Exponential closed form of 1F_q(1; <(m+i)/q>_{i=1..q}; z), principal z^(1/q).
template <class T> Cx<T> prudnikov_closed_form(int m, int q, const Cx<T>& z);

} // namespace lxf
