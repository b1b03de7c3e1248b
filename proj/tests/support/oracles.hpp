#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "rouquier/blocks.hpp"
#include "rouquier/combinatorics.hpp"

namespace rouquier::testing {

/// Field norm of 1 - zeta_d^w from the complex embedding, rounded.
inline long long norm_one_minus_zeta(int d, long long w) {
  std::complex<double> prod = 1.0;
  for (int k = 1; k <= d; ++k) {
    int a = k, b = d;
    while (b) { int t = a % b; a = b; b = t; }
    if (a != 1) continue;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k * w % d) / d;
    prod *= std::complex<double>(1.0 - std::cos(theta), -std::sin(theta));
  }
  return std::llround(prod.real());
}

/// Number of standard tableaux by recursive removal of corners.
inline std::uint64_t count_tableaux(const std::vector<int>& shape,
                                    std::map<std::vector<int>, std::uint64_t>& memo) {
  int total = 0;
  for (int x : shape) total += x;
  if (total <= 1) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    if (--smaller[i] == 0) smaller.pop_back();
    count += count_tableaux(smaller, memo);
  }
  return memo[shape] = count;
}

/// Charged content straight from rows {lambda_i - i + hc + m_a : 1 <= i <= hc + m_a}.
inline std::vector<int> content_by_formula(const MultiPartition& lambda, const std::vector<int>& m) {
  int hc = 0;
  bool first = true;
  for (int a = 0; a < lambda.d(); ++a) {
    const int v = lambda[a].height() - m[a];
    if (first || v > hc) hc = v;
    first = false;
  }
  std::vector<int> out;
  for (int a = 0; a < lambda.d(); ++a)
    for (int i = 1; i <= hc + m[a]; ++i)
      out.push_back((i <= lambda[a].height() ? lambda[a].part(i - 1) : 0) - i + hc + m[a]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Pairwise closure: i ~ j whenever `related(i, j)`. Quadratic on purpose.
template <class Rel>
SetPartition closure_of(std::size_t n, Rel&& related) {
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (related(i, j)) uf.unite(i, j);
  return uf.partition();
}

}  // namespace rouquier::testing
