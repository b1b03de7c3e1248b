#pragma once

#include <vector>

#include "cyclotomic_field.hpp"
#include "rouquier/combinatorics.hpp"
#include "rouquier/schur.hpp"

namespace rouquier::testing {

inline Q qpow(const Q& base, long long e) {
  Q out = 1;
  const Q b = e < 0 ? Q(1) / base : base;
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) out *= b;
  return out;
}

/// Value of the factored element at a rational point.
inline Q evaluate(const FactoredSchurElement& f, const std::vector<Q>& u, const Q& x) {
  Q v = f.sign;
  v *= qpow(x, f.x_exponent);
  for (int j = 0; j < f.d; ++j) v *= qpow(u[j], f.u_exponents[j]);
  for (const auto& [c, e] : f.xminus1) v *= qpow(qpow(x, c) - 1, e);
  for (const auto& [key, e] : f.binomials) v *= qpow(qpow(x, key.k) * u[key.s] - u[key.t], e);
  return v;
}

/// Product formula for s_lambda evaluated literally with symbols padded to L
/// entries, without any cancellation.
inline Q evaluate_product_formula(const MultiPartition& lambda, int L, const std::vector<Q>& u,
                                  const Q& x) {
  const int d = lambda.d();
  const int r = lambda.size();
  std::vector<std::vector<int>> B(d);
  for (int s = 0; s < d; ++s) {
    const auto& p = lambda[s];
    // beta-numbers L + lambda_i - i, i = 1..L
    for (int i = 1; i <= L; ++i) B[s].push_back(L + (i <= p.height() ? p.part(i - 1) : 0) - i);
  }
  const long long aL = static_cast<long long>(r) * (d - 1) +
                       static_cast<long long>(d) * (d - 1) / 2 * (static_cast<long long>(L) * (L - 1) / 2);
  const long long bnum = static_cast<long long>(d) * L * (L - 1) * (2LL * d * L - d - 3);

  Q nu = 1;
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t) nu *= qpow(u[s] - u[t], L);
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t)
      for (int b : B[s])
        for (int k = 1; k <= b; ++k) nu *= qpow(x, k) * u[s] - u[t];

  Q delta = 1;
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t)
      for (int bs : B[s])
        for (int bt : B[t]) delta *= qpow(x, bs) * u[s] - qpow(x, bt) * u[t];
  for (int s = 0; s < d; ++s)
    for (int i = 0; i < L; ++i)
      for (int j = i + 1; j < L; ++j) delta *= qpow(x, B[s][i]) * u[s] - qpow(x, B[s][j]) * u[s];

  Q prod_u = 1;
  for (const auto& uj : u) prod_u *= uj;
  Q v = (aL % 2 == 0) ? Q(1) : Q(-1);
  v *= qpow(x, bnum / 12);
  v *= qpow(x - 1, -r) * qpow(prod_u, -r);
  return v * nu / delta;
}

/// Value at u_j = zeta_d^j, x = 1, computed from the factored form; each
/// (x^c - 1) contributes c once the net order at x = 1 is zero.
inline CyclotomicField::Element group_specialization(const FactoredSchurElement& f,
                                                     const CyclotomicField& K) {
  auto v = K.constant(Q(f.sign));
  long long zeta_exp = 0;
  for (int j = 0; j < f.d; ++j) zeta_exp += j * f.u_exponents[j];
  v = K.mul(v, K.zeta_power(zeta_exp));
  for (const auto& [c, e] : f.xminus1) v = K.mul(v, K.constant(qpow(Q(c), e)));
  for (const auto& [key, e] : f.binomials)
    v = K.mul(v, K.pow(K.sub(K.zeta_power(key.s), K.zeta_power(key.t)), e));
  return v;
}

}  // namespace rouquier::testing
