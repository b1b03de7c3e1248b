#include "rouquier/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace rouquier {

namespace {

class SchurBuilder {
 public:
  SchurBuilder(int d, int r, int L) {
    element_.d = d;
    element_.sign = (schur_sign_exponent(d, r, L) % 2 == 0) ? 1 : -1;
    element_.x_exponent = schur_x_exponent(d, L);
    element_.u_exponents.assign(d, -r);
    element_.xminus1[1] = -r;
  }

  /// Multiplies by (x^a u_s - x^b u_t)^e.
  void add(long long a, int s, long long b, int t, long long e) {
    if (s == t) {
      if (a == b) throw std::logic_error("vanishing binomial in Schur element");
      // x^a - x^b = x^min * (x^|a-b| - 1), with a sign when a < b.
      element_.u_exponents[s] += e;
      element_.x_exponent += std::min(a, b) * e;
      if (a < b) flip(e);
      element_.xminus1[static_cast<int>(std::abs(a - b))] += e;
      return;
    }
    element_.x_exponent += b * e;
    const long long k = a - b;
    if (s < t) {
      element_.binomials[{static_cast<int>(k), s, t}] += e;
    } else {
      // x^k u_s - u_t = -x^k (x^{-k} u_t - u_s)
      flip(e);
      element_.x_exponent += k * e;
      element_.binomials[{static_cast<int>(-k), t, s}] += e;
    }
  }

  FactoredSchurElement finish() && {
    std::erase_if(element_.xminus1, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(element_.binomials, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [key, e] : element_.binomials)
      if (e < 0) throw std::logic_error("Schur element has a binomial in its denominator");
    if (element_.vanishing_order_at_one() != 0)
      throw std::logic_error("Schur element has a zero or pole at x = 1");
    return std::move(element_);
  }

 private:
  void flip(long long e) {
    if (e % 2 != 0) element_.sign = -element_.sign;
  }

  FactoredSchurElement element_;
};

}  // namespace

long long FactoredSchurElement::vanishing_order_at_one() const {
  long long total = 0;
  for (const auto& [c, e] : xminus1) total += e;
  return total;
}

std::map<int, long long> FactoredSchurElement::cyclotomic_exponents() const {
  std::map<int, long long> out;
  // x^c - 1 = prod_{e | c} Phi_e(x)
  for (const auto& [c, e] : xminus1)
    for (int div = 1; div <= c; ++div)
      if (c % div == 0) out[div] += e;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational SpecializedSchurData::p_valuation(int p) const {
  Rational v(0);
  for (const auto& [w, e] : degenerate_scalars)
    v += Rational(static_cast<std::int64_t>(e)) * valuation_one_minus_zeta(d, w, p);
  for (const auto& [c, e] : integer_content)
    v += Rational(static_cast<std::int64_t>(e)) * valuation_integer(d, c, p);
  return v;
}

std::set<int> SpecializedSchurData::supporting_primes() const {
  std::set<int> candidates;
  for (int p : prime_divisors(d)) candidates.insert(p);
  for (const auto& [c, e] : integer_content)
    for (int p : prime_divisors(c)) candidates.insert(p);
  std::set<int> out;
  for (int p : candidates)
    if (p_valuation(p) > Rational(0)) out.insert(p);
  return out;
}

long long schur_sign_exponent(int d, int r, int L) {
  const long long dd = d, ll = L;
  return static_cast<long long>(r) * (dd - 1) + (dd * (dd - 1) / 2) * (ll * (ll - 1) / 2);
}

long long schur_x_exponent(int d, int L) {
  const long long dd = d, ll = L;
  const long long numerator = dd * ll * (ll - 1) * (2 * dd * ll - dd - 3);
  if (numerator % 12 != 0) throw std::logic_error("b_L is not an integer");
  return numerator / 12;
}

FactoredSchurElement schur_factored(const MultiPartition& lambda, std::optional<int> L_opt) {
  const int d = lambda.d();
  const int r = lambda.size();
  if (r < 1) throw std::invalid_argument("schur_factored: lambda must be non-empty");
  const int h = lambda.height();
  const int L = L_opt.value_or(h);
  if (L < h) throw std::invalid_argument("schur_factored: L is smaller than the height");

  // Ordinary standard symbol shifted to L entries in every row.
  std::vector<std::vector<int>> rows(d);
  for (int a = 0; a < d; ++a)
    rows[a] = beta_number(lambda[a], L - lambda[a].height()).entries;

  SchurBuilder builder(d, r, L);

  // numerator
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t) builder.add(0, s, 0, t, L);
  for (int s = 0; s < d; ++s)
    for (int b : rows[s])
      for (int k = 1; k <= b; ++k)
        for (int t = 0; t < d; ++t) builder.add(k, s, 0, t, 1);

  // denominator
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t)
      for (int bs : rows[s])
        for (int bt : rows[t]) builder.add(bs, s, bt, t, -1);
  for (int s = 0; s < d; ++s)
    for (int i = 0; i < L; ++i)
      for (int j = i + 1; j < L; ++j) builder.add(rows[s][i], s, rows[s][j], s, -1);

  return std::move(builder).finish();
}

SpecializedSchurData specialize_schur(const FactoredSchurElement& element,
                                      const Specialization& phi) {
  if (phi.d != element.d)
    throw std::invalid_argument("specialize_schur: specialization has the wrong d");
  const long long n = phi.n;
  const auto& m = phi.weights;

  SpecializedSchurData out;
  out.d = element.d;

  long long monomial = n * element.x_exponent;
  for (int j = 0; j < element.d; ++j) monomial += element.u_exponents[j] * m[j];
  out.q_valuation += monomial;
  out.q_degree += monomial;

  if (n != 0) {
    for (const auto& [c, e] : element.xminus1) {
      out.q_valuation += e * std::min(0LL, n * c);
      out.q_degree += e * std::max(0LL, n * c);
    }
  } else {
    if (element.vanishing_order_at_one() != 0)
      throw std::logic_error("specialize_schur: net order of vanishing at x = 1 is not zero");
    // (x^c - 1)/(x - 1) -> c at x = 1.
    for (const auto& [c, e] : element.xminus1)
      if (c > 1) out.integer_content[c] += e;
  }

  for (const auto& [key, e] : element.binomials) {
    const long long alpha = key.k * n + m[key.s];
    const long long beta = m[key.t];
    if (alpha == beta) {
      // (zeta^s - zeta^t) q^alpha = zeta^s (1 - zeta^{t-s}) q^alpha
      out.q_valuation += e * alpha;
      out.q_degree += e * alpha;
      out.degenerate_scalars[RootIndex(element.d, key.t - key.s).w] += e;
    } else {
      out.q_valuation += e * std::min(alpha, beta);
      out.q_degree += e * std::max(alpha, beta);
    }
  }
  std::erase_if(out.degenerate_scalars, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out.integer_content, [](const auto& kv) { return kv.second == 0; });
  return out;
}

AInvariants a_and_A(const MultiPartition& lambda, const Specialization& phi) {
  const auto data = specialize_schur(schur_factored(lambda), phi);
  return {data.q_valuation, data.q_degree};
}

std::set<int> bad_prime_numbers(const Specialization& phi) {
  std::set<int> out;
  for (const auto& lambda : enumerate_multipartitions(phi.d, phi.r)) {
    const auto primes = specialize_schur(schur_factored(lambda), phi).supporting_primes();
    out.insert(primes.begin(), primes.end());
  }
  return out;
}

CharacterEssentialMonomials character_essential_monomials(const FactoredSchurElement& element) {
  CharacterEssentialMonomials out;
  for (const auto& [key, e] : element.binomials)
    if (e > 0 && prime_power_support(element.d, key.t - key.s)) out.pairs.insert(key);
  for (const auto& [order, e] : element.cyclotomic_exponents())
    if (e > 0 && order > 1 && prime_divisors(order).size() == 1) out.z_flag = true;
  return out;
}

CharacterEssentialMonomials character_essential_monomials(const MultiPartition& lambda) {
  return character_essential_monomials(schur_factored(lambda));
}

}  // namespace rouquier
