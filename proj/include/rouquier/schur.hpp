#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rouquier/combinatorics.hpp"
#include "rouquier/cyclotomics.hpp"
#include "rouquier/hyperplanes.hpp"

namespace rouquier {

/// Key (k, s, t), s < t, standing for the binomial x^k u_s - u_t.
struct BinomialKey {
  int k = 0;
  int s = 0;
  int t = 1;
  friend bool operator==(const BinomialKey&, const BinomialKey&) = default;
  friend auto operator<=>(const BinomialKey&, const BinomialKey&) = default;
};

/// Schur element of the generic Ariki-Koike algebra in canonical factored form
///
///   sign * x^{x_exponent} * prod_j u_j^{u_exponents[j]}
///        * prod_c (x^c - 1)^{xminus1[c]} * prod_(k,s,t) (x^k u_s - u_t)^{e}.
///
/// Zero exponents are never stored.
struct FactoredSchurElement {
  int d = 1;
  int sign = 1;
  long long x_exponent = 0;
  std::vector<long long> u_exponents;
  std::map<int, long long> xminus1;
  std::map<BinomialKey, long long> binomials;

  /// Order of vanishing at x = 1, i.e. the sum of the xminus1 exponents.
  long long vanishing_order_at_one() const;

  /// Exponent of each cyclotomic polynomial Phi_e(x) in the x-only part.
  std::map<int, long long> cyclotomic_exponents() const;

  friend bool operator==(const FactoredSchurElement&, const FactoredSchurElement&) = default;
};

/// Numerical data of the Schur element after a cyclotomic specialization:
/// psi * q^{a} * (monic product of K-cyclotomic polynomials in q).
struct SpecializedSchurData {
  int d = 1;
  long long q_valuation = 0;
  long long q_degree = 0;
  /// w -> net exponent of the scalar (1 - zeta_d^w), 0 < w < d.
  std::map<int, long long> degenerate_scalars;
  /// c -> net exponent of the rational integer c, from x -> 1 (n = 0 only).
  std::map<long long, long long> integer_content;

  /// v_P(psi) for any prime P of Z[zeta_d] over p (see valuation_one_minus_zeta).
  Rational p_valuation(int p) const;
  /// Primes at which psi has positive valuation.
  std::set<int> supporting_primes() const;
};

struct AInvariants {
  long long a = 0;
  long long A = 0;
  friend bool operator==(const AInvariants&, const AInvariants&) = default;
};

struct CharacterEssentialMonomials {
  std::set<BinomialKey> pairs;
  bool z_flag = false;
};

/// a_L = r(d-1) + C(d,2) C(L,2).
long long schur_sign_exponent(int d, int r, int L);
/// b_L = d L (L-1) (2dL - d - 3) / 12; throws if not integral.
long long schur_x_exponent(int d, int L);

/// Factored Schur element of chi_lambda computed from the ordinary symbol
/// padded to L entries per row (default L = h_lambda). Throws
/// std::invalid_argument when L < h_lambda or lambda is empty.
FactoredSchurElement schur_factored(const MultiPartition& lambda,
                                    std::optional<int> L = std::nullopt);

/// Throws std::logic_error if n = 0 and the element has a zero or pole at x = 1.
SpecializedSchurData specialize_schur(const FactoredSchurElement& element,
                                      const Specialization& phi);

/// q-valuation and q-degree of the specialized Schur element.
AInvariants a_and_A(const MultiPartition& lambda, const Specialization& phi);

/// Prime numbers under which some character's scalar psi is not a unit.
std::set<int> bad_prime_numbers(const Specialization& phi);

/// Binomials with positive exponent whose root-of-unity difference is a
/// non-unit, and whether some Phi_{p^b}(x) divides the Schur element.
CharacterEssentialMonomials character_essential_monomials(const MultiPartition& lambda);
CharacterEssentialMonomials character_essential_monomials(const FactoredSchurElement& element);

}  // namespace rouquier
