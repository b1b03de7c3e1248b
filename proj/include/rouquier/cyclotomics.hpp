#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace rouquier {

using Rational = boost::rational<std::int64_t>;

/// zeta_d^w with the exponent reduced into [0, d).
struct RootIndex {
  int d = 1;
  int w = 0;

  RootIndex(int modulus, long long exponent);
  friend bool operator==(const RootIndex&, const RootIndex&) = default;
};

/// The prime power p^b equal to the order of a root of unity.
struct PrimePower {
  int p = 0;
  int b = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Present iff 1 - zeta_d^w is a non-unit of Z[zeta_d].
using PrimePowerSupport = std::optional<PrimePower>;

int gcd_int(long long a, long long b);
bool is_prime(long long n);
/// Distinct prime divisors in increasing order.
std::vector<int> prime_divisors(long long n);
/// Exponent of p in n (n != 0).
int p_adic_valuation(long long n, int p);
int euler_phi(long long n);
/// d with every factor of p removed.
int p_prime_part(int d, int p);

/// Order of zeta_d^w: d / gcd(d, w mod d).
int cyclotomic_order(int d, long long w);

/// (p, b) when the order of zeta_d^w is p^b. Throws for w = 0 mod d.
PrimePowerSupport prime_power_support(int d, long long w);

/// True iff zeta_d^a and zeta_d^b have the same image in the residue field
/// of any prime over p, i.e. a = b modulo the p'-part of d.
bool roots_equal_mod_p(int d, long long a, long long b, int p);

/// Class of zeta_d^a under roots_equal_mod_p: a mod (p'-part of d).
int root_class_mod_p(int d, long long a, int p);

/// v_P(1 - zeta_d^w) for any prime P of Z[zeta_d] over p, normalised so
/// that v_P(p) = phi(p^{v_p(d)}). Throws for w = 0 mod d.
Rational valuation_one_minus_zeta(int d, long long w, int p);

/// v_P(c) for a rational integer c under the same normalisation.
Rational valuation_integer(int d, long long c, int p);

}  // namespace rouquier
