#include "rouquier/cyclotomics.hpp"

#include <numeric>
#include <stdexcept>

namespace rouquier {

namespace {

long long mod_floor(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

void require_modulus(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
}

void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("expected a prime number");
}

}  // namespace

RootIndex::RootIndex(int modulus, long long exponent) : d(modulus) {
  require_modulus(modulus);
  w = static_cast<int>(mod_floor(exponent, modulus));
}

int gcd_int(long long a, long long b) {
  return static_cast<int>(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b));
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<int> prime_divisors(long long n) {
  if (n < 0) n = -n;
  std::vector<int> out;
  for (long long k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(static_cast<int>(k));
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

int p_adic_valuation(long long n, int p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int euler_phi(long long n) {
  long long result = n;
  for (int p : prime_divisors(n)) result = result / p * (p - 1);
  return static_cast<int>(result);
}

int p_prime_part(int d, int p) {
  while (d % p == 0) d /= p;
  return d;
}

int cyclotomic_order(int d, long long w) {
  require_modulus(d);
  const long long reduced = mod_floor(w, d);
  if (reduced == 0) return 1;
  return d / gcd_int(d, reduced);
}

PrimePowerSupport prime_power_support(int d, long long w) {
  require_modulus(d);
  if (mod_floor(w, d) == 0)
    throw std::invalid_argument("prime_power_support: exponent is 0 mod d");
  const int e = cyclotomic_order(d, w);
  const auto primes = prime_divisors(e);
  if (primes.size() != 1) return std::nullopt;
  return PrimePower{primes.front(), p_adic_valuation(e, primes.front())};
}

bool roots_equal_mod_p(int d, long long a, long long b, int p) {
  require_modulus(d);
  require_prime(p);
  const int dp = p_prime_part(d, p);
  return mod_floor(a - b, dp) == 0;
}

int root_class_mod_p(int d, long long a, int p) {
  require_modulus(d);
  require_prime(p);
  return static_cast<int>(mod_floor(a, p_prime_part(d, p)));
}

Rational valuation_one_minus_zeta(int d, long long w, int p) {
  require_prime(p);
  const auto support = prime_power_support(d, w);
  if (!support || support->p != p) return Rational(0);
  const int local = d / p_prime_part(d, p);  // p^{v_p(d)}
  int pb = 1;
  for (int i = 0; i < support->b; ++i) pb *= p;
  return Rational(euler_phi(local), euler_phi(pb));
}

Rational valuation_integer(int d, long long c, int p) {
  require_modulus(d);
  require_prime(p);
  const int local = d / p_prime_part(d, p);
  return Rational(static_cast<std::int64_t>(p_adic_valuation(c, p)) * euler_phi(local));
}

}  // namespace rouquier
