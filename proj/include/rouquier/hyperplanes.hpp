#pragma once

#include <string>
#include <variant>
#include <vector>

namespace rouquier {

/// Cyclotomic specialization u_j -> zeta_d^j q^{m_j}, x -> q^n, recorded in
/// q-exponent coordinates.
struct Specialization {
  int d = 1;
  int r = 1;
  std::vector<int> weights;
  int n = 1;

  Specialization() = default;
  /// Throws std::invalid_argument on d < 1, r < 1 or a weight list of the
  /// wrong length.
  Specialization(int d, int r, std::vector<int> weights, int n);

  /// m = (1, 0, ..., 0), n = 1.
  static Specialization spetsial(int d, int r);

  std::string to_string() const;
  friend bool operator==(const Specialization&, const Specialization&) = default;
};

/// k*N + M_s - M_t = 0 with 0 <= s < t < d.
struct PairHyperplane {
  int k = 0;
  int s = 0;
  int t = 1;
  friend bool operator==(const PairHyperplane&, const PairHyperplane&) = default;
  friend auto operator<=>(const PairHyperplane&, const PairHyperplane&) = default;
};

/// N = 0.
struct NHyperplane {
  friend bool operator==(const NHyperplane&, const NHyperplane&) = default;
  friend auto operator<=>(const NHyperplane&, const NHyperplane&) = default;
};

using EssentialHyperplane = std::variant<NHyperplane, PairHyperplane>;

std::string to_string(const EssentialHyperplane& h);

/// True iff zeta_d^s - zeta_d^t lies in some prime ideal of Z[zeta_d].
bool is_essential_pair(int d, int s, int t);

/// N = 0 first, then pair hyperplanes ordered by (s, t, k).
std::vector<EssentialHyperplane> essential_hyperplanes(int d, int r);

/// Validates that h is one of essential_hyperplanes(d, r).
bool is_essential(const EssentialHyperplane& h, int d, int r);

/// The essential hyperplanes whose equation the exponents of phi satisfy.
std::vector<EssentialHyperplane> hyperplanes_containing(const Specialization& phi);

}  // namespace rouquier
