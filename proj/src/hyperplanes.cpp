#include "rouquier/hyperplanes.hpp"

#include <sstream>
#include <stdexcept>

#include "rouquier/cyclotomics.hpp"

namespace rouquier {

Specialization::Specialization(int d_, int r_, std::vector<int> weights_, int n_)
    : d(d_), r(r_), weights(std::move(weights_)), n(n_) {
  if (d < 1) throw std::invalid_argument("specialization: d must be positive");
  if (r < 1) throw std::invalid_argument("specialization: r must be positive");
  if (static_cast<int>(weights.size()) != d)
    throw std::invalid_argument("specialization: expected d weights");
}

Specialization Specialization::spetsial(int d, int r) {
  std::vector<int> m(d, 0);
  m[0] = 1;
  return Specialization(d, r, std::move(m), 1);
}

std::string Specialization::to_string() const {
  std::ostringstream os;
  os << "d=" << d << " r=" << r << " n=" << n << " m=(";
  for (int j = 0; j < d; ++j) os << (j ? "," : "") << weights[j];
  os << ')';
  return os.str();
}

std::string to_string(const EssentialHyperplane& h) {
  if (std::holds_alternative<NHyperplane>(h)) return "N=0";
  const auto& p = std::get<PairHyperplane>(h);
  std::ostringstream os;
  os << p.k << "N+M" << p.s << "-M" << p.t << "=0";
  return os.str();
}

bool is_essential_pair(int d, int s, int t) {
  if (s == t) return false;
  return prime_power_support(d, t - s).has_value();
}

std::vector<EssentialHyperplane> essential_hyperplanes(int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("essential_hyperplanes: need d, r >= 1");
  std::vector<EssentialHyperplane> out{NHyperplane{}};
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t)
      if (is_essential_pair(d, s, t))
        for (int k = -r + 1; k < r; ++k) out.emplace_back(PairHyperplane{k, s, t});
  return out;
}

bool is_essential(const EssentialHyperplane& h, int d, int r) {
  if (std::holds_alternative<NHyperplane>(h)) return true;
  const auto& p = std::get<PairHyperplane>(h);
  return 0 <= p.s && p.s < p.t && p.t < d && -r < p.k && p.k < r &&
         is_essential_pair(d, p.s, p.t);
}

std::vector<EssentialHyperplane> hyperplanes_containing(const Specialization& phi) {
  std::vector<EssentialHyperplane> out;
  for (const auto& h : essential_hyperplanes(phi.d, phi.r)) {
    if (std::holds_alternative<NHyperplane>(h)) {
      if (phi.n == 0) out.push_back(h);
      continue;
    }
    const auto& p = std::get<PairHyperplane>(h);
    if (p.k * phi.n + phi.weights[p.s] - phi.weights[p.t] == 0) out.push_back(h);
  }
  return out;
}

}  // namespace rouquier
