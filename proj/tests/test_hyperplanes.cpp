#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rouquier/cyclotomics.hpp"
#include "rouquier/hyperplanes.hpp"

using namespace rouquier;

namespace {

std::size_t essential_pair_count(int d) {
  std::size_t count = 0;
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t) {
      // non-unit iff the order of zeta^{t-s} is a prime power
      const int order = d / std::gcd(d, t - s);
      if (prime_divisors(order).size() == 1) ++count;
    }
  return count;
}

bool contains(const std::vector<EssentialHyperplane>& hs, const EssentialHyperplane& h) {
  return std::find(hs.begin(), hs.end(), h) != hs.end();
}

}  // namespace

TEST_CASE("specialization validation") {
  CHECK_THROWS_AS(Specialization(2, 2, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Specialization(0, 2, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Specialization(2, 0, {0, 0}, 1), std::invalid_argument);
  const auto s = Specialization::spetsial(3, 2);
  CHECK(s.weights == std::vector<int>{1, 0, 0});
  CHECK(s.n == 1);
}

TEST_CASE("essentiality of (0,1) depends on d") {
  CHECK(is_essential_pair(2, 0, 1));
  CHECK_FALSE(is_essential_pair(6, 0, 1));
  CHECK(is_essential_pair(6, 0, 2));
  CHECK(is_essential_pair(6, 0, 3));
  CHECK(is_essential(PairHyperplane{0, 0, 1}, 2, 2));
  CHECK_FALSE(is_essential(PairHyperplane{0, 0, 1}, 6, 2));
  CHECK_FALSE(is_essential(PairHyperplane{2, 0, 1}, 2, 2));
  CHECK_FALSE(is_essential(PairHyperplane{0, 1, 0}, 2, 2));
}

TEST_CASE("hyperplane counts") {
  CHECK(essential_hyperplanes(2, 2).size() == 4);
  CHECK(essential_hyperplanes(6, 2).size() == 28);
  CHECK(essential_hyperplanes(1, 5).size() == 1);
  for (int d = 1; d <= 12; ++d)
    for (int r = 1; r <= 5; ++r) {
      const auto hs = essential_hyperplanes(d, r);
      CHECK(hs.size() == 1 + essential_pair_count(d) * (2 * r - 1));
      CHECK(std::holds_alternative<NHyperplane>(hs.front()));
      for (const auto& h : hs) CHECK(is_essential(h, d, r));
    }
}

TEST_CASE("hyperplanes containing a specialization") {
  const auto spets = hyperplanes_containing(Specialization::spetsial(2, 2));
  REQUIRE(spets.size() == 1);
  CHECK(spets.front() == EssentialHyperplane{PairHyperplane{-1, 0, 1}});

  CHECK(hyperplanes_containing(Specialization(2, 2, {0, 100}, 1)).empty());

  const auto zero = hyperplanes_containing(Specialization(2, 2, {0, 0}, 0));
  CHECK(zero.size() == 4);

  // kn + m_s - m_t = 0 for each listed pair; nothing else qualifies.
  const Specialization phi(4, 3, {2, -1, 0, 3}, 1);
  const auto hs = hyperplanes_containing(phi);
  for (const auto& h : essential_hyperplanes(4, 3)) {
    bool on = false;
    if (const auto* p = std::get_if<PairHyperplane>(&h))
      on = p->k * phi.n + phi.weights[p->s] - phi.weights[p->t] == 0;
    CHECK(contains(hs, h) == on);
  }
}

TEST_CASE("hyperplane labels") {
  CHECK(to_string(EssentialHyperplane{NHyperplane{}}) == "N=0");
  CHECK(to_string(EssentialHyperplane{PairHyperplane{-1, 0, 1}}) == "-1N+M0-M1=0");
}
