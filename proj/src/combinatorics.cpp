#include "rouquier/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rouquier {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("a multipartition needs at least one component");
}

int MultiPartition::size() const {
  int total = 0;
  for (const auto& c : components_) total += c.size();
  return total;
}

int MultiPartition::height() const {
  int h = 0;
  for (const auto& c : components_) h = std::max(h, c.height());
  return h;
}

std::vector<int> MultiPartition::size_vector() const {
  std::vector<int> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.size());
  return out;
}

std::string MultiPartition::to_string() const {
  std::string s = "(";
  for (std::size_t a = 0; a < components_.size(); ++a) {
    if (a) s += ',';
    s += components_[a].empty() ? std::string("-") : components_[a].to_string();
  }
  return s + ")";
}

std::vector<int> ChargedSymbol::row_lengths() const {
  std::vector<int> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(static_cast<int>(r.entries.size()));
  return out;
}

int ContentMultiset::total() const {
  int t = 0;
  for (const auto& [v, c] : counts) t += c;
  return t;
}

std::vector<int> ContentMultiset::sorted_values() const {
  std::vector<int> out;
  for (const auto& [v, c] : counts) out.insert(out.end(), c, v);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("partition size must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first gives descending lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<MultiPartition> enumerate_multipartitions(int d, int r) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (r < 0) throw std::invalid_argument("r must be non-negative");

  std::vector<std::vector<Partition>> by_size(r + 1);
  for (int k = 0; k <= r; ++k) by_size[k] = enumerate_partitions(k);

  std::vector<MultiPartition> out;
  std::vector<Partition> current;
  std::function<void(int, int)> rec = [&](int a, int remaining) {
    if (a == d - 1) {
      for (const auto& p : by_size[remaining]) {
        current.push_back(p);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : by_size[k]) {
        current.push_back(p);
        rec(a + 1, remaining - k);
        current.pop_back();
      }
    }
  };
  rec(0, r);
  return out;
}

BetaSequence beta_number(const Partition& p, int shift) {
  if (shift < 0) throw std::invalid_argument("beta-number shift must be non-negative");
  const int h = p.height();
  BetaSequence beta;
  beta.entries.reserve(h + shift);
  for (int i = 1; i <= h; ++i) beta.entries.push_back(h + p.part(i - 1) - i + shift);
  for (int v = shift - 1; v >= 0; --v) beta.entries.push_back(v);
  return beta;
}

ChargedSymbol charged_symbol(const MultiPartition& lambda, const WeightSystem& m) {
  const int d = lambda.d();
  if (static_cast<int>(m.size()) != d)
    throw std::invalid_argument("weight system length must equal d");

  std::vector<int> hc(d);
  for (int a = 0; a < d; ++a) hc[a] = lambda[a].height() - m[a];
  const int top = *std::max_element(hc.begin(), hc.end());

  ChargedSymbol symbol;
  symbol.charged_height = top;
  symbol.rows.reserve(d);
  for (int a = 0; a < d; ++a) {
    const int shift = top - hc[a];
    if (shift < 0) throw std::logic_error("negative symbol shift");
    symbol.rows.push_back(beta_number(lambda[a], shift));
  }
  return symbol;
}

ContentMultiset content_multiset(const ChargedSymbol& symbol) {
  ContentMultiset content;
  for (const auto& row : symbol.rows) {
    for (int v : row.entries) {
      if (v < 0) throw std::logic_error("symbol entries must be non-negative");
      ++content.counts[v];
    }
  }
  return content;
}

ContentMultiset charged_content(const MultiPartition& lambda, const WeightSystem& m) {
  return content_multiset(charged_symbol(lambda, m));
}

std::vector<Node> diagram_nodes(const MultiPartition& lambda) {
  std::vector<Node> nodes;
  nodes.reserve(lambda.size());
  for (int a = 0; a < lambda.d(); ++a) {
    const auto& comp = lambda[a];
    for (int i = 1; i <= comp.height(); ++i)
      for (int j = 1; j <= comp.part(i - 1); ++j) nodes.push_back({i, j, a});
  }
  return nodes;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t group_order(int d, int r) {
  std::uint64_t order = factorial(r);
  for (int i = 0; i < r; ++i) order *= static_cast<std::uint64_t>(d);
  return order;
}

std::uint64_t standard_tableaux_count(const Partition& p) {
  const int h = p.height();
  // n! / prod hooks, accumulated as an exact ratio of reduced factors.
  std::uint64_t numerator = factorial(p.size());
  std::uint64_t hooks = 1;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < p.part(i); ++j) {
      int below = 0;
      for (int k = i + 1; k < h && p.part(k) > j; ++k) ++below;
      hooks *= static_cast<std::uint64_t>(p.part(i) - j + below);
    }
  }
  return numerator / hooks;
}

std::uint64_t dimension(const MultiPartition& lambda) {
  // Multinomial(r; |lambda^{(a)}|) * prod f^{lambda^{(a)}}.
  std::uint64_t dim = 1;
  int placed = 0;
  for (const auto& comp : lambda.components()) {
    const int k = comp.size();
    std::uint64_t binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * static_cast<std::uint64_t>(placed + i) / i;
    placed += k;
    dim *= binom * standard_tableaux_count(comp);
  }
  return dim;
}

}  // namespace rouquier
