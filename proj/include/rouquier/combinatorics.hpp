#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rouquier {

/// An integer partition stored as its non-increasing positive parts.
/// The empty partition (size 0, height 0) is a regular value.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is non-increasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int part(std::size_t i) const { return parts_[i]; }
  int height() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A d-tuple of partitions; labels an irreducible character of G(d,1,r).
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);

  int d() const { return static_cast<int>(components_.size()); }
  const Partition& operator[](std::size_t a) const { return components_[a]; }
  std::span<const Partition> components() const { return components_; }
  /// Total number of boxes r.
  int size() const;
  /// max_a h^{(a)}.
  int height() const;
  std::vector<int> size_vector() const;

  std::string to_string() const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// Strictly decreasing non-negative integers.
struct BetaSequence {
  std::vector<int> entries;

  friend bool operator==(const BetaSequence&, const BetaSequence&) = default;
};

using WeightSystem = std::vector<int>;

/// Rows of shifted beta-numbers; row a has length hc + m^{(a)}.
struct ChargedSymbol {
  std::vector<BetaSequence> rows;
  /// hc_lambda = max_a (h^{(a)} - m^{(a)}).
  int charged_height = 0;

  std::vector<int> row_lengths() const;
  friend bool operator==(const ChargedSymbol&, const ChargedSymbol&) = default;
};

/// Multiset of non-negative integers stored as value -> multiplicity.
struct ContentMultiset {
  std::map<int, int> counts;

  int total() const;
  std::vector<int> sorted_values() const;

  friend bool operator==(const ContentMultiset&, const ContentMultiset&) = default;
  friend auto operator<=>(const ContentMultiset&, const ContentMultiset&) = default;
};

/// Box (i, j) of component a; i and j are 1-based.
struct Node {
  int i = 1;
  int j = 1;
  int a = 0;

  int content() const { return j - i; }
  friend bool operator==(const Node&, const Node&) = default;
};

/// All partitions of n in descending lexicographic order of parts.
std::vector<Partition> enumerate_partitions(int n);

/// All d-tuples of partitions of total size r. Component 0 is compared
/// first, larger component sizes come first, and partitions of equal size
/// follow enumerate_partitions order. This is the canonical character order.
std::vector<MultiPartition> enumerate_multipartitions(int d, int r);

/// (beta_1 + shift, ..., beta_h + shift, shift - 1, ..., 0) with
/// beta_i = h + lambda_i - i.
BetaSequence beta_number(const Partition& p, int shift);

/// m-charged standard symbol. With all-zero weights this is the ordinary
/// standard symbol.
ChargedSymbol charged_symbol(const MultiPartition& lambda, const WeightSystem& m);

ContentMultiset content_multiset(const ChargedSymbol& symbol);

/// Charged content of lambda with respect to m.
ContentMultiset charged_content(const MultiPartition& lambda, const WeightSystem& m);

std::vector<Node> diagram_nodes(const MultiPartition& lambda);

/// Number of standard tableaux of a partition (hook-length formula).
std::uint64_t standard_tableaux_count(const Partition& p);

/// Degree of the irreducible character of G(d,1,r) labelled by lambda:
/// r! * prod_a f^{lambda^{(a)}} / |lambda^{(a)}|!.
std::uint64_t dimension(const MultiPartition& lambda);

std::uint64_t factorial(int n);

/// d^r * r!, the order of G(d,1,r).
std::uint64_t group_order(int d, int r);

}  // namespace rouquier
