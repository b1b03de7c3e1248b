#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rouquier/combinatorics.hpp"
#include "rouquier/hyperplanes.hpp"

namespace rouquier {

/// A partition of {0, ..., universe-1} into non-empty blocks. Blocks are kept
/// sorted internally and ordered by their least element.
class SetPartition {
 public:
  SetPartition() = default;

  static SetPartition singletons(std::size_t universe);
  /// Elements with equal labels share a block.
  static SetPartition from_labels(std::span<const std::size_t> labels);
  /// Throws std::invalid_argument unless the blocks form a disjoint cover.
  static SetPartition from_blocks(std::size_t universe,
                                  std::vector<std::vector<std::size_t>> blocks);

  std::size_t universe() const { return universe_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// Block number of every element.
  std::vector<std::size_t> labels() const;
  bool same_block(std::size_t i, std::size_t j) const;
  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition& coarser) const;
  bool is_trivial() const { return blocks_.size() == universe_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// Weighted union-find over a fixed number of elements.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t i);
  bool unite(std::size_t i, std::size_t j);
  SetPartition partition();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

/// Finest partition coarser than every input. Empty input: `universe`
/// singletons. Throws std::invalid_argument on mismatched universes.
SetPartition join_partitions(std::span<const SetPartition> parts, std::size_t universe);
SetPartition join_partitions(std::span<const SetPartition> parts);

/// Partition of enumerate_multipartitions(d, r) into the blocks attached to a
/// single essential hyperplane. Throws std::invalid_argument if h is not
/// essential for (d, r).
SetPartition blocks_for_hyperplane(const EssentialHyperplane& h, int d, int r);

/// Rouquier blocks: join of blocks_for_hyperplane over the hyperplanes
/// containing phi.
SetPartition rouquier_blocks(const Specialization& phi);

/// Residue of a node in the residue field at a prime over p, keyed by exact
/// integer data. q_class: n != 0. pair: n = 0 and the component's parameter
/// is unique. coarse: n = 0 otherwise.
struct ResidueKey {
  enum class Kind { q_class, pair, coarse };
  Kind kind = Kind::q_class;
  int delta = 0;
  int exponent = 0;
  int root_class = 0;

  friend bool operator==(const ResidueKey&, const ResidueKey&) = default;
  friend auto operator<=>(const ResidueKey&, const ResidueKey&) = default;
};

using ResidueProfile = std::map<ResidueKey, int>;

ResidueProfile residue_profile(const MultiPartition& lambda, const Specialization& phi, int p);

/// Grouping of all characters by residue_profile at the prime p.
SetPartition residue_partition(const Specialization& phi, int p);

/// Transitive closure of p-residue equivalence over every prime p dividing
/// d^r r!.
SetPartition rouquier_blocks_residue_oracle(const Specialization& phi);

/// Grouping by charged content with respect to m.
SetPartition content_partition(int d, int r, const WeightSystem& m);

/// Closure of pair moves: equal off {s, t} and equal charged content of the
/// (s, t) bipartition with respect to (m_s, m_t).
SetPartition content_move_closure(int d, int r, const WeightSystem& m);

struct CheckFailure {
  std::string check;
  std::string message;
  std::vector<MultiPartition> witnesses;
};

struct BlockReport {
  Specialization phi;
  std::vector<std::string> checks_run;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks on rouquier_blocks(phi): a and A constant per block; refinement of
/// content_partition when n = 1; agreement of every pair hyperplane with the
/// two-component computation. Failures are reported, never thrown.
BlockReport verify_block_invariants(const Specialization& phi);

/// verify_block_invariants plus equality with the residue oracle.
BlockReport verify_specialization(const Specialization& phi);

}  // namespace rouquier
