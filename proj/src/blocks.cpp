#include "rouquier/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rouquier/cyclotomics.hpp"
#include "rouquier/schur.hpp"

namespace rouquier {

namespace {

template <class KeyFn>
SetPartition group_by(std::span<const MultiPartition> chars, KeyFn&& key_of) {
  using Key = std::decay_t<decltype(key_of(chars.front()))>;
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> labels;
  labels.reserve(chars.size());
  for (const auto& lambda : chars) {
    auto [it, inserted] = ids.try_emplace(key_of(lambda), ids.size());
    labels.push_back(it->second);
  }
  return SetPartition::from_labels(labels);
}

/// Components off {s, t}, with s and t blanked.
std::vector<Partition> outside_pair(const MultiPartition& lambda, int s, int t) {
  std::vector<Partition> rest(lambda.components().begin(), lambda.components().end());
  rest[s] = Partition{};
  rest[t] = Partition{};
  return rest;
}

MultiPartition pair_of(const MultiPartition& lambda, int s, int t) {
  return MultiPartition({lambda[s], lambda[t]});
}

std::vector<int> primes_dividing_group_order(int d, int r) {
  std::set<int> primes;
  for (int p : prime_divisors(d)) primes.insert(p);
  for (int k = 2; k <= r; ++k)
    if (is_prime(k)) primes.insert(k);
  return {primes.begin(), primes.end()};
}

std::vector<MultiPartition> witnesses_of(const std::vector<MultiPartition>& chars,
                                         std::span<const std::size_t> members,
                                         std::size_t limit = 6) {
  std::vector<MultiPartition> out;
  for (std::size_t i = 0; i < members.size() && i < limit; ++i) out.push_back(chars[members[i]]);
  return out;
}

/// First block of `finer` not contained in a block of `coarser`.
std::optional<std::vector<std::size_t>> refinement_witness(const SetPartition& finer,
                                                           const SetPartition& coarser) {
  const auto labels = coarser.labels();
  for (const auto& block : finer.blocks())
    for (std::size_t i : block)
      if (labels[i] != labels[block.front()]) return std::vector<std::size_t>{block.front(), i};
  return std::nullopt;
}

std::string describe(const SetPartition& sp, const std::vector<MultiPartition>& chars) {
  std::ostringstream os;
  for (const auto& block : sp.blocks()) {
    os << '{';
    for (std::size_t i = 0; i < block.size(); ++i) os << (i ? " " : "") << chars[block[i]].to_string();
    os << '}';
  }
  return os.str();
}

}  // namespace

// SetPartition

SetPartition SetPartition::singletons(std::size_t universe) {
  std::vector<std::size_t> labels(universe);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

SetPartition SetPartition::from_labels(std::span<const std::size_t> labels) {
  SetPartition sp;
  sp.universe_ = labels.size();
  std::map<std::size_t, std::size_t> block_of_label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = block_of_label.try_emplace(labels[i], sp.blocks_.size());
    if (inserted) sp.blocks_.emplace_back();
    sp.blocks_[it->second].push_back(i);
  }
  // Blocks are created in order of first appearance, so least elements ascend.
  return sp;
}

SetPartition SetPartition::from_blocks(std::size_t universe,
                                       std::vector<std::vector<std::size_t>> blocks) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(universe, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("set partition: empty block");
    for (std::size_t i : blocks[b]) {
      if (i >= universe) throw std::invalid_argument("set partition: element out of range");
      if (labels[i] != unset) throw std::invalid_argument("set partition: blocks overlap");
      labels[i] = b;
    }
  }
  if (std::find(labels.begin(), labels.end(), unset) != labels.end())
    throw std::invalid_argument("set partition: blocks do not cover the universe");
  return from_labels(labels);
}

std::vector<std::size_t> SetPartition::labels() const {
  std::vector<std::size_t> out(universe_);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t i : blocks_[b]) out[i] = b;
  return out;
}

bool SetPartition::same_block(std::size_t i, std::size_t j) const {
  const auto l = labels();
  return l.at(i) == l.at(j);
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.universe_ != universe_) return false;
  return !refinement_witness(*this, coarser).has_value();
}

// UnionFind

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t i) {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool UnionFind::unite(std::size_t i, std::size_t j) {
  i = find(i);
  j = find(j);
  if (i == j) return false;
  if (rank_[i] < rank_[j]) std::swap(i, j);
  parent_[j] = i;
  if (rank_[i] == rank_[j]) ++rank_[i];
  return true;
}

SetPartition UnionFind::partition() {
  std::vector<std::size_t> labels(parent_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) labels[i] = find(i);
  return SetPartition::from_labels(labels);
}

// Lattice join

SetPartition join_partitions(std::span<const SetPartition> parts, std::size_t universe) {
  UnionFind uf(universe);
  for (const auto& part : parts) {
    if (part.universe() != universe)
      throw std::invalid_argument("join_partitions: partitions over different universes");
    for (const auto& block : part.blocks())
      for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block.front(), block[i]);
  }
  return uf.partition();
}

SetPartition join_partitions(std::span<const SetPartition> parts) {
  return join_partitions(parts, parts.empty() ? 0 : parts.front().universe());
}

// Per-hyperplane blocks

SetPartition blocks_for_hyperplane(const EssentialHyperplane& h, int d, int r) {
  if (!is_essential(h, d, r))
    throw std::invalid_argument("blocks_for_hyperplane: " + to_string(h) + " is not essential");
  const auto chars = enumerate_multipartitions(d, r);
  if (std::holds_alternative<NHyperplane>(h))
    return group_by(chars, [](const MultiPartition& l) { return l.size_vector(); });

  const auto p = std::get<PairHyperplane>(h);
  const WeightSystem local{0, p.k};
  return group_by(chars, [&](const MultiPartition& l) {
    return std::make_pair(outside_pair(l, p.s, p.t), charged_content(pair_of(l, p.s, p.t), local));
  });
}

SetPartition rouquier_blocks(const Specialization& phi) {
  std::vector<SetPartition> parts;
  for (const auto& h : hyperplanes_containing(phi))
    parts.push_back(blocks_for_hyperplane(h, phi.d, phi.r));
  const std::size_t universe = enumerate_multipartitions(phi.d, phi.r).size();
  return join_partitions(parts, universe);
}

// Residues

ResidueProfile residue_profile(const MultiPartition& lambda, const Specialization& phi, int p) {
  const int d = phi.d;
  if (lambda.d() != d) throw std::invalid_argument("residue_profile: wrong number of components");
  std::vector<int> cls(d);
  for (int a = 0; a < d; ++a) cls[a] = root_class_mod_p(d, a, p);

  std::vector<bool> unique(d, true);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (a != b && phi.weights[a] == phi.weights[b] && cls[a] == cls[b]) unique[a] = false;

  ResidueProfile profile;
  for (const auto& node : diagram_nodes(lambda)) {
    const int a = node.a;
    ResidueKey key;
    key.root_class = cls[a];
    if (phi.n != 0) {
      key.kind = ResidueKey::Kind::q_class;
      key.exponent = phi.weights[a] + phi.n * node.content();
    } else if (unique[a]) {
      key.kind = ResidueKey::Kind::pair;
      key.delta = ((node.content() % p) + p) % p;
      key.exponent = phi.weights[a];
    } else {
      key.kind = ResidueKey::Kind::coarse;
      key.exponent = phi.weights[a];
    }
    ++profile[key];
  }
  return profile;
}

SetPartition residue_partition(const Specialization& phi, int p) {
  const auto chars = enumerate_multipartitions(phi.d, phi.r);
  return group_by(chars, [&](const MultiPartition& l) { return residue_profile(l, phi, p); });
}

SetPartition rouquier_blocks_residue_oracle(const Specialization& phi) {
  std::vector<SetPartition> parts;
  for (int p : primes_dividing_group_order(phi.d, phi.r)) parts.push_back(residue_partition(phi, p));
  const std::size_t universe = enumerate_multipartitions(phi.d, phi.r).size();
  return join_partitions(parts, universe);
}

// Contents

SetPartition content_partition(int d, int r, const WeightSystem& m) {
  if (static_cast<int>(m.size()) != d)
    throw std::invalid_argument("content_partition: expected d weights");
  const auto chars = enumerate_multipartitions(d, r);
  return group_by(chars, [&](const MultiPartition& l) { return charged_content(l, m); });
}

SetPartition content_move_closure(int d, int r, const WeightSystem& m) {
  if (static_cast<int>(m.size()) != d)
    throw std::invalid_argument("content_move_closure: expected d weights");
  const auto chars = enumerate_multipartitions(d, r);
  std::vector<SetPartition> moves;
  for (int s = 0; s < d; ++s) {
    for (int t = s + 1; t < d; ++t) {
      const WeightSystem local{m[s], m[t]};
      moves.push_back(group_by(chars, [&](const MultiPartition& l) {
        return std::make_pair(outside_pair(l, s, t), charged_content(pair_of(l, s, t), local));
      }));
    }
  }
  return join_partitions(moves, chars.size());
}

// Verification

BlockReport verify_block_invariants(const Specialization& phi) {
  BlockReport report{phi, {}, {}};
  const auto chars = enumerate_multipartitions(phi.d, phi.r);
  const auto blocks = rouquier_blocks(phi);

  report.checks_run.push_back("a_A_constant");
  {
    std::vector<AInvariants> inv;
    inv.reserve(chars.size());
    for (const auto& l : chars) {
      const auto data = specialize_schur(schur_factored(l), phi);
      inv.push_back({data.q_valuation, data.q_degree});
    }
    for (const auto& block : blocks.blocks()) {
      for (std::size_t i : block) {
        if (inv[i] == inv[block.front()]) continue;
        std::ostringstream os;
        os << "a/A differ inside a block: (" << inv[block.front()].a << "," << inv[block.front()].A
           << ") vs (" << inv[i].a << "," << inv[i].A << ")";
        report.failures.push_back({"a_A_constant", os.str(), {chars[block.front()], chars[i]}});
        break;
      }
    }
  }

  if (phi.n == 1) {
    report.checks_run.push_back("refines_content_partition");
    const auto content = content_partition(phi.d, phi.r, phi.weights);
    if (auto w = refinement_witness(blocks, content))
      report.failures.push_back({"refines_content_partition",
                                 "Rouquier block merges characters with different charged content",
                                 witnesses_of(chars, *w)});
  }

  // Pair hyperplanes against the two-component computation at every size l.
  std::map<std::pair<int, int>, std::vector<int>> ks_by_pair;
  for (const auto& h : hyperplanes_containing(phi))
    if (const auto* p = std::get_if<PairHyperplane>(&h)) ks_by_pair[{p->s, p->t}].push_back(p->k);
  if (!ks_by_pair.empty()) report.checks_run.push_back("pair_reduction");
  for (const auto& [st, ks] : ks_by_pair) {
    const auto [s, t] = st;
    for (int l = 1; l <= phi.r; ++l) {
      const auto pairs = enumerate_multipartitions(2, l);
      std::vector<SetPartition> parts;
      for (int k : ks) {
        const WeightSystem local{0, k};
        parts.push_back(group_by(pairs, [&](const MultiPartition& b) { return charged_content(b, local); }));
      }
      if (phi.n == 0)
        parts.push_back(group_by(pairs, [](const MultiPartition& b) { return b.size_vector(); }));
      const auto ours = join_partitions(parts, pairs.size());
      const auto reduced =
          rouquier_blocks(Specialization(2, l, {phi.weights[s], phi.weights[t]}, phi.n));
      if (ours != reduced) {
        std::ostringstream os;
        os << "pair (" << s << "," << t << ") at size " << l << ": " << describe(ours, pairs)
           << " vs two-component blocks " << describe(reduced, pairs);
        report.failures.push_back({"pair_reduction", os.str(), {}});
      }
    }
  }
  return report;
}

BlockReport verify_specialization(const Specialization& phi) {
  auto report = verify_block_invariants(phi);
  report.checks_run.push_back("residue_oracle");
  const auto chars = enumerate_multipartitions(phi.d, phi.r);
  const auto blocks = rouquier_blocks(phi);
  const auto oracle = rouquier_blocks_residue_oracle(phi);
  if (blocks != oracle) {
    std::vector<MultiPartition> w;
    if (auto x = refinement_witness(blocks, oracle)) w = witnesses_of(chars, *x);
    else if (auto y = refinement_witness(oracle, blocks)) w = witnesses_of(chars, *y);
    report.failures.push_back({"residue_oracle",
                               "hyperplane blocks " + describe(blocks, chars) + " vs residue blocks " +
                                   describe(oracle, chars),
                               w});
  }
  return report;
}

}  // namespace rouquier
