#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leadtrack/graph.hpp"

namespace leadtrack {

using Label = std::uint64_t;

/// node -> community label over a finite node universe.
class LabeledPartition {
 public:
  using Entry = std::pair<NodeId, Label>;

  LabeledPartition() = default;
  /// ContractError if a node is labelled twice.
  explicit LabeledPartition(std::vector<Entry> entries);
  /// Label i for every node of communities[i].
  static LabeledPartition from_communities(std::span<const NodeSet> communities);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::optional<Label> label_of(NodeId v) const;
  NodeSet nodes() const;

  /// Keeps only nodes that are also in `universe` (sorted).
  LabeledPartition restricted_to(std::span<const NodeId> universe) const;

  friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by node
};

}  // namespace leadtrack
