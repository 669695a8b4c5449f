#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "motifclust/graph.hpp"

namespace motifclust {

// Possibly overlapping collection of node sets. Members of each community are
// sorted and unique.
class CommunitySet {
 public:
  CommunitySet() = default;
  // Sorts and deduplicates each community; keeps empty ones out.
  explicit CommunitySet(std::vector<std::vector<NodeId>> communities);

  std::size_t size() const noexcept { return communities_.size(); }
  bool empty() const noexcept { return communities_.empty(); }
  std::span<const NodeId> operator[](std::size_t i) const noexcept { return communities_[i]; }
  const std::vector<std::vector<NodeId>>& communities() const noexcept { return communities_; }

  // Largest member id + 1, or 0 when empty.
  NodeId id_bound() const noexcept;

  bool operator==(const CommunitySet&) const = default;

 private:
  std::vector<std::vector<NodeId>> communities_;
};

// Node -> communities inverted index. memberships(u) lists community indices
// in ascending order.
class MembershipIndex {
 public:
  MembershipIndex(const CommunitySet& set, NodeId node_count);

  std::span<const std::uint32_t> memberships(NodeId u) const noexcept {
    if (u + 1 >= offsets_.size()) return {};
    return {ids_.data() + offsets_[u], ids_.data() + offsets_[u + 1]};
  }

  // True if some community contains both nodes.
  bool share_community(NodeId a, NodeId b) const noexcept;
  // True if some community contains all three nodes.
  bool share_community(NodeId a, NodeId b, NodeId c) const noexcept;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> ids_;
};

}  // namespace motifclust
