#include "motifclust/communities.hpp"

#include <algorithm>

namespace motifclust {

CommunitySet::CommunitySet(std::vector<std::vector<NodeId>> communities) {
  communities_.reserve(communities.size());
  for (auto& c : communities) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!c.empty()) communities_.push_back(std::move(c));
  }
}

NodeId CommunitySet::id_bound() const noexcept {
  NodeId bound = 0;
  for (const auto& c : communities_) bound = std::max(bound, static_cast<NodeId>(c.back() + 1));
  return bound;
}

MembershipIndex::MembershipIndex(const CommunitySet& set, NodeId node_count) {
  NodeId bound = std::max(node_count, set.id_bound());
  offsets_.assign(static_cast<std::size_t>(bound) + 1, 0);
  for (const auto& c : set.communities()) {
    for (NodeId u : c) ++offsets_[u + 1];
  }
  for (std::size_t u = 0; u < bound; ++u) offsets_[u + 1] += offsets_[u];
  ids_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Communities are visited in index order, so each node's list comes out sorted.
  for (std::uint32_t j = 0; j < set.size(); ++j) {
    for (NodeId u : set[j]) ids_[cursor[u]++] = j;
  }
}

bool MembershipIndex::share_community(NodeId a, NodeId b) const noexcept {
  auto x = memberships(a);
  auto y = memberships(b);
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

bool MembershipIndex::share_community(NodeId a, NodeId b, NodeId c) const noexcept {
  auto x = memberships(a);
  auto y = memberships(b);
  auto z = memberships(c);
  auto i = x.begin();
  auto j = y.begin();
  auto k = z.begin();
  while (i != x.end() && j != y.end() && k != z.end()) {
    std::uint32_t top = std::max({*i, *j, *k});
    if (*i == top && *j == top && *k == top) return true;
    if (*i < top) ++i;
    if (*j < top) ++j;
    if (*k < top) ++k;
  }
  return false;
}

}  // namespace motifclust
