#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "motifclust/communities.hpp"
#include "motifclust/graph.hpp"

namespace motifclust {

using NodeLabel = std::int64_t;

// Bijection between external integer labels and dense ids. Dense ids follow
// ascending label order, so the mapping does not depend on input line order.
class NodeIdMap {
 public:
  NodeIdMap() = default;
  // labels need not be sorted or unique.
  explicit NodeIdMap(std::vector<NodeLabel> labels);
  static NodeIdMap identity(NodeId node_count);

  NodeId size() const noexcept { return static_cast<NodeId>(labels_.size()); }
  NodeLabel label(NodeId id) const noexcept { return labels_[id]; }
  std::optional<NodeId> id(NodeLabel label) const noexcept;

  bool operator==(const NodeIdMap&) const = default;

 private:
  std::vector<NodeLabel> labels_;
};

struct LoadOptions {
  // When false, duplicate edges and self-loops are data-format errors
  // instead of being dropped.
  bool dedup = true;
  bool drop_self_loops = true;
};

struct LoadedGraph {
  Graph graph;
  NodeIdMap map;
};

// Reads a SNAP-style edge list ("u v" per line, '#' comments). Plain and
// gzip-compressed files are both accepted.
LoadedGraph load_edge_list(const std::string& path, const LoadOptions& options = {});
LoadedGraph parse_edge_list(std::istream& in, const std::string& source_name,
                            const LoadOptions& options = {});

struct LoadedCommunities {
  CommunitySet communities;
  std::size_t unknown_labels = 0;      // label occurrences absent from the map
  std::size_t dropped_small = 0;       // communities below min_size
};

// One community per line, whitespace-separated labels. Communities with fewer
// than min_size resolved members are dropped.
LoadedCommunities load_communities(const std::string& path, const NodeIdMap& map,
                                   std::size_t min_size = 3);
LoadedCommunities parse_communities(std::istream& in, const std::string& source_name,
                                    const NodeIdMap& map, std::size_t min_size = 3);

// Canonical edge list in external labels, one "u v" line per edge.
void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap& map);
void write_edge_list(std::ostream& out, const Graph& g);

// One line per community, members as external labels.
void write_communities(std::ostream& out, const std::vector<std::vector<NodeId>>& communities,
                       const NodeIdMap& map);

}  // namespace motifclust
