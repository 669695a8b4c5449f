#include "motifclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <ostream>
#include <string_view>

#include <tbb/parallel_for.h>
#include <tbb/parallel_sort.h>
#include <zlib.h>

#include "motifclust/error.hpp"

namespace motifclust {
namespace {

using LineFn = std::function<void(std::string_view line, std::size_t line_no)>;

void for_each_line(std::istream& in, const LineFn& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) fn(line, ++line_no);
}

// gzread transparently passes through uncompressed files.
void for_each_line(const std::string& path, const LineFn& fn) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) throw IoError("cannot open " + path);
  struct Closer {
    gzFile f;
    ~Closer() { gzclose(f); }
  } closer{file};
  gzbuffer(file, 1 << 20);

  std::vector<char> buffer(1 << 20);
  std::string pending;
  std::size_t line_no = 0;
  for (;;) {
    int got = gzread(file, buffer.data(), static_cast<unsigned>(buffer.size()));
    if (got < 0) {
      int code = 0;
      const char* msg = gzerror(file, &code);
      throw IoError("read error in " + path + ": " + (msg ? msg : "unknown"));
    }
    if (got == 0) break;
    std::string_view chunk(buffer.data(), static_cast<std::size_t>(got));
    std::size_t start = 0;
    for (;;) {
      std::size_t nl = chunk.find('\n', start);
      if (nl == std::string_view::npos) {
        pending.append(chunk.substr(start));
        break;
      }
      if (pending.empty()) {
        fn(chunk.substr(start, nl - start), ++line_no);
      } else {
        pending.append(chunk.substr(start, nl - start));
        fn(pending, ++line_no);
        pending.clear();
      }
      start = nl + 1;
    }
  }
  if (!pending.empty()) fn(pending, ++line_no);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on whitespace and parses each token as a label. Returns false on the
// first token that is not an integer.
template <class Out>
bool parse_labels(std::string_view line, Out&& out, std::string_view& bad_token) {
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    std::string_view token = line.substr(i, j - i);
    NodeLabel value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      bad_token = token;
      return false;
    }
    out(value);
    i = j;
  }
  return true;
}

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!is_space(c)) return false;
  }
  return true;
}

struct RawEdge {
  NodeLabel u;
  NodeLabel v;
};

class EdgeListBuilder {
 public:
  EdgeListBuilder(std::string source, LoadOptions options)
      : source_(std::move(source)), options_(options) {}

  void consume(std::string_view line, std::size_t line_no) {
    if (is_comment_or_blank(line)) return;
    NodeLabel labels[2];
    std::size_t count = 0;
    std::string_view bad;
    bool ok = parse_labels(line, [&](NodeLabel x) {
      if (count < 2) labels[count] = x;
      ++count;
    }, bad);
    if (!ok) throw ParseError(source_, line_no, "non-integer token '" + std::string(bad) + "'");
    if (count != 2) {
      throw ParseError(source_, line_no,
                       "expected two node labels, found " + std::to_string(count));
    }
    if (labels[0] == labels[1] && !options_.drop_self_loops) {
      throw ParseError(source_, line_no, "self-loop on label " + std::to_string(labels[0]));
    }
    raw_.push_back({labels[0], labels[1]});
    if (!options_.dedup) lines_.push_back(line_no);
  }

  LoadedGraph finish() {
    std::vector<NodeLabel> labels;
    labels.reserve(raw_.size() * 2);
    for (const RawEdge& e : raw_) {
      labels.push_back(e.u);
      labels.push_back(e.v);
    }
    NodeIdMap map(std::move(labels));

    std::vector<Edge> edges(raw_.size());
    tbb::parallel_for(std::size_t{0}, raw_.size(), [&](std::size_t i) {
      NodeId a = *map.id(raw_[i].u);
      NodeId b = *map.id(raw_[i].v);
      edges[i] = {std::min(a, b), std::max(a, b)};
    });
    raw_.clear();
    raw_.shrink_to_fit();

    if (!options_.dedup) check_no_duplicates(edges);
    Graph g = Graph::from_edges(map.size(), std::move(edges));
    return {std::move(g), std::move(map)};
  }

 private:
  void check_no_duplicates(const std::vector<Edge>& edges) const {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    tbb::parallel_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges[a] != edges[b] ? edges[a] < edges[b] : a < b;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Edge& e = edges[order[i]];
      if (e == edges[order[i - 1]] && e.u != e.v) {
        throw ParseError(source_, lines_[order[i]], "duplicate edge");
      }
    }
  }

  std::string source_;
  LoadOptions options_;
  std::vector<RawEdge> raw_;
  std::vector<std::size_t> lines_;
};

class CommunityBuilder {
 public:
  CommunityBuilder(std::string source, const NodeIdMap& map, std::size_t min_size)
      : source_(std::move(source)), map_(map), min_size_(min_size) {}

  void consume(std::string_view line, std::size_t line_no) {
    if (is_comment_or_blank(line)) return;
    std::vector<NodeId> members;
    std::string_view bad;
    bool ok = parse_labels(line, [&](NodeLabel x) {
      if (auto id = map_.id(x)) {
        members.push_back(*id);
      } else {
        ++result_.unknown_labels;
      }
    }, bad);
    if (!ok) throw ParseError(source_, line_no, "non-integer token '" + std::string(bad) + "'");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.size() < min_size_) {
      ++result_.dropped_small;
      return;
    }
    kept_.push_back(std::move(members));
  }

  LoadedCommunities finish() {
    result_.communities = CommunitySet(std::move(kept_));
    return std::move(result_);
  }

 private:
  std::string source_;
  const NodeIdMap& map_;
  std::size_t min_size_;
  std::vector<std::vector<NodeId>> kept_;
  LoadedCommunities result_;
};

}  // namespace

NodeIdMap::NodeIdMap(std::vector<NodeLabel> labels) : labels_(std::move(labels)) {
  tbb::parallel_sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.size() > std::numeric_limits<NodeId>::max()) {
    throw UsageError("too many distinct node labels for 32-bit node ids");
  }
}

NodeIdMap NodeIdMap::identity(NodeId node_count) {
  std::vector<NodeLabel> labels(node_count);
  for (NodeId i = 0; i < node_count; ++i) labels[i] = i;
  return NodeIdMap(std::move(labels));
}

std::optional<NodeId> NodeIdMap::id(NodeLabel label) const noexcept {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

LoadedGraph load_edge_list(const std::string& path, const LoadOptions& options) {
  EdgeListBuilder builder(path, options);
  for_each_line(path, [&](std::string_view line, std::size_t no) { builder.consume(line, no); });
  return builder.finish();
}

LoadedGraph parse_edge_list(std::istream& in, const std::string& source_name,
                            const LoadOptions& options) {
  EdgeListBuilder builder(source_name, options);
  for_each_line(in, [&](std::string_view line, std::size_t no) { builder.consume(line, no); });
  return builder.finish();
}

LoadedCommunities load_communities(const std::string& path, const NodeIdMap& map,
                                   std::size_t min_size) {
  CommunityBuilder builder(path, map, min_size);
  for_each_line(path, [&](std::string_view line, std::size_t no) { builder.consume(line, no); });
  return builder.finish();
}

LoadedCommunities parse_communities(std::istream& in, const std::string& source_name,
                                    const NodeIdMap& map, std::size_t min_size) {
  CommunityBuilder builder(source_name, map, min_size);
  for_each_line(in, [&](std::string_view line, std::size_t no) { builder.consume(line, no); });
  return builder.finish();
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap& map) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.upper_neighbors(u)) out << map.label(u) << ' ' << map.label(v) << '\n';
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.upper_neighbors(u)) out << u << ' ' << v << '\n';
  }
}

void write_communities(std::ostream& out, const std::vector<std::vector<NodeId>>& communities,
                       const NodeIdMap& map) {
  for (const auto& community : communities) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      if (i) out << ' ';
      out << map.label(community[i]);
    }
    out << '\n';
  }
}

}  // namespace motifclust
