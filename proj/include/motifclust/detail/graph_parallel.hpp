#pragma once

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

namespace motifclust {

template <class Fn>
void for_each_edge_parallel(const Graph& g, Fn&& fn) {
  tbb::parallel_for(tbb::blocked_range<NodeId>(0, g.node_count(), 256),
                    [&](const tbb::blocked_range<NodeId>& range) {
                      for (NodeId u = range.begin(); u != range.end(); ++u) {
                        EdgeId e = g.first_edge(u);
                        for (NodeId v : g.upper_neighbors(u)) fn(e++, u, v);
                      }
                    });
}

}  // namespace motifclust
