#pragma once

// Prim's algorithm with an n-bit tree mask and a bounded candidate pool.
//
// The pool holds at most k frontier vertices with their keys. A threshold
// separates it from the rest of the frontier: every pooled (key, vertex) pair
// is below it and every frontier vertex outside the pool is at or above it,
// so the pool minimum is the frontier minimum. When the pool runs dry while
// the threshold is finite, one pass over the graph recomputes the k smallest
// frontier keys. Evicting the pool maximum lowers the threshold to the
// evicted pair.

#include <cstdint>
#include <vector>

#include "spacegraph/capacity.hpp"
#include "spacegraph/graph.hpp"
#include "spacegraph/space_ledger.hpp"

namespace spacegraph {

struct MstStats {
  std::uint64_t capacity = 0;
  std::uint64_t max_pool = 0;
  std::uint64_t refills = 0;
  std::uint64_t evictions = 0;
  std::uint64_t components = 0;
};

struct MstResult {
  std::vector<Edge> edges;  // (parent, vertex, weight) in the order produced
  std::uint64_t total_weight = 0;
  MstStats stats;
  SpaceLedger ledger;
};

// DomainError for directed or unweighted graphs, or capacity 0.
MstResult minimum_spanning_forest(const Graph& g, std::uint64_t capacity);
MstResult minimum_spanning_forest(const Graph& g, const CapacityRule& rule);

}  // namespace spacegraph
