#pragma once

// Topological sort and d-degenerate ordering driven by a findany set of ready
// vertices and a decrement sequence of remaining counts.

#include <cstdint>
#include <vector>

#include "spacegraph/graph.hpp"
#include "spacegraph/space_ledger.hpp"

namespace spacegraph {

struct OrderResult {
  bool complete = false;       // false: cycle found / not d-degenerate
  std::vector<Vertex> order;   // the emitted prefix
  std::uint64_t max_probes_per_vertex = 0;
  SpaceLedger ledger;
};

// DomainError for undirected graphs. The in-degree counters are laid out
// over the graph's own in-list offsets.
OrderResult toposort(const Graph& g);

// DomainError for directed graphs. Counters start at max(0, deg(v) - d).
OrderResult degeneracy_order(const Graph& g, std::uint64_t d);

}  // namespace spacegraph
