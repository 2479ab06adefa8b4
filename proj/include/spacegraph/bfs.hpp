#pragma once

// Breadth-first search in small workspace.
//
//   two-queue  colours white/grey1/grey2/black in 2 bits per vertex, with
//              findany structures on the two grey classes; one grey class is
//              drained while the next level fills the other. O(m+n) time.
//   scan       colours even/odd/unexplored in lg 3 bits per vertex; each scan
//              expands every vertex of one parity. O(mn) time.
//   overflow   the scan colours plus two bounded vertex queues; a level whose
//              queue overflowed is expanded by a colour scan instead.
//
// Levels and the visit order are output; neither is charged as workspace.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "spacegraph/graph.hpp"
#include "spacegraph/space_ledger.hpp"

namespace spacegraph {

inline constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

struct BfsStats {
  std::uint64_t touches = 0;          // adjacency entries read
  std::uint64_t scans = 0;            // full colour scans
  std::uint64_t fallback_levels = 0;  // levels expanded by a scan after overflow
  std::uint64_t levels = 0;
  std::uint64_t restarts = 0;
};

struct BfsOutcome {
  std::vector<Vertex> order;
  std::vector<std::uint64_t> level;      // kUnreached when not visited
  std::vector<std::uint64_t> component;  // filled when restarting
  std::optional<Edge> odd_edge;          // undirected: an edge inside one level
  BfsStats stats;
  SpaceLedger ledger;
};

// RangeError for start >= n.
BfsOutcome bfs_two_queue(const Graph& g, Vertex start, bool restart = false);
BfsOutcome bfs_scan(const Graph& g, Vertex start);
// capacity >= 1 (DomainError otherwise).
BfsOutcome bfs_overflow(const Graph& g, Vertex start, std::uint64_t capacity);

// Component id per vertex, numbered in order of their smallest vertex.
// DomainError for directed graphs.
std::vector<std::uint64_t> components(const Graph& g);

struct BipartiteResult {
  bool bipartite = true;
  std::optional<Edge> witness;  // edge joining two vertices of one level
};
// DomainError for directed graphs.
BipartiteResult is_bipartite(const Graph& g);

}  // namespace spacegraph
