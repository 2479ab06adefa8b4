#pragma once

// Depth-first search without a stack, over the unary degree encoding.
//
// O holds, per vertex, a 0 followed by one 1 per adjacency entry, so entry k
// of vertex v sits at select0(v+1) + 1 + k. E has the same length and marks
// the entry through which each tree edge was first taken. To backtrack from
// a finished vertex w we scan w's in-list (undirected: its list) and follow
// cross-links until we land on the unique E-marked entry; that names the
// parent and the position from which the parent's scan resumes.
//
// The chain decomposition reruns the same DFS with E fixed and, at each
// vertex's discovery, walks every back edge that starts there up the tree
// until it meets an already visited vertex.

#include <cstdint>
#include <vector>

#include "spacegraph/bits.hpp"
#include "spacegraph/graph.hpp"
#include "spacegraph/space_ledger.hpp"

namespace spacegraph {

struct DfsOptions {
  Vertex start = 0;
  bool restart = false;
  unsigned colors = 2;  // 2: white/grey bits; 3: white/grey/black trits
};

struct DfsResult {
  std::vector<Vertex> preorder;
  std::vector<Edge> tree_edges;  // (parent, child) in discovery order
  std::uint64_t backtrack_touches = 0;
  SpaceLedger ledger;
};

// DomainError when g has no cross-links or colors is not 2 or 3;
// RangeError for a bad start.
DfsResult dfs_unary(const Graph& g, const DfsOptions& options = {});

struct Chain {
  bool cycle = false;
  std::vector<Vertex> vertices;  // start, then the walk
  friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainReport {
  std::vector<Chain> chains;
  std::vector<Edge> bridges;        // (min, max), sorted
  std::vector<Vertex> cut_vertices;  // sorted
  bool two_edge_connected = false;
  bool biconnected = false;
  std::vector<Vertex> preorder;  // of the rerun; equals the first pass
  SpaceLedger ledger;
};

// Same report, ignoring the ledger and the preorder.
bool same_report(const ChainReport& a, const ChainReport& b);

// Chain decomposition rooted at vertex 0. DomainError for directed,
// disconnected or empty graphs and for missing cross-links.
ChainReport chain_decomposition(const Graph& g);

namespace detail {
// Shared tail of both chain implementations. cut holds the starts of cycles
// after the first; bridge endpoints of degree >= 2 are added, bridges are
// sorted and the flags set.
void finish_report(const Graph& g, ChainReport& report, BitStore& cut, bool later_cycle);
void require_connected_undirected(const Graph& g);
}  // namespace detail

}  // namespace spacegraph
