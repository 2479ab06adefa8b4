#pragma once

// Textbook reference algorithms. They use ordinary vectors, stacks and
// queues with no attention to space, and only read the graph through its
// public accessors. Tests and `--verify` compare the library against these.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "spacegraph/graph.hpp"

namespace oracles {

using spacegraph::Edge;
using spacegraph::Graph;
using spacegraph::Vertex;

inline constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t sets() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_;
};

// Queue BFS over out-edges; kInf for unreached vertices.
std::vector<std::uint64_t> bfs_distances(const Graph& g, Vertex start);
// Same, then again from each smallest unreached vertex until all are reached;
// distances are to the root of each search.
std::vector<std::uint64_t> bfs_forest_distances(const Graph& g, Vertex start);

// Empty when (order, level) is a valid BFS output from start, otherwise a
// description of the first violation. Unreached vertices carry kInf.
std::string check_levels(const Graph& g, Vertex start, const std::vector<Vertex>& order,
                         const std::vector<std::uint64_t>& level);

struct DfsTrace {
  std::vector<Vertex> preorder;
  std::vector<Edge> tree_edges;  // (parent, child), w = 0
};
// Explicit-stack DFS taking the first unvisited neighbour in list order.
DfsTrace dfs_stack(const Graph& g, Vertex start, bool restart = false);

// Component ids by union-find, numbered in order of their smallest vertex.
std::vector<std::uint64_t> components_uf(const Graph& g);
std::uint64_t count_components(const Graph& g);

// Undirected 2-colouring by DFS.
bool two_colorable(const Graph& g);

std::uint64_t kruskal_weight(const Graph& g);
// Empty when edges form a spanning forest of g using real edges with the
// right weights; otherwise the violation.
std::string check_spanning_forest(const Graph& g, const std::vector<Edge>& edges);

// White/grey/black DFS cycle detection on a directed graph.
bool has_cycle(const Graph& g);
bool is_topological(const Graph& g, const std::vector<Vertex>& order);

// Smallest d for which g is d-degenerate (bucketed min-degree peeling).
std::uint64_t degeneracy(const Graph& g);
// Permutation in which each vertex has at most d neighbours after it.
bool is_degenerate_order(const Graph& g, const std::vector<Vertex>& order, std::uint64_t d);

// Removal oracles on undirected graphs: delete one edge / vertex, recount
// components. Bridges come back as (min, max), sorted.
std::vector<Edge> brute_bridges(const Graph& g);
std::vector<Vertex> brute_cut_vertices(const Graph& g);
bool brute_two_edge_connected(const Graph& g);
bool brute_biconnected(const Graph& g);

}  // namespace oracles
