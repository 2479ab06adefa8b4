#pragma once

// Read-only input graphs in adjacency-array (CSR) form. Undirected graphs
// store every edge twice, once in each endpoint's list; directed graphs keep
// out-lists and in-lists. Neighbour order is the order in which edges appear
// in the source, which fixes every traversal's tie-breaking.
//
// None of this is workspace: algorithms only ever read it.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spacegraph {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t w = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  // Builds the arrays; throws DomainError for self-loops, duplicates or
  // endpoints outside [0, n).
  static Graph from_edges(std::uint64_t n, bool directed, std::vector<Edge> edges, bool weighted = false);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Out-list (undirected: the only list). Entry positions are global indices
  // into the concatenated lists.
  std::uint64_t degree(Vertex v) const { return out_degree(v); }
  std::uint64_t out_degree(Vertex v) const;
  std::uint64_t in_degree(Vertex v) const;
  Vertex neighbor(Vertex v, std::uint64_t k) const;
  Vertex in_neighbor(Vertex v, std::uint64_t k) const;
  std::uint32_t weight(Vertex v, std::uint64_t k) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;

  // Unchecked entry-level access used by the algorithms.
  std::uint64_t out_begin(Vertex v) const noexcept { return out_off_[v]; }
  std::uint64_t out_end(Vertex v) const noexcept { return out_off_[v + 1]; }
  std::uint64_t in_begin(Vertex v) const noexcept { return in_off_[v]; }
  std::uint64_t in_end(Vertex v) const noexcept { return in_off_[v + 1]; }
  Vertex out_target(std::uint64_t entry) const noexcept { return out_adj_[entry]; }
  Vertex in_source(std::uint64_t entry) const noexcept { return in_adj_[entry]; }
  std::uint32_t out_weight(std::uint64_t entry) const noexcept { return out_w_[entry]; }
  std::uint64_t out_entries() const noexcept { return out_adj_.size(); }
  std::uint64_t in_entries() const noexcept { return in_adj_.size(); }

  // Prefix sums of degrees (n+1 entries).
  std::span<const std::uint64_t> out_offsets() const noexcept { return out_off_; }
  std::span<const std::uint64_t> in_offsets() const noexcept { return in_off_; }

  // Cross-links. Undirected: entry of (u,v) maps to the entry of (v,u).
  // Directed: out-entry (u,v) maps to u's position in v's in-list, and
  // in_cross maps back.
  bool has_cross_links() const noexcept { return !out_cross_.empty() || out_adj_.empty(); }
  std::uint64_t out_cross(std::uint64_t entry) const noexcept { return out_cross_[entry]; }
  std::uint64_t in_cross(std::uint64_t entry) const noexcept { return in_cross_[entry]; }

  friend Graph build_cross_links(Graph g);
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::uint64_t n_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> out_off_{0};
  std::vector<Vertex> out_adj_;
  std::vector<std::uint32_t> out_w_;
  std::vector<std::uint64_t> edge_out_pos_;  // per edge: entry in u's list
  std::vector<std::uint64_t> edge_twin_pos_;  // per edge: entry in v's out-list or in-list
  std::vector<std::uint64_t> in_off_{0};
  std::vector<Vertex> in_adj_;
  std::vector<std::uint64_t> out_cross_;
  std::vector<std::uint64_t> in_cross_;
};

Graph build_cross_links(Graph g);

// Text format:
//   graph <directed|undirected> <n> <m> [weighted]
//   u v [w]        (m lines, 1-based ids)
// '#' lines and blank lines are ignored. Errors are ParseError with the line.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);
std::string serialize(const Graph& g);

// Generators (deterministic for a given seed).
enum class Family { path, cycle, star, grid, gnp, dag };
Family parse_family(std::string_view name);

struct GenOptions {
  double p = -1.0;  // gnp / dag edge probability; < 0 picks about 4 edges per vertex
  bool weighted = false;
};
Graph generate(Family family, std::uint64_t n, std::uint64_t seed, const GenOptions& options = {});

// Exactly m distinct edges, uniformly among simple graphs' edge slots.
Graph random_graph(std::uint64_t n, std::uint64_t m, bool directed, std::uint64_t seed,
                   bool weighted = false);
// Random spanning tree plus m - (n-1) extra edges; undirected; edge order shuffled.
Graph random_connected_graph(std::uint64_t n, std::uint64_t m, std::uint64_t seed, bool weighted = false);
// Random DAG on a hidden random vertex order with m edges.
Graph random_dag(std::uint64_t n, std::uint64_t m, std::uint64_t seed);

}  // namespace spacegraph
