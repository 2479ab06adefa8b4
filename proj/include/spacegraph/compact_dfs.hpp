#pragma once

// DFS and chain decomposition in O(n lg(m/n)) bits over plain adjacency
// arrays, with no cross-links.
//
// A PositionFieldArray gives vertex v a field of w_v = max(1, ceil(lg d_v))
// bits, enough for any index into its list. B is the concatenation of
// 0^(w_v - 1) 1 over all v, so field v ends at the (v+1)-th 1; P holds the
// field contents at the same positions.
//
// The DFS keeps two such arrays: each vertex's parent as an index into its
// own list (in-list for directed graphs), and each grey vertex's current
// scan index. Backtracking reads the parent field directly.

#include <cstdint>
#include <span>
#include <vector>

#include "spacegraph/bits.hpp"
#include "spacegraph/dfs.hpp"
#include "spacegraph/graph.hpp"
#include "spacegraph/space_ledger.hpp"

namespace spacegraph {

class PositionFieldArray {
 public:
  PositionFieldArray() = default;
  // offsets: n+1 prefix sums of the degrees (a CSR offset array).
  explicit PositionFieldArray(std::span<const std::uint64_t> offsets);

  std::uint64_t size() const noexcept { return n_; }
  std::uint64_t total_width() const noexcept { return b_.size(); }

  // RangeError for v >= size() or value >= 2^width(v).
  unsigned width(std::uint64_t v) const;
  std::uint64_t get(std::uint64_t v) const;
  void set(std::uint64_t v, std::uint64_t value);

  const BitStore& delimiters() const noexcept { return b_; }

  // Principal: B and P. Auxiliary: select directory over B.
  SpaceUse space() const;

 private:
  std::pair<std::uint64_t, unsigned> field(std::uint64_t v) const;

  std::uint64_t n_ = 0;
  BitStore b_;
  RankSelect b_select_;
  BitStore p_;
};

unsigned field_width(std::uint64_t degree);

struct CompactDfsResult {
  std::vector<Vertex> preorder;
  std::vector<Edge> tree_edges;  // (parent, child) in discovery order
  SpaceLedger ledger;
};

// RangeError for a bad start.
CompactDfsResult dfs_compact(const Graph& g, Vertex start = 0, bool restart = false);

// DomainError for directed, disconnected or empty graphs.
ChainReport chains_compact(const Graph& g);

}  // namespace spacegraph
