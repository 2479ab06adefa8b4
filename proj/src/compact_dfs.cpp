#include "spacegraph/compact_dfs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spacegraph/errors.hpp"

namespace spacegraph {

unsigned field_width(std::uint64_t degree) { return std::max(1u, ceil_log2(degree)); }

PositionFieldArray::PositionFieldArray(std::span<const std::uint64_t> offsets) {
  if (offsets.empty()) throw DomainError("offset array needs n+1 entries");
  n_ = offsets.size() - 1;
  std::uint64_t total = 0;
  for (std::uint64_t v = 0; v < n_; ++v) total += field_width(offsets[v + 1] - offsets[v]);
  b_ = BitStore(total);
  std::uint64_t pos = 0;
  for (std::uint64_t v = 0; v < n_; ++v) {
    pos += field_width(offsets[v + 1] - offsets[v]);
    b_.set(pos - 1);
  }
  b_select_ = RankSelect(b_);
  p_ = BitStore(total);
}

std::pair<std::uint64_t, unsigned> PositionFieldArray::field(std::uint64_t v) const {
  if (v >= n_) throw RangeError("field index out of range");
  const std::uint64_t start = v == 0 ? 0 : b_select_.select1(v) + 1;
  const std::uint64_t end = b_select_.select1(v + 1);
  return {start, static_cast<unsigned>(end - start + 1)};
}

unsigned PositionFieldArray::width(std::uint64_t v) const { return field(v).second; }

std::uint64_t PositionFieldArray::get(std::uint64_t v) const {
  const auto [start, w] = field(v);
  return p_.read_bits(start, w);
}

void PositionFieldArray::set(std::uint64_t v, std::uint64_t value) {
  const auto [start, w] = field(v);
  if (value > low_mask(w)) throw RangeError("value does not fit the field");
  p_.write_bits(start, w, value);
}

SpaceUse PositionFieldArray::space() const {
  return {b_.space().principal + p_.space().principal, b_select_.space().auxiliary};
}

namespace {

class CompactState {
 public:
  explicit CompactState(const Graph& g)
      : g_(g),
        parent_(g.directed() ? g.in_offsets() : g.out_offsets()),
        resume_(g.out_offsets()),
        is_root_(g.n()),
        visited_(g.n()) {}

  void record(SpaceLedger& ledger) const {
    ledger.record("parent_fields", parent_.space());
    ledger.record("resume_fields", resume_.space());
    ledger.record("is_root", is_root_.space());
    ledger.record("visited", visited_.space());
  }

  bool visited(Vertex v) const noexcept { return visited_.get(v); }
  bool is_root(Vertex v) const noexcept { return is_root_.get(v); }
  BitStore& visited_bits() noexcept { return visited_; }
  void reset_visited() { visited_.fill(false); }

  Vertex parent(Vertex v) const {
    const std::uint64_t idx = parent_.get(v);
    return g_.directed() ? g_.in_source(g_.in_begin(v) + idx) : g_.out_target(g_.out_begin(v) + idx);
  }

  template <class OnDiscover>
  void traverse(Vertex root, std::vector<Vertex>& preorder, std::vector<Edge>& tree, OnDiscover&& on_discover) {
    visited_.set(root);
    is_root_.set(root);
    parent_.set(root, 0);
    preorder.push_back(root);
    on_discover(root);
    Vertex cur = root;
    std::uint64_t k = 0;
    for (;;) {
      const std::uint64_t begin = g_.out_begin(cur);
      const std::uint64_t degree = g_.out_end(cur) - begin;
      bool descended = false;
      for (; k < degree; ++k) {
        const Vertex u = g_.out_target(begin + k);
        if (visited_.get(u)) continue;
        resume_.set(cur, k);
        visited_.set(u);
        parent_.set(u, index_in_list(u, cur));
        preorder.push_back(u);
        tree.push_back({cur, u, 0});
        on_discover(u);
        cur = u;
        k = 0;
        descended = true;
        break;
      }
      if (descended) continue;
      if (cur == root) return;
      const Vertex p = parent(cur);
      k = resume_.get(p) + 1;
      cur = p;
    }
  }

 private:
  // Index of `who` in v's in-list (undirected: its list).
  std::uint64_t index_in_list(Vertex v, Vertex who) const {
    if (g_.directed()) {
      for (std::uint64_t q = g_.in_begin(v); q < g_.in_end(v); ++q)
        if (g_.in_source(q) == who) return q - g_.in_begin(v);
    } else {
      for (std::uint64_t q = g_.out_begin(v); q < g_.out_end(v); ++q)
        if (g_.out_target(q) == who) return q - g_.out_begin(v);
    }
    throw std::logic_error("tree edge missing from the child's list");
  }

  const Graph& g_;
  PositionFieldArray parent_;
  PositionFieldArray resume_;
  BitStore is_root_;
  BitStore visited_;
};

double compact_bound(const Graph& g) {
  const double n = static_cast<double>(g.n());
  const double m = static_cast<double>(std::max<std::uint64_t>(g.m(), 1));
  return 4.0 * n * (1.0 + std::log2(std::max(1.0, 2.0 * m / std::max(n, 1.0)))) + 4.0 * n;
}

}  // namespace

CompactDfsResult dfs_compact(const Graph& g, Vertex start, bool restart) {
  if (start >= g.n()) throw RangeError("start vertex out of range");
  CompactDfsResult out;
  out.preorder.reserve(g.n());
  CompactState st(g);
  out.ledger.set_bound("4n(1 + lg(2m/n)) + 4n", compact_bound(g));
  st.record(out.ledger);

  auto ignore = [](Vertex) {};
  st.traverse(start, out.preorder, out.tree_edges, ignore);
  if (restart)
    for (auto v = st.visited_bits().next_clear(0, g.n()); v; v = st.visited_bits().next_clear(*v + 1, g.n()))
      st.traverse(static_cast<Vertex>(*v), out.preorder, out.tree_edges, ignore);
  return out;
}

ChainReport chains_compact(const Graph& g) {
  detail::require_connected_undirected(g);
  ChainReport report;
  const std::uint64_t n = g.n();

  CompactState st(g);
  std::vector<Vertex> first;
  std::vector<Edge> tree;
  first.reserve(n);
  tree.reserve(n);
  st.traverse(0, first, tree, [](Vertex) {});
  st.reset_visited();

  BitStore chain_visited(n);
  BitStore covered(n);  // child side of each tree edge lying on some chain
  BitStore cut(n);
  report.ledger.set_bound("4n(1 + lg(2m/n)) + 4n", compact_bound(g) + 3.0 * static_cast<double>(n));
  st.record(report.ledger);
  report.ledger.record("chain_visited", chain_visited.space());
  report.ledger.record("M", covered.space());
  report.ledger.record("cut", cut.space());

  auto is_tree_edge = [&](Vertex v, Vertex u) {
    return (!st.is_root(u) && st.parent(u) == v) || (!st.is_root(v) && st.parent(v) == u);
  };

  bool later_cycle = false;
  auto on_discover = [&](Vertex v) {
    for (std::uint64_t e = g.out_begin(v); e < g.out_end(v); ++e) {
      const Vertex x = g.out_target(e);
      if (st.visited(x) || is_tree_edge(v, x)) continue;
      Chain chain;
      chain.vertices = {v, x};
      chain_visited.set(v);
      Vertex cur = x;
      while (!chain_visited.get(cur)) {
        chain_visited.set(cur);
        if (covered.get(cur)) throw std::logic_error("tree edge covered by two chains");
        covered.set(cur);
        cur = st.parent(cur);
        chain.vertices.push_back(cur);
      }
      chain.cycle = cur == v;
      if (chain.cycle && !report.chains.empty()) {
        cut.set(v);
        later_cycle = true;
      }
      report.chains.push_back(std::move(chain));
    }
  };

  std::vector<Vertex> rerun;
  rerun.reserve(n);
  tree.clear();
  st.traverse(0, rerun, tree, on_discover);
  if (rerun != first) throw std::logic_error("rerun diverged from the first DFS");
  report.preorder = std::move(rerun);

  for (Vertex v = 0; v < n; ++v)
    if (!st.is_root(v) && !covered.get(v)) report.bridges.push_back({st.parent(v), v, 0});

  detail::finish_report(g, report, cut, later_cycle);
  return report;
}

}  // namespace spacegraph
