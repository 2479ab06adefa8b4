#include "spacegraph/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "spacegraph/bfs.hpp"
#include "spacegraph/errors.hpp"

namespace spacegraph {

namespace {

class UnaryState {
 public:
  UnaryState(const Graph& g, unsigned colors) : g_(g), three_(colors == 3) {
    const std::uint64_t n = g.n();
    o_ = BitStore(n + g.out_entries());
    std::uint64_t pos = 0;
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t d = g.out_end(v) - g.out_begin(v);
      o_.assign_range(pos + 1, pos + 1 + d, true);
      pos += 1 + d;
    }
    o_select_ = RankSelect(o_);
    e_ = BitStore(o_.size());
    if (three_)
      trits_ = PackedVec(n, 3, 0);
    else
      grey_ = BitStore(n);
  }

  void record(SpaceLedger& ledger) const {
    ledger.record("O", o_.space().principal, o_select_.space().auxiliary);
    ledger.record("E", e_.space());
    ledger.record("colors", three_ ? trits_.space() : grey_.space());
  }

  std::uint64_t length() const noexcept { return o_.size(); }

  // Position in O (and E) of adjacency entry e, which belongs to v.
  std::uint64_t pos(Vertex v, std::uint64_t e) const {
    return o_select_.select0(std::uint64_t{v} + 1) + 1 + (e - g_.out_begin(v));
  }

  bool white(Vertex v) const noexcept { return three_ ? trits_.read_unchecked(v) == 0 : !grey_.get(v); }
  void discover(Vertex v) {
    if (three_)
      trits_.write(v, 1);
    else
      grey_.set(v);
  }
  void finish(Vertex v) {
    if (three_) trits_.write(v, 2);
  }
  void reset_colors() {
    if (three_)
      trits_ = PackedVec(g_.n(), 3, 0);
    else
      grey_.fill(false);
  }
  std::optional<std::uint64_t> next_white(std::uint64_t from) const {
    return three_ ? trits_.find(from, g_.n(), 0) : grey_.next_clear(from, g_.n());
  }

  BitStore& tree_marks() noexcept { return e_; }

  // Parent of w and the parent's entry that leads to w.
  std::pair<Vertex, std::uint64_t> parent_of(Vertex w, std::uint64_t& touches) const {
    if (g_.directed()) {
      for (std::uint64_t q = g_.in_begin(w); q < g_.in_end(w); ++q) {
        ++touches;
        const Vertex t = g_.in_source(q);
        const std::uint64_t p = g_.in_cross(q);
        if (e_.get(pos(t, p))) return {t, p};
      }
    } else {
      for (std::uint64_t q = g_.out_begin(w); q < g_.out_end(w); ++q) {
        ++touches;
        const Vertex t = g_.out_target(q);
        const std::uint64_t p = g_.out_cross(q);
        if (e_.get(pos(t, p))) return {t, p};
      }
    }
    throw std::logic_error("no marked tree edge into a non-root vertex");
  }

 private:
  const Graph& g_;
  bool three_;
  BitStore o_;
  RankSelect o_select_;
  BitStore e_;
  BitStore grey_;
  PackedVec trits_;
};

// One DFS tree from root. on_discover(v) runs right after v turns grey.
template <class OnDiscover>
void traverse(const Graph& g, UnaryState& st, Vertex root, DfsResult& out, OnDiscover&& on_discover) {
  st.discover(root);
  out.preorder.push_back(root);
  on_discover(root);
  Vertex cur = root;
  std::uint64_t e = g.out_begin(cur);
  for (;;) {
    bool descended = false;
    for (; e < g.out_end(cur); ++e) {
      const Vertex u = g.out_target(e);
      if (!st.white(u)) continue;
      st.tree_marks().set(st.pos(cur, e));
      st.discover(u);
      out.preorder.push_back(u);
      out.tree_edges.push_back({cur, u, 0});
      on_discover(u);
      cur = u;
      e = g.out_begin(u);
      descended = true;
      break;
    }
    if (descended) continue;
    st.finish(cur);
    if (cur == root) return;
    const auto [t, p] = st.parent_of(cur, out.backtrack_touches);
    cur = t;
    e = p + 1;
  }
}

void check_dfs_input(const Graph& g, unsigned colors) {
  if (!g.has_cross_links()) throw DomainError("unary DFS needs cross-links");
  if (colors != 2 && colors != 3) throw DomainError("colour mode must be 2 or 3");
}

}  // namespace

DfsResult dfs_unary(const Graph& g, const DfsOptions& options) {
  check_dfs_input(g, options.colors);
  if (options.start >= g.n()) throw RangeError("start vertex out of range");
  DfsResult out;
  out.preorder.reserve(g.n());

  UnaryState st(g, options.colors);
  const double n = static_cast<double>(g.n());
  const double m = static_cast<double>(g.m());
  const double edge_factor = g.directed() ? 2.0 : 4.0;
  if (options.colors == 2)
    out.ledger.set_bound(g.directed() ? "2m + 3n" : "4m + 3n", edge_factor * m + 3.0 * n);
  else
    out.ledger.set_bound(g.directed() ? "2m + (lg 3 + 2)n" : "4m + (lg 3 + 2)n",
                         edge_factor * m + (std::log2(3.0) + 2.0) * n);
  st.record(out.ledger);

  auto ignore = [](Vertex) {};
  traverse(g, st, options.start, out, ignore);
  if (options.restart)
    for (auto v = st.next_white(0); v; v = st.next_white(*v + 1)) traverse(g, st, static_cast<Vertex>(*v), out, ignore);
  return out;
}

namespace detail {

void require_connected_undirected(const Graph& g) {
  if (g.directed()) throw DomainError("chain decomposition needs an undirected graph");
  if (g.n() == 0) throw DomainError("chain decomposition needs at least one vertex");
  if (bfs_two_queue(g, 0).order.size() != g.n()) throw DomainError("graph is not connected");
}

void finish_report(const Graph& g, ChainReport& report, BitStore& cut, bool later_cycle) {
  for (Edge& b : report.bridges) {
    if (b.u > b.v) std::swap(b.u, b.v);
    b.w = 0;
  }
  std::sort(report.bridges.begin(), report.bridges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (const Edge& b : report.bridges) {
    if (g.degree(b.u) >= 2) cut.set(b.u);
    if (g.degree(b.v) >= 2) cut.set(b.v);
  }
  for (auto v = cut.next_set(0, g.n()); v; v = cut.next_set(*v + 1, g.n()))
    report.cut_vertices.push_back(static_cast<Vertex>(*v));

  std::uint64_t min_degree = g.n() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) min_degree = std::min(min_degree, g.degree(v));
  report.two_edge_connected = report.bridges.empty();
  report.biconnected = g.n() >= 3 && min_degree >= 2 && !later_cycle;
}

}  // namespace detail

bool same_report(const ChainReport& a, const ChainReport& b) {
  return a.chains == b.chains && a.bridges == b.bridges && a.cut_vertices == b.cut_vertices &&
         a.two_edge_connected == b.two_edge_connected && a.biconnected == b.biconnected;
}

ChainReport chain_decomposition(const Graph& g) {
  detail::require_connected_undirected(g);
  check_dfs_input(g, 2);
  ChainReport report;
  const std::uint64_t n = g.n();

  UnaryState st(g, 2);
  DfsResult first;
  first.preorder.reserve(n);
  traverse(g, st, 0, first, [](Vertex) {});
  st.reset_colors();

  BitStore visited(n);
  BitStore marked(st.length());
  BitStore cut(n);
  report.ledger.set_bound("6m + 5n", 6.0 * static_cast<double>(g.m()) + 5.0 * static_cast<double>(n));
  st.record(report.ledger);
  report.ledger.record("visited", visited.space());
  report.ledger.record("M", marked.space());
  report.ledger.record("cut", cut.space());

  auto mark = [&](std::uint64_t position) {
    if (marked.get(position)) throw std::logic_error("edge copy covered by two chains");
    marked.set(position);
  };

  bool later_cycle = false;
  std::uint64_t touches = 0;
  auto on_discover = [&](Vertex v) {
    for (std::uint64_t e = g.out_begin(v); e < g.out_end(v); ++e) {
      const Vertex x = g.out_target(e);
      if (!st.white(x)) continue;
      const std::uint64_t here = st.pos(v, e);
      const std::uint64_t there = st.pos(x, g.out_cross(e));
      if (st.tree_marks().get(here) || st.tree_marks().get(there)) continue;

      // Back edge (x, v) with v the ancestor: walk up from x.
      Chain chain;
      chain.vertices = {v, x};
      mark(here);
      mark(there);
      visited.set(v);
      Vertex cur = x;
      while (!visited.get(cur)) {
        visited.set(cur);
        const auto [t, p] = st.parent_of(cur, touches);
        mark(st.pos(t, p));
        mark(st.pos(cur, g.out_cross(p)));
        cur = t;
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

  DfsResult rerun;
  rerun.preorder.reserve(n);
  traverse(g, st, 0, rerun, on_discover);
  if (rerun.preorder != first.preorder) throw std::logic_error("rerun diverged from the first DFS");
  report.preorder = std::move(rerun.preorder);

  for (Vertex v = 0; v < n; ++v)
    for (std::uint64_t e = g.out_begin(v); e < g.out_end(v); ++e)
      if (v < g.out_target(e) && !marked.get(st.pos(v, e))) report.bridges.push_back({v, g.out_target(e), 0});

  detail::finish_report(g, report, cut, later_cycle);
  return report;
}

}  // namespace spacegraph
