#include "oracles/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stack>
#include <utility>

namespace oracles {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

namespace {

void bfs_from(const Graph& g, Vertex root, std::vector<std::uint64_t>& dist) {
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v))
      if (dist[u] == kInf) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
}

}  // namespace

std::vector<std::uint64_t> bfs_distances(const Graph& g, Vertex start) {
  std::vector<std::uint64_t> dist(g.n(), kInf);
  bfs_from(g, start, dist);
  return dist;
}

std::vector<std::uint64_t> bfs_forest_distances(const Graph& g, Vertex start) {
  std::vector<std::uint64_t> dist(g.n(), kInf);
  bfs_from(g, start, dist);
  for (Vertex v = 0; v < g.n(); ++v)
    if (dist[v] == kInf) bfs_from(g, v, dist);
  return dist;
}

std::string check_levels(const Graph& g, Vertex start, const std::vector<Vertex>& order,
                         const std::vector<std::uint64_t>& level) {
  const std::uint64_t n = g.n();
  if (level.size() != n) return "level vector has the wrong size";
  if (level[start] != 0) return "start is not at level 0";
  if (order.empty() || order.front() != start) return "order does not begin at the start";

  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v >= n || seen[v]) return "order repeats or leaves the vertex range";
    seen[v] = 1;
    if (level[v] == kInf) return "emitted vertex " + std::to_string(v) + " has no level";
    if (i > 0 && level[v] < level[order[i - 1]]) return "levels decrease along the order";
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v] && level[v] != kInf) return "vertex " + std::to_string(v) + " has a level but was not emitted";
    if (!seen[v] || v == start) continue;
    bool has_parent = false;
    for (Vertex u : g.directed() ? g.in_neighbors(v) : g.neighbors(v))
      if (level[u] != kInf && level[u] + 1 == level[v]) has_parent = true;
    if (!has_parent) return "vertex " + std::to_string(v) + " has no neighbour one level up";
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) continue;
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) return "edge leaves the visited set at " + std::to_string(v);
      if (level[u] > level[v] + 1) return "edge skips a level at " + std::to_string(v);
    }
  }
  return {};
}

DfsTrace dfs_stack(const Graph& g, Vertex start, bool restart) {
  DfsTrace trace;
  std::vector<char> visited(g.n(), 0);
  std::stack<std::pair<Vertex, std::size_t>> stack;
  auto run = [&](Vertex root) {
    visited[root] = 1;
    trace.preorder.push_back(root);
    stack.push({root, 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.top();
      const auto list = g.neighbors(v);
      while (next < list.size() && visited[list[next]]) ++next;
      if (next == list.size()) {
        stack.pop();
        continue;
      }
      const Vertex u = list[next++];
      visited[u] = 1;
      trace.preorder.push_back(u);
      trace.tree_edges.push_back({v, u, 0});
      stack.push({u, 0});
    }
  };
  run(start);
  if (restart)
    for (Vertex v = 0; v < g.n(); ++v)
      if (!visited[v]) run(v);
  return trace;
}

std::vector<std::uint64_t> components_uf(const Graph& g) {
  UnionFind uf(g.n());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<std::uint64_t> id(g.n(), kInf), root_id(g.n(), kInf);
  std::uint64_t next = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const std::size_t r = uf.find(v);
    if (root_id[r] == kInf) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

std::uint64_t count_components(const Graph& g) {
  UnionFind uf(g.n());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return uf.sets();
}

bool two_colorable(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::uint64_t kruskal_weight(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.w < b.w; });
  UnionFind uf(g.n());
  std::uint64_t total = 0;
  for (const Edge& e : edges)
    if (uf.unite(e.u, e.v)) total += e.w;
  return total;
}

std::string check_spanning_forest(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::uint32_t>> known;
  known.reserve(g.m());
  for (const Edge& e : g.edges()) known.push_back({std::pair(std::min(e.u, e.v), std::max(e.u, e.v)), e.w});
  std::sort(known.begin(), known.end());

  UnionFind uf(g.n());
  for (const Edge& e : edges) {
    if (e.u >= g.n() || e.v >= g.n()) return "edge endpoint out of range";
    const std::pair<Vertex, Vertex> key(std::min(e.u, e.v), std::max(e.u, e.v));
    const auto it = std::lower_bound(known.begin(), known.end(), std::pair{key, std::uint32_t{0}});
    if (it == known.end() || it->first != key) return "edge not in the graph";
    if (it->second != e.w) return "edge weight differs from the graph";
    if (!uf.unite(e.u, e.v)) return "edges contain a cycle";
  }
  if (uf.sets() != count_components(g)) return "forest does not span every component";
  return {};
}

bool has_cycle(const Graph& g) {
  // Grey = on the current DFS path. Explicit stack so deep inputs are safe.
  std::vector<std::uint8_t> state(g.n(), 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (state[s] != 0) continue;
    state[s] = 1;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto list = g.neighbors(v);
      if (next == list.size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const Vertex u = list[next++];
      if (state[u] == 1) return true;
      if (state[u] == 0) {
        state[u] = 1;
        stack.push_back({u, 0});
      }
    }
  }
  return false;
}

bool is_topological(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.n()) return false;
  std::vector<std::uint64_t> pos(g.n(), kInf);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.n() || pos[order[i]] != kInf) return false;
    pos[order[i]] = i;
  }
  for (const Edge& e : g.edges())
    if (pos[e.u] >= pos[e.v]) return false;
  return true;
}

std::uint64_t degeneracy(const Graph& g) {
  const std::uint64_t n = g.n();
  if (n == 0) return 0;
  std::vector<std::uint64_t> deg(n);
  std::uint64_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> bucket(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::uint64_t result = 0;
  std::uint64_t low = 0;
  for (std::uint64_t done = 0; done < n;) {
    while (bucket[low].empty()) ++low;
    const Vertex v = bucket[low].back();
    bucket[low].pop_back();
    if (removed[v] || deg[v] != low) continue;  // stale entry
    removed[v] = 1;
    ++done;
    result = std::max(result, low);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      bucket[--deg[u]].push_back(u);
      low = std::min(low, deg[u]);
    }
  }
  return result;
}

bool is_degenerate_order(const Graph& g, const std::vector<Vertex>& order, std::uint64_t d) {
  if (order.size() != g.n()) return false;
  std::vector<std::uint64_t> pos(g.n(), kInf);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.n() || pos[order[i]] != kInf) return false;
    pos[order[i]] = i;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    std::uint64_t later = 0;
    for (Vertex u : g.neighbors(v)) later += pos[u] > pos[v];
    if (later > d) return false;
  }
  return true;
}

namespace {

// Components of g with one vertex or one edge (by index into edges()) removed.
std::uint64_t components_without(const Graph& g, std::uint64_t skip_vertex, std::uint64_t skip_edge) {
  UnionFind uf(g.n());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip_edge || edges[i].u == skip_vertex || edges[i].v == skip_vertex) continue;
    uf.unite(edges[i].u, edges[i].v);
  }
  return uf.sets() - (skip_vertex < g.n() ? 1 : 0);
}

}  // namespace

std::vector<Edge> brute_bridges(const Graph& g) {
  const std::uint64_t base = count_components(g);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.m(); ++i)
    if (components_without(g, kInf, i) > base) {
      const auto [a, b] = std::minmax(g.edges()[i].u, g.edges()[i].v);
      out.push_back({a, b, 0});
    }
  std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  return out;
}

std::vector<Vertex> brute_cut_vertices(const Graph& g) {
  const std::uint64_t base = count_components(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (components_without(g, v, kInf) > base) out.push_back(v);
  return out;
}

bool brute_two_edge_connected(const Graph& g) {
  return g.n() >= 1 && count_components(g) == 1 && brute_bridges(g).empty();
}

bool brute_biconnected(const Graph& g) {
  return g.n() >= 3 && count_components(g) == 1 && brute_cut_vertices(g).empty();
}

}  // namespace oracles
