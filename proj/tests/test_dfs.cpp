#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracles/oracles.hpp"
#include "spacegraph/dfs.hpp"
#include "spacegraph/errors.hpp"

using namespace spacegraph;

namespace {

Graph linked(std::uint64_t n, bool directed, std::vector<Edge> edges) {
  return build_cross_links(Graph::from_edges(n, directed, std::move(edges)));
}

void check_against_stack(const Graph& g, Vertex start, bool restart) {
  const oracles::DfsTrace expected = oracles::dfs_stack(g, start, restart);
  for (unsigned colors : {2u, 3u}) {
    const DfsResult r = dfs_unary(g, {start, restart, colors});
    REQUIRE(r.preorder == expected.preorder);
    REQUIRE(r.tree_edges == expected.tree_edges);
  }
}

// Every non-bridge edge lies in exactly one chain; bridges in none.
void check_partition(const Graph& g, const ChainReport& r) {
  std::map<std::pair<Vertex, Vertex>, int> uses;
  for (const Edge& e : g.edges()) uses[{std::min(e.u, e.v), std::max(e.u, e.v)}] = 0;
  for (const Chain& c : r.chains) {
    REQUIRE(c.vertices.size() >= 2);
    if (c.cycle) REQUIRE(c.vertices.front() == c.vertices.back());
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
      const auto key = std::pair(std::min(c.vertices[i], c.vertices[i + 1]), std::max(c.vertices[i], c.vertices[i + 1]));
      REQUIRE(uses.count(key) == 1);
      ++uses[key];
    }
  }
  for (const Edge& b : r.bridges) REQUIRE(uses[{b.u, b.v}] == 0);
  for (const auto& [key, count] : uses) {
    const bool bridge = std::count(r.bridges.begin(), r.bridges.end(), Edge{key.first, key.second, 0}) > 0;
    REQUIRE(count == (bridge ? 0 : 1));
  }
}

void check_chains(const Graph& g) {
  const ChainReport r = chain_decomposition(g);
  REQUIRE(r.bridges == oracles::brute_bridges(g));
  REQUIRE(r.cut_vertices == oracles::brute_cut_vertices(g));
  REQUIRE(r.two_edge_connected == oracles::brute_two_edge_connected(g));
  REQUIRE(r.biconnected == oracles::brute_biconnected(g));
  REQUIRE(r.chains.size() == g.m() - g.n() + 1);
  REQUIRE(r.preorder == oracles::dfs_stack(g, 0).preorder);
  check_partition(g, r);
}

}  // namespace

TEST_SUITE("dfs") {

TEST_CASE("path and triangle") {
  const Graph path = linked(3, false, {{0, 1, 0}, {1, 2, 0}});
  const DfsResult p = dfs_unary(path, {1});
  CHECK(p.preorder == std::vector<Vertex>{1, 0, 2});
  CHECK(p.tree_edges == std::vector<Edge>{{1, 0, 0}, {1, 2, 0}});

  const Graph tri = linked(3, false, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
  CHECK(dfs_unary(tri).preorder == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("directed reachability and restart") {
  const Graph g = linked(4, true, {{1, 0, 0}, {0, 2, 0}, {3, 1, 0}});
  CHECK(dfs_unary(g, {0}).preorder == std::vector<Vertex>{0, 2});
  CHECK(dfs_unary(g, {0, true}).preorder == std::vector<Vertex>{0, 2, 1, 3});
}

TEST_CASE("random graphs against the stack DFS") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t n = 1 + rng() % 200;
    const bool directed = t % 2;
    const std::uint64_t slots = directed ? n * (n - 1) : n * (n - 1) / 2;
    const Graph g = build_cross_links(random_graph(n, std::min<std::uint64_t>(slots, rng() % (4 * n)), directed, rng()));
    check_against_stack(g, static_cast<Vertex>(rng() % n), t % 3 == 0);
  }
}

TEST_CASE("preconditions") {
  const Graph bare = Graph::from_edges(3, false, {{0, 1, 0}, {1, 2, 0}});
  CHECK_THROWS_AS(dfs_unary(bare), DomainError);
  CHECK_THROWS_AS(chain_decomposition(bare), DomainError);
  const Graph g = build_cross_links(bare);
  CHECK_THROWS_AS(dfs_unary(g, {3}), RangeError);
  CHECK_THROWS_AS(dfs_unary(g, {0, false, 4}), DomainError);
  CHECK_THROWS_AS(chain_decomposition(linked(4, false, {{0, 1, 0}, {2, 3, 0}})), DomainError);
  CHECK_THROWS_AS(chain_decomposition(linked(3, true, {{0, 1, 0}, {1, 2, 0}})), DomainError);
  CHECK_THROWS_AS(chain_decomposition(linked(0, false, {})), DomainError);
}

TEST_CASE("chains of K4") {
  const Graph k4 = linked(4, false, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}});
  const ChainReport r = chain_decomposition(k4);
  CHECK(r.chains.size() == 3);
  CHECK(r.chains.front().cycle);
  CHECK(r.bridges.empty());
  CHECK(r.cut_vertices.empty());
  CHECK(r.two_edge_connected);
  CHECK(r.biconnected);
}

TEST_CASE("two triangles joined by a bridge") {
  const Graph g = load_graph(std::string(SPACEGRAPH_CORPUS_DIR) + "/twotri.g");
  const ChainReport r = chain_decomposition(build_cross_links(g));
  CHECK(r.bridges == std::vector<Edge>{{2, 3, 0}});
  CHECK(r.cut_vertices == std::vector<Vertex>{2, 3});
  CHECK_FALSE(r.two_edge_connected);
  CHECK_FALSE(r.biconnected);
  CHECK(r.chains.size() == 2);
}

TEST_CASE("single edge and trees") {
  const ChainReport e = chain_decomposition(linked(2, false, {{0, 1, 0}}));
  CHECK(e.chains.empty());
  CHECK(e.bridges == std::vector<Edge>{{0, 1, 0}});
  CHECK(e.cut_vertices.empty());
  CHECK_FALSE(e.two_edge_connected);
  CHECK_FALSE(e.biconnected);
  const ChainReport one = chain_decomposition(linked(1, false, {}));
  CHECK(one.two_edge_connected);
  CHECK_FALSE(one.biconnected);
  check_chains(build_cross_links(generate(Family::star, 7, 1)));
  check_chains(build_cross_links(generate(Family::grid, 36, 1)));
}

TEST_CASE("random connected graphs against removal oracles") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t n = 1 + rng() % 60;
    const std::uint64_t max_m = n * (n - 1) / 2;
    const std::uint64_t m = std::min<std::uint64_t>(max_m, n - 1 + rng() % (n + 1));
    check_chains(build_cross_links(random_connected_graph(n, m, rng())));
  }
}

TEST_CASE("workspace of the unary DFS") {
  const std::uint64_t n = 1 << 12, m = 1 << 15;
  const Graph g = build_cross_links(random_graph(n, m, false, 4));
  const DfsResult r = dfs_unary(g);
  CHECK(r.ledger.peak() <= 1.1 * (4 * m + 3 * n));
}

}  // TEST_SUITE
