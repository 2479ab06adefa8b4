#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <utility>

#include "oracles/oracles.hpp"
#include "spacegraph/bfs.hpp"
#include "spacegraph/capacity.hpp"
#include "spacegraph/compact_dfs.hpp"
#include "spacegraph/dfs.hpp"
#include "spacegraph/errors.hpp"
#include "spacegraph/graph.hpp"
#include "spacegraph/mst.hpp"
#include "spacegraph/order.hpp"

namespace spacegraph::cli {

namespace {

struct Global {
  std::string space_report;
  bool verify = false;
  bool stats = false;
};

// Everything a command produces. Text is flushed to the output stream only
// once the command has finished.
struct Outcome {
  std::ostringstream text;
  std::optional<SpaceLedger> ledger;
  std::vector<std::pair<std::string, std::uint64_t>> stats;
  std::vector<std::string> mismatches;

  void expect(bool ok, const std::string& what) {
    if (!ok) mismatches.push_back(what);
  }
};

// An oracle check runs on its own thread while the command computes.
using Check = std::function<void(Outcome&)>;

std::uint64_t id(Vertex v) { return std::uint64_t{v} + 1; }

Vertex parse_start(const Graph& g, std::uint64_t start) {
  if (start == 0 || start > g.n()) throw RangeError("start vertex " + std::to_string(start) + " is not in 1.." + std::to_string(g.n()));
  return static_cast<Vertex>(start - 1);
}

void print_vertices(std::ostream& out, const std::vector<Vertex>& vs) {
  for (Vertex v : vs) out << id(v) << '\n';
}

std::string edge_text(const Edge& e) { return std::to_string(id(e.u)) + ' ' + std::to_string(id(e.v)); }

template <class T>
std::string join(const std::vector<T>& items, const std::string& sep, auto&& fmt) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + fmt(items[i]);
  return s;
}

// ------------------------------------------------------------------ bfs

struct BfsArgs {
  std::string file;
  std::string variant = "two-queue";
  std::uint64_t start = 1;
  std::string rule = "log2";
  bool restart = false;
  bool levels = false;
};

void cmd_bfs(const BfsArgs& a, const Global& global, Outcome& o) {
  const Graph g = load_graph(a.file);
  const Vertex start = parse_start(g, a.start);
  if (a.restart && a.variant != "two-queue") throw DomainError("--restart needs --variant=two-queue");

  std::future<std::vector<std::uint64_t>> expected;
  if (global.verify)
    expected = std::async(std::launch::async, [&] {
      return a.restart ? oracles::bfs_forest_distances(g, start) : oracles::bfs_distances(g, start);
    });

  BfsOutcome r;
  std::uint64_t capacity = 0;
  if (a.variant == "two-queue") {
    r = bfs_two_queue(g, start, a.restart);
  } else if (a.variant == "scan") {
    r = bfs_scan(g, start);
  } else {
    capacity = CapacityRule::parse(a.rule).capacity(g.n());
    r = bfs_overflow(g, start, capacity);
  }

  for (Vertex v : r.order) {
    o.text << id(v);
    if (a.levels) o.text << ' ' << r.level[v];
    o.text << '\n';
  }
  o.ledger = std::move(r.ledger);
  o.stats = {{"touches", r.stats.touches},   {"scans", r.stats.scans},
             {"fallback_levels", r.stats.fallback_levels}, {"levels", r.stats.levels},
             {"restarts", r.stats.restarts}};
  if (capacity) o.stats.push_back({"capacity", capacity});

  if (global.verify) {
    const auto dist = expected.get();
    for (Vertex v = 0; v < g.n(); ++v)
      o.expect(dist[v] == r.level[v], "level of vertex " + std::to_string(id(v)) + " differs from queue BFS");
    if (!a.restart) {
      const std::string why = oracles::check_levels(g, start, r.order, r.level);
      o.expect(why.empty(), "level check: " + why);
    }
  }
}

// ------------------------------------------------------------------ dfs

struct DfsArgs {
  std::string file;
  std::string variant = "unary";
  std::uint64_t start = 1;
  unsigned colors = 2;
  bool colors_given = false;
  bool restart = false;
};

void cmd_dfs(const DfsArgs& a, const Global& global, Outcome& o) {
  Graph g = load_graph(a.file);
  const Vertex start = parse_start(g, a.start);
  if (a.variant == "unary") g = build_cross_links(std::move(g));
  else if (a.colors_given) throw DomainError("--colors applies to the unary variant");

  std::future<oracles::DfsTrace> expected;
  if (global.verify)
    expected = std::async(std::launch::async, [&] { return oracles::dfs_stack(g, start, a.restart); });

  std::vector<Vertex> preorder;
  std::vector<Edge> tree;
  if (a.variant == "unary") {
    DfsResult r = dfs_unary(g, {start, a.restart, a.colors});
    o.stats = {{"backtrack_touches", r.backtrack_touches}};
    preorder = std::move(r.preorder);
    tree = std::move(r.tree_edges);
    o.ledger = std::move(r.ledger);
  } else {
    CompactDfsResult r = dfs_compact(g, start, a.restart);
    preorder = std::move(r.preorder);
    tree = std::move(r.tree_edges);
    o.ledger = std::move(r.ledger);
  }
  print_vertices(o.text, preorder);
  o.stats.push_back({"tree_edges", tree.size()});

  if (global.verify) {
    const auto trace = expected.get();
    o.expect(trace.preorder == preorder, "preorder differs from stack DFS");
    o.expect(trace.tree_edges == tree, "tree edges differ from stack DFS");
  }
}

// --------------------------------------------------------------- chains

struct ChainsArgs {
  std::string file;
  std::string variant = "unary";
};

struct BruteConnectivity {
  std::vector<Edge> bridges;
  std::vector<Vertex> cut;
  bool two_edge = false;
  bool biconnected = false;
};

void cmd_chains(const ChainsArgs& a, const Global& global, Outcome& o) {
  Graph g = load_graph(a.file);
  if (a.variant == "unary") g = build_cross_links(std::move(g));

  std::future<BruteConnectivity> expected;
  if (global.verify)
    expected = std::async(std::launch::async, [&] {
      return BruteConnectivity{oracles::brute_bridges(g), oracles::brute_cut_vertices(g),
                               oracles::brute_two_edge_connected(g), oracles::brute_biconnected(g)};
    });

  ChainReport r = a.variant == "unary" ? chain_decomposition(g) : chains_compact(g);
  for (const Chain& c : r.chains)
    o.text << (c.cycle ? "cycle:" : "path:") << ' '
           << join(c.vertices, " ", [](Vertex v) { return std::to_string(id(v)); }) << '\n';
  o.text << "bridges:" << (r.bridges.empty() ? "" : " ") << join(r.bridges, ", ", edge_text) << '\n';
  o.text << "cutvertices:" << (r.cut_vertices.empty() ? "" : " ")
         << join(r.cut_vertices, " ", [](Vertex v) { return std::to_string(id(v)); }) << '\n';
  o.text << "2edge: " << (r.two_edge_connected ? "yes" : "no") << '\n';
  o.text << "biconnected: " << (r.biconnected ? "yes" : "no") << '\n';
  o.stats = {{"chains", r.chains.size()}, {"bridges", r.bridges.size()}, {"cut_vertices", r.cut_vertices.size()}};
  o.ledger = std::move(r.ledger);

  if (global.verify) {
    const auto b = expected.get();
    o.expect(b.bridges == r.bridges, "bridges differ from edge-removal oracle");
    o.expect(b.cut == r.cut_vertices, "cut vertices differ from vertex-removal oracle");
    o.expect(b.two_edge == r.two_edge_connected, "2-edge-connectivity verdict differs");
    o.expect(b.biconnected == r.biconnected, "biconnectivity verdict differs");
    o.expect(r.chains.size() == g.m() - g.n() + 1, "chain count is not m - n + 1");
  }
}

// ------------------------------------------------------------------ mst

struct MstArgs {
  std::string file;
  std::string rule = "log2";
};

void cmd_mst(const MstArgs& a, const Global& global, Outcome& o) {
  const Graph g = load_graph(a.file);
  if (!g.weighted()) throw DomainError("mst needs a weighted graph");
  const CapacityRule rule = CapacityRule::parse(a.rule);

  std::future<std::uint64_t> expected;
  if (global.verify) expected = std::async(std::launch::async, [&] { return oracles::kruskal_weight(g); });

  MstResult r = minimum_spanning_forest(g, rule);
  for (const Edge& e : r.edges) o.text << id(e.u) << ' ' << id(e.v) << ' ' << e.w << '\n';
  o.text << "total " << r.total_weight << '\n';
  o.stats = {{"capacity", r.stats.capacity},     {"max_pool", r.stats.max_pool},
             {"refills", r.stats.refills},       {"evictions", r.stats.evictions},
             {"components", r.stats.components}};
  o.ledger = std::move(r.ledger);

  if (global.verify) {
    o.expect(expected.get() == r.total_weight, "total weight differs from Kruskal");
    const std::string why = oracles::check_spanning_forest(g, r.edges);
    o.expect(why.empty(), "forest check: " + why);
  }
}

// ---------------------------------------------------- toposort, degeneracy

void cmd_toposort(const std::string& file, const Global& global, Outcome& o) {
  const Graph g = load_graph(file);
  if (!g.directed()) throw DomainError("toposort needs a directed graph");
  std::future<bool> cyclic;
  if (global.verify) cyclic = std::async(std::launch::async, [&] { return oracles::has_cycle(g); });

  OrderResult r = toposort(g);
  if (r.complete)
    print_vertices(o.text, r.order);
  else
    o.text << "cycle detected\n";
  o.stats = {{"emitted", r.order.size()}, {"max_probes_per_vertex", r.max_probes_per_vertex}};
  o.ledger = std::move(r.ledger);

  if (global.verify) {
    o.expect(cyclic.get() != r.complete, "cycle verdict differs from DFS colouring");
    if (r.complete) o.expect(oracles::is_topological(g, r.order), "order violates an edge");
  }
}

void cmd_degeneracy(const std::string& file, std::uint64_t d, const Global& global, Outcome& o) {
  const Graph g = load_graph(file);
  if (g.directed()) throw DomainError("degeneracy needs an undirected graph");
  std::future<std::uint64_t> expected;
  if (global.verify) expected = std::async(std::launch::async, [&] { return oracles::degeneracy(g); });

  OrderResult r = degeneracy_order(g, d);
  if (r.complete)
    print_vertices(o.text, r.order);
  else
    o.text << "not d-degenerate (d=" << d << ")\n";
  o.stats = {{"emitted", r.order.size()}, {"max_probes_per_vertex", r.max_probes_per_vertex}};
  o.ledger = std::move(r.ledger);

  if (global.verify) {
    o.expect((expected.get() <= d) == r.complete, "verdict differs from min-degree peeling");
    if (r.complete) o.expect(oracles::is_degenerate_order(g, r.order, d), "order is not d-degenerate");
  }
}

// ----------------------------------------------- components, bipartite

void cmd_components(const std::string& file, const Global& global, Outcome& o) {
  const Graph g = load_graph(file);
  if (g.directed()) throw DomainError("components needs an undirected graph");
  std::future<std::vector<std::uint64_t>> expected;
  if (global.verify) expected = std::async(std::launch::async, [&] { return oracles::components_uf(g); });

  std::vector<std::uint64_t> comp;
  if (g.n() > 0) {
    BfsOutcome r = bfs_two_queue(g, 0, true);
    comp = std::move(r.component);
    o.ledger = std::move(r.ledger);
    o.stats = {{"touches", r.stats.touches}, {"restarts", r.stats.restarts}};
  }
  const std::uint64_t count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  o.text << "components " << count << '\n';
  for (Vertex v = 0; v < g.n(); ++v) o.text << id(v) << ' ' << comp[v] + 1 << '\n';

  if (global.verify) o.expect(expected.get() == comp, "component ids differ from union-find");
}

void cmd_bipartite(const std::string& file, const Global& global, Outcome& o) {
  const Graph g = load_graph(file);
  if (g.directed()) throw DomainError("bipartite needs an undirected graph");
  std::future<bool> expected;
  if (global.verify) expected = std::async(std::launch::async, [&] { return oracles::two_colorable(g); });

  std::optional<Edge> odd;
  if (g.n() > 0) {
    BfsOutcome r = bfs_two_queue(g, 0, true);
    odd = r.odd_edge;
    o.ledger = std::move(r.ledger);
    o.stats = {{"touches", r.stats.touches}, {"restarts", r.stats.restarts}};
  }
  o.text << "bipartite: " << (odd ? "no" : "yes") << '\n';
  if (odd) o.text << "odd edge: " << edge_text(*odd) << '\n';

  if (global.verify) o.expect(expected.get() == !odd.has_value(), "verdict differs from 2-colouring");
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t seed = 1;
  double p = -1.0;
  bool weighted = false;
};

void cmd_gen(const GenArgs& a, Outcome& o) {
  o.text << serialize(generate(parse_family(a.family), a.n, a.seed, {a.p, a.weighted}));
}

int finish(Outcome& o, const Global& global, std::ostream& out, std::ostream& err) {
  out << o.text.str();
  if (global.stats)
    for (const auto& [key, value] : o.stats) err << "stat " << key << ' ' << value << '\n';
  if (!global.space_report.empty()) {
    if (!o.ledger) {
      err << "error: this command keeps no space ledger\n";
      return kPrecondition;
    }
    std::ofstream csv(global.space_report, std::ios::binary);
    if (!csv) {
      err << "error: cannot write '" << global.space_report << "'\n";
      return kPrecondition;
    }
    o.ledger->write_csv(csv);
  }
  return global.verify ? verify_verdict(o.mismatches, err) : kOk;
}

}  // namespace

int verify_verdict(const std::vector<std::string>& mismatches, std::ostream& err) {
  for (const std::string& m : mismatches) err << "verify: " << m << '\n';
  if (!mismatches.empty()) return kMismatch;
  err << "verify: ok\n";
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Space-metered graph algorithms", "spacegraph"};
  app.require_subcommand(1);
  app.fallthrough();

  Global global;
  app.add_option("--space-report", global.space_report, "Write the workspace ledger as CSV");
  app.add_flag("--verify", global.verify, "Check the result against a reference algorithm");
  app.add_flag("--stats", global.stats, "Print operation counters to the error stream");

  const auto variants = [](std::vector<std::string> v) { return CLI::IsMember(std::move(v)); };

  BfsArgs bfs;
  auto* bfs_cmd = app.add_subcommand("bfs", "Breadth-first order");
  bfs_cmd->add_option("--variant", bfs.variant)->check(variants({"two-queue", "scan", "overflow"}));
  bfs_cmd->add_option("--start", bfs.start, "1-based start vertex");
  bfs_cmd->add_option("--capacity-rule", bfs.rule, "const:k | log2 | loglog");
  bfs_cmd->add_flag("--restart", bfs.restart, "Continue from unvisited vertices");
  bfs_cmd->add_flag("--levels", bfs.levels, "Print 'v level' lines");
  bfs_cmd->add_option("file", bfs.file)->required();

  DfsArgs dfs;
  auto* dfs_cmd = app.add_subcommand("dfs", "Depth-first preorder");
  dfs_cmd->add_option("--variant", dfs.variant)->check(variants({"unary", "compact"}));
  dfs_cmd->add_option("--start", dfs.start, "1-based start vertex");
  auto* colors_opt = dfs_cmd->add_option("--colors", dfs.colors)->check(CLI::IsMember({2u, 3u}));
  dfs_cmd->add_flag("--restart", dfs.restart);
  dfs_cmd->add_option("file", dfs.file)->required();

  ChainsArgs chains;
  auto* chains_cmd = app.add_subcommand("chains", "Chain decomposition, bridges and cut vertices");
  chains_cmd->add_option("--variant", chains.variant)->check(variants({"unary", "compact"}));
  chains_cmd->add_option("file", chains.file)->required();

  MstArgs mst;
  auto* mst_cmd = app.add_subcommand("mst", "Minimum spanning forest");
  mst_cmd->add_option("--capacity-rule", mst.rule, "const:k | log2 | loglog");
  mst_cmd->add_option("file", mst.file)->required();

  std::string topo_file;
  auto* topo_cmd = app.add_subcommand("toposort", "Topological order");
  topo_cmd->add_option("file", topo_file)->required();

  std::string degen_file;
  std::uint64_t d = 0;
  auto* degen_cmd = app.add_subcommand("degeneracy", "d-degenerate order");
  degen_cmd->add_option("--d", d)->required();
  degen_cmd->add_option("file", degen_file)->required();

  std::string comp_file;
  auto* comp_cmd = app.add_subcommand("components", "Connected components");
  comp_cmd->add_option("file", comp_file)->required();

  std::string bip_file;
  auto* bip_cmd = app.add_subcommand("bipartite", "Bipartiteness test");
  bip_cmd->add_option("file", bip_file)->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("--family", gen.family)->required()->check(
      variants({"path", "cycle", "star", "grid", "gnp", "dag"}));
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--p", gen.p, "Edge probability for gnp and dag");
  gen_cmd->add_flag("--weighted", gen.weighted);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  dfs.colors_given = colors_opt->count() > 0;

  Outcome o;
  try {
    if (*bfs_cmd) cmd_bfs(bfs, global, o);
    else if (*dfs_cmd) cmd_dfs(dfs, global, o);
    else if (*chains_cmd) cmd_chains(chains, global, o);
    else if (*mst_cmd) cmd_mst(mst, global, o);
    else if (*topo_cmd) cmd_toposort(topo_file, global, o);
    else if (*degen_cmd) cmd_degeneracy(degen_file, d, global, o);
    else if (*comp_cmd) cmd_components(comp_file, global, o);
    else if (*bip_cmd) cmd_bipartite(bip_file, global, o);
    else if (*gen_cmd) cmd_gen(gen, o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return finish(o, global, out, err);
}

}  // namespace spacegraph::cli
