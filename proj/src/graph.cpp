#include "spacegraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "spacegraph/errors.hpp"

namespace spacegraph {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v, bool directed) {
  if (!directed && u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

Graph Graph::from_edges(std::uint64_t n, bool directed, std::vector<Edge> edges, bool weighted) {
  if (n >= (std::uint64_t{1} << 32)) throw DomainError("vertex count must be below 2^32");
  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  g.weighted_ = weighted;

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::uint64_t> out_deg(n, 0);
  std::vector<std::uint64_t> in_deg(directed ? n : 0, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
    if (e.u == e.v) throw DomainError("self-loop");
    if (!seen.insert(edge_key(e.u, e.v, directed)).second) throw DomainError("duplicate edge");
    ++out_deg[e.u];
    if (directed)
      ++in_deg[e.v];
    else
      ++out_deg[e.v];
  }

  g.out_off_.assign(n + 1, 0);
  for (std::uint64_t v = 0; v < n; ++v) g.out_off_[v + 1] = g.out_off_[v] + out_deg[v];
  g.out_adj_.resize(g.out_off_[n]);
  if (weighted) g.out_w_.resize(g.out_off_[n]);
  std::vector<std::uint64_t> out_fill(g.out_off_.begin(), g.out_off_.end() - 1);

  std::vector<std::uint64_t> in_fill;
  if (directed) {
    g.in_off_.assign(n + 1, 0);
    for (std::uint64_t v = 0; v < n; ++v) g.in_off_[v + 1] = g.in_off_[v] + in_deg[v];
    g.in_adj_.resize(g.in_off_[n]);
    in_fill.assign(g.in_off_.begin(), g.in_off_.end() - 1);
  } else {
    g.in_off_ = g.out_off_;
  }

  g.edge_out_pos_.resize(edges.size());
  g.edge_twin_pos_.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::uint64_t p = out_fill[e.u]++;
    g.out_adj_[p] = e.v;
    if (weighted) g.out_w_[p] = e.w;
    g.edge_out_pos_[i] = p;
    if (directed) {
      const std::uint64_t q = in_fill[e.v]++;
      g.in_adj_[q] = e.u;
      g.edge_twin_pos_[i] = q;
    } else {
      const std::uint64_t q = out_fill[e.v]++;
      g.out_adj_[q] = e.u;
      if (weighted) g.out_w_[q] = e.w;
      g.edge_twin_pos_[i] = q;
    }
  }
  if (!weighted)
    for (Edge& e : edges) e.w = 0;
  g.edges_ = std::move(edges);
  return g;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.n()) throw RangeError("vertex out of range");
}

}  // namespace

std::uint64_t Graph::out_degree(Vertex v) const {
  check_vertex(*this, v);
  return out_off_[v + 1] - out_off_[v];
}

std::uint64_t Graph::in_degree(Vertex v) const {
  check_vertex(*this, v);
  return in_off_[v + 1] - in_off_[v];
}

Vertex Graph::neighbor(Vertex v, std::uint64_t k) const {
  if (k >= out_degree(v)) throw RangeError("neighbour index out of range");
  return out_adj_[out_off_[v] + k];
}

Vertex Graph::in_neighbor(Vertex v, std::uint64_t k) const {
  if (k >= in_degree(v)) throw RangeError("neighbour index out of range");
  return directed_ ? in_adj_[in_off_[v] + k] : out_adj_[out_off_[v] + k];
}

std::uint32_t Graph::weight(Vertex v, std::uint64_t k) const {
  if (k >= out_degree(v)) throw RangeError("neighbour index out of range");
  if (!weighted_) throw DomainError("graph is unweighted");
  return out_w_[out_off_[v] + k];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return std::span<const Vertex>(out_adj_).subspan(out_off_[v], out_off_[v + 1] - out_off_[v]);
}

std::span<const Vertex> Graph::in_neighbors(Vertex v) const {
  check_vertex(*this, v);
  if (!directed_) return neighbors(v);
  return std::span<const Vertex>(in_adj_).subspan(in_off_[v], in_off_[v + 1] - in_off_[v]);
}

Graph build_cross_links(Graph g) {
  g.out_cross_.assign(g.out_adj_.size(), 0);
  if (g.directed_) g.in_cross_.assign(g.in_adj_.size(), 0);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const std::uint64_t p = g.edge_out_pos_[i];
    const std::uint64_t q = g.edge_twin_pos_[i];
    if (g.directed_) {
      g.out_cross_[p] = q;
      g.in_cross_[q] = p;
    } else {
      g.out_cross_[p] = q;
      g.out_cross_[q] = p;
    }
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.directed_ == b.directed_ && a.weighted_ == b.weighted_ &&
         a.out_off_ == b.out_off_ && a.out_adj_ == b.out_adj_ && a.out_w_ == b.out_w_ &&
         a.in_off_ == b.in_off_ && a.in_adj_ == b.in_adj_;
}

// ------------------------------------------------------------------- text

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, std::string(what) + " overflow");
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  bool directed = false;
  bool weighted = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (tokens[0] != "graph" || tokens.size() < 4 || tokens.size() > 5)
        throw ParseError(line_no, "expected header 'graph <directed|undirected> <n> <m> [weighted]'");
      if (tokens[1] == "directed")
        directed = true;
      else if (tokens[1] != "undirected")
        throw ParseError(line_no, "graph kind must be 'directed' or 'undirected'");
      n = parse_uint(tokens[2], line_no, "vertex count");
      m = parse_uint(tokens[3], line_no, "edge count");
      if (n >= (std::uint64_t{1} << 32)) throw ParseError(line_no, "vertex count too large");
      if (tokens.size() == 5) {
        if (tokens[4] != "weighted") throw ParseError(line_no, "unknown header flag '" + std::string(tokens[4]) + "'");
        weighted = true;
      }
      edges.reserve(std::min<std::uint64_t>(m, 1u << 24));
      have_header = true;
    } else {
      if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared");
      if (tokens.size() != (weighted ? 3u : 2u))
        throw ParseError(line_no, weighted ? "expected 'u v w'" : "expected 'u v'");
      const std::uint64_t u = parse_uint(tokens[0], line_no, "vertex id");
      const std::uint64_t v = parse_uint(tokens[1], line_no, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex id out of range [1..n]");
      if (u == v) throw ParseError(line_no, "self-loop");
      std::uint32_t w = 0;
      if (weighted) {
        const std::uint64_t wv = parse_uint(tokens[2], line_no, "weight");
        if (wv > 0xffffffffULL) throw ParseError(line_no, "weight overflow");
        w = static_cast<std::uint32_t>(wv);
      }
      const Vertex a = static_cast<Vertex>(u - 1);
      const Vertex b = static_cast<Vertex>(v - 1);
      if (!seen.insert(edge_key(a, b, directed)).second) throw ParseError(line_no, "duplicate edge");
      edges.push_back({a, b, w});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (edges.size() != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(n, directed, std::move(edges), weighted);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.directed() ? "directed" : "undirected") << ' ' << g.n() << ' ' << g.m()
      << (g.weighted() ? " weighted" : "") << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1;
    if (g.weighted()) out << ' ' << e.w;
    out << '\n';
  }
  return out.str();
}

// ------------------------------------------------------------- generators

Family parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "grid") return Family::grid;
  if (name == "gnp") return Family::gnp;
  if (name == "dag") return Family::dag;
  throw DomainError("unknown graph family '" + std::string(name) + "'");
}

namespace {

void assign_weights(std::vector<Edge>& edges, std::mt19937_64& rng) {
  for (Edge& e : edges) e.w = static_cast<std::uint32_t>(rng());
}

// Every pair (i, j), i < j, independently with probability p, by geometric
// skipping over the pair sequence.
std::vector<Edge> bernoulli_pairs(std::uint64_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2 || p <= 0.0) return edges;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = i + 1; j < n; ++j) edges.push_back({Vertex(i), Vertex(j), 0});
    return edges;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::uint64_t i = 1;
  std::int64_t j = -1;
  while (i < n) {
    const double r = unit(rng);
    j += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (i < n && j >= static_cast<std::int64_t>(i)) {
      j -= static_cast<std::int64_t>(i);
      ++i;
    }
    if (i < n) edges.push_back({Vertex(j), Vertex(i), 0});
  }
  return edges;
}

}  // namespace

Graph generate(Family family, std::uint64_t n, std::uint64_t seed, const GenOptions& options) {
  if (n == 0) throw DomainError("generator needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  bool directed = false;
  const double p = options.p >= 0.0 ? options.p : std::min(1.0, 4.0 / static_cast<double>(n));
  switch (family) {
    case Family::path:
      for (std::uint64_t v = 1; v < n; ++v) edges.push_back({Vertex(v - 1), Vertex(v), 0});
      break;
    case Family::cycle:
      for (std::uint64_t v = 1; v < n; ++v) edges.push_back({Vertex(v - 1), Vertex(v), 0});
      if (n >= 3) edges.push_back({Vertex(n - 1), 0, 0});
      break;
    case Family::star:
      for (std::uint64_t v = 1; v < n; ++v) edges.push_back({0, Vertex(v), 0});
      break;
    case Family::grid: {
      const auto cols = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (std::uint64_t v = 0; v < n; ++v) {
        if ((v + 1) % cols != 0 && v + 1 < n) edges.push_back({Vertex(v), Vertex(v + 1), 0});
        if (v + cols < n) edges.push_back({Vertex(v), Vertex(v + cols), 0});
      }
      break;
    }
    case Family::gnp:
      edges = bernoulli_pairs(n, p, rng);
      std::shuffle(edges.begin(), edges.end(), rng);
      break;
    case Family::dag: {
      directed = true;
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), Vertex{0});
      std::shuffle(order.begin(), order.end(), rng);
      edges = bernoulli_pairs(n, p, rng);
      for (Edge& e : edges) e = {order[e.u], order[e.v], 0};
      std::shuffle(edges.begin(), edges.end(), rng);
      break;
    }
  }
  if (options.weighted) assign_weights(edges, rng);
  return Graph::from_edges(n, directed, std::move(edges), options.weighted);
}

Graph random_graph(std::uint64_t n, std::uint64_t m, bool directed, std::uint64_t seed, bool weighted) {
  const std::uint64_t slots = directed ? n * (n - 1) : n * (n - 1) / 2;
  if (n == 0 || m > slots) throw DomainError("too many edges for a simple graph");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const auto u = static_cast<Vertex>(pick(rng));
    const auto v = static_cast<Vertex>(pick(rng));
    if (u == v || !seen.insert(edge_key(u, v, directed)).second) continue;
    edges.push_back({u, v, 0});
  }
  if (weighted) assign_weights(edges, rng);
  return Graph::from_edges(n, directed, std::move(edges), weighted);
}

Graph random_connected_graph(std::uint64_t n, std::uint64_t m, std::uint64_t seed, bool weighted) {
  if (n == 0 || m + 1 < n || m > n * (n - 1) / 2) throw DomainError("edge count cannot give a connected simple graph");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 1; i < n; ++i) {
    const Vertex parent = perm[std::uniform_int_distribution<std::uint64_t>(0, i - 1)(rng)];
    edges.push_back({parent, perm[i], 0});
    seen.insert(edge_key(parent, perm[i], false));
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  while (edges.size() < m) {
    const auto u = static_cast<Vertex>(pick(rng));
    const auto v = static_cast<Vertex>(pick(rng));
    if (u == v || !seen.insert(edge_key(u, v, false)).second) continue;
    edges.push_back({u, v, 0});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  for (Edge& e : edges)
    if (rng() & 1) std::swap(e.u, e.v);
  if (weighted) assign_weights(edges, rng);
  return Graph::from_edges(n, false, std::move(edges), weighted);
}

Graph random_dag(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  if (n == 0 || m > n * (n - 1) / 2) throw DomainError("too many edges for a DAG");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    std::uint64_t a = pick(rng);
    std::uint64_t b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!seen.insert((a << 32) | b).second) continue;
    edges.push_back({order[a], order[b], 0});
  }
  return Graph::from_edges(n, true, std::move(edges), false);
}

}  // namespace spacegraph
