#include "spacegraph/bfs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "spacegraph/bits.hpp"
#include "spacegraph/capacity.hpp"
#include "spacegraph/errors.hpp"
#include "spacegraph/findany.hpp"

namespace spacegraph {

// ------------------------------------------------------------ capacity rule

CapacityRule CapacityRule::parse(std::string_view text) {
  CapacityRule rule;
  if (text == "log2") {
    rule.kind = Kind::log2;
  } else if (text == "loglog") {
    rule.kind = Kind::loglog;
  } else if (text.starts_with("const:")) {
    rule.kind = Kind::constant;
    const std::string_view num = text.substr(6);
    double k = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc() || ptr != num.data() + num.size() || !(k > 0.0))
      throw DomainError("capacity rule const:k needs a positive k");
    rule.k = k;
  } else {
    throw DomainError("capacity rule must be const:k, log2 or loglog");
  }
  return rule;
}

std::string CapacityRule::to_string() const {
  switch (kind) {
    case Kind::log2:
      return "log2";
    case Kind::loglog:
      return "loglog";
    case Kind::constant:
      break;
  }
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, k);
  return "const:" + std::string(buf, ec == std::errc() ? ptr : buf);
}

double CapacityRule::f(std::uint64_t n) const {
  const double lg = std::max(1.0, std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2))));
  switch (kind) {
    case Kind::constant:
      return k;
    case Kind::log2:
      return lg;
    case Kind::loglog:
      return std::max(1.0, std::log2(lg));
  }
  return 1.0;
}

std::uint64_t CapacityRule::capacity(std::uint64_t n) const {
  const double lg = std::max(1.0, std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2))));
  const double cap = std::floor(static_cast<double>(n) / (f(n) * lg));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(cap));
}

// -------------------------------------------------------------------- BFS

namespace {

constexpr unsigned kWhite = 0;
constexpr unsigned kBlack = 3;

void check_start(const Graph& g, Vertex start) {
  if (start >= g.n()) throw RangeError("start vertex out of range");
}

BfsOutcome fresh_outcome(const Graph& g) {
  BfsOutcome out;
  out.order.reserve(g.n());
  out.level.assign(g.n(), kUnreached);
  return out;
}

}  // namespace

BfsOutcome bfs_two_queue(const Graph& g, Vertex start, bool restart) {
  check_start(g, start);
  BfsOutcome out = fresh_outcome(g);
  if (restart) out.component.assign(g.n(), kUnreached);
  const std::uint64_t n = g.n();

  // Classes: 0 white, 1 and 2 the two grey levels, 3 black.
  FindAnyPartition colors(n, 4, {1, 2}, kWhite);
  out.ledger.set_bound("2n", 2.0 * static_cast<double>(n));
  out.ledger.record("colors", colors.space());

  std::uint64_t component = 0;
  std::uint64_t sweep = 0;  // every vertex below sweep has been visited
  Vertex root = start;
  for (;;) {
    unsigned cur = 1;
    std::uint64_t level = 0;
    colors.move(root, cur);
    out.order.push_back(root);
    out.level[root] = 0;
    if (restart) out.component[root] = component;

    while (colors.class_size(cur) != 0) {
      const unsigned next = 3 - cur;
      while (const auto v = colors.findany_in(cur)) {
        colors.move(*v, kBlack);
        for (std::uint64_t e = g.out_begin(*v); e < g.out_end(*v); ++e) {
          ++out.stats.touches;
          const Vertex u = g.out_target(e);
          const unsigned c = colors.class_of(u);
          if (c == kWhite) {
            colors.move(u, next);
            out.order.push_back(u);
            out.level[u] = level + 1;
            if (restart) out.component[u] = component;
          } else if (c == cur && !g.directed() && !out.odd_edge) {
            out.odd_edge = Edge{static_cast<Vertex>(*v), u, 0};
          }
        }
      }
      cur = next;
      ++level;
    }
    out.stats.levels = std::max(out.stats.levels, level);

    if (!restart) break;
    const auto white = colors.labels().find(sweep, n, kWhite);
    if (!white) break;
    sweep = *white;
    root = static_cast<Vertex>(*white);
    ++component;
    ++out.stats.restarts;
  }
  return out;
}

BfsOutcome bfs_scan(const Graph& g, Vertex start) {
  check_start(g, start);
  BfsOutcome out = fresh_outcome(g);
  const std::uint64_t n = g.n();

  constexpr unsigned kUnexplored = 2;
  PackedVec colors(n, 3, kUnexplored);
  out.ledger.set_bound("n lg 3", static_cast<double>(n) * std::log2(3.0));
  out.ledger.record("colors", colors.space());

  colors.write(start, 0);
  out.order.push_back(start);
  out.level[start] = 0;

  unsigned digits[kWordBits];
  unsigned idle = 0;
  for (std::uint64_t scan = 0; idle < 2; ++scan) {
    ++out.stats.scans;
    const unsigned parity = static_cast<unsigned>(scan & 1);
    bool productive = false;
    for (std::size_t w = 0; w < colors.num_words(); ++w) {
      colors.decode_word(w, digits);
      const std::uint64_t base = std::uint64_t{w} * colors.per_word();
      const std::uint64_t limit = std::min<std::uint64_t>(colors.per_word(), n - base);
      for (std::uint64_t d = 0; d < limit; ++d) {
        if (digits[d] != parity) continue;
        const auto v = static_cast<Vertex>(base + d);
        for (std::uint64_t e = g.out_begin(v); e < g.out_end(v); ++e) {
          ++out.stats.touches;
          const Vertex u = g.out_target(e);
          if (colors.read_unchecked(u) != kUnexplored) continue;
          colors.write(u, parity ^ 1u);
          out.order.push_back(u);
          out.level[u] = scan + 1;
          productive = true;
        }
      }
    }
    if (productive) {
      idle = 0;
      out.stats.levels = scan + 1;
    } else {
      ++idle;
    }
  }
  return out;
}

BfsOutcome bfs_overflow(const Graph& g, Vertex start, std::uint64_t capacity) {
  check_start(g, start);
  if (capacity == 0) throw DomainError("queue capacity must be at least 1");
  BfsOutcome out = fresh_outcome(g);
  const std::uint64_t n = g.n();

  constexpr unsigned kUnexplored = 2;
  PackedVec colors(n, 3, kUnexplored);
  const unsigned id_bits = bits_for(n - 1);
  IntVector queue[2] = {IntVector(capacity, id_bits), IntVector(capacity, id_bits)};
  std::uint64_t length[2] = {0, 0};
  bool overflow[2] = {false, false};

  out.ledger.set_bound("n lg 3", static_cast<double>(n) * std::log2(3.0));
  out.ledger.record("colors", colors.space());
  out.ledger.record("queue0", queue[0].space());
  out.ledger.record("queue1", queue[1].space());

  colors.write(start, 0);
  out.order.push_back(start);
  out.level[start] = 0;
  queue[0].set(0, start);
  length[0] = 1;

  unsigned digits[kWordBits];
  for (std::uint64_t level = 0;; ++level) {
    const unsigned cur = static_cast<unsigned>(level & 1);
    const unsigned nxt = cur ^ 1u;
    length[nxt] = 0;
    overflow[nxt] = false;
    bool discovered = false;

    auto expand = [&](Vertex v) {
      for (std::uint64_t e = g.out_begin(v); e < g.out_end(v); ++e) {
        ++out.stats.touches;
        const Vertex u = g.out_target(e);
        if (colors.read_unchecked(u) != kUnexplored) continue;
        colors.write(u, nxt);
        out.order.push_back(u);
        out.level[u] = level + 1;
        discovered = true;
        if (length[nxt] < capacity)
          queue[nxt].set(length[nxt]++, u);
        else
          overflow[nxt] = true;
      }
    };

    if (!overflow[cur]) {
      for (std::uint64_t k = 0; k < length[cur]; ++k) expand(static_cast<Vertex>(queue[cur].get(k)));
    } else {
      // The queue lost part of this level: expand every vertex of its parity.
      // Older levels of the same parity have no unexplored neighbours left.
      ++out.stats.fallback_levels;
      ++out.stats.scans;
      for (std::size_t w = 0; w < colors.num_words(); ++w) {
        colors.decode_word(w, digits);
        const std::uint64_t base = std::uint64_t{w} * colors.per_word();
        const std::uint64_t limit = std::min<std::uint64_t>(colors.per_word(), n - base);
        for (std::uint64_t d = 0; d < limit; ++d)
          if (digits[d] == cur) expand(static_cast<Vertex>(base + d));
      }
    }
    if (!discovered) break;
    out.stats.levels = level + 1;
  }
  return out;
}

std::vector<std::uint64_t> components(const Graph& g) {
  if (g.directed()) throw DomainError("components are defined here for undirected graphs");
  if (g.n() == 0) return {};
  return bfs_two_queue(g, 0, true).component;
}

BipartiteResult is_bipartite(const Graph& g) {
  if (g.directed()) throw DomainError("bipartiteness is defined here for undirected graphs");
  BipartiteResult result;
  if (g.n() == 0) return result;
  const BfsOutcome out = bfs_two_queue(g, 0, true);
  if (out.odd_edge) {
    result.bipartite = false;
    result.witness = out.odd_edge;
  }
  return result;
}

}  // namespace spacegraph
