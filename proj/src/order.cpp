#include "spacegraph/order.hpp"

#include <algorithm>

#include "spacegraph/decseq.hpp"
#include "spacegraph/errors.hpp"
#include "spacegraph/findany.hpp"

namespace spacegraph {

OrderResult toposort(const Graph& g) {
  if (!g.directed()) throw DomainError("topological sort needs a directed graph");
  OrderResult result;
  const std::uint64_t n = g.n();
  result.order.reserve(n);

  DecrementSeq indegree = DecrementSeq::over_offsets(g.in_offsets());
  FindAnySet ready(n);
  for (Vertex v = 0; v < n; ++v)
    if (g.in_end(v) == g.in_begin(v)) ready.insert(v);

  result.ledger.set_bound("m + 3n", static_cast<double>(g.m()) + 3.0 * static_cast<double>(n));
  result.ledger.record("indegree", indegree.space());
  result.ledger.record("ready", ready.space());

  while (const auto v = ready.findany()) {
    const std::uint64_t before = indegree.probes() + ready.probes();
    ready.erase(*v);
    result.order.push_back(static_cast<Vertex>(*v));
    for (std::uint64_t e = g.out_begin(static_cast<Vertex>(*v)); e < g.out_end(static_cast<Vertex>(*v)); ++e) {
      const Vertex u = g.out_target(e);
      if (indegree.dec_if_nonzero(u) && indegree.is_zero(u)) ready.insert(u);
    }
    const std::uint64_t degree = g.out_end(static_cast<Vertex>(*v)) - g.out_begin(static_cast<Vertex>(*v));
    result.max_probes_per_vertex = std::max(result.max_probes_per_vertex,
                                            (indegree.probes() + ready.probes() - before) / (degree + 1));
  }
  result.complete = result.order.size() == n;
  return result;
}

OrderResult degeneracy_order(const Graph& g, std::uint64_t d) {
  if (g.directed()) throw DomainError("degeneracy order needs an undirected graph");
  OrderResult result;
  const std::uint64_t n = g.n();
  result.order.reserve(n);

  std::vector<std::uint64_t> xs(n);
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t deg = g.out_end(v) - g.out_begin(v);
    xs[v] = deg > d ? deg - d : 0;
  }
  DecrementSeq excess(xs);
  std::vector<std::uint64_t>().swap(xs);  // only needed to build the layout

  FindAnySet ready(n);
  BitStore emitted(n);
  for (Vertex v = 0; v < n; ++v)
    if (excess.is_zero(v)) ready.insert(v);

  result.ledger.set_bound("m + 3n", static_cast<double>(g.m()) + 3.0 * static_cast<double>(n));
  result.ledger.record("excess", excess.space());
  result.ledger.record("ready", ready.space());
  result.ledger.record("emitted", emitted.space());

  while (const auto v = ready.findany()) {
    const std::uint64_t before = excess.probes() + ready.probes();
    ready.erase(*v);
    emitted.set(*v);
    result.order.push_back(static_cast<Vertex>(*v));
    for (std::uint64_t e = g.out_begin(static_cast<Vertex>(*v)); e < g.out_end(static_cast<Vertex>(*v)); ++e) {
      const Vertex u = g.out_target(e);
      if (emitted.get(u)) continue;
      if (excess.dec_if_nonzero(u) && excess.is_zero(u)) ready.insert(u);
    }
    const std::uint64_t degree = g.out_end(static_cast<Vertex>(*v)) - g.out_begin(static_cast<Vertex>(*v));
    result.max_probes_per_vertex = std::max(result.max_probes_per_vertex,
                                            (excess.probes() + ready.probes() - before) / (degree + 1));
  }
  result.complete = result.order.size() == n;
  return result;
}

}  // namespace spacegraph
