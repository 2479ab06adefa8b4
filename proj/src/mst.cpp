#include "spacegraph/mst.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>

#include "spacegraph/bits.hpp"
#include "spacegraph/errors.hpp"

namespace spacegraph {

namespace {

constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();

// (key, vertex) packed so that integer order is the tie-broken key order.
constexpr std::uint64_t rank_of(std::uint64_t key, std::uint64_t vertex) { return (key << 32) | vertex; }

class CandidatePool {
 public:
  CandidatePool(std::uint64_t n, std::uint64_t k)
      : capacity_(k),
        vertex_(k, bits_for(n - 1)),
        key_(k, 32),
        parent_(k, bits_for(n - 1)),
        min_heap_(k, bits_for(k - 1)),
        max_heap_(k, bits_for(k - 1)),
        min_pos_(k, bits_for(k - 1)),
        max_pos_(k, bits_for(k - 1)),
        table_bits_(static_cast<unsigned>(std::countr_zero(std::bit_ceil(2 * k)))),
        table_(std::uint64_t{1} << table_bits_, bits_for(k)) {}

  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool full() const noexcept { return size_ == capacity_; }

  std::uint64_t vertex(std::uint64_t e) const noexcept { return vertex_.get(e); }
  std::uint64_t key(std::uint64_t e) const noexcept { return key_.get(e); }
  std::uint64_t parent(std::uint64_t e) const noexcept { return parent_.get(e); }
  std::uint64_t rank(std::uint64_t e) const noexcept { return rank_of(key_.get(e), vertex_.get(e)); }

  std::uint64_t min() const noexcept { return min_heap_.get(0); }
  std::uint64_t max() const noexcept { return max_heap_.get(0); }

  std::optional<std::uint64_t> find(std::uint64_t v) const noexcept {
    for (std::uint64_t s = home(v);; s = (s + 1) & mask()) {
      const std::uint64_t t = table_.get(s);
      if (t == 0) return std::nullopt;
      if (vertex_.get(t - 1) == v) return t - 1;
    }
  }

  void insert(std::uint64_t v, std::uint64_t key, std::uint64_t parent) noexcept {
    const std::uint64_t e = size_++;
    vertex_.set(e, v);
    key_.set(e, key);
    parent_.set(e, parent);
    std::uint64_t s = home(v);
    while (table_.get(s) != 0) s = (s + 1) & mask();
    table_.set(s, e + 1);
    min_heap_.set(e, e);
    min_pos_.set(e, e);
    max_heap_.set(e, e);
    max_pos_.set(e, e);
    sift_up<false>(e);
    sift_up<true>(e);
  }

  void decrease(std::uint64_t e, std::uint64_t key, std::uint64_t parent) noexcept {
    key_.set(e, key);
    parent_.set(e, parent);
    sift_up<false>(min_pos_.get(e));
    sift_down<true>(max_pos_.get(e));
  }

  void remove(std::uint64_t e) noexcept {
    heap_remove<false>(min_pos_.get(e));
    heap_remove<true>(max_pos_.get(e));
    table_erase(slot_of(vertex_.get(e)));
    const std::uint64_t last = --size_;
    if (e == last) return;
    // Move the last entry into the hole.
    vertex_.set(e, vertex_.get(last));
    key_.set(e, key_.get(last));
    parent_.set(e, parent_.get(last));
    table_.set(slot_of(vertex_.get(e)), e + 1);
    const std::uint64_t pmin = min_pos_.get(last);
    const std::uint64_t pmax = max_pos_.get(last);
    min_heap_.set(pmin, e);
    min_pos_.set(e, pmin);
    max_heap_.set(pmax, e);
    max_pos_.set(e, pmax);
  }

  SpaceUse space() const {
    std::uint64_t bits = 0;
    for (const IntVector* v : {&vertex_, &key_, &parent_, &min_heap_, &max_heap_, &min_pos_, &max_pos_, &table_})
      bits += v->space().principal;
    return {0, bits};
  }

 private:
  std::uint64_t mask() const noexcept { return (std::uint64_t{1} << table_bits_) - 1; }
  std::uint64_t home(std::uint64_t v) const noexcept {
    return table_bits_ == 0 ? 0 : ((v + 1) * 0x9E3779B97F4A7C15ULL) >> (64 - table_bits_);
  }
  std::uint64_t slot_of(std::uint64_t v) const noexcept {
    std::uint64_t s = home(v);
    while (vertex_.get(table_.get(s) - 1) != v) s = (s + 1) & mask();
    return s;
  }
  void table_erase(std::uint64_t i) noexcept {
    for (std::uint64_t j = (i + 1) & mask();; j = (j + 1) & mask()) {
      const std::uint64_t t = table_.get(j);
      if (t == 0) break;
      const std::uint64_t h = home(vertex_.get(t - 1));
      const bool movable = i <= j ? (h <= i || h > j) : (h <= i && h > j);
      if (movable) {
        table_.set(i, t);
        i = j;
      }
    }
    table_.set(i, 0);
  }

  template <bool Max>
  bool before(std::uint64_t a, std::uint64_t b) const noexcept {
    return Max ? rank(a) > rank(b) : rank(a) < rank(b);
  }
  template <bool Max>
  IntVector& heap() noexcept {
    return Max ? max_heap_ : min_heap_;
  }
  template <bool Max>
  IntVector& pos() noexcept {
    return Max ? max_pos_ : min_pos_;
  }
  template <bool Max>
  void place(std::uint64_t p, std::uint64_t e) noexcept {
    heap<Max>().set(p, e);
    pos<Max>().set(e, p);
  }
  template <bool Max>
  void sift_up(std::uint64_t p) noexcept {
    const std::uint64_t e = heap<Max>().get(p);
    while (p > 0) {
      const std::uint64_t up = (p - 1) / 2;
      const std::uint64_t f = heap<Max>().get(up);
      if (!before<Max>(e, f)) break;
      place<Max>(p, f);
      p = up;
    }
    place<Max>(p, e);
  }
  template <bool Max>
  void sift_down(std::uint64_t p) noexcept {
    const std::uint64_t e = heap<Max>().get(p);
    for (;;) {
      std::uint64_t c = 2 * p + 1;
      if (c >= size_) break;
      if (c + 1 < size_ && before<Max>(heap<Max>().get(c + 1), heap<Max>().get(c))) ++c;
      const std::uint64_t child = heap<Max>().get(c);
      if (!before<Max>(child, e)) break;
      place<Max>(p, child);
      p = c;
    }
    place<Max>(p, e);
  }
  // Heap size is still size_ on entry; the entry removed is not yet compacted.
  template <bool Max>
  void heap_remove(std::uint64_t p) noexcept {
    const std::uint64_t last = size_ - 1;
    if (p != last) {
      place<Max>(p, heap<Max>().get(last));
      const std::uint64_t keep = size_;
      size_ = last;
      sift_down<Max>(p);
      sift_up<Max>(p);
      size_ = keep;
    }
  }

  std::uint64_t capacity_;
  std::uint64_t size_ = 0;
  IntVector vertex_;
  IntVector key_;
  IntVector parent_;
  IntVector min_heap_;
  IntVector max_heap_;
  IntVector min_pos_;
  IntVector max_pos_;
  unsigned table_bits_;
  IntVector table_;
};

// Buffer of (rank, parent) pairs in one WordBuffer.
struct PairBuffer {
  explicit PairBuffer(std::uint64_t capacity) : words(2 * capacity) {}
  std::uint64_t rank(std::uint64_t i) const noexcept { return words[2 * i]; }
  std::uint64_t parent(std::uint64_t i) const noexcept { return words[2 * i + 1]; }
  void set(std::uint64_t i, std::uint64_t r, std::uint64_t p) noexcept {
    words[2 * i] = r;
    words[2 * i + 1] = p;
  }
  void swap(std::uint64_t i, std::uint64_t j) noexcept {
    std::swap(words[2 * i], words[2 * j]);
    std::swap(words[2 * i + 1], words[2 * j + 1]);
  }
  // Rearranges [0, count) so that position kth holds the kth smallest rank,
  // with smaller ranks before it and larger after.
  void select(std::uint64_t count, std::uint64_t kth) noexcept {
    std::int64_t lo = 0;
    std::int64_t hi = static_cast<std::int64_t>(count) - 1;
    const auto k = static_cast<std::int64_t>(kth);
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      // Median of three as pivot.
      std::uint64_t a = rank(lo), b = rank(mid), c = rank(hi);
      const std::uint64_t pivot = std::max(std::min(a, b), std::min(std::max(a, b), c));
      std::int64_t i = lo;
      std::int64_t j = hi;
      while (i <= j) {
        while (rank(i) < pivot) ++i;
        while (rank(j) > pivot) --j;
        if (i <= j) swap(i++, j--);
      }
      if (k <= j)
        hi = j;
      else if (k >= i)
        lo = i;
      else
        return;
    }
  }
  WordBuffer words;
};

}  // namespace

MstResult minimum_spanning_forest(const Graph& g, std::uint64_t capacity) {
  if (g.directed()) throw DomainError("minimum spanning forest needs an undirected graph");
  if (!g.weighted()) throw DomainError("minimum spanning forest needs edge weights");
  if (capacity == 0) throw DomainError("pool capacity must be at least 1");

  MstResult result;
  const std::uint64_t n = g.n();
  if (n == 0) return result;
  const std::uint64_t k = std::min(capacity, n);
  result.stats.capacity = k;

  BitStore in_tree(n);
  CandidatePool pool(n, k);
  const std::uint64_t buffer_slots = 2 * (k + 1);
  PairBuffer buffer(buffer_slots);

  const double lg = std::max(1.0, std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2))));
  const double f = static_cast<double>(n) / (static_cast<double>(k) * lg);
  result.ledger.set_bound("n + n/f", static_cast<double>(n) + static_cast<double>(n) / std::max(f, 1e-9));
  result.ledger.record("in_tree", in_tree.space());
  result.ledger.record("pool", pool.space());
  result.ledger.record("refill_buffer", 0, buffer.words.bits());

  std::uint64_t bound = kInfinity;
  result.edges.reserve(n);

  auto relax = [&](Vertex u) {
    for (std::uint64_t e = g.out_begin(u); e < g.out_end(u); ++e) {
      const Vertex y = g.out_target(e);
      if (in_tree.get(y)) continue;
      const std::uint64_t w = g.out_weight(e);
      if (const auto entry = pool.find(y)) {
        if (w < pool.key(*entry)) pool.decrease(*entry, w, u);
        continue;
      }
      const std::uint64_t r = rank_of(w, y);
      if (r >= bound) continue;
      if (pool.full()) {
        const std::uint64_t top = pool.max();
        if (r > pool.rank(top)) {
          bound = r;
          continue;
        }
        bound = pool.rank(top);
        pool.remove(top);
        ++result.stats.evictions;
      }
      pool.insert(y, w, u);
      result.stats.max_pool = std::max(result.stats.max_pool, pool.size());
      if (pool.size() > k) throw std::logic_error("candidate pool exceeded its capacity");
    }
  };

  auto refill = [&] {
    ++result.stats.refills;
    std::uint64_t count = 0;
    for (auto v = in_tree.next_clear(0, n); v; v = in_tree.next_clear(*v + 1, n)) {
      std::uint64_t best = kInfinity;
      std::uint64_t parent = 0;
      for (std::uint64_t e = g.out_begin(static_cast<Vertex>(*v)); e < g.out_end(static_cast<Vertex>(*v)); ++e) {
        const Vertex u = g.out_target(e);
        if (in_tree.get(u) && g.out_weight(e) < best) {
          best = g.out_weight(e);
          parent = u;
        }
      }
      if (best == kInfinity) continue;
      buffer.set(count++, rank_of(best, *v), parent);
      if (count == buffer_slots) {
        buffer.select(count, k);
        count = k + 1;
      }
    }
    if (count > k) {
      buffer.select(count, k);
      bound = buffer.rank(k);
      count = k;
    } else {
      bound = kInfinity;
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t r = buffer.rank(i);
      pool.insert(r & 0xffffffffULL, r >> 32, buffer.parent(i));
    }
    result.stats.max_pool = std::max(result.stats.max_pool, pool.size());
  };

  std::uint64_t sweep = 0;
  for (;;) {
    if (pool.empty()) {
      if (bound == kInfinity) {
        const auto root = in_tree.next_clear(sweep, n);
        if (!root) break;
        sweep = *root;
        in_tree.set(*root);
        ++result.stats.components;
        relax(static_cast<Vertex>(*root));
        continue;
      }
      refill();
      continue;
    }
    const std::uint64_t e = pool.min();
    const auto v = static_cast<Vertex>(pool.vertex(e));
    const auto parent = static_cast<Vertex>(pool.parent(e));
    const auto w = static_cast<std::uint32_t>(pool.key(e));
    pool.remove(e);
    in_tree.set(v);
    result.edges.push_back({parent, v, w});
    result.total_weight += w;
    relax(v);
  }
  return result;
}

MstResult minimum_spanning_forest(const Graph& g, const CapacityRule& rule) {
  return minimum_spanning_forest(g, rule.capacity(g.n()));
}

}  // namespace spacegraph
