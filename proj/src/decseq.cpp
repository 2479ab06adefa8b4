#include "spacegraph/decseq.hpp"

#include <algorithm>

#include "spacegraph/errors.hpp"

namespace spacegraph {

DecrementSeq::DecrementSeq(std::span<const std::uint64_t> xs) {
  n_ = xs.size();
  std::uint64_t m = 0;
  for (std::uint64_t x : xs) m += x;

  // Elias-Fano over the n+1 prefix sums in [0, m].
  const std::uint64_t count = n_ + 1;
  low_width_ = m > count ? static_cast<unsigned>(std::bit_width(m / count) - 1) : 0;
  if (low_width_ > 0) low_ = IntVector(count, low_width_);
  high_ = BitStore(count + (m >> low_width_) + 1);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (low_width_ > 0) low_.set(i, sum & low_mask(low_width_));
    high_.set((sum >> low_width_) + i);
    if (i < n_) sum += xs[i];
  }
  high_select_ = RankSelect(high_);
  init(n_, m);
}

DecrementSeq DecrementSeq::over_offsets(std::span<const std::uint64_t> offsets) {
  if (offsets.empty()) throw DomainError("offset array needs n+1 entries");
  DecrementSeq d;
  d.n_ = offsets.size() - 1;
  d.external_ = offsets;
  for (std::uint64_t i = 0; i < d.n_; ++i)
    if (offsets[i + 1] < offsets[i]) throw DomainError("offsets must be non-decreasing");
  d.init(d.n_, offsets.back() - offsets.front());
  return d;
}

std::uint64_t DecrementSeq::offset(std::uint64_t i) const {
  probes_ += 4;
  if (!external_.empty()) return external_[i] - external_.front();
  const std::uint64_t high = high_select_.select1(i + 1) - i;
  return (high << low_width_) | (low_width_ > 0 ? low_.get(i) : 0);
}

void DecrementSeq::init(std::uint64_t n, std::uint64_t m) {
  m_ = m;
  geo_ = FindAnyGeometry::for_universe(m + n);
  cells_ = BitStore(m, true);

  const std::uint64_t B = geo_.block_size;
  const std::uint64_t slots = m / B + 1;
  arena_ = FindAnyArena(geo_, 2 * slots, slots, slots);

  std::uint64_t off = offset(0);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t next = offset(i + 1);
    const std::uint64_t x = next - off;
    if (large(x)) {
      const std::uint64_t slot = off / B;
      const std::uint64_t base = 2 * slot;
      for (std::uint64_t lb = 0; lb * B < x; ++lb) {
        const std::uint64_t b = base + lb;
        arena_.push_block(slot, base, b);
        const std::uint64_t width = std::min(B, x - lb * B);
        for (std::uint64_t local = 0; local * geo_.sub_size < width; ++local) arena_.push_sub(b, local);
        arena_.set_count(b, width);
      }
    }
    off = next;
  }
}

void DecrementSeq::check(std::uint64_t i) const {
  if (i >= n_) throw RangeError("decrement sequence index out of range");
}

bool DecrementSeq::is_zero(std::uint64_t i) const {
  check(i);
  const std::uint64_t off = offset(i);
  const std::uint64_t x = offset(i + 1) - off;
  if (large(x)) {
    ++probes_;
    return arena_.queue_len(off / geo_.block_size) == 0;
  }
  if (x == 0) return true;
  probes_ += ((off + x - 1) >> 6) - (off >> 6) + 1;
  return !cells_.any(off, off + x);
}

bool DecrementSeq::dec_if_nonzero(std::uint64_t i) {
  check(i);
  const std::uint64_t off = offset(i);
  const std::uint64_t x = offset(i + 1) - off;
  if (x == 0) return false;
  if (!large(x)) {
    probes_ += ((off + x - 1) >> 6) - (off >> 6) + 1;
    const auto p = cells_.next_set(off, off + x);
    if (!p) return false;
    cells_.reset(*p);
    return true;
  }

  const std::uint64_t B = geo_.block_size;
  const std::uint64_t slot = off / B;
  const std::uint64_t base = 2 * slot;
  const auto where = arena_.first(slot, base);
  if (!where) return false;
  const auto [b, local] = *where;
  const std::uint64_t lo = off + (b - base) * B + local * geo_.sub_size;
  const std::uint64_t hi = std::min(lo + geo_.sub_size, off + x);
  const std::uint64_t words = ((hi - 1) >> 6) - (lo >> 6) + 1;
  probes_ += 2 * words;
  const auto p = cells_.next_set(lo, hi);
  cells_.reset(*p);
  const std::uint64_t remaining = arena_.count(b) - 1;
  arena_.set_count(b, remaining);
  if (!cells_.any(lo, hi)) arena_.pop_sub(b, local);
  if (remaining == 0) arena_.pop_block(slot, base, b);
  return true;
}

std::uint64_t DecrementSeq::value(std::uint64_t i) const {
  check(i);
  const std::uint64_t off = offset(i);
  return cells_.count_range(off, offset(i + 1));
}

SpaceUse DecrementSeq::space() const {
  SpaceUse use{cells_.space().principal, arena_.bits()};
  if (external_.empty()) {
    use.principal += low_.space().principal + high_.space().principal;
    use.auxiliary += high_select_.space().auxiliary;
  }
  return use;
}

}  // namespace spacegraph
