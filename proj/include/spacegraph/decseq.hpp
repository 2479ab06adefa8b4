#pragma once

// Sequence of non-negative counters x_0..x_{n-1} supporting constant-time
// is_zero and decrement. Counter i is a set over a private universe of x_i
// bits, initially full; decrementing removes an arbitrary member. The m = sum
// x_i bits are stored back to back. Cells wider than one findany block get
// block/sub-block queues in a shared arena; narrower cells are scanned
// directly.
//
// Cell boundaries come either from a stored Elias-Fano encoding of the
// prefix sums, or from a caller-supplied prefix-sum array that is part of the
// read-only input (a CSR offset array, for example).

#include <cstdint>
#include <span>
#include <vector>

#include "spacegraph/bits.hpp"
#include "spacegraph/findany.hpp"
#include "spacegraph/space_ledger.hpp"

namespace spacegraph {

class DecrementSeq {
 public:
  DecrementSeq() = default;

  // Stores the layout itself.
  explicit DecrementSeq(std::span<const std::uint64_t> xs);

  // offsets has n+1 non-decreasing entries with x_i = offsets[i+1] - offsets[i].
  // The array is borrowed, must outlive the structure, and is not charged.
  static DecrementSeq over_offsets(std::span<const std::uint64_t> offsets);

  std::uint64_t size() const noexcept { return n_; }
  std::uint64_t total() const noexcept { return m_; }

  // RangeError for i >= size().
  bool is_zero(std::uint64_t i) const;
  bool dec_if_nonzero(std::uint64_t i);

  // Current value by counting; linear in x_i, for audits only.
  std::uint64_t value(std::uint64_t i) const;

  std::uint64_t probes() const noexcept { return probes_ + arena_.probes(); }

  // Principal: the cell bits plus any stored layout. Auxiliary: queues.
  SpaceUse space() const;

  const FindAnyGeometry& geometry() const noexcept { return geo_; }

 private:
  void init(std::uint64_t n, std::uint64_t m);
  std::uint64_t offset(std::uint64_t i) const;
  bool large(std::uint64_t x) const noexcept { return x > geo_.block_size; }
  void check(std::uint64_t i) const;

  std::uint64_t n_ = 0;
  std::uint64_t m_ = 0;
  FindAnyGeometry geo_;
  BitStore cells_;

  // Layout: borrowed prefix sums, or Elias-Fano (low bits + unary high part).
  std::span<const std::uint64_t> external_;
  unsigned low_width_ = 0;
  IntVector low_;
  BitStore high_;
  RankSelect high_select_;

  FindAnyArena arena_;
  mutable std::uint64_t probes_ = 0;
};

}  // namespace spacegraph
