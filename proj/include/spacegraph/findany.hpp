#pragma once

// Dynamic subsets of [0, n) with constant-time insert, delete, membership and
// findany, and the c-class partition variant.
//
// The universe is cut into blocks, each block into sub-blocks. A queue lists
// the non-empty blocks; each live block owns a queue of its non-empty
// sub-blocks. Both queues are unordered and delete by swapping in the last
// entry. Back-reference arrays map a block (sub-block) to its queue slot, and
// an entry is trusted only if the slot it names is live and points back,
// which is what allows O(1) initialisation over uninitialised memory.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spacegraph/bits.hpp"
#include "spacegraph/space_ledger.hpp"

namespace spacegraph {

struct FindAnyGeometry {
  std::uint64_t sub_size = 1;    // elements per sub-block
  std::uint64_t subs_per_block = 1;
  std::uint64_t block_size = 1;  // sub_size * subs_per_block

  // With L = ceil(lg n): sub-blocks of 6L elements, ceil(L/3) per block, so a
  // block holds about 2 L^2 elements.
  static FindAnyGeometry for_universe(std::uint64_t n);
};

// Queue bookkeeping for one or more independent instances sharing the same
// block geometry. An instance owns a contiguous run of block ids starting at
// its base; its queue lives in the slots [base, base + capacity) and its live
// length in queue_len[slot].
class FindAnyArena {
 public:
  FindAnyArena() = default;
  FindAnyArena(const FindAnyGeometry& geometry, std::uint64_t num_blocks, std::uint64_t num_slots,
               std::uint64_t max_blocks_per_instance, bool zeroed = true);

  // Overwrites everything except the queue lengths with pseudo-random words.
  void scramble(std::uint64_t seed);

  const FindAnyGeometry& geometry() const noexcept { return geo_; }

  bool block_live(std::uint64_t slot, std::uint64_t base, std::uint64_t b) const noexcept {
    probes_ += 3;
    const std::uint64_t k = block_array_.get(b);
    return k < queue_len_.get(slot) && block_queue_.get(base + k) == b;
  }
  // Caller guarantees the block itself is live.
  bool sub_live(std::uint64_t b, std::uint64_t local) const noexcept {
    probes_ += 3;
    const std::uint64_t k = sub_array_.get(b * geo_.subs_per_block + local);
    return k < sub_len_.get(b) && sub_queue_.get(b * geo_.subs_per_block + k) == local;
  }

  void push_block(std::uint64_t slot, std::uint64_t base, std::uint64_t b) noexcept;
  void pop_block(std::uint64_t slot, std::uint64_t base, std::uint64_t b) noexcept;
  void push_sub(std::uint64_t b, std::uint64_t local) noexcept;
  void pop_sub(std::uint64_t b, std::uint64_t local) noexcept;

  std::uint64_t count(std::uint64_t b) const noexcept {
    ++probes_;
    return number_.get(b);
  }
  void set_count(std::uint64_t b, std::uint64_t c) noexcept {
    ++probes_;
    number_.set(b, c);
  }

  std::uint64_t queue_len(std::uint64_t slot) const noexcept { return queue_len_.get(slot); }
  std::uint64_t queue_block(std::uint64_t base, std::uint64_t k) const noexcept {
    return block_queue_.get(base + k);
  }
  std::uint64_t sub_len(std::uint64_t b) const noexcept { return sub_len_.get(b); }
  std::uint64_t sub_at(std::uint64_t b, std::uint64_t k) const noexcept {
    return sub_queue_.get(b * geo_.subs_per_block + k);
  }

  // Tail block of the instance and the first sub-block in its queue.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first(std::uint64_t slot,
                                                               std::uint64_t base) const noexcept;

  std::uint64_t probes() const noexcept { return probes_; }
  void add_probes(std::uint64_t p) const noexcept { probes_ += p; }

  std::uint64_t bits() const;

 private:
  FindAnyGeometry geo_;
  IntVector number_;
  IntVector block_queue_;
  IntVector block_array_;
  IntVector sub_queue_;
  IntVector sub_len_;
  IntVector sub_array_;
  IntVector queue_len_;
  mutable std::uint64_t probes_ = 0;
};

class FindAnySet {
 public:
  FindAnySet() = default;
  explicit FindAnySet(std::uint64_t n);  // empty, eagerly zeroed

  // Empty set in O(1) time: only the queue length is written. With a seed, the
  // backing memory is first filled with pseudo-random garbage (for testing).
  static FindAnySet lazy(std::uint64_t n, std::optional<std::uint64_t> garbage_seed = std::nullopt);

  std::uint64_t universe() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // RangeError for i >= universe().
  bool contains(std::uint64_t i) const;
  void insert(std::uint64_t i);
  void erase(std::uint64_t i);

  std::optional<std::uint64_t> findany() const;

  template <class F>
  void for_each(F&& f) const {
    const std::uint64_t blocks = arena_.queue_len(0);
    for (std::uint64_t k = 0; k < blocks; ++k) {
      const std::uint64_t b = arena_.queue_block(0, k);
      const std::uint64_t subs = arena_.sub_len(b);
      for (std::uint64_t t = 0; t < subs; ++t) {
        const auto [lo, hi] = sub_range(b, arena_.sub_at(b, t));
        for (auto p = bits_.next_set(lo, hi); p; p = bits_.next_set(*p + 1, hi)) f(*p);
      }
    }
  }
  std::vector<std::uint64_t> elements() const;

  // Elementary steps (array entries and words touched) since construction.
  std::uint64_t probes() const noexcept { return arena_.probes(); }

  SpaceUse space() const { return {bits_.space().principal, arena_.bits()}; }

 private:
  std::pair<std::uint64_t, std::uint64_t> sub_range(std::uint64_t b, std::uint64_t local) const noexcept;
  bool sub_has_member(std::uint64_t b, std::uint64_t local) const;
  void check(std::uint64_t i) const;

  std::uint64_t n_ = 0;
  std::uint64_t size_ = 0;
  bool lazy_ = false;
  BitStore bits_;
  FindAnyArena arena_;
};

// Partition of [0, n) into c classes stored as a PackedVec of class labels.
// Only the classes named as tracked get queue structures; findany and
// enumeration are available for those.
class FindAnyPartition {
 public:
  FindAnyPartition() = default;
  // Every element starts in initial_class. An empty tracked list tracks all classes.
  FindAnyPartition(std::uint64_t n, unsigned classes, std::vector<unsigned> tracked = {},
                   unsigned initial_class = 0);

  std::uint64_t universe() const noexcept { return labels_.size(); }
  unsigned classes() const noexcept { return labels_.alphabet(); }
  bool tracked(unsigned k) const noexcept { return k < slot_of_.size() && slot_of_[k] >= 0; }

  unsigned class_of(std::uint64_t i) const;
  std::uint64_t class_size(unsigned k) const;
  void move(std::uint64_t i, unsigned k);

  // DomainError when k is not tracked.
  std::optional<std::uint64_t> findany_in(unsigned k) const;

  template <class F>
  void for_each_in(unsigned k, F&& f) const {
    const FindAnyArena& a = arena_for(k);
    const std::uint64_t blocks = a.queue_len(0);
    for (std::uint64_t q = 0; q < blocks; ++q) {
      const std::uint64_t b = a.queue_block(0, q);
      const std::uint64_t subs = a.sub_len(b);
      for (std::uint64_t t = 0; t < subs; ++t) {
        const auto [lo, hi] = sub_range(b, a.sub_at(b, t));
        for (auto p = labels_.find(lo, hi, k); p; p = labels_.find(*p + 1, hi, k)) f(*p);
      }
    }
  }
  std::vector<std::uint64_t> elements_of(unsigned k) const;

  const PackedVec& labels() const noexcept { return labels_; }
  std::uint64_t probes() const noexcept;

  SpaceUse space() const;

 private:
  const FindAnyArena& arena_for(unsigned k) const;
  std::pair<std::uint64_t, std::uint64_t> sub_range(std::uint64_t b, std::uint64_t local) const noexcept;
  void add_member(FindAnyArena& a, std::uint64_t i);
  void remove_member(FindAnyArena& a, std::uint64_t i, unsigned k);

  FindAnyGeometry geo_;
  PackedVec labels_;
  std::vector<int> slot_of_;
  std::vector<FindAnyArena> arenas_;
  IntVector sizes_;
  mutable std::uint64_t scan_probes_ = 0;
};

}  // namespace spacegraph
