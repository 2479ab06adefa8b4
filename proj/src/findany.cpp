#include "spacegraph/findany.hpp"

#include <algorithm>
#include <random>

#include "spacegraph/errors.hpp"

namespace spacegraph {

namespace {

std::uint64_t words_spanned(std::uint64_t lo, std::uint64_t hi) {
  return lo >= hi ? 1 : ((hi - 1) >> 6) - (lo >> 6) + 1;
}

void scramble_buffer(WordBuffer& buf, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = rng();
}

}  // namespace

FindAnyGeometry FindAnyGeometry::for_universe(std::uint64_t n) {
  const std::uint64_t lg = std::max<std::uint64_t>(2, ceil_log2(std::max<std::uint64_t>(n, 2)));
  FindAnyGeometry g;
  g.sub_size = 6 * lg;
  g.subs_per_block = (lg + 2) / 3;
  g.block_size = g.sub_size * g.subs_per_block;
  return g;
}

// ----------------------------------------------------------------- arena

FindAnyArena::FindAnyArena(const FindAnyGeometry& geometry, std::uint64_t num_blocks,
                           std::uint64_t num_slots, std::uint64_t max_blocks_per_instance,
                           bool zeroed)
    : geo_(geometry) {
  const std::uint64_t spb = geo_.subs_per_block;
  const unsigned block_id_bits = bits_for(num_blocks == 0 ? 0 : num_blocks - 1);
  const unsigned slot_bits = bits_for(max_blocks_per_instance == 0 ? 0 : max_blocks_per_instance - 1);
  auto make = [zeroed](std::uint64_t size, unsigned width) {
    return zeroed ? IntVector(size, width) : IntVector::uninitialized(size, width);
  };
  number_ = make(num_blocks, bits_for(geo_.block_size));
  block_queue_ = make(num_blocks, block_id_bits);
  block_array_ = make(num_blocks, slot_bits);
  sub_queue_ = make(num_blocks * spb, bits_for(spb - 1));
  sub_len_ = make(num_blocks, bits_for(spb));
  sub_array_ = make(num_blocks * spb, bits_for(spb - 1));
  queue_len_ = IntVector(num_slots, bits_for(max_blocks_per_instance));
}

void FindAnyArena::scramble(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (IntVector* v : {&number_, &block_queue_, &block_array_, &sub_queue_, &sub_len_, &sub_array_})
    scramble_buffer(v->buffer(), rng);
}

void FindAnyArena::push_block(std::uint64_t slot, std::uint64_t base, std::uint64_t b) noexcept {
  probes_ += 6;
  const std::uint64_t k = queue_len_.get(slot);
  block_queue_.set(base + k, b);
  block_array_.set(b, k);
  queue_len_.set(slot, k + 1);
  sub_len_.set(b, 0);
  number_.set(b, 0);
}

void FindAnyArena::pop_block(std::uint64_t slot, std::uint64_t base, std::uint64_t b) noexcept {
  probes_ += 6;
  const std::uint64_t k = block_array_.get(b);
  const std::uint64_t len = queue_len_.get(slot);
  const std::uint64_t last = block_queue_.get(base + len - 1);
  block_queue_.set(base + k, last);
  block_array_.set(last, k);
  queue_len_.set(slot, len - 1);
}

void FindAnyArena::push_sub(std::uint64_t b, std::uint64_t local) noexcept {
  probes_ += 4;
  const std::uint64_t spb = geo_.subs_per_block;
  const std::uint64_t k = sub_len_.get(b);
  sub_queue_.set(b * spb + k, local);
  sub_array_.set(b * spb + local, k);
  sub_len_.set(b, k + 1);
}

void FindAnyArena::pop_sub(std::uint64_t b, std::uint64_t local) noexcept {
  probes_ += 6;
  const std::uint64_t spb = geo_.subs_per_block;
  const std::uint64_t k = sub_array_.get(b * spb + local);
  const std::uint64_t len = sub_len_.get(b);
  const std::uint64_t last = sub_queue_.get(b * spb + len - 1);
  sub_queue_.set(b * spb + k, last);
  sub_array_.set(b * spb + last, k);
  sub_len_.set(b, len - 1);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> FindAnyArena::first(
    std::uint64_t slot, std::uint64_t base) const noexcept {
  probes_ += 3;
  const std::uint64_t len = queue_len_.get(slot);
  if (len == 0) return std::nullopt;
  const std::uint64_t b = block_queue_.get(base + len - 1);
  return std::pair{b, sub_queue_.get(b * geo_.subs_per_block)};
}

std::uint64_t FindAnyArena::bits() const {
  std::uint64_t total = 0;
  for (const IntVector* v :
       {&number_, &block_queue_, &block_array_, &sub_queue_, &sub_len_, &sub_array_, &queue_len_})
    total += v->space().principal;
  return total;
}

// ------------------------------------------------------------- FindAnySet

FindAnySet::FindAnySet(std::uint64_t n) : n_(n), bits_(n) {
  const FindAnyGeometry g = FindAnyGeometry::for_universe(n);
  const std::uint64_t blocks = (n + g.block_size - 1) / g.block_size;
  arena_ = FindAnyArena(g, blocks, 1, blocks);
}

FindAnySet FindAnySet::lazy(std::uint64_t n, std::optional<std::uint64_t> garbage_seed) {
  FindAnySet s;
  s.n_ = n;
  s.lazy_ = true;
  s.bits_ = BitStore::uninitialized(n);
  const FindAnyGeometry g = FindAnyGeometry::for_universe(n);
  const std::uint64_t blocks = (n + g.block_size - 1) / g.block_size;
  s.arena_ = FindAnyArena(g, blocks, 1, blocks, false);
  if (garbage_seed) {
    std::mt19937_64 rng(*garbage_seed);
    scramble_buffer(s.bits_.buffer(), rng);
    s.arena_.scramble(rng());
  }
  return s;
}

void FindAnySet::check(std::uint64_t i) const {
  if (i >= n_) throw RangeError("findany element out of range");
}

std::pair<std::uint64_t, std::uint64_t> FindAnySet::sub_range(std::uint64_t b,
                                                              std::uint64_t local) const noexcept {
  const FindAnyGeometry& g = arena_.geometry();
  const std::uint64_t lo = b * g.block_size + local * g.sub_size;
  return {lo, std::min(lo + g.sub_size, n_)};
}

bool FindAnySet::sub_has_member(std::uint64_t b, std::uint64_t local) const {
  const auto [lo, hi] = sub_range(b, local);
  arena_.add_probes(words_spanned(lo, hi));
  return bits_.any(lo, hi);
}

bool FindAnySet::contains(std::uint64_t i) const {
  check(i);
  arena_.add_probes(1);
  if (lazy_) {
    const FindAnyGeometry& g = arena_.geometry();
    const std::uint64_t b = i / g.block_size;
    if (!arena_.block_live(0, 0, b) || !arena_.sub_live(b, (i % g.block_size) / g.sub_size)) return false;
  }
  return bits_.get(i);
}

void FindAnySet::insert(std::uint64_t i) {
  if (contains(i)) return;
  const FindAnyGeometry& g = arena_.geometry();
  const std::uint64_t b = i / g.block_size;
  const std::uint64_t local = (i % g.block_size) / g.sub_size;
  if (!arena_.block_live(0, 0, b)) arena_.push_block(0, 0, b);
  if (!arena_.sub_live(b, local)) {
    if (lazy_) {
      // First touch of this sub-block since it was last certified empty.
      const auto [lo, hi] = sub_range(b, local);
      arena_.add_probes(words_spanned(lo, hi));
      bits_.assign_range(lo, hi, false);
    }
    arena_.push_sub(b, local);
  }
  bits_.set(i);
  arena_.set_count(b, arena_.count(b) + 1);
  ++size_;
}

void FindAnySet::erase(std::uint64_t i) {
  if (!contains(i)) return;
  const FindAnyGeometry& g = arena_.geometry();
  const std::uint64_t b = i / g.block_size;
  const std::uint64_t local = (i % g.block_size) / g.sub_size;
  bits_.reset(i);
  --size_;
  const std::uint64_t remaining = arena_.count(b) - 1;
  arena_.set_count(b, remaining);
  if (!sub_has_member(b, local)) arena_.pop_sub(b, local);
  if (remaining == 0) arena_.pop_block(0, 0, b);
}

std::optional<std::uint64_t> FindAnySet::findany() const {
  const auto where = arena_.first(0, 0);
  if (!where) return std::nullopt;
  const auto [lo, hi] = sub_range(where->first, where->second);
  arena_.add_probes(words_spanned(lo, hi));
  return bits_.next_set(lo, hi);
}

std::vector<std::uint64_t> FindAnySet::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  for_each([&](std::uint64_t e) { out.push_back(e); });
  return out;
}

// ------------------------------------------------------- FindAnyPartition

FindAnyPartition::FindAnyPartition(std::uint64_t n, unsigned classes,
                                   std::vector<unsigned> tracked_classes, unsigned initial_class)
    : geo_(FindAnyGeometry::for_universe(n)),
      labels_(n, classes, initial_class),
      slot_of_(classes, -1),
      sizes_(classes, 64) {
  if (tracked_classes.empty())
    for (unsigned k = 0; k < classes; ++k) tracked_classes.push_back(k);
  const std::uint64_t blocks = (n + geo_.block_size - 1) / geo_.block_size;
  for (unsigned k : tracked_classes) {
    if (k >= classes) throw DomainError("tracked class outside the partition");
    if (slot_of_[k] >= 0) continue;
    slot_of_[k] = static_cast<int>(arenas_.size());
    arenas_.emplace_back(geo_, blocks, 1, blocks);
  }
  sizes_.set(initial_class, n);

  if (tracked(initial_class)) {
    FindAnyArena& a = arenas_[static_cast<std::size_t>(slot_of_[initial_class])];
    for (std::uint64_t b = 0; b < blocks; ++b) {
      a.push_block(0, 0, b);
      const std::uint64_t lo = b * geo_.block_size;
      const std::uint64_t hi = std::min(lo + geo_.block_size, n);
      for (std::uint64_t local = 0; lo + local * geo_.sub_size < hi; ++local) a.push_sub(b, local);
      a.set_count(b, hi - lo);
    }
  }
}

unsigned FindAnyPartition::class_of(std::uint64_t i) const { return labels_.read(i); }

std::uint64_t FindAnyPartition::class_size(unsigned k) const {
  if (k >= sizes_.size()) throw DomainError("class outside the partition");
  return sizes_.get(k);
}

const FindAnyArena& FindAnyPartition::arena_for(unsigned k) const {
  if (!tracked(k)) throw DomainError("class is not tracked");
  return arenas_[static_cast<std::size_t>(slot_of_[k])];
}

std::pair<std::uint64_t, std::uint64_t> FindAnyPartition::sub_range(std::uint64_t b,
                                                                    std::uint64_t local) const noexcept {
  const std::uint64_t lo = b * geo_.block_size + local * geo_.sub_size;
  return {lo, std::min(lo + geo_.sub_size, labels_.size())};
}

void FindAnyPartition::add_member(FindAnyArena& a, std::uint64_t i) {
  const std::uint64_t b = i / geo_.block_size;
  const std::uint64_t local = (i % geo_.block_size) / geo_.sub_size;
  if (!a.block_live(0, 0, b)) a.push_block(0, 0, b);
  if (!a.sub_live(b, local)) a.push_sub(b, local);
  a.set_count(b, a.count(b) + 1);
}

void FindAnyPartition::remove_member(FindAnyArena& a, std::uint64_t i, unsigned k) {
  const std::uint64_t b = i / geo_.block_size;
  const std::uint64_t local = (i % geo_.block_size) / geo_.sub_size;
  const std::uint64_t remaining = a.count(b) - 1;
  a.set_count(b, remaining);
  const auto [lo, hi] = sub_range(b, local);
  a.add_probes((hi - lo + labels_.per_word() - 1) / labels_.per_word() + 1);
  if (!labels_.find(lo, hi, k)) a.pop_sub(b, local);
  if (remaining == 0) a.pop_block(0, 0, b);
}

void FindAnyPartition::move(std::uint64_t i, unsigned k) {
  const unsigned old = labels_.read(i);
  if (k >= classes()) throw DomainError("class outside the partition");
  if (old == k) return;
  labels_.write(i, k);
  sizes_.set(old, sizes_.get(old) - 1);
  sizes_.set(k, sizes_.get(k) + 1);
  if (tracked(old)) remove_member(arenas_[static_cast<std::size_t>(slot_of_[old])], i, old);
  if (tracked(k)) add_member(arenas_[static_cast<std::size_t>(slot_of_[k])], i);
}

std::optional<std::uint64_t> FindAnyPartition::findany_in(unsigned k) const {
  const FindAnyArena& a = arena_for(k);
  const auto where = a.first(0, 0);
  if (!where) return std::nullopt;
  const auto [lo, hi] = sub_range(where->first, where->second);
  scan_probes_ += (hi - lo + labels_.per_word() - 1) / labels_.per_word() + 1;
  return labels_.find(lo, hi, k);
}

std::vector<std::uint64_t> FindAnyPartition::elements_of(unsigned k) const {
  std::vector<std::uint64_t> out;
  for_each_in(k, [&](std::uint64_t e) { out.push_back(e); });
  return out;
}

std::uint64_t FindAnyPartition::probes() const noexcept {
  std::uint64_t total = scan_probes_;
  for (const FindAnyArena& a : arenas_) total += a.probes();
  return total;
}

SpaceUse FindAnyPartition::space() const {
  SpaceUse use = labels_.space();
  for (const FindAnyArena& a : arenas_) use.auxiliary += a.bits();
  use.auxiliary += sizes_.space().principal;
  return use;
}

}  // namespace spacegraph
