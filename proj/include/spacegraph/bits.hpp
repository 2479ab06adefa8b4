#pragma once

// Static bit arrays, fixed-width and small-alphabet packed vectors, and
// rank/select. Positions are 0-based throughout.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "spacegraph/space_ledger.hpp"
#include "spacegraph/word_buffer.hpp"

namespace spacegraph {

// Bits needed to store every value in [0, max_value]; at least 1.
constexpr unsigned bits_for(std::uint64_t max_value) {
  return max_value == 0 ? 1u : static_cast<unsigned>(std::bit_width(max_value));
}

// ceil(lg x) for x >= 1.
constexpr unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

constexpr std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Smallest p >= i with bit p of word set, if any.
constexpr std::optional<unsigned> first_set_after(std::uint64_t word, unsigned i) {
  if (i >= kWordBits) return std::nullopt;
  const std::uint64_t masked = word & (~std::uint64_t{0} << i);
  if (masked == 0) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(masked));
}

// Position of the k-th (0-based) set bit; k < popcount(word).
unsigned select_in_word(std::uint64_t word, unsigned k);

class BitStore {
 public:
  BitStore() = default;
  explicit BitStore(std::uint64_t length, bool value = false);

  // Storage with unspecified contents (the tail-zero invariant is restored
  // by the first fill/clear that covers the last word).
  static BitStore uninitialized(std::uint64_t length);

  // Characters '0'/'1', position 0 first. Other characters are rejected.
  static BitStore from_string(std::string_view bits);

  std::uint64_t size() const noexcept { return length_; }
  std::size_t num_words() const noexcept { return words_.size(); }

  bool get(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::uint64_t i) const noexcept { return get(i); }
  void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::uint64_t i, bool value) noexcept { value ? set(i) : reset(i); }

  std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }
  std::uint64_t& word_ref(std::size_t w) noexcept { return words_[w]; }
  const std::uint64_t* data() const noexcept { return words_.data(); }
  std::uint64_t* data() noexcept { return words_.data(); }
  WordBuffer& buffer() noexcept { return words_; }

  // Up to 64 bits starting at pos (bits beyond size() read as zero).
  std::uint64_t read_bits(std::uint64_t pos, unsigned count) const noexcept;
  // Writes the low count bits of value at pos; pos + count <= size().
  void write_bits(std::uint64_t pos, unsigned count, std::uint64_t value) noexcept;

  std::uint64_t count() const;
  std::uint64_t count_range(std::uint64_t from, std::uint64_t to) const;

  // Smallest set (clear) position in [from, to).
  std::optional<std::uint64_t> next_set(std::uint64_t from, std::uint64_t to) const;
  std::optional<std::uint64_t> next_clear(std::uint64_t from, std::uint64_t to) const;
  bool any(std::uint64_t from, std::uint64_t to) const { return next_set(from, to).has_value(); }

  void fill(bool value);
  void assign_range(std::uint64_t from, std::uint64_t to, bool value);

  std::string to_string() const;

  SpaceUse space() const { return {words_.bits(), 0}; }

  friend bool operator==(const BitStore& a, const BitStore& b);

 private:
  void clear_tail() noexcept;

  std::uint64_t length_ = 0;
  WordBuffer words_;
};

// Fixed-width unsigned integers packed back to back; an entry may straddle
// two words.
class IntVector {
 public:
  IntVector() = default;
  IntVector(std::uint64_t size, unsigned width);
  static IntVector uninitialized(std::uint64_t size, unsigned width);

  std::uint64_t size() const noexcept { return size_; }
  unsigned width() const noexcept { return width_; }

  std::uint64_t get(std::uint64_t i) const noexcept {
    const std::uint64_t bit = i * width_;
    const std::size_t w = static_cast<std::size_t>(bit >> 6);
    const unsigned off = static_cast<unsigned>(bit & 63);
    std::uint64_t v = words_[w] >> off;
    if (off + width_ > kWordBits) v |= words_[w + 1] << (kWordBits - off);
    return v & mask_;
  }

  void set(std::uint64_t i, std::uint64_t value) noexcept {
    value &= mask_;
    const std::uint64_t bit = i * width_;
    const std::size_t w = static_cast<std::size_t>(bit >> 6);
    const unsigned off = static_cast<unsigned>(bit & 63);
    words_[w] = (words_[w] & ~(mask_ << off)) | (value << off);
    if (off + width_ > kWordBits) {
      const unsigned spill = kWordBits - off;
      words_[w + 1] = (words_[w + 1] & ~(mask_ >> spill)) | (value >> spill);
    }
  }

  WordBuffer& buffer() noexcept { return words_; }
  SpaceUse space() const { return {words_.bits(), 0}; }

 private:
  std::uint64_t size_ = 0;
  unsigned width_ = 1;
  std::uint64_t mask_ = 1;
  WordBuffer words_;
};

// Vector over the alphabet {0..c-1}. Each word holds t = floor(64 / lg c)
// symbols as the digits of a radix-c number, so any symbol is read or written
// by touching one word. For c a power of two the digits coincide with
// fixed-width bit fields and reads become shifts.
class PackedVec {
 public:
  PackedVec() = default;
  PackedVec(std::uint64_t length, unsigned alphabet, unsigned fill_symbol = 0);

  std::uint64_t size() const noexcept { return length_; }
  unsigned alphabet() const noexcept { return alphabet_; }
  unsigned per_word() const noexcept { return per_word_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  bool field_layout() const noexcept { return field_bits_ != 0; }
  unsigned field_bits() const noexcept { return field_bits_; }

  // RangeError for i >= size(); write: DomainError for symbol >= alphabet().
  unsigned read(std::uint64_t i) const;
  void write(std::uint64_t i, unsigned symbol);

  unsigned read_unchecked(std::uint64_t i) const noexcept {
    const std::size_t w = static_cast<std::size_t>(i / per_word_);
    const unsigned digit = static_cast<unsigned>(i % per_word_);
    if (field_bits_ != 0)
      return static_cast<unsigned>((words_[w] >> (digit * field_bits_)) & low_mask(field_bits_));
    return static_cast<unsigned>((words_[w] / power_[digit]) % alphabet_);
  }

  // Smallest index in [from, to) holding symbol.
  std::optional<std::uint64_t> find(std::uint64_t from, std::uint64_t to, unsigned symbol) const;

  // Decodes all symbols of word w into out (per_word() entries).
  void decode_word(std::size_t w, unsigned* out) const;

  const WordBuffer& words() const noexcept { return words_; }

  // Principal: the packed words. Auxiliary: the table of radix powers.
  SpaceUse space() const;

 private:
  std::uint64_t match_mask(std::uint64_t word, unsigned symbol) const noexcept;

  std::uint64_t length_ = 0;
  unsigned alphabet_ = 2;
  unsigned per_word_ = 64;
  unsigned field_bits_ = 1;  // 0 when the alphabet size is not a power of two
  WordBuffer power_;  // radix layout only
  WordBuffer words_;
};

// Two-level rank directory plus sampled select over an immutable BitStore.
// Holds the store's word array, which stays put when the store is moved;
// copying would alias it, so the type is move-only.
// Superblocks of roughly 32 lg^2 n bits carry absolute counts, blocks of
// 2 lg n * (relative counter width) bits carry counts relative to their
// superblock; every k-th occurrence of each symbol records its superblock.
class RankSelect {
 public:
  RankSelect() = default;
  explicit RankSelect(const BitStore& base);
  RankSelect(const RankSelect&) = delete;
  RankSelect& operator=(const RankSelect&) = delete;
  RankSelect(RankSelect&&) noexcept = default;
  RankSelect& operator=(RankSelect&&) noexcept = default;

  std::uint64_t size() const noexcept { return length_; }
  std::uint64_t ones() const noexcept { return ones_; }
  std::uint64_t zeros() const noexcept { return size() - ones_; }

  // Occurrences in [0, i). RangeError for i > size().
  std::uint64_t rank1(std::uint64_t i) const;
  std::uint64_t rank0(std::uint64_t i) const { return i - rank1(i); }
  std::uint64_t rank(bool symbol, std::uint64_t i) const { return symbol ? rank1(i) : rank0(i); }

  // Position of the k-th occurrence, k >= 1. RangeError when k is 0 or exceeds the count.
  std::uint64_t select1(std::uint64_t k) const { return select(true, k); }
  std::uint64_t select0(std::uint64_t k) const { return select(false, k); }
  std::uint64_t select(bool symbol, std::uint64_t k) const;

  std::uint64_t block_bits() const noexcept { return block_bits_; }
  std::uint64_t superblock_bits() const noexcept { return super_bits_; }

  SpaceUse space() const;

 private:
  std::uint64_t count_before_super(bool symbol, std::uint64_t sb) const noexcept;
  std::uint64_t count_before_block(bool symbol, std::uint64_t blk) const noexcept;
  std::uint64_t count_range(std::uint64_t from, std::uint64_t to) const noexcept;

  const std::uint64_t* words_ = nullptr;
  std::uint64_t length_ = 0;
  std::uint64_t ones_ = 0;
  std::uint64_t block_bits_ = 0;
  std::uint64_t blocks_per_super_ = 1;
  std::uint64_t super_bits_ = 0;
  std::uint64_t num_super_ = 0;
  std::uint64_t sample_rate_ = 1;
  IntVector super_counts_;
  IntVector block_counts_;
  IntVector samples1_;
  IntVector samples0_;
};

}  // namespace spacegraph
