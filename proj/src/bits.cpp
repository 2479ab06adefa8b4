#include "spacegraph/bits.hpp"

#include <algorithm>
#include <cmath>

#include "spacegraph/errors.hpp"
#include "spacegraph/simd/kernels.hpp"

namespace spacegraph {

unsigned select_in_word(std::uint64_t word, unsigned k) {
  unsigned base = 0;
  for (unsigned byte = 0; byte < 8; ++byte, base += 8) {
    const auto chunk = static_cast<unsigned>((word >> base) & 0xffu);
    const auto c = static_cast<unsigned>(std::popcount(chunk));
    if (k < c) {
      unsigned bits = chunk;
      for (unsigned j = 0; j < k; ++j) bits &= bits - 1;
      return base + static_cast<unsigned>(std::countr_zero(bits));
    }
    k -= c;
  }
  return kWordBits;
}

// ---------------------------------------------------------------- BitStore

BitStore::BitStore(std::uint64_t length, bool value)
    : length_(length), words_(words_for_bits(length)) {
  if (value) fill(true);
}

BitStore BitStore::uninitialized(std::uint64_t length) {
  BitStore store;
  store.length_ = length;
  store.words_ = WordBuffer::uninitialized(words_for_bits(length));
  return store;
}

BitStore BitStore::from_string(std::string_view bits) {
  BitStore store(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      store.set(i);
    else if (bits[i] != '0')
      throw DomainError("bit string may only contain '0' and '1'");
  }
  return store;
}

std::uint64_t BitStore::read_bits(std::uint64_t pos, unsigned count) const noexcept {
  if (count == 0 || pos >= length_) return 0;
  const std::size_t w = static_cast<std::size_t>(pos >> 6);
  const unsigned off = static_cast<unsigned>(pos & 63);
  std::uint64_t v = words_[w] >> off;
  if (off != 0 && off + count > kWordBits && w + 1 < words_.size())
    v |= words_[w + 1] << (kWordBits - off);
  return v & low_mask(count);
}

void BitStore::write_bits(std::uint64_t pos, unsigned count, std::uint64_t value) noexcept {
  if (count == 0) return;
  value &= low_mask(count);
  const std::size_t w = static_cast<std::size_t>(pos >> 6);
  const unsigned off = static_cast<unsigned>(pos & 63);
  words_[w] = (words_[w] & ~(low_mask(count) << off)) | (value << off);
  if (off + count > kWordBits) {
    const unsigned spill = kWordBits - off;
    words_[w + 1] = (words_[w + 1] & ~(low_mask(count) >> spill)) | (value >> spill);
  }
}

std::uint64_t BitStore::count() const {
  return simd::kernels().popcount(words_.data(), words_.size());
}

std::uint64_t BitStore::count_range(std::uint64_t from, std::uint64_t to) const {
  if (from >= to) return 0;
  const std::size_t first = static_cast<std::size_t>(from >> 6);
  const std::size_t last = static_cast<std::size_t>((to - 1) >> 6);
  const std::uint64_t head = ~std::uint64_t{0} << (from & 63);
  const std::uint64_t tail = low_mask(static_cast<unsigned>(((to - 1) & 63) + 1));
  if (first == last) return static_cast<std::uint64_t>(std::popcount(words_[first] & head & tail));
  std::uint64_t total = static_cast<std::uint64_t>(std::popcount(words_[first] & head)) +
                        static_cast<std::uint64_t>(std::popcount(words_[last] & tail));
  if (last > first + 1) total += simd::kernels().popcount(words_.data() + first + 1, last - first - 1);
  return total;
}

std::optional<std::uint64_t> BitStore::next_set(std::uint64_t from, std::uint64_t to) const {
  if (from >= to) return std::nullopt;
  std::size_t w = static_cast<std::size_t>(from >> 6);
  const std::size_t last = static_cast<std::size_t>((to - 1) >> 6);
  std::uint64_t x = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (x == 0) {
    if (w == last) return std::nullopt;
    w = simd::kernels().find_word_not_equal(words_.data(), last + 1, w + 1, 0);
    if (w > last) return std::nullopt;
    x = words_[w];
  }
  const std::uint64_t pos = std::uint64_t{w} * kWordBits + static_cast<unsigned>(std::countr_zero(x));
  if (pos >= to) return std::nullopt;
  return pos;
}

std::optional<std::uint64_t> BitStore::next_clear(std::uint64_t from, std::uint64_t to) const {
  if (from >= to) return std::nullopt;
  std::size_t w = static_cast<std::size_t>(from >> 6);
  const std::size_t last = static_cast<std::size_t>((to - 1) >> 6);
  std::uint64_t x = ~words_[w] & (~std::uint64_t{0} << (from & 63));
  while (x == 0) {
    if (w == last) return std::nullopt;
    w = simd::kernels().find_word_not_equal(words_.data(), last + 1, w + 1, ~std::uint64_t{0});
    if (w > last) return std::nullopt;
    x = ~words_[w];
  }
  const std::uint64_t pos = std::uint64_t{w} * kWordBits + static_cast<unsigned>(std::countr_zero(x));
  if (pos >= to) return std::nullopt;
  return pos;
}

void BitStore::fill(bool value) {
  words_.fill(value ? ~std::uint64_t{0} : 0);
  clear_tail();
}

void BitStore::assign_range(std::uint64_t from, std::uint64_t to, bool value) {
  if (from >= to) return;
  const std::size_t first = static_cast<std::size_t>(from >> 6);
  const std::size_t last = static_cast<std::size_t>((to - 1) >> 6);
  const std::uint64_t head = ~std::uint64_t{0} << (from & 63);
  const std::uint64_t tail = low_mask(static_cast<unsigned>(((to - 1) & 63) + 1));
  auto apply = [&](std::size_t w, std::uint64_t mask) {
    words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  };
  if (first == last) {
    apply(first, head & tail);
    return;
  }
  apply(first, head);
  for (std::size_t w = first + 1; w < last; ++w) words_[w] = value ? ~std::uint64_t{0} : 0;
  apply(last, tail);
}

void BitStore::clear_tail() noexcept {
  if (words_.size() == 0) return;
  const unsigned used = static_cast<unsigned>(length_ & 63);
  if (used != 0) words_[words_.size() - 1] &= low_mask(used);
}

std::string BitStore::to_string() const {
  std::string out(length_, '0');
  for (std::uint64_t i = 0; i < length_; ++i)
    if (get(i)) out[i] = '1';
  return out;
}

bool operator==(const BitStore& a, const BitStore& b) {
  if (a.length_ != b.length_) return false;
  return std::equal(a.words_.data(), a.words_.data() + a.words_.size(), b.words_.data());
}

// --------------------------------------------------------------- IntVector

IntVector::IntVector(std::uint64_t size, unsigned width)
    : size_(size),
      width_(std::clamp(width, 1u, kWordBits)),
      mask_(low_mask(width_)),
      words_(words_for_bits(size * width_)) {}

IntVector IntVector::uninitialized(std::uint64_t size, unsigned width) {
  IntVector v;
  v.size_ = size;
  v.width_ = std::clamp(width, 1u, kWordBits);
  v.mask_ = low_mask(v.width_);
  v.words_ = WordBuffer::uninitialized(words_for_bits(size * v.width_));
  return v;
}

// --------------------------------------------------------------- PackedVec

PackedVec::PackedVec(std::uint64_t length, unsigned alphabet, unsigned fill_symbol)
    : length_(length), alphabet_(alphabet) {
  if (alphabet < 2) throw DomainError("PackedVec alphabet must have at least 2 symbols");
  if (fill_symbol >= alphabet) throw DomainError("PackedVec fill symbol outside alphabet");

  // Largest t with c^t <= 2^64, i.e. floor(64 / lg c).
  field_bits_ = std::has_single_bit(alphabet) ? static_cast<unsigned>(std::countr_zero(alphabet)) : 0;
  std::array<std::uint64_t, kWordBits> power{};
  unsigned t = 0;
  std::uint64_t p = 1;  // c^t
  while (t < kWordBits) {
    power[t] = p;
    const bool fits = field_bits_ != 0 ? (t + 1) * field_bits_ <= kWordBits
                                       : p <= ~std::uint64_t{0} / alphabet;
    if (!fits) break;
    ++t;
    p *= alphabet;
  }
  per_word_ = t;
  if (field_bits_ == 0) {
    power_ = WordBuffer(per_word_);
    std::copy_n(power.begin(), per_word_, power_.data());
  }

  words_ = WordBuffer(static_cast<std::size_t>((length + per_word_ - 1) / per_word_));
  if (fill_symbol != 0 && words_.size() != 0) {
    std::uint64_t full = 0;
    for (unsigned d = 0; d < per_word_; ++d) full += fill_symbol * power[d];
    words_.fill(full);
    // Digits past the end stay zero.
    const unsigned used = static_cast<unsigned>(length % per_word_);
    if (used != 0) {
      std::uint64_t partial = 0;
      for (unsigned d = 0; d < used; ++d) partial += fill_symbol * power[d];
      words_[words_.size() - 1] = partial;
    }
  }
}

unsigned PackedVec::read(std::uint64_t i) const {
  if (i >= length_) throw RangeError("PackedVec index out of range");
  return read_unchecked(i);
}

void PackedVec::write(std::uint64_t i, unsigned symbol) {
  if (i >= length_) throw RangeError("PackedVec index out of range");
  if (symbol >= alphabet_) throw DomainError("symbol outside PackedVec alphabet");
  const std::size_t w = static_cast<std::size_t>(i / per_word_);
  const unsigned digit = static_cast<unsigned>(i % per_word_);
  if (field_bits_ != 0) {
    const unsigned shift = digit * field_bits_;
    const std::uint64_t mask = low_mask(field_bits_) << shift;
    words_[w] = (words_[w] & ~mask) | (std::uint64_t{symbol} << shift);
    return;
  }
  const unsigned old = static_cast<unsigned>((words_[w] / power_[digit]) % alphabet_);
  // Modular arithmetic keeps the word exact even when symbol < old.
  words_[w] += (std::uint64_t{symbol} - std::uint64_t{old}) * power_[digit];
}

void PackedVec::decode_word(std::size_t w, unsigned* out) const {
  std::uint64_t x = words_[w];
  if (field_bits_ != 0) {
    const std::uint64_t mask = low_mask(field_bits_);
    for (unsigned d = 0; d < per_word_; ++d, x >>= field_bits_) out[d] = static_cast<unsigned>(x & mask);
    return;
  }
  for (unsigned d = 0; d < per_word_; ++d) {
    out[d] = static_cast<unsigned>(x % alphabet_);
    x /= alphabet_;
  }
}

std::uint64_t PackedVec::match_mask(std::uint64_t word, unsigned symbol) const noexcept {
  std::uint64_t pattern = 0;
  std::uint64_t starts = 0;
  for (unsigned d = 0; d < per_word_; ++d) {
    pattern |= std::uint64_t{symbol} << (d * field_bits_);
    starts |= std::uint64_t{1} << (d * field_bits_);
  }
  const std::uint64_t x = word ^ pattern;
  std::uint64_t differs = x;
  for (unsigned s = 1; s < field_bits_; ++s) differs |= x >> s;
  return ~differs & starts;
}

std::optional<std::uint64_t> PackedVec::find(std::uint64_t from, std::uint64_t to,
                                             unsigned symbol) const {
  to = std::min(to, length_);
  if (from >= to || symbol >= alphabet_) return std::nullopt;
  std::size_t w = static_cast<std::size_t>(from / per_word_);
  const std::size_t last = static_cast<std::size_t>((to - 1) / per_word_);

  if (field_bits_ != 0) {
    for (;;) {
      if (field_bits_ == 2 && w > from / per_word_) {
        w = simd::kernels().find_field2(words_.data(), last + 1, w, symbol);
        if (w > last) return std::nullopt;
      }
      std::uint64_t mask = match_mask(words_[w], symbol);
      const std::uint64_t base = std::uint64_t{w} * per_word_;
      if (base < from) mask &= ~std::uint64_t{0} << ((from - base) * field_bits_);
      if (mask != 0) {
        const std::uint64_t pos = base + static_cast<unsigned>(std::countr_zero(mask)) / field_bits_;
        return pos < to ? std::optional<std::uint64_t>(pos) : std::nullopt;
      }
      if (w == last) return std::nullopt;
      ++w;
    }
  }

  unsigned digits[kWordBits];
  for (; w <= last; ++w) {
    decode_word(w, digits);
    const std::uint64_t base = std::uint64_t{w} * per_word_;
    const unsigned lo = base < from ? static_cast<unsigned>(from - base) : 0u;
    const unsigned hi = static_cast<unsigned>(std::min<std::uint64_t>(per_word_, to - base));
    for (unsigned d = lo; d < hi; ++d)
      if (digits[d] == symbol) return base + d;
  }
  return std::nullopt;
}

SpaceUse PackedVec::space() const {
  return {words_.bits(), power_.bits()};
}

// -------------------------------------------------------------- RankSelect

RankSelect::RankSelect(const BitStore& base) : words_(base.data()), length_(base.size()) {
  const std::uint64_t n = base.size();
  const std::uint64_t lg = std::max<std::uint64_t>(1, ceil_log2(std::max<std::uint64_t>(n, 2)));
  const std::uint64_t target_super = 32 * lg * lg;
  const std::uint64_t rel_width = bits_for(target_super);
  block_bits_ = 2 * rel_width * lg;
  blocks_per_super_ = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::llround(static_cast<double>(target_super) /
                                                 static_cast<double>(block_bits_))));
  super_bits_ = block_bits_ * blocks_per_super_;
  sample_rate_ = super_bits_;

  num_super_ = n / super_bits_ + 1;
  const std::uint64_t num_blocks = n / block_bits_ + 1;
  super_counts_ = IntVector(num_super_, bits_for(n));
  block_counts_ = IntVector(num_blocks, bits_for(super_bits_));

  std::uint64_t cumulative = 0;
  std::uint64_t super_start = 0;
  for (std::uint64_t blk = 0; blk < num_blocks; ++blk) {
    if (blk % blocks_per_super_ == 0) {
      super_counts_.set(blk / blocks_per_super_, cumulative);
      super_start = cumulative;
    }
    block_counts_.set(blk, cumulative - super_start);
    const std::uint64_t start = blk * block_bits_;
    cumulative += count_range(start, std::min(n, start + block_bits_));
  }
  ones_ = cumulative;

  auto build_samples = [&](bool symbol) {
    const std::uint64_t total = symbol ? ones_ : n - ones_;
    const std::uint64_t count = (total + sample_rate_ - 1) / sample_rate_;
    IntVector samples(std::max<std::uint64_t>(count, 1), bits_for(num_super_));
    std::uint64_t j = 0;
    for (std::uint64_t sb = 0; sb < num_super_ && j < count; ++sb) {
      const std::uint64_t through = sb + 1 < num_super_ ? count_before_super(symbol, sb + 1) : total;
      while (j < count && j * sample_rate_ + 1 <= through) samples.set(j++, sb);
    }
    return samples;
  };
  samples1_ = build_samples(true);
  samples0_ = build_samples(false);
}

std::uint64_t RankSelect::count_before_super(bool symbol, std::uint64_t sb) const noexcept {
  const std::uint64_t ones = super_counts_.get(sb);
  return symbol ? ones : sb * super_bits_ - ones;
}

std::uint64_t RankSelect::count_before_block(bool symbol, std::uint64_t blk) const noexcept {
  const std::uint64_t ones = super_counts_.get(blk / blocks_per_super_) + block_counts_.get(blk);
  return symbol ? ones : blk * block_bits_ - ones;
}

std::uint64_t RankSelect::rank1(std::uint64_t i) const {
  if (i > length_) throw RangeError("rank position out of range");
  if (length_ == 0) return 0;
  const std::uint64_t blk = i / block_bits_;
  return count_before_block(true, blk) + count_range(blk * block_bits_, i);
}

std::uint64_t RankSelect::count_range(std::uint64_t from, std::uint64_t to) const noexcept {
  if (from >= to) return 0;
  const std::size_t first = static_cast<std::size_t>(from >> 6);
  const std::size_t last = static_cast<std::size_t>((to - 1) >> 6);
  const std::uint64_t head = ~std::uint64_t{0} << (from & 63);
  const std::uint64_t tail = low_mask(static_cast<unsigned>(((to - 1) & 63) + 1));
  if (first == last) return static_cast<std::uint64_t>(std::popcount(words_[first] & head & tail));
  std::uint64_t total = static_cast<std::uint64_t>(std::popcount(words_[first] & head)) +
                        static_cast<std::uint64_t>(std::popcount(words_[last] & tail));
  if (last > first + 1) total += simd::kernels().popcount(words_ + first + 1, last - first - 1);
  return total;
}

std::uint64_t RankSelect::select(bool symbol, std::uint64_t k) const {
  const std::uint64_t total = symbol ? ones_ : zeros();
  if (k == 0 || k > total) throw RangeError("select ordinal out of range");

  const IntVector& samples = symbol ? samples1_ : samples0_;
  const std::uint64_t j = (k - 1) / sample_rate_;
  const std::uint64_t sample_count = (total + sample_rate_ - 1) / sample_rate_;
  std::uint64_t lo = samples.get(j);
  std::uint64_t hi = j + 1 < sample_count ? samples.get(j + 1) : num_super_ - 1;
  // Last superblock in [lo, hi] with fewer than k occurrences before it.
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (count_before_super(symbol, mid) < k)
      lo = mid;
    else
      hi = mid - 1;
  }
  std::uint64_t blo = lo * blocks_per_super_;
  std::uint64_t bhi = std::min(blo + blocks_per_super_, block_counts_.size()) - 1;
  while (blo < bhi) {
    const std::uint64_t mid = blo + (bhi - blo + 1) / 2;
    if (count_before_block(symbol, mid) < k)
      blo = mid;
    else
      bhi = mid - 1;
  }

  std::uint64_t remaining = k - count_before_block(symbol, blo);
  const std::uint64_t start = blo * block_bits_;
  std::size_t w = static_cast<std::size_t>(start >> 6);
  std::uint64_t x = symbol ? words_[w] : ~words_[w];
  x &= ~std::uint64_t{0} << (start & 63);
  for (;;) {
    const auto c = static_cast<std::uint64_t>(std::popcount(x));
    if (remaining <= c) return std::uint64_t{w} * kWordBits + select_in_word(x, static_cast<unsigned>(remaining - 1));
    remaining -= c;
    ++w;
    x = symbol ? words_[w] : ~words_[w];
  }
}

SpaceUse RankSelect::space() const {
  return {0, super_counts_.space().principal + block_counts_.space().principal +
                 samples1_.space().principal + samples0_.space().principal};
}

}  // namespace spacegraph
