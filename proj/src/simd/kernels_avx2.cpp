// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include <immintrin.h>

#include <bit>

#include "spacegraph/simd/kernels.hpp"

namespace spacegraph::simd {

namespace {

// Nibble-lookup popcount (Mula, Kurz, Lemire) accumulated with vpsadbw.
std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t n) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts =
        _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }

  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
  return total;
}

std::size_t find_word_not_equal_avx2(const std::uint64_t* words, std::size_t n, std::size_t from,
                                     std::uint64_t value) {
  std::size_t i = from;
  const __m256i needle = _mm256_set1_epi64x(static_cast<long long>(value));
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const int eq = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, needle)));
    if (eq != 0xf) return i + static_cast<std::size_t>(std::countr_zero(~static_cast<unsigned>(eq)));
  }
  for (; i < n; ++i)
    if (words[i] != value) return i;
  return n;
}

std::size_t find_field2_avx2(const std::uint64_t* words, std::size_t n, std::size_t from,
                             unsigned symbol) {
  std::size_t i = from;
  const __m256i pattern = _mm256_set1_epi64x(static_cast<long long>(field2_pattern(symbol)));
  const __m256i low = _mm256_set1_epi64x(static_cast<long long>(kLowFieldBits));
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i x = _mm256_xor_si256(v, pattern);
    // Low bit of each field is 1 iff the field differs from the symbol.
    const __m256i differs = _mm256_and_si256(_mm256_or_si256(x, _mm256_srli_epi64(x, 1)), low);
    const int all_differ =
        _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(differs, low)));
    if (all_differ != 0xf)
      return i + static_cast<std::size_t>(std::countr_zero(~static_cast<unsigned>(all_differ)));
  }
  for (; i < n; ++i)
    if (field2_match_mask(words[i], symbol) != 0) return i;
  return n;
}

constexpr KernelTable kAvx2{"avx2", popcount_avx2, find_word_not_equal_avx2, find_field2_avx2};

}  // namespace

const KernelTable& avx2_kernel_table() { return kAvx2; }

}  // namespace spacegraph::simd
