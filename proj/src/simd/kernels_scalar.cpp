#include <bit>

#include "spacegraph/simd/kernels.hpp"

namespace spacegraph::simd {

namespace {

std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
  return total;
}

std::size_t find_word_not_equal_scalar(const std::uint64_t* words, std::size_t n, std::size_t from,
                                       std::uint64_t value) {
  for (std::size_t i = from; i < n; ++i)
    if (words[i] != value) return i;
  return n;
}

std::size_t find_field2_scalar(const std::uint64_t* words, std::size_t n, std::size_t from,
                               unsigned symbol) {
  for (std::size_t i = from; i < n; ++i)
    if (field2_match_mask(words[i], symbol) != 0) return i;
  return n;
}

constexpr KernelTable kScalar{"scalar", popcount_scalar, find_word_not_equal_scalar,
                              find_field2_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace spacegraph::simd
