#pragma once

// Word-parallel scan kernels shared by the bit structures.
//
// Each kernel has a scalar reference implementation and, on x86-64 builds, an
// AVX2 variant. The variant is chosen once at runtime from CPUID; setting the
// environment variable SPACEGRAPH_KERNELS=scalar forces the reference path.
// Both variants must return identical results for every input.

#include <cstddef>
#include <cstdint>

namespace spacegraph::simd {

struct KernelTable {
  const char* name;

  // Total number of set bits in words[0, n).
  std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t n);

  // Smallest i in [from, n) with words[i] != value, or n.
  std::size_t (*find_word_not_equal)(const std::uint64_t* words, std::size_t n, std::size_t from,
                                     std::uint64_t value);

  // Smallest i in [from, n) such that words[i], viewed as 32 two-bit fields,
  // holds at least one field equal to symbol (0..3); n if none.
  std::size_t (*find_field2)(const std::uint64_t* words, std::size_t n, std::size_t from,
                             unsigned symbol);
};

const KernelTable& scalar_kernels();

// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table selected for this process.
const KernelTable& kernels();

// Lane-pattern helpers shared by the implementations.
inline constexpr std::uint64_t kLowFieldBits = 0x5555555555555555ULL;

constexpr std::uint64_t field2_pattern(unsigned symbol) {
  return kLowFieldBits * (symbol & 3u);
}

// Bit 2j set iff field j of word equals symbol.
constexpr std::uint64_t field2_match_mask(std::uint64_t word, unsigned symbol) {
  const std::uint64_t x = word ^ field2_pattern(symbol);
  return ~(x | (x >> 1)) & kLowFieldBits;
}

}  // namespace spacegraph::simd
