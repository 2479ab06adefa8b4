#include <doctest.h>

#include <bit>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "spacegraph/simd/kernels.hpp"

using namespace spacegraph::simd;

namespace {

std::uint64_t naive_popcount(const std::vector<std::uint64_t>& w) {
  std::uint64_t total = 0;
  for (std::uint64_t x : w)
    for (unsigned b = 0; b < 64; ++b) total += (x >> b) & 1;
  return total;
}

std::size_t naive_not_equal(const std::vector<std::uint64_t>& w, std::size_t from, std::uint64_t value) {
  for (std::size_t i = from; i < w.size(); ++i)
    if (w[i] != value) return i;
  return w.size();
}

std::size_t naive_field2(const std::vector<std::uint64_t>& w, std::size_t from, unsigned symbol) {
  for (std::size_t i = from; i < w.size(); ++i)
    for (unsigned f = 0; f < 32; ++f)
      if (((w[i] >> (2 * f)) & 3u) == symbol) return i;
  return w.size();
}

// Words that mostly equal fill, with a few disturbances, so that the
// "first different word" searches travel some distance.
std::vector<std::uint64_t> mostly(std::size_t n, std::uint64_t fill, std::mt19937_64& rng) {
  std::vector<std::uint64_t> w(n, fill);
  const std::size_t hits = rng() % 3;
  for (std::size_t h = 0; h < hits && n > 0; ++h) w[rng() % n] = rng();
  return w;
}

void check_table(const KernelTable& k) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 257}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint64_t> w(n);
      for (auto& x : w) x = rng();
      REQUIRE(k.popcount(w.data(), n) == naive_popcount(w));

      for (std::uint64_t fill : {std::uint64_t{0}, ~std::uint64_t{0}, std::uint64_t{0xAAAAAAAAAAAAAAAA}}) {
        const auto m = mostly(n, fill, rng);
        for (std::size_t from = 0; from <= n; from += 1 + n / 7)
          REQUIRE(k.find_word_not_equal(m.data(), n, from, fill) == naive_not_equal(m, from, fill));
      }
      // Field searches: words of a single repeated symbol plus a planted one.
      for (unsigned base = 0; base < 4; ++base) {
        auto m = mostly(n, field2_pattern(base), rng);
        if (n > 0 && trial % 2) {
          const unsigned other = (base + 1 + rng() % 3) & 3u;
          const unsigned f = rng() % 32;
          auto& word = m[rng() % n];
          word = (word & ~(std::uint64_t{3} << (2 * f))) | (std::uint64_t{other} << (2 * f));
        }
        for (unsigned symbol = 0; symbol < 4; ++symbol)
          for (std::size_t from = 0; from <= n; from += 1 + n / 5)
            REQUIRE(k.find_field2(m.data(), n, from, symbol) == naive_field2(m, from, symbol));
      }
    }
  }
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("field2 match mask") {
  const std::uint64_t w = 0b11'10'01'00;
  CHECK((field2_match_mask(w, 0) & 1u) == 1u);
  CHECK(((field2_match_mask(w, 1) >> 2) & 1u) == 1u);
  CHECK(((field2_match_mask(w, 2) >> 4) & 1u) == 1u);
  CHECK(((field2_match_mask(w, 3) >> 6) & 1u) == 1u);
  CHECK(std::popcount(field2_match_mask(w, 3)) == 1);
}

TEST_CASE("scalar kernels match naive loops") { check_table(scalar_kernels()); }

TEST_CASE("AVX2 kernels match the scalar reference") {
  const KernelTable* avx2 = avx2_kernels();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 variant unavailable on this build or CPU; skipped");
    return;
  }
  check_table(*avx2);
  // Direct equivalence on unaligned starts inside one buffer.
  std::mt19937_64 rng(99);
  std::vector<std::uint64_t> w(1000);
  for (auto& x : w) x = rng() & rng() & rng();
  const KernelTable& s = scalar_kernels();
  for (std::size_t off = 0; off < 9; ++off)
    for (std::size_t n = 0; n + off <= w.size(); n += 37) {
      REQUIRE(avx2->popcount(w.data() + off, n) == s.popcount(w.data() + off, n));
      REQUIRE(avx2->find_word_not_equal(w.data() + off, n, 0, 0) == s.find_word_not_equal(w.data() + off, n, 0, 0));
      for (unsigned sym = 0; sym < 4; ++sym)
        REQUIRE(avx2->find_field2(w.data() + off, n, 0, sym) == s.find_field2(w.data() + off, n, 0, sym));
    }
}

TEST_CASE("process-wide selection names a known table") {
  const std::string name = kernels().name;
  CHECK((name == "scalar" || name == "avx2"));
  const char* forced = std::getenv("SPACEGRAPH_KERNELS");
  if (forced != nullptr && std::string(forced) == "scalar") CHECK(name == "scalar");
}

}  // TEST_SUITE
