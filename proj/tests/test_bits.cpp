#include <doctest.h>

#include <random>
#include <vector>

#include "spacegraph/bits.hpp"
#include "spacegraph/errors.hpp"

using namespace spacegraph;

namespace {

BitStore random_store(std::uint64_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(density);
  BitStore b(n);
  for (std::uint64_t i = 0; i < n; ++i)
    if (bit(rng)) b.set(i);
  return b;
}

// Checks rank at every position and select at every occupied one against a
// running count.
void check_rank_select(const BitStore& b) {
  const RankSelect rs(b);
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i <= b.size(); ++i) {
    REQUIRE(rs.rank1(i) == ones);
    REQUIRE(rs.rank0(i) + rs.rank1(i) == i);
    if (i == b.size()) break;
    if (b.get(i)) {
      ++ones;
      REQUIRE(rs.select1(ones) == i);
    } else {
      REQUIRE(rs.select0(i - ones + 1) == i);
    }
  }
  CHECK(rs.ones() == ones);
  CHECK_THROWS_AS(rs.select1(ones + 1), RangeError);
  CHECK_THROWS_AS(rs.select0(b.size() - ones + 1), RangeError);
}

}  // namespace

TEST_SUITE("bits") {

TEST_CASE("rank and select on 10110") {
  const BitStore b = BitStore::from_string("10110");
  const RankSelect rs(b);
  CHECK(rs.rank1(3) == 2);
  CHECK(rs.rank1(0) == 0);
  CHECK(rs.select1(2) == 2);
  CHECK(rs.select0(1) == 1);
  CHECK(rs.rank0(5) == 2);
  CHECK_THROWS_AS(rs.rank1(6), RangeError);
  CHECK_THROWS_AS(rs.select1(0), RangeError);
}

TEST_CASE("rank/select agree with a running count") {
  for (double density : {0.0, 0.01, 0.5, 0.97, 1.0}) {
    CAPTURE(density);
    check_rank_select(random_store(100'000, density, 17));
  }
  for (std::uint64_t n : {1, 63, 64, 65, 4095, 4096, 4097})
    check_rank_select(random_store(n, 0.3, n));
}

TEST_CASE("rank directory is sublinear and shrinks relative to the base") {
  double previous = 1.0;
  for (unsigned e = 16; e <= 24; ++e) {
    const BitStore b = random_store(std::uint64_t{1} << e, 0.5, e);
    const RankSelect rs(b);
    const double ratio = static_cast<double>(rs.space().auxiliary) / static_cast<double>(b.size());
    CAPTURE(e);
    CHECK(ratio < 0.25);
    CHECK(ratio <= previous);
    previous = ratio;
  }
}

TEST_CASE("first_set_after") {
  const std::uint64_t w = (1u << 3) | (1u << 6);
  CHECK(first_set_after(w, 0) == 3u);
  CHECK(first_set_after(w, 4) == 6u);
  CHECK_FALSE(first_set_after(w, 7).has_value());
  CHECK_FALSE(first_set_after(w, 64).has_value());
  CHECK(first_set_after(~std::uint64_t{0}, 63) == 63u);
}

TEST_CASE("select_in_word") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t w = rng();
    unsigned k = 0;
    for (unsigned p = 0; p < 64; ++p)
      if ((w >> p) & 1) REQUIRE(select_in_word(w, k++) == p);
  }
}

TEST_CASE("BitStore scans and ranges") {
  const BitStore b = random_store(5000, 0.02, 9);
  for (std::uint64_t from = 0; from < b.size(); from += 37) {
    std::optional<std::uint64_t> set, clear;
    for (std::uint64_t i = from; i < b.size(); ++i) {
      if (!set && b.get(i)) set = i;
      if (!clear && !b.get(i)) clear = i;
    }
    REQUIRE(b.next_set(from, b.size()) == set);
    REQUIRE(b.next_clear(from, b.size()) == clear);
  }
  std::uint64_t ones = 0;
  for (std::uint64_t i = 100; i < 4321; ++i) ones += b.get(i);
  CHECK(b.count_range(100, 4321) == ones);

  BitStore c(300);
  c.assign_range(10, 250, true);
  CHECK(c.count() == 240);
  c.fill(true);
  CHECK(c.count() == 300);
  CHECK((c.word(4) >> 44) == 0);  // tail stays clear
}

TEST_CASE("BitStore bit fields round-trip") {
  std::mt19937_64 rng(11);
  BitStore b(1000);
  std::vector<bool> oracle(1000, false);
  for (int t = 0; t < 5000; ++t) {
    const unsigned count = 1 + static_cast<unsigned>(rng() % 64);
    const std::uint64_t pos = rng() % (1000 - count + 1);
    const std::uint64_t value = rng() & low_mask(count);
    b.write_bits(pos, count, value);
    for (unsigned k = 0; k < count; ++k) oracle[pos + k] = (value >> k) & 1;
    const std::uint64_t q = rng() % (1000 - count + 1);
    std::uint64_t expect = 0;
    for (unsigned k = 0; k < count; ++k) expect |= std::uint64_t{oracle[q + k]} << k;
    REQUIRE(b.read_bits(q, count) == expect);
  }
}

TEST_CASE("BitStore string form") {
  const BitStore b = BitStore::from_string("0110001");
  CHECK(b.to_string() == "0110001");
  CHECK(b.count() == 3);
  CHECK_THROWS_AS(BitStore::from_string("01x"), DomainError);
}

TEST_CASE("IntVector round-trip for every width") {
  std::mt19937_64 rng(3);
  for (unsigned width = 1; width <= 64; ++width) {
    IntVector v(257, width);
    std::vector<std::uint64_t> oracle(257, 0);
    for (int t = 0; t < 2000; ++t) {
      const std::uint64_t i = rng() % 257;
      oracle[i] = rng() & low_mask(width);
      v.set(i, oracle[i]);
    }
    for (std::uint64_t i = 0; i < 257; ++i) REQUIRE(v.get(i) == oracle[i]);
  }
}

TEST_CASE("PackedVec ternary example and packing arithmetic") {
  PackedVec v(400, 3);
  v.write(0, 2);
  v.write(1, 1);
  CHECK(v.read(0) == 2);
  CHECK(v.read(1) == 1);
  CHECK(v.per_word() == 40);
  CHECK(v.num_words() == 10);
  CHECK(v.space().principal == 640);
  CHECK_THROWS_AS(v.write(0, 3), DomainError);
  CHECK_THROWS_AS(v.read(400), RangeError);
}

TEST_CASE("PackedVec symbols per word") {
  CHECK(PackedVec(10, 2).per_word() == 64);
  CHECK(PackedVec(10, 4).per_word() == 32);
  CHECK(PackedVec(10, 5).per_word() == 27);
  CHECK(PackedVec(10, 7).per_word() == 22);
  CHECK(PackedVec(10, 3).field_layout() == false);
  CHECK(PackedVec(10, 4).field_layout() == true);
}

TEST_CASE("PackedVec sweep against a byte array") {
  for (unsigned c : {2u, 3u, 4u, 5u, 6u, 16u, 255u}) {
    CAPTURE(c);
    const std::uint64_t n = c == 3 ? 100'000 : 20'000;
    std::mt19937_64 rng(c);
    PackedVec v(n, c);
    std::vector<std::uint8_t> oracle(n, 0);
    for (std::uint64_t t = 0; t < 2 * n; ++t) {
      const std::uint64_t i = rng() % n;
      const unsigned s = static_cast<unsigned>(rng() % c);
      v.write(i, s);
      oracle[i] = static_cast<std::uint8_t>(s);
    }
    for (std::uint64_t i = 0; i < n; ++i) REQUIRE(v.read(i) == oracle[i]);
    for (unsigned s = 0; s < std::min(c, 4u); ++s)
      for (std::uint64_t from = 0; from < n; from += n / 50) {
        std::optional<std::uint64_t> expect;
        for (std::uint64_t i = from; i < n; ++i)
          if (oracle[i] == s) {
            expect = i;
            break;
          }
        REQUIRE(v.find(from, n, s) == expect);
      }
  }
}

TEST_CASE("ternary PackedVec stays under 1.62 bits per element") {
  // ceil(n/40) words; the partial last word costs up to 64 bits, covered by
  // the 0.02n margin once n >= 3200.
  for (std::uint64_t n : {1000, 1001, 4096, 100'000, 1'000'003}) {
    const PackedVec v(n, 3);
    CHECK(v.space().principal == (n + 39) / 40 * 64);
    if (n >= 3200) CHECK(static_cast<double>(v.space().principal) / static_cast<double>(n) <= 1.62);
  }
}

}  // TEST_SUITE
