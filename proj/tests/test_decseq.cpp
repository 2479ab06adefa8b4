#include <doctest.h>

#include <random>
#include <vector>

#include "spacegraph/decseq.hpp"
#include "spacegraph/errors.hpp"

using namespace spacegraph;

namespace {

std::vector<std::uint64_t> prefix_sums(const std::vector<std::uint64_t>& xs) {
  std::vector<std::uint64_t> off{0};
  for (std::uint64_t x : xs) off.push_back(off.back() + x);
  return off;
}

// Mix of zeros, small cells and cells spanning several findany blocks.
std::vector<std::uint64_t> mixed_values(std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> xs(n);
  for (auto& x : xs) {
    const auto r = rng() % 10;
    x = r < 2 ? 0 : r < 8 ? rng() % 101 : rng() % 5000;
  }
  return xs;
}

void run_against_counters(DecrementSeq& d, std::vector<std::uint64_t> counters, std::uint64_t ops,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t n = counters.size();
  std::uint64_t worst = 0;
  for (std::uint64_t t = 0; t < ops; ++t) {
    const std::uint64_t i = rng() % n;
    const std::uint64_t before = d.probes();
    if (rng() % 3) {
      const bool expect = counters[i] > 0;
      REQUIRE(d.dec_if_nonzero(i) == expect);
      counters[i] -= expect;
    } else {
      REQUIRE(d.is_zero(i) == (counters[i] == 0));
    }
    worst = std::max(worst, d.probes() - before);
  }
  CHECK(worst <= 64);
  for (std::uint64_t i = 0; i < n; ++i) REQUIRE(d.value(i) == counters[i]);
}

}  // namespace

TEST_SUITE("decseq") {

TEST_CASE("small example") {
  const std::vector<std::uint64_t> xs{0, 2, 1};
  DecrementSeq d(xs);
  CHECK(d.value(0) == 0);
  CHECK(d.value(1) == 2);
  CHECK(d.value(2) == 1);
  CHECK(d.is_zero(0));
  CHECK_FALSE(d.is_zero(1));
  CHECK(d.dec_if_nonzero(2));
  CHECK_FALSE(d.dec_if_nonzero(2));
  CHECK_FALSE(d.dec_if_nonzero(0));
  CHECK(d.dec_if_nonzero(1));
  CHECK(d.dec_if_nonzero(1));
  CHECK(d.is_zero(1));
  CHECK_THROWS_AS(d.is_zero(3), RangeError);
}

TEST_CASE("empty sequence") {
  DecrementSeq d{std::vector<std::uint64_t>{}};
  CHECK(d.size() == 0);
  CHECK_THROWS_AS(d.is_zero(0), RangeError);
  CHECK_THROWS_AS(d.dec_if_nonzero(0), RangeError);
}

TEST_CASE("stored layout matches counters") {
  const auto xs = mixed_values(10'000, 1);
  DecrementSeq d(xs);
  for (std::uint64_t i = 0; i < xs.size(); ++i) REQUIRE(d.value(i) == xs[i]);
  run_against_counters(d, xs, 300'000, 2);
}

TEST_CASE("borrowed offsets match counters") {
  const auto xs = mixed_values(10'000, 3);
  const auto off = prefix_sums(xs);
  DecrementSeq d = DecrementSeq::over_offsets(off);
  run_against_counters(d, xs, 300'000, 4);
}

TEST_CASE("draining every cell to zero") {
  const auto xs = mixed_values(500, 5);
  DecrementSeq d(xs);
  for (std::uint64_t i = 0; i < xs.size(); ++i) {
    for (std::uint64_t k = 0; k < xs[i]; ++k) REQUIRE(d.dec_if_nonzero(i));
    REQUIRE(d.is_zero(i));
    REQUIRE_FALSE(d.dec_if_nonzero(i));
  }
}

TEST_CASE("bad offsets are rejected") {
  const std::vector<std::uint64_t> off{0, 5, 3};
  CHECK_THROWS_AS(DecrementSeq::over_offsets(off), DomainError);
  CHECK_THROWS_AS(DecrementSeq::over_offsets(std::span<const std::uint64_t>{}), DomainError);
}

TEST_CASE("space: cells plus layout") {
  const auto xs = mixed_values(4096, 6);
  std::uint64_t m = 0;
  for (auto x : xs) m += x;
  const DecrementSeq d(xs);
  CHECK(d.total() == m);
  CHECK(d.space().principal >= m);
  const auto off = prefix_sums(xs);
  const DecrementSeq e = DecrementSeq::over_offsets(off);
  CHECK(e.space().principal == (m + 63) / 64 * 64);
}

}  // TEST_SUITE
