#pragma once

// Capacity rules capacity = max(1, n / (f(n) lg n)) for the bounded queues of
// the overflow BFS and the candidate pool of the MST.
//   const:k   f = k
//   log2      f = lg n
//   loglog    f = lg lg n

#include <cstdint>
#include <string>
#include <string_view>

namespace spacegraph {

struct CapacityRule {
  enum class Kind { constant, log2, loglog };
  Kind kind = Kind::log2;
  double k = 1.0;

  // DomainError on malformed text.
  static CapacityRule parse(std::string_view text);
  std::string to_string() const;

  double f(std::uint64_t n) const;
  std::uint64_t capacity(std::uint64_t n) const;
};

}  // namespace spacegraph
