#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace spacegraph {

// Bits held by one structure, split into the principal payload and the
// auxiliary (index / summary) part. Both are word-padded.
struct SpaceUse {
  std::uint64_t principal = 0;
  std::uint64_t auxiliary = 0;

  std::uint64_t total() const { return principal + auxiliary; }

  SpaceUse& operator+=(const SpaceUse& other) {
    principal += other.principal;
    auxiliary += other.auxiliary;
    return *this;
  }
  friend SpaceUse operator+(SpaceUse a, const SpaceUse& b) { return a += b; }
  friend bool operator==(const SpaceUse&, const SpaceUse&) = default;
};

// Workspace accounting for one algorithm invocation under the register input
// model: read-only input and write-only output are never recorded, only the
// structures the algorithm allocates for itself.
class SpaceLedger {
 public:
  struct Entry {
    std::string label;
    SpaceUse use;
    bool live = true;
  };

  // Throws DomainError when label is already live.
  void record(const std::string& label, std::uint64_t principal_bits, std::uint64_t auxiliary_bits);
  void record(const std::string& label, const SpaceUse& use) {
    record(label, use.principal, use.auxiliary);
  }

  // Updates a live entry whose size changed; the peak follows.
  void resize(const std::string& label, const SpaceUse& use);

  // Throws DomainError for unknown or already released labels.
  void release(const std::string& label);

  std::uint64_t live_bits() const { return live_.total(); }
  SpaceUse live() const { return live_; }
  std::uint64_t peak() const { return peak_.total(); }
  SpaceUse peak_use() const { return peak_; }

  // The theoretical workspace bound for this run, evaluated for its n and m.
  void set_bound(std::string formula, double bits) {
    bound_formula_ = std::move(formula);
    bound_bits_ = bits;
  }
  const std::string& bound_formula() const { return bound_formula_; }
  double bound_bits() const { return bound_bits_; }

  const std::vector<Entry>& entries() const { return entries_; }

  // CSV with header label,principal_bits,auxiliary_bits,bound_formula,bound_bits,ratio.
  // One row per recorded entry, then a "peak" row.
  void write_csv(std::ostream& out) const;

  // Human-readable table.
  void write_report(std::ostream& out) const;

 private:
  void bump_peak();

  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> live_index_;
  SpaceUse live_;
  SpaceUse peak_;
  std::string bound_formula_;
  double bound_bits_ = 0.0;
};

}  // namespace spacegraph
