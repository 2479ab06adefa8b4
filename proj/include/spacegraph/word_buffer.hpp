#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>

namespace spacegraph {

inline constexpr unsigned kWordBits = 64;

constexpr std::size_t words_for_bits(std::uint64_t bits) {
  return static_cast<std::size_t>((bits + kWordBits - 1) / kWordBits);
}

// Owning array of 64-bit words. Every workspace structure in the library keeps
// its storage in WordBuffers so that declared bit counts can be audited
// against what was actually allocated.
class WordBuffer {
 public:
  WordBuffer() = default;
  explicit WordBuffer(std::size_t words);  // zero-filled
  ~WordBuffer();

  // Storage with unspecified contents; used by O(1)-initialisable structures.
  static WordBuffer uninitialized(std::size_t words);

  WordBuffer(const WordBuffer& other);
  WordBuffer& operator=(const WordBuffer& other);
  WordBuffer(WordBuffer&& other) noexcept;
  WordBuffer& operator=(WordBuffer&& other) noexcept;

  std::uint64_t* data() noexcept { return words_.get(); }
  const std::uint64_t* data() const noexcept { return words_.get(); }
  std::size_t size() const noexcept { return size_; }
  std::uint64_t bits() const noexcept { return std::uint64_t{size_} * kWordBits; }

  std::uint64_t& operator[](std::size_t i) noexcept { return words_[i]; }
  std::uint64_t operator[](std::size_t i) const noexcept { return words_[i]; }

  std::span<std::uint64_t> span() noexcept { return {words_.get(), size_}; }
  std::span<const std::uint64_t> span() const noexcept { return {words_.get(), size_}; }

  void fill(std::uint64_t value) noexcept;

 private:
  struct Uninit {};
  WordBuffer(std::size_t words, Uninit);

  std::unique_ptr<std::uint64_t[]> words_;
  std::size_t size_ = 0;
};

namespace audit {

// Words currently held by live WordBuffers created on this thread.
std::int64_t live_words() noexcept;

// Highest live_words() since the last reset_peak() on this thread.
std::int64_t peak_words() noexcept;
void reset_peak() noexcept;

}  // namespace audit

}  // namespace spacegraph
