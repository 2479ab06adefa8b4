#include "spacegraph/word_buffer.hpp"

#include <algorithm>

namespace spacegraph {

namespace {
thread_local std::int64_t g_live_words = 0;
thread_local std::int64_t g_peak_words = 0;

void grow(std::size_t words) noexcept {
  g_live_words += static_cast<std::int64_t>(words);
  g_peak_words = std::max(g_peak_words, g_live_words);
}
}  // namespace

namespace audit {
std::int64_t live_words() noexcept { return g_live_words; }
std::int64_t peak_words() noexcept { return g_peak_words; }
void reset_peak() noexcept { g_peak_words = g_live_words; }
}  // namespace audit

WordBuffer::WordBuffer(std::size_t words)
    : words_(words == 0 ? nullptr : std::make_unique<std::uint64_t[]>(words)), size_(words) {
  grow(size_);
}

WordBuffer::WordBuffer(std::size_t words, Uninit)
    : words_(words == 0 ? nullptr : std::make_unique_for_overwrite<std::uint64_t[]>(words)),
      size_(words) {
  grow(size_);
}

WordBuffer WordBuffer::uninitialized(std::size_t words) { return WordBuffer(words, Uninit{}); }

WordBuffer::~WordBuffer() { g_live_words -= static_cast<std::int64_t>(size_); }

WordBuffer::WordBuffer(const WordBuffer& other) : WordBuffer(other.size_, Uninit{}) {
  std::copy_n(other.words_.get(), size_, words_.get());
}

WordBuffer& WordBuffer::operator=(const WordBuffer& other) {
  if (this != &other) {
    WordBuffer copy(other);
    *this = std::move(copy);
  }
  return *this;
}

WordBuffer::WordBuffer(WordBuffer&& other) noexcept
    : words_(std::move(other.words_)), size_(other.size_) {
  other.size_ = 0;
}

WordBuffer& WordBuffer::operator=(WordBuffer&& other) noexcept {
  if (this != &other) {
    g_live_words -= static_cast<std::int64_t>(size_);
    words_ = std::move(other.words_);
    size_ = other.size_;
    other.size_ = 0;
  }
  return *this;
}

void WordBuffer::fill(std::uint64_t value) noexcept { std::fill_n(words_.get(), size_, value); }

}  // namespace spacegraph
