#include "antlab/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace antlab {

TraceRing::TraceRing(std::size_t capacity) : capacity_(capacity), buffer_(2 * capacity) {
  if (capacity == 0) throw std::invalid_argument("trace ring capacity must be positive");
}

std::span<const std::uint8_t> TraceRing::suffix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("trace suffix longer than retained trace");
  // Symbols [head_, head_ + capacity_) are the ring in chronological order.
  const std::size_t end = head_ + capacity_;
  return {buffer_.data() + (end - n), n};
}

TraceSpill::TraceSpill(const std::string& path) : out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw std::runtime_error("cannot open trace spill file " + path);
  pending_.reserve(kFlushSize);
}

void TraceSpill::flush() {
  if (pending_.empty()) return;
  out_.write(reinterpret_cast<const char*>(pending_.data()),
             static_cast<std::streamsize>(pending_.size()));
  written_ += pending_.size();
  pending_.clear();
  out_.flush();
}

TraceSpill::~TraceSpill() {
  try {
    flush();
  } catch (...) {
  }
}

Trace TraceSpill::read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace spill file " + path);
  return Trace(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::size_t smallest_suffix_period(std::span<const std::uint8_t> window, std::size_t max_period,
                                   std::size_t repeats, std::size_t min_period) {
  const std::size_t n = window.size();
  const std::uint8_t* last = window.data() + n;
  for (std::size_t p = std::max<std::size_t>(min_period, 1); p <= max_period && repeats * p <= n; ++p) {
    // p-periodic over the last repeats*p symbols <=> x[i] == x[i - p] for the last
    // (repeats - 1) * p positions.
    const std::size_t span = (repeats - 1) * p;
    std::size_t j = 1;
    for (; j <= span; ++j) {
      if (last[-static_cast<std::ptrdiff_t>(j)] != last[-static_cast<std::ptrdiff_t>(j + p)]) break;
    }
    if (j > span) return p;
  }
  return 0;
}

bool is_primitive(std::span<const std::uint8_t> word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return false;
  }
  return true;
}

}  // namespace antlab
