#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace antlab {

/// Symbols read by the ant, one per step, before the cell is incremented.
using Trace = std::vector<std::uint8_t>;

/// Fixed-capacity suffix of a trace. The buffer is mirrored so any suffix up to the
/// capacity is a single contiguous span.
class TraceRing {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

  explicit TraceRing(std::size_t capacity = kDefaultCapacity);

  void push(std::uint8_t symbol) {
    buffer_[head_] = symbol;
    buffer_[head_ + capacity_] = symbol;
    if (++head_ == capacity_) head_ = 0;
    ++total_;
  }

  std::size_t capacity() const { return capacity_; }
  /// Number of retained symbols.
  std::size_t size() const { return total_ < capacity_ ? static_cast<std::size_t>(total_) : capacity_; }
  /// Number of symbols ever pushed.
  std::uint64_t total() const { return total_; }

  /// The last `n` symbols, oldest first. Requires n <= size().
  std::span<const std::uint8_t> suffix(std::size_t n) const;

  void clear() {
    head_ = 0;
    total_ = 0;
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::uint8_t> buffer_;
};

/// Append-only raw byte dump of a full trace (one byte per symbol) for archival.
class TraceSpill {
 public:
  explicit TraceSpill(const std::string& path);

  void push(std::uint8_t symbol) {
    pending_.push_back(symbol);
    if (pending_.size() >= kFlushSize) flush();
  }
  void flush();
  std::uint64_t written() const { return written_; }

  ~TraceSpill();
  TraceSpill(const TraceSpill&) = delete;
  TraceSpill& operator=(const TraceSpill&) = delete;

  static Trace read_all(const std::string& path);

 private:
  static constexpr std::size_t kFlushSize = 1 << 16;
  std::ofstream out_;
  std::vector<std::uint8_t> pending_;
  std::uint64_t written_ = 0;
};

/// Smallest p in [min_period, max_period] such that the last repeats*p symbols of
/// `window` are p-periodic, or 0. Periods with repeats*p > window.size() are skipped.
std::size_t smallest_suffix_period(std::span<const std::uint8_t> window, std::size_t max_period,
                                   std::size_t repeats = 3, std::size_t min_period = 1);

/// True iff `word` is not a proper power of a shorter word.
bool is_primitive(std::span<const std::uint8_t> word);

}  // namespace antlab
