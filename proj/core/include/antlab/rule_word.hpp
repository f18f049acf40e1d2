#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace antlab {

enum class Turn : std::uint8_t { Left, Right };

/// The ant's program: symbol `s` means "turn per letter s". Alphabet size equals length.
class RuleWord {
 public:
  static constexpr std::size_t kMaxLength = 256;  // one byte per cell

  RuleWord() = default;

  /// Parses a word over {L, R}. Accepts the shorthand `L^6R` style exponents.
  static RuleWord parse(std::string_view text);
  /// L^{count} R
  static RuleWord left_power_right(std::size_t left_count);

  std::size_t size() const { return turns_.size(); }
  Turn turn(std::uint8_t symbol) const { return turns_[symbol]; }
  bool nontrivial() const;
  std::string to_string() const;

  friend bool operator==(const RuleWord&, const RuleWord&) = default;

 private:
  explicit RuleWord(std::vector<Turn> turns) : turns_(std::move(turns)) {}
  std::vector<Turn> turns_;
};

}  // namespace antlab
