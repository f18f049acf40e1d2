#include "antlab/rule_word.hpp"

#include <algorithm>
#include <cctype>

#include "antlab/errors.hpp"

namespace antlab {

RuleWord RuleWord::parse(std::string_view text) {
  std::vector<Turn> turns;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i++];
    Turn t;
    if (c == 'L') {
      t = Turn::Left;
    } else if (c == 'R') {
      t = Turn::Right;
    } else {
      throw ParseError("rule word: unexpected character '" + std::string(1, c) + "' in " +
                       std::string(text));
    }
    std::size_t repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      repeat = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        repeat = repeat * 10 + static_cast<std::size_t>(text[i] - '0');
        if (repeat > kMaxLength) throw ParseError("rule word: exponent too large");
        ++i;
      }
      if (i == start) throw ParseError("rule word: '^' must be followed by a count");
    }
    turns.insert(turns.end(), repeat, t);
    if (turns.size() > kMaxLength) throw ParseError("rule word longer than 256 letters");
  }
  if (turns.empty()) throw ParseError("rule word must not be empty");
  return RuleWord(std::move(turns));
}

RuleWord RuleWord::left_power_right(std::size_t left_count) {
  if (left_count + 1 > kMaxLength) throw DomainError("rule word longer than 256 letters");
  std::vector<Turn> turns(left_count, Turn::Left);
  turns.push_back(Turn::Right);
  return RuleWord(std::move(turns));
}

bool RuleWord::nontrivial() const {
  const bool has_left = std::find(turns_.begin(), turns_.end(), Turn::Left) != turns_.end();
  const bool has_right = std::find(turns_.begin(), turns_.end(), Turn::Right) != turns_.end();
  return has_left && has_right;
}

std::string RuleWord::to_string() const {
  std::string out;
  out.reserve(turns_.size());
  for (Turn t : turns_) out.push_back(t == Turn::Left ? 'L' : 'R');
  return out;
}

}  // namespace antlab
