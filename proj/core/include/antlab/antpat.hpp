#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "antlab/engine.hpp"
#include "antlab/rule_word.hpp"

namespace antlab {

/// "antpat v1" text format:
///
///   antpat 1 <ruleword>
///   ant <x> <y> <E|N|W|S>
///   <x> <y> <symbol>        one line per nonzero cell, sorted by (y, x)
///
/// Plain ASCII, LF line endings. Readers reject symbols outside [1, |w|).
struct AntpatDocument {
  RuleWord rule;
  Configuration configuration;
};

std::string write_antpat(const RuleWord& w, const Configuration& c);
AntpatDocument read_antpat(std::string_view text);

void save_antpat(const std::filesystem::path& path, const RuleWord& w, const Configuration& c);
AntpatDocument load_antpat(const std::filesystem::path& path);

}  // namespace antlab
