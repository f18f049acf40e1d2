#include "antlab/antpat.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "antlab/errors.hpp"

namespace antlab {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_int(std::string_view field, std::size_t line_no) {
  std::int64_t v = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("antpat line " + std::to_string(line_no) + ": bad integer '" +
                     std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string write_antpat(const RuleWord& w, const Configuration& c) {
  std::ostringstream out;
  out << "antpat 1 " << w.to_string() << '\n';
  out << "ant " << c.position.x << ' ' << c.position.y << ' ' << direction_letter(c.direction)
      << '\n';
  for (const auto& [cell, s] : c.picture.entries()) {
    out << cell.x << ' ' << cell.y << ' ' << static_cast<int>(s) << '\n';
  }
  return out.str();
}

AntpatDocument read_antpat(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.size() < 2) throw ParseError("antpat: missing header or ant line");

  const auto header = split_fields(lines[0]);
  if (header.size() != 3 || header[0] != "antpat" || header[1] != "1") {
    throw ParseError("antpat: expected header 'antpat 1 <ruleword>'");
  }
  AntpatDocument doc{RuleWord::parse(header[2]), {}};

  const auto ant = split_fields(lines[1]);
  if (ant.size() != 4 || ant[0] != "ant" || ant[3].size() != 1) {
    throw ParseError("antpat line 2: expected 'ant <x> <y> <dir>'");
  }
  const auto dir = direction_from_letter(ant[3][0]);
  if (!dir) throw ParseError("antpat line 2: direction must be one of E N W S");
  doc.configuration.position = {parse_int(ant[1], 2), parse_int(ant[2], 2)};
  doc.configuration.direction = *dir;

  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (lines[i].empty()) {
      if (i + 1 == lines.size()) break;
      throw ParseError("antpat line " + std::to_string(line_no) + ": empty line");
    }
    const auto f = split_fields(lines[i]);
    if (f.size() != 3) throw ParseError("antpat line " + std::to_string(line_no) + ": expected '<x> <y> <symbol>'");
    const Cell cell{parse_int(f[0], line_no), parse_int(f[1], line_no)};
    const std::int64_t s = parse_int(f[2], line_no);
    if (s <= 0 || static_cast<std::uint64_t>(s) >= doc.rule.size()) {
      throw ParseError("antpat line " + std::to_string(line_no) + ": symbol " + std::to_string(s) +
                       " outside [1, " + std::to_string(doc.rule.size()) + ")");
    }
    if (doc.configuration.picture.get(cell) != 0) {
      throw ParseError("antpat line " + std::to_string(line_no) + ": duplicate cell");
    }
    doc.configuration.picture.set(cell, static_cast<std::uint8_t>(s));
  }
  return doc;
}

void save_antpat(const std::filesystem::path& path, const RuleWord& w, const Configuration& c) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_antpat(w, c);
}

AntpatDocument load_antpat(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_antpat(buf.str());
}

}  // namespace antlab
