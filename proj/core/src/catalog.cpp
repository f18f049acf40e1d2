#include "antlab/catalog.hpp"

#include <fstream>
#include <sstream>

#include "antlab/errors.hpp"
#include "json.hpp"

namespace antlab {

using json = nlohmann::json;

bool Catalog::add(const Highway& h, Provenance p) {
  Highway c = canonicalise(h);
  if (!keys_.insert(canonical_key(c)).second) return false;
  records_.push_back({std::move(c), p});
  return true;
}

namespace {

json to_json(const CatalogRecord& r) {
  const Highway& h = r.highway;
  json cells = json::array();
  for (const auto& [c, s] : h.pattern.values()) cells.push_back({c.x, c.y, s});
  json trace = json::array();
  for (std::uint8_t s : h.trace_cycle) trace.push_back(s);
  json prov = json::object();
  if (r.provenance.seed) {
    prov["seed"] = *r.provenance.seed;
  } else {
    prov["seed"] = "constructed";
  }
  if (r.provenance.run_index) prov["run_index"] = *r.provenance.run_index;
  prov["steps_to_detect"] = r.provenance.steps_to_detect;
  return json{{"ruleword", h.rule.to_string()},
              {"period", h.period},
              {"drift", {h.drift.x, h.drift.y}},
              {"trace_cycle", trace},
              {"pattern", {{"cells", cells}}},
              {"ant", {{"x", h.position.x}, {"y", h.position.y}, {"dir", std::string(1, direction_letter(h.direction))}}},
              {"provenance", prov}};
}

CatalogRecord from_json(const json& j) {
  CatalogRecord r;
  Highway& h = r.highway;
  h.rule = RuleWord::parse(j.at("ruleword").get<std::string>());
  const std::size_t alphabet = h.rule.size();
  auto symbol = [&](const json& v) {
    const auto s = v.get<std::int64_t>();
    if (s < 0 || static_cast<std::size_t>(s) >= alphabet) {
      throw ParseError("catalog: symbol " + std::to_string(s) + " outside the alphabet of " + h.rule.to_string());
    }
    return static_cast<std::uint8_t>(s);
  };

  h.period = j.at("period").get<std::size_t>();
  const json& drift = j.at("drift");
  if (!drift.is_array() || drift.size() != 2) throw ParseError("catalog: drift must be [a, b]");
  h.drift = {drift[0].get<std::int64_t>(), drift[1].get<std::int64_t>()};
  for (const json& s : j.at("trace_cycle")) h.trace_cycle.push_back(symbol(s));
  if (h.trace_cycle.size() != h.period) throw ParseError("catalog: trace_cycle length differs from period");

  Pattern::Map cells;
  for (const json& c : j.at("pattern").at("cells")) {
    if (!c.is_array() || c.size() != 3) throw ParseError("catalog: cells must be [x, y, s]");
    const Cell at{c[0].get<std::int64_t>(), c[1].get<std::int64_t>()};
    if (!cells.emplace(at, symbol(c[2])).second) throw ParseError("catalog: duplicate cell");
  }
  h.pattern = Pattern(std::move(cells));

  const json& ant = j.at("ant");
  h.position = {ant.at("x").get<std::int64_t>(), ant.at("y").get<std::int64_t>()};
  const auto dir = ant.at("dir").get<std::string>();
  const auto d = dir.size() == 1 ? direction_from_letter(dir[0]) : std::nullopt;
  if (!d) throw ParseError("catalog: ant dir must be one of E N W S");
  h.direction = *d;
  if (!h.pattern.contains(h.position)) throw ParseError("catalog: ant outside the pattern support");

  const json& prov = j.at("provenance");
  const json& seed = prov.at("seed");
  if (seed.is_string()) {
    if (seed.get<std::string>() != "constructed") throw ParseError("catalog: seed must be a number or \"constructed\"");
  } else {
    r.provenance.seed = seed.get<std::uint64_t>();
  }
  if (prov.contains("run_index")) r.provenance.run_index = prov["run_index"].get<std::uint64_t>();
  r.provenance.steps_to_detect = prov.value("steps_to_detect", std::uint64_t{0});
  return r;
}

template <typename F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string record_to_json(const CatalogRecord& r) { return to_json(r).dump(2) + "\n"; }

CatalogRecord record_from_json(const std::string& text) {
  return parsing("catalog record", [&] { return from_json(json::parse(text)); });
}

std::string catalog_to_json(const std::vector<CatalogRecord>& records) {
  json list = json::array();
  for (const auto& r : records) list.push_back(to_json(r));
  json doc{{"format", "antlab-catalog"}, {"version", 1}, {"highways", list}};
  return doc.dump(2) + "\n";
}

std::vector<CatalogRecord> catalog_from_json(const std::string& text) {
  return parsing("catalog", [&] {
    const json doc = json::parse(text);
    // A bare record is accepted as a one-entry catalog.
    if (doc.is_object() && doc.contains("ruleword")) return std::vector<CatalogRecord>{from_json(doc)};
    if (doc.value("format", "") != "antlab-catalog") throw ParseError("not an antlab catalog");
    if (doc.value("version", 0) != 1) throw ParseError("unsupported catalog version");
    std::vector<CatalogRecord> out;
    for (const json& r : doc.at("highways")) out.push_back(from_json(r));
    return out;
  });
}

void save_catalog(const std::filesystem::path& path, const std::vector<CatalogRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << catalog_to_json(records);
}

std::vector<CatalogRecord> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return catalog_from_json(buf.str());
}

}  // namespace antlab
