#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antlab/highway.hpp"

namespace antlab {

/// Where a catalogued highway came from. A record without a seed was constructed.
struct Provenance {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> run_index;
  std::uint64_t steps_to_detect = 0;

  bool constructed() const { return !seed.has_value(); }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct CatalogRecord {
  Highway highway;
  Provenance provenance;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

/// Highways keyed by canonical form. Records are stored canonicalised.
class Catalog {
 public:
  /// Canonicalises and inserts; returns false if an equal canonical highway is present.
  bool add(const Highway& h, Provenance p = {});
  bool add(CatalogRecord r) { return add(r.highway, r.provenance); }

  const std::vector<CatalogRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

 private:
  std::vector<CatalogRecord> records_;
  std::set<HighwayKey> keys_;
};

/// One record as a JSON object. Pattern cells (zeros included) are sorted by (y, x).
std::string record_to_json(const CatalogRecord& r);
CatalogRecord record_from_json(const std::string& text);

/// A catalog document: {"format": "antlab-catalog", "version": 1, "highways": [...]}.
std::string catalog_to_json(const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> catalog_from_json(const std::string& text);

void save_catalog(const std::filesystem::path& path, const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> load_catalog(const std::filesystem::path& path);

}  // namespace antlab
