#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antlab/highway.hpp"
#include "antlab/montecarlo.hpp"
#include "antlab/pattern.hpp"

namespace antlab {

// The LLRLRL highway family c_n = M1 . L1^n . B1.
//
// All widget coordinates live in one frame: the ant stands on the origin at the start of
// the cycle. Link copy j is translated by j * link_step and the bounce widget by
// n * link_step, so c_n is M1 + sum_j (L1 + j*v) + (B1 + n*v).

struct Pose {
  Cell position;
  Direction direction = Direction::North;

  friend bool operator==(const Pose&, const Pose&) = default;
};

/// Cells of a picture (nonzero only) or a widget.
using CellMap = Pattern::Map;

/// The configuration at the start of one stage, written as main . link^(n-1) . last . bounce.
/// `link_last` is empty when the last copy equals the others.
struct StageLayout {
  std::string name;
  CellMap main;
  CellMap link;
  CellMap link_last;
  CellMap bounce;
  Pose ant;
  /// The ant stands on the bounce side, so it moves with n * link_step.
  bool ant_with_bounce = false;
  /// Steps from the start of the cycle: at + n * at_per_link.
  std::uint64_t at = 0;
  std::uint64_t at_per_link = 0;

  /// The stage-start configuration for n link copies (n >= 1 when link_last is set).
  Configuration compose(std::size_t n, Cell link_step) const;
  std::uint64_t time(std::size_t n) const { return at + n * at_per_link; }

  friend bool operator==(const StageLayout&, const StageLayout&) = default;
};

/// Steps per stage of one cycle. Link passes cost per copy; the rest is fixed.
struct StageBudgets {
  std::uint64_t main1 = 0;   // red arrow to the first L1
  std::uint64_t link1 = 0;   // per L1, first pass
  std::uint64_t bounce1 = 0;
  std::uint64_t link2 = 0;   // per L2, first rebound
  std::uint64_t main2 = 0;
  std::uint64_t link3 = 0;
  std::uint64_t bounce2 = 0;
  std::uint64_t link4 = 0;   // per L4, second rebound

  std::uint64_t fixed() const { return main1 + bounce1 + main2 + bounce2; }
  std::uint64_t per_link() const { return link1 + link2 + link3 + link4; }
  std::uint64_t period(std::size_t n) const { return fixed() + n * per_link(); }

  friend bool operator==(const StageBudgets&, const StageBudgets&) = default;
};

struct WidgetSet {
  Cell link_step{2, 0};
  /// Start, first rebound, new start, second rebound.
  std::array<StageLayout, 4> stages;
  StageBudgets budgets;
  /// Where the ant enters each widget, in that widget's own frame (copy 0, bounce at n=0).
  std::map<std::string, Pose> entries;

  const CellMap& M1() const { return stages[0].main; }
  const CellMap& L1() const { return stages[0].link; }
  const CellMap& B1() const { return stages[0].bounce; }
  const CellMap& L2() const { return stages[1].link; }
  const CellMap& L2_last() const { return stages[1].link_last; }
  const CellMap& M2() const { return stages[2].main; }
  const CellMap& L3() const { return stages[2].link; }
  const CellMap& B2() const { return stages[2].bounce; }
  const CellMap& L4() const { return stages[3].link; }
  const CellMap& L4_last() const { return stages[3].link_last; }

  /// c_n with the ant on its red arrow.
  Configuration start(std::size_t n) const { return stages[0].compose(n, link_step); }

  friend bool operator==(const WidgetSet&, const WidgetSet&) = default;
};

/// Widget names used for fixture files and entry poses.
extern const std::array<const char*, 10> kWidgetNames;

/// Per-row splice: `longer` equals `shorter` with `width` extra columns inserted in every
/// row at cut[y] (leftmost valid cut per row).
struct Splice {
  std::map<std::int64_t, std::int64_t> cut;
  CellMap inserted;  // in the coordinates of `longer`
};
std::optional<Splice> find_splice(const CellMap& shorter, const CellMap& longer, std::int64_t width);

/// Nonzero cells of a picture.
CellMap nonzero_cells(const Picture& p);

/// Symbol insertions turning trace a into trace b, leftmost placement.
struct Insertion {
  std::size_t at = 0;      // position in a
  std::size_t length = 0;
};
std::optional<std::vector<Insertion>> trace_insertions(const Trace& a, const Trace& b);

/// The checked-in widget fixtures (compiled into the library).
const WidgetSet& llrlrl_widgets();

/// Fixture (de)serialisation: one antpat document per widget plus a layout JSON.
std::map<std::string, std::string> widgets_to_files(const WidgetSet& w);
WidgetSet widgets_from_files(const std::map<std::string, std::string>& files);
void save_widgets(const WidgetSet& w, const std::filesystem::path& dir);
WidgetSet load_widgets(const std::filesystem::path& dir);

/// c_n from the fixtures, extracted and verified: period 220 + 24n, drift (-2,-2).
Highway llrlrl_highway(std::size_t n);

struct RecoveryOptions {
  ExperimentSpec spec;  // rule is forced to LLRLRL
  /// Stop mining once this many highways of period 220 + 24m are in hand.
  std::size_t instances = 4;
  /// Verify the decomposition for n = 0 ... max_n.
  std::size_t max_n = 8;
  unsigned workers = 0;

  RecoveryOptions();
};

struct RecoveryReport {
  WidgetSet widgets;
  /// Run indices of the two mined highways the widgets were cut from.
  std::uint64_t shorter_run = 0;
  std::uint64_t longer_run = 0;
  std::uint64_t runs_mined = 0;
  /// Number of distinct decompositions that verified.
  std::size_t families = 0;
};

/// Mines LLRLRL highways, splices pairs of periods 220+24m and 220+24(m+j), and builds the
/// stage layouts of every verified decomposition. Among several families the one whose
/// fixed budgets lie closest to (84, 4, 100, 30) is returned. Throws RecoveryError.
RecoveryReport recover_widgets(const RecoveryOptions& opts = {});

/// Decomposes an already known highway pair. Throws RecoveryError.
std::vector<WidgetSet> decompose_pair(const Highway& shorter, const Highway& longer, std::size_t max_n = 8);

}  // namespace antlab
