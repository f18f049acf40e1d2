#include "antlab/widgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "antlab/antpat.hpp"
#include "antlab/errors.hpp"
#include "widget_fixtures.hpp"

namespace antlab {

using nlohmann::json;

const std::array<const char*, 10> kWidgetNames = {"M1", "L1", "B1", "L2", "L2p",
                                                  "M2", "L3", "B2", "L4", "L4p"};

namespace {

const RuleWord& llrlrl() {
  static const RuleWord w = RuleWord::parse("LLRLRL");
  return w;
}

constexpr std::size_t kBasePeriod = 220;
constexpr std::size_t kPeriodStep = 24;

Cell times(Cell v, std::int64_t n) { return {v.x * n, v.y * n}; }

void place(CellMap& out, const CellMap& src, Cell offset) {
  for (const auto& [c, s] : src) out[c + offset] = s;
}

CellMap shifted(const CellMap& src, Cell offset) {
  CellMap out;
  place(out, src, offset);
  return out;
}

Picture to_picture(const CellMap& cells) {
  Picture p;
  for (const auto& [c, s] : cells) p.set(c, s);
  return p;
}

Configuration advance(const Configuration& c, std::uint64_t steps) {
  Simulator sim(llrlrl(), c);
  sim.run(steps);
  return sim.configuration();
}

Trace trace_of(const Configuration& c, std::uint64_t steps) {
  Simulator sim(llrlrl(), c);
  Trace t;
  t.reserve(steps);
  sim.run(steps, [&](std::uint8_t s) { t.push_back(s); });
  return t;
}

Pose pose_of(const Configuration& c) { return {c.position, c.direction}; }

bool same(const Configuration& a, const Configuration& b) {
  return a.position == b.position && a.direction == b.direction &&
         nonzero_cells(a.picture) == nonzero_cells(b.picture);
}

/// Highway starting from `c`, verified with the expected period and drift.
std::optional<Highway> highway_from(const Configuration& c, std::size_t period, Cell drift) {
  try {
    Highway h = to_highway(llrlrl(), extract_candidate(llrlrl(), c, period));
    if (h.drift != drift || !verify_highway(h)) return std::nullopt;
    return h;
  } catch (const DegenerateDriftError&) {
    return std::nullopt;
  }
}

// Row-wise content of a cell map.
using Row = std::vector<std::pair<std::int64_t, std::uint8_t>>;

std::map<std::int64_t, Row> rows_of(const CellMap& m) {
  std::map<std::int64_t, Row> rows;
  for (const auto& [c, s] : m) rows[c.y].emplace_back(c.x, s);  // x ascending within a row
  return rows;
}

bool row_splices(const Row& a, const Row& b, std::int64_t s, std::int64_t w) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && a[i].first < s) {
    if (j >= b.size() || b[j] != a[i]) return false;
    ++i;
    ++j;
  }
  if (j < b.size() && b[j].first < s) return false;
  while (j < b.size() && b[j].first < s + w) ++j;
  while (i < a.size()) {
    if (j >= b.size() || b[j].first != a[i].first + w || b[j].second != a[i].second) return false;
    ++i;
    ++j;
  }
  return j == b.size();
}

std::int64_t cut_at(const std::map<std::int64_t, std::int64_t>& cut, std::int64_t y) {
  auto it = cut.find(y);
  return it == cut.end() ? 0 : it->second;
}

/// Layout of a stage from c_2 and c_3 taken at the same stage time.
std::optional<StageLayout> layout_from(const Configuration& c2, const Configuration& c3, Cell v) {
  const CellMap a = nonzero_cells(c2.picture);
  const CellMap b = nonzero_cells(c3.picture);
  auto splice = find_splice(a, b, v.x);
  if (!splice || c2.direction != c3.direction) return std::nullopt;
  StageLayout st;
  for (const auto& [c, s] : a) {
    const std::int64_t k = cut_at(splice->cut, c.y);
    if (!splice->cut.count(c.y)) return std::nullopt;
    if (c.x < k) {
      st.main[c] = s;
    } else if (c.x < k + v.x) {
      st.link[c] = s;
    } else if (c.x < k + 2 * v.x) {
      st.link_last[c - v] = s;
    } else {
      st.bounce[c - times(v, 2)] = s;
    }
  }
  if (st.link != splice->inserted) {
    // The inserted copy must equal the first copy already present in c_2.
    return std::nullopt;
  }
  if (st.link_last == st.link) st.link_last.clear();
  if (c3.position == c2.position) {
    st.ant = pose_of(c2);
  } else if (c3.position == c2.position + v) {
    st.ant = {c2.position - times(v, 2), c2.direction};
    st.ant_with_bounce = true;
  } else {
    return std::nullopt;
  }
  return st;
}

struct Block {
  std::size_t at = 0;      // position in the n = 0 trace
  std::size_t length = 0;  // extra steps per link copy
};

}  // namespace

CellMap nonzero_cells(const Picture& p) {
  CellMap out;
  p.for_each_nonzero([&](Cell c, std::uint8_t s) { out.emplace(c, s); });
  return out;
}

Configuration StageLayout::compose(std::size_t n, Cell link_step) const {
  if (n == 0 && !link_last.empty()) throw DomainError("stage layout " + name + " needs n >= 1");
  CellMap cells = main;
  for (std::size_t j = 0; j < n; ++j) {
    const bool last = j + 1 == n && !link_last.empty();
    place(cells, last ? link_last : link, times(link_step, static_cast<std::int64_t>(j)));
  }
  place(cells, bounce, times(link_step, static_cast<std::int64_t>(n)));
  Configuration c;
  c.picture = to_picture(cells);
  c.position = ant.position + (ant_with_bounce ? times(link_step, static_cast<std::int64_t>(n)) : Cell{});
  c.direction = ant.direction;
  return c;
}

std::optional<Splice> find_splice(const CellMap& shorter, const CellMap& longer, std::int64_t width) {
  if (width <= 0) throw DomainError("splice width must be positive");
  const auto ra = rows_of(shorter);
  const auto rb = rows_of(longer);
  std::vector<std::int64_t> ys;
  for (const auto& [y, r] : ra) ys.push_back(y);
  for (const auto& [y, r] : rb) ys.push_back(y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  static const Row kEmpty;
  Splice out;
  for (std::int64_t y : ys) {
    const auto ia = ra.find(y);
    const auto ib = rb.find(y);
    const Row& a = ia == ra.end() ? kEmpty : ia->second;
    const Row& b = ib == rb.end() ? kEmpty : ib->second;
    std::int64_t lo = INT64_MAX;
    std::int64_t hi = INT64_MIN;
    for (const auto& e : a) lo = std::min(lo, e.first), hi = std::max(hi, e.first);
    for (const auto& e : b) lo = std::min(lo, e.first), hi = std::max(hi, e.first);
    std::optional<std::int64_t> found;
    for (std::int64_t s = lo - width; s <= hi + 1; ++s) {
      if (row_splices(a, b, s, width)) {
        found = s;
        break;
      }
    }
    if (!found) return std::nullopt;
    out.cut[y] = *found;
    for (const auto& [x, sym] : b) {
      if (x >= *found && x < *found + width) out.inserted[{x, y}] = sym;
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxInsertions = 8;

bool align_from(const Trace& a, const Trace& b, std::size_t i, std::size_t j, std::size_t limit,
                std::vector<Insertion>& out) {
  while (i < a.size() && j < b.size() && a[i] == b[j]) {
    ++i;
    ++j;
  }
  if (i == a.size() && j == b.size()) return true;
  if (j == b.size() || out.size() == limit) return false;
  // Insert b[j, j+k) and continue; shortest insertion first.
  for (std::size_t k = 1; j + k <= b.size() && b.size() - j - k >= a.size() - i; ++k) {
    if (i < a.size() && b[j + k] != a[i]) continue;
    out.push_back({i, k});
    if (align_from(a, b, i, j + k, limit, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Insertion>> trace_insertions(const Trace& a, const Trace& b) {
  std::vector<Insertion> out;
  if (b.size() < a.size()) return std::nullopt;
  // Fewest blocks wins.
  bool aligned = false;
  for (std::size_t limit = 0; limit <= kMaxInsertions && !aligned; ++limit) {
    out.clear();
    aligned = align_from(a, b, 0, 0, limit, out);
  }
  if (!aligned) return std::nullopt;
  // Slide every inserted block as far left as the symbols allow.
  std::size_t shift = 0;  // symbols inserted before the current block
  for (Insertion& ins : out) {
    std::size_t start = ins.at + shift;
    while (ins.at > 0 && b[start - 1] == b[start + ins.length - 1]) {
      --ins.at;
      --start;
    }
    shift += ins.length;
  }
  return out;
}

namespace {

/// Everything derived from one reference decomposition main . link^n . bounce, with the
/// ant on the origin of the reference frame.
class FamilyAnalysis {
 public:
  FamilyAnalysis(CellMap main, CellMap link, CellMap bounce, Direction dir, Cell v, Cell drift)
      : v_(v), drift_(drift) {
    ref_.name = "reference";
    ref_.main = std::move(main);
    ref_.link = std::move(link);
    ref_.bounce = std::move(bounce);
    ref_.ant = {{0, 0}, dir};
  }

  bool verifies(std::size_t max_n) const {
    for (std::size_t n = 0; n <= max_n; ++n) {
      if (!highway_from(ref_.compose(n, v_), period(n), drift_)) return false;
    }
    return true;
  }

  std::optional<WidgetSet> analyse() {
    if (!find_blocks()) return std::nullopt;
    // Cycle order starting from the longest link pass.
    std::size_t first = 0;
    for (std::size_t i = 1; i < blocks_.size(); ++i) {
      if (blocks_[i].length > blocks_[first].length) first = i;
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i != first && blocks_[i].length == blocks_[first].length) return std::nullopt;
    }
    std::array<std::size_t, 4> pos{};  // unrolled pass positions in cycle order
    for (std::size_t r = 0; r < 4; ++r) {
      const Block& b = blocks_[(first + r) % 4];
      pos[r] = b.at + ((first + r) >= 4 ? kBasePeriod : 0);
      lengths_[r] = b.length;
    }
    if (pos[0] < kBasePeriod) {
      for (auto& p : pos) p += kBasePeriod;
    }
    // Windows: start between the previous cycle's last pass and pass 0, and so on.
    const std::array<std::pair<std::size_t, std::size_t>, 4> windows = {{
        {pos[3] - kBasePeriod, pos[0]},
        {pos[0], pos[1]},
        {pos[1], pos[2]},
        {pos[2], pos[3]},
    }};
    static const std::array<const char*, 4> kNames = {"start", "rebound1", "newstart", "rebound2"};

    WidgetSet w;
    w.link_step = v_;
    std::array<std::size_t, 4> tau{};
    for (std::size_t k = 0; k < 4; ++k) {
      std::optional<StageLayout> found;
      for (std::size_t t = windows[k].first; t < windows[k].second && !found; ++t) {
        found = layout_at(t);
        if (found) tau[k] = t;
      }
      if (!found) return std::nullopt;
      found->name = kNames[k];
      // Rebounds enter the series from its last copy, which keeps its own widget name.
      if (k % 2 == 1 && found->link_last.empty()) found->link_last = found->link;
      w.stages[k] = *found;
    }

    // Re-anchor everything on the start stage: ant on the origin, time 0.
    const StageLayout& s0 = w.stages[0];
    if (s0.ant_with_bounce || !s0.link_last.empty()) return std::nullopt;
    const Cell origin = s0.ant.position;
    for (std::size_t k = 0; k < 4; ++k) {
      StageLayout& st = w.stages[k];
      st.main = shifted(st.main, -origin);
      st.link = shifted(st.link, -origin);
      st.link_last = shifted(st.link_last, -origin);
      st.bounce = shifted(st.bounce, -origin);
      st.ant.position = st.ant.position - origin;
      const std::uint64_t t0 = time_n(tau[k], 0) - time_n(tau[0], 0);
      const std::uint64_t t1 = time_n(tau[k], 1) - time_n(tau[0], 1);
      st.at = t0;
      st.at_per_link = t1 - t0;
    }

    StageBudgets& b = w.budgets;
    b.main1 = pos[0] - tau[0];
    b.link1 = lengths_[0];
    b.bounce1 = pos[1] - pos[0];
    b.link2 = lengths_[1];
    b.main2 = pos[2] - tau[2];
    b.link3 = lengths_[2];
    b.bounce2 = pos[3] - pos[2];
    b.link4 = lengths_[3];
    lead_ = (tau[0] + kBasePeriod - pos[3]) + (tau[2] - pos[1]);

    if (!entries(w, pos, tau[0])) return std::nullopt;
    return w;
  }

  /// Steps between a rebound pass and the following red arrow, summed over both rebounds.
  std::size_t lead() const { return lead_; }

 private:
  std::size_t period(std::size_t n) const { return kBasePeriod + kPeriodStep * n; }

  /// Time in c_n of the point at position `t` (unrolled, may exceed one period) of the
  /// n = 0 trace. A pass sitting exactly at t counts as done.
  std::uint64_t time_n(std::size_t t, std::size_t n) const {
    std::uint64_t out = t;
    const std::size_t cycles = t / kBasePeriod;
    const std::size_t rem = t % kBasePeriod;
    out += cycles * kPeriodStep * n;
    for (const Block& b : blocks_) {
      if (b.at <= rem) out += b.length * n;
    }
    return out;
  }

  Configuration at(std::size_t n, std::uint64_t steps) const { return advance(ref_.compose(n, v_), steps); }

  bool find_blocks() {
    std::array<Trace, 3> t;
    for (std::size_t n = 0; n < 3; ++n) t[n] = trace_of(ref_.compose(n, v_), period(n));
    auto first = trace_insertions(t[0], t[1]);
    auto second = trace_insertions(t[1], t[2]);
    if (!first || !second || first->size() != 4 || second->size() != 4) return false;
    std::size_t total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const Insertion& a = (*first)[i];
      const Insertion& b = (*second)[i];
      if (a.length != b.length || b.at != a.at + total) return false;
      total += a.length;
      blocks_[i] = {a.at, a.length};
    }
    return total == kPeriodStep;
  }

  std::optional<StageLayout> layout_at(std::size_t t) const {
    const Configuration c2 = at(2, time_n(t, 2));
    const Configuration c3 = at(3, time_n(t, 3));
    auto st = layout_from(c2, c3, v_);
    if (!st) return std::nullopt;
    const std::size_t lo = st->link_last.empty() ? 0 : 1;
    for (std::size_t n = lo; n <= 5; ++n) {
      if (!same(st->compose(n, v_), at(n, time_n(t, n)))) return std::nullopt;
    }
    return st;
  }

  bool entries(WidgetSet& w, const std::array<std::size_t, 4>& pos, std::size_t tau0) {
    std::map<std::string, Pose> found;
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto ni = static_cast<std::int64_t>(n);
      const Cell origin = at(n, time_n(tau0, n)).position;
      const std::uint64_t base = time_n(tau0, n);
      // Pass r starts at the time of position pos[r] with the earlier passes done.
      auto pass_start = [&](std::size_t r) {
        std::uint64_t t = pos[r] - tau0;
        for (std::size_t q = 0; q < r; ++q) t += lengths_[q] * n;
        return base + t;
      };
      auto pose_at = [&](std::uint64_t t, Cell frame) {
        const Configuration c = at(n, t);
        return Pose{c.position - origin - frame, c.direction};
      };
      std::map<std::string, Pose> now;
      now["M1"] = w.stages[0].ant;
      now["M2"] = w.stages[2].ant;
      now["L1"] = pose_at(pass_start(0), {});
      now["B1"] = pose_at(pass_start(0) + lengths_[0] * n, times(v_, ni));
      now["L2p"] = pose_at(pass_start(1), times(v_, ni - 1));
      now["L2"] = pose_at(pass_start(1) + lengths_[1], times(v_, ni - 2));
      now["L3"] = pose_at(pass_start(2), {});
      now["B2"] = pose_at(pass_start(2) + lengths_[2] * n, times(v_, ni));
      now["L4p"] = pose_at(pass_start(3), times(v_, ni - 1));
      now["L4"] = pose_at(pass_start(3) + lengths_[3], times(v_, ni - 2));
      if (n == 2) {
        found = now;
      } else if (found != now) {
        return false;
      }
    }
    w.entries = found;
    return true;
  }

  StageLayout ref_;
  Cell v_;
  Cell drift_;
  std::array<Block, 4> blocks_{};
  std::array<std::size_t, 4> lengths_{};
  std::size_t lead_ = 0;
};

/// Ant-relative nonzero cells and heading at every phase of a highway.
std::vector<std::pair<CellMap, Direction>> phase_cells(const Highway& h) {
  std::vector<std::pair<CellMap, Direction>> out;
  out.reserve(h.period);
  Simulator sim(h.rule, h.configuration());
  for (std::size_t p = 0; p < h.period; ++p) {
    const Highway at = to_highway(h.rule, extract_candidate(h.rule, sim.configuration(), h.period));
    CellMap cells;
    for (const auto& [c, s] : at.pattern.values()) {
      if (s != 0) cells.emplace(c, s);
    }
    out.emplace_back(std::move(cells), at.direction);
    sim.step();
  }
  return out;
}

bool two_periodic(const CellMap& inserted, const std::map<std::int64_t, std::int64_t>& cut,
                  std::int64_t width) {
  for (const auto& [c, s] : inserted) {
    const std::int64_t k = cut_at(cut, c.y);
    if (c.x + 2 < k + width) {
      auto it = inserted.find({c.x + 2, c.y});
      if (it == inserted.end() || it->second != s) return false;
    }
    if (c.x - 2 >= k) {
      if (!inserted.count({c.x - 2, c.y})) return false;
    }
  }
  return true;
}

int budget_distance(const StageBudgets& b) {
  auto d = [](std::uint64_t x, int target) { return std::abs(static_cast<int>(x) - target); };
  return d(b.main1, 84) + d(b.bounce1, 4) + d(b.main2, 100) + d(b.bounce2, 30);
}

}  // namespace

std::vector<WidgetSet> decompose_pair(const Highway& shorter, const Highway& longer, std::size_t max_n) {
  if (shorter.rule != llrlrl() || longer.rule != llrlrl()) throw DomainError("decompose_pair needs LLRLRL highways");
  if (shorter.period != kBasePeriod || longer.period <= shorter.period ||
      (longer.period - shorter.period) % kPeriodStep != 0 || shorter.drift != longer.drift) {
    throw DomainError("decompose_pair needs periods 220 and 220 + 24m with equal drift");
  }
  const auto copies = static_cast<std::int64_t>((longer.period - shorter.period) / kPeriodStep);
  const Cell v{2, 0};
  const auto pa = phase_cells(shorter);
  const auto pb = phase_cells(longer);

  std::vector<WidgetSet> out;
  for (const auto& [b_cells, b_dir] : pb) {
    for (const auto& [a_cells, a_dir] : pa) {
      if (a_dir != b_dir) continue;
      auto splice = find_splice(a_cells, b_cells, v.x * copies);
      if (!splice || !splice->cut.count(0) || splice->cut.at(0) <= 0) continue;
      if (!two_periodic(splice->inserted, splice->cut, v.x * copies)) continue;
      CellMap main;
      CellMap link;
      CellMap bounce;
      for (const auto& [c, s] : a_cells) (c.x < cut_at(splice->cut, c.y) ? main : bounce)[c] = s;
      for (const auto& [c, s] : splice->inserted) {
        if (c.x < cut_at(splice->cut, c.y) + v.x) link[c] = s;
      }
      FamilyAnalysis fam(std::move(main), std::move(link), std::move(bounce), a_dir, v, shorter.drift);
      if (!fam.verifies(std::min<std::size_t>(max_n, 2)) || !fam.verifies(max_n)) continue;
      if (auto w = fam.analyse()) {
        // One decomposition per family is enough.
        if (std::find(out.begin(), out.end(), *w) == out.end()) out.push_back(std::move(*w));
        return out;
      }
    }
  }
  return out;
}

RecoveryOptions::RecoveryOptions() {
  spec.rule = RuleWord::parse("LLRLRL");
  spec.runs = 10'000;
  spec.seed = 1;
}

RecoveryReport recover_widgets(const RecoveryOptions& opts) {
  ExperimentSpec spec = opts.spec;
  spec.rule = llrlrl();
  const std::size_t top = kBasePeriod + kPeriodStep * opts.max_n;
  auto in_family = [&](const Highway& h) {
    return h.period >= kBasePeriod && h.period <= top && (h.period - kBasePeriod) % kPeriodStep == 0;
  };
  MineOptions mo;
  mo.workers = opts.workers;
  const std::size_t want = opts.instances;
  mo.enough = [want](const std::vector<MinedHighway>& found) {
    bool base = false;
    bool longer = false;
    for (const auto& m : found) (m.highway.period == kBasePeriod ? base : longer) = true;
    return base && longer && found.size() >= want;
  };
  const MineResult mined = mine(spec, in_family, mo);

  RecoveryReport report;
  report.runs_mined = mined.runs_done;
  std::optional<int> best;
  std::vector<WidgetSet> seen;
  for (const auto& a : mined.highways) {
    if (a.highway.period != kBasePeriod) continue;
    for (const auto& b : mined.highways) {
      if (b.highway.period <= kBasePeriod || b.highway.drift != a.highway.drift) continue;
      for (WidgetSet& w : decompose_pair(a.highway, b.highway, opts.max_n)) {
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
        seen.push_back(w);
        const int d = budget_distance(w.budgets);
        if (!best || d < *best) {
          best = d;
          report.widgets = w;
          report.shorter_run = a.run_index;
          report.longer_run = b.run_index;
        }
      }
    }
  }
  if (!best) {
    throw RecoveryError("no consistent widget decomposition among " + std::to_string(mined.highways.size()) +
                        " mined LLRLRL highways (" + std::to_string(mined.runs_done) + " runs)");
  }
  report.families = seen.size();
  return report;
}

// ---- fixtures ----

namespace {

struct FileSlot {
  const char* file;
  std::size_t stage;
  enum Part { Main, Link, Last, Bounce } part;
  const char* entry;  // entries key, or nullptr to use the stage pose
};

constexpr std::array<FileSlot, 14> kSlots = {{
    {"M1", 0, FileSlot::Main, "M1"},
    {"L1", 0, FileSlot::Link, "L1"},
    {"B1", 0, FileSlot::Bounce, "B1"},
    {"rebound1-main", 1, FileSlot::Main, nullptr},
    {"L2", 1, FileSlot::Link, "L2"},
    {"L2p", 1, FileSlot::Last, "L2p"},
    {"rebound1-bounce", 1, FileSlot::Bounce, nullptr},
    {"M2", 2, FileSlot::Main, "M2"},
    {"L3", 2, FileSlot::Link, "L3"},
    {"B2", 2, FileSlot::Bounce, "B2"},
    {"rebound2-main", 3, FileSlot::Main, nullptr},
    {"L4", 3, FileSlot::Link, "L4"},
    {"L4p", 3, FileSlot::Last, "L4p"},
    {"rebound2-bounce", 3, FileSlot::Bounce, nullptr},
}};

CellMap& part_of(StageLayout& st, FileSlot::Part p) {
  switch (p) {
    case FileSlot::Main: return st.main;
    case FileSlot::Link: return st.link;
    case FileSlot::Last: return st.link_last;
    case FileSlot::Bounce: return st.bounce;
  }
  return st.main;
}

json pose_json(const Pose& p) {
  return {{"x", p.position.x}, {"y", p.position.y}, {"dir", std::string(1, direction_letter(p.direction))}};
}

Pose pose_from(const json& j) {
  const std::string d = j.at("dir").get<std::string>();
  const auto dir = d.size() == 1 ? direction_from_letter(d[0]) : std::nullopt;
  if (!dir) throw ParseError("bad direction in widget layout");
  return {{j.at("x").get<std::int64_t>(), j.at("y").get<std::int64_t>()}, *dir};
}

}  // namespace

std::map<std::string, std::string> widgets_to_files(const WidgetSet& w) {
  std::map<std::string, std::string> files;
  WidgetSet copy = w;
  for (const FileSlot& slot : kSlots) {
    StageLayout& st = copy.stages[slot.stage];
    const CellMap& cells = part_of(st, slot.part);
    if (cells.empty() && slot.part == FileSlot::Last) continue;
    Configuration c;
    c.picture = to_picture(cells);
    const Pose pose = slot.entry ? w.entries.at(slot.entry) : st.ant;
    c.position = pose.position;
    c.direction = pose.direction;
    files[std::string(slot.file) + ".antpat"] = write_antpat(llrlrl(), c);
  }
  json layout;
  layout["format"] = "antlab-widgets";
  layout["version"] = 1;
  layout["ruleword"] = llrlrl().to_string();
  layout["link_step"] = {w.link_step.x, w.link_step.y};
  const StageBudgets& b = w.budgets;
  layout["budgets"] = {{"main1", b.main1}, {"link1", b.link1}, {"bounce1", b.bounce1}, {"link2", b.link2},
                       {"main2", b.main2}, {"link3", b.link3}, {"bounce2", b.bounce2}, {"link4", b.link4}};
  json stages = json::array();
  for (const StageLayout& st : w.stages) {
    stages.push_back({{"name", st.name},
                      {"at", st.at},
                      {"at_per_link", st.at_per_link},
                      {"ant", pose_json(st.ant)},
                      {"ant_with_bounce", st.ant_with_bounce}});
  }
  layout["stages"] = stages;
  files["layout.json"] = layout.dump(2) + "\n";
  return files;
}

WidgetSet widgets_from_files(const std::map<std::string, std::string>& files) {
  auto text = [&](const std::string& name) -> const std::string& {
    auto it = files.find(name);
    if (it == files.end()) throw ParseError("widget fixture missing: " + name);
    return it->second;
  };
  WidgetSet w;
  json layout;
  try {
    layout = json::parse(text("layout.json"));
    if (layout.at("format") != "antlab-widgets" || layout.at("version") != 1) {
      throw ParseError("unsupported widget layout format");
    }
    w.link_step = {layout.at("link_step").at(0).get<std::int64_t>(), layout.at("link_step").at(1).get<std::int64_t>()};
    const json& b = layout.at("budgets");
    w.budgets = {b.at("main1"), b.at("link1"), b.at("bounce1"), b.at("link2"),
                 b.at("main2"), b.at("link3"), b.at("bounce2"), b.at("link4")};
    const json& stages = layout.at("stages");
    if (stages.size() != 4) throw ParseError("widget layout needs four stages");
    for (std::size_t k = 0; k < 4; ++k) {
      StageLayout& st = w.stages[k];
      st.name = stages[k].at("name").get<std::string>();
      st.at = stages[k].at("at");
      st.at_per_link = stages[k].at("at_per_link");
      st.ant = pose_from(stages[k].at("ant"));
      st.ant_with_bounce = stages[k].at("ant_with_bounce");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("widget layout: ") + e.what());
  }
  for (const FileSlot& slot : kSlots) {
    const std::string name = std::string(slot.file) + ".antpat";
    if (slot.part == FileSlot::Last && !files.count(name)) continue;
    const AntpatDocument doc = read_antpat(text(name));
    if (doc.rule != llrlrl()) throw ParseError(name + ": widget fixtures must use LLRLRL");
    part_of(w.stages[slot.stage], slot.part) = nonzero_cells(doc.configuration.picture);
    if (slot.entry) w.entries[slot.entry] = {doc.configuration.position, doc.configuration.direction};
  }
  return w;
}

void save_widgets(const WidgetSet& w, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, body] : widgets_to_files(w)) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << body;
  }
}

WidgetSet load_widgets(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    files[entry.path().filename().string()] = body.str();
  }
  return widgets_from_files(files);
}

const WidgetSet& llrlrl_widgets() {
  static const WidgetSet w = widgets_from_files(detail::embedded_widget_files());
  return w;
}

Highway llrlrl_highway(std::size_t n) {
  const WidgetSet& w = llrlrl_widgets();
  const std::size_t period = kBasePeriod + kPeriodStep * n;
  auto h = highway_from(w.start(n), period, {-2, -2});
  if (!h) {
    throw ConstructionError("LLRLRL widget concatenation with n = " + std::to_string(n) +
                            " does not verify at period " + std::to_string(period));
  }
  return *h;
}

}  // namespace antlab
