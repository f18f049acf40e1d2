#include "antlab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "antlab/errors.hpp"
#include "antlab/rng.hpp"
#include "json.hpp"

namespace antlab {

using json = nlohmann::json;

std::vector<Cell> PatternShape::cells() const {
  if (size < 1) throw DomainError("pattern shape size must be positive");
  // Even sizes extend one further on the negative side.
  const std::int64_t lo = -(size / 2);
  const std::int64_t hi = lo + size - 1;
  const std::int64_t arm = (size / 2) / 2;
  std::vector<Cell> out;
  for (std::int64_t y = lo; y <= hi; ++y) {
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (kind == ShapeKind::Cross && std::abs(x) > arm && std::abs(y) > arm) continue;
      out.push_back({x, y});
    }
  }
  return out;
}

std::string PatternShape::to_string() const {
  return std::string(kind == ShapeKind::Square ? "square:" : "cross:") + std::to_string(size);
}

PatternShape PatternShape::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("shape must look like square:11 or cross:11");
  const std::string kind = text.substr(0, colon);
  PatternShape s;
  if (kind == "square") {
    s.kind = ShapeKind::Square;
  } else if (kind == "cross") {
    s.kind = ShapeKind::Cross;
  } else {
    throw ParseError("unknown shape kind '" + kind + "'");
  }
  try {
    s.size = std::stoll(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("bad shape size in '" + text + "'");
  }
  if (s.size < 1) throw ParseError("shape size must be positive");
  return s;
}

void ExperimentSpec::validate() const {
  if (!rule.nontrivial()) throw DomainError("census needs a nontrivial rule word");
  if (max_period == 0) throw DomainError("max_period must be positive");
  if (steps_per_run < 3 * max_period) throw DomainError("steps_per_run must be at least 3 * max_period");
  if (shape.size < 1) throw DomainError("pattern shape size must be positive");
}

DetectOptions ExperimentSpec::detect_options() const {
  DetectOptions o;
  o.max_steps = steps_per_run;
  o.max_period = max_period;
  o.ring_capacity = std::max<std::size_t>(3 * max_period, 4096);
  return o;
}

Configuration random_initial(const ExperimentSpec& spec, std::uint64_t run_index) {
  CounterRng rng(spec.seed, run_index);
  Configuration c;
  for (const Cell& cell : spec.shape.cells()) {
    c.picture.set(cell, static_cast<std::uint8_t>(rng.uniform(spec.rule.size())));
  }
  c.position = {0, 0};
  c.direction = Direction::North;
  return c;
}

double CensusReport::highway_fraction() const {
  return total_runs == 0 ? 0.0 : static_cast<double>(highway_runs()) / static_cast<double>(total_runs);
}

double CensusReport::period_share(std::size_t period) const {
  const auto it = period_counts.find(period);
  if (it == period_counts.end() || highway_runs() == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(highway_runs());
}

std::optional<std::size_t> CensusReport::dominant_period() const {
  std::optional<std::size_t> best;
  std::uint64_t best_count = 0;
  for (const auto& [p, n] : period_counts) {
    if (n > best_count) {
      best = p;
      best_count = n;
    }
  }
  return best;
}

namespace {

void keep_smallest(std::vector<std::uint64_t>& v, std::uint64_t run_index) {
  v.insert(std::upper_bound(v.begin(), v.end(), run_index), run_index);
  if (v.size() > CensusReport::kExamplesPerPeriod) v.resize(CensusReport::kExamplesPerPeriod);
}

}  // namespace

void CensusReport::record(std::uint64_t run_index, std::size_t period, bool resource_error) {
  ++total_runs;
  if (period == 0) {
    ++no_highway;
    if (resource_error) ++resource_errors;
    return;
  }
  ++period_counts[period];
  keep_smallest(example_runs[period], run_index);
}

void CensusReport::merge(const CensusReport& other) {
  total_runs += other.total_runs;
  no_highway += other.no_highway;
  resource_errors += other.resource_errors;
  for (const auto& [p, n] : other.period_counts) period_counts[p] += n;
  for (const auto& [p, runs] : other.example_runs) {
    for (std::uint64_t r : runs) keep_smallest(example_runs[p], r);
  }
  wall_clock_seconds += other.wall_clock_seconds;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ANTLAB_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Calls fn(i) for every i in [begin, end) on `workers` threads; fn must only touch
// per-index state.
template <typename Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned workers, Fn&& fn) {
  if (begin >= end) return;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, end - begin));
  if (workers <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&] {
      try {
        for (std::uint64_t i = next++; i < end; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = end;
      }
    });
  }
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct RunOutcome {
  std::size_t period = 0;
  bool resource_error = false;
};

RunOutcome classify(const ExperimentSpec& spec, std::uint64_t run_index) {
  try {
    const DetectionReport r = detect(spec.rule, random_initial(spec, run_index), spec.detect_options());
    return {r.found() ? r.period : 0, false};
  } catch (const ResourceLimitError&) {
    return {0, true};
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CensusReport continue_census(CensusCheckpoint state, const CensusOptions& opts) {
  const ExperimentSpec& spec = state.partial.spec;
  const unsigned workers = resolve_workers(opts.workers);
  const std::uint64_t batch = std::max<std::uint64_t>(1, opts.batch_size);
  const auto started = std::chrono::steady_clock::now();

  while (state.next_run < spec.runs) {
    if (opts.stop_after && state.next_run >= *opts.stop_after) break;
    const std::uint64_t end = std::min(spec.runs, state.next_run + batch);
    std::vector<RunOutcome> outcomes(end - state.next_run);
    const std::uint64_t begin = state.next_run;
    parallel_for(begin, end, workers, [&](std::uint64_t i) { outcomes[i - begin] = classify(spec, i); });
    for (std::uint64_t i = begin; i < end; ++i) {
      state.partial.record(i, outcomes[i - begin].period, outcomes[i - begin].resource_error);
    }
    state.next_run = end;
    if (opts.checkpoint) write_text(*opts.checkpoint, checkpoint_to_json(state));
  }
  state.partial.wall_clock_seconds +=
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (opts.checkpoint) write_text(*opts.checkpoint, checkpoint_to_json(state));
  return state.partial;
}

}  // namespace

CensusReport run_census(const ExperimentSpec& spec, const CensusOptions& opts) {
  spec.validate();
  CensusCheckpoint state;
  state.partial.spec = spec;
  return continue_census(std::move(state), opts);
}

CensusReport resume_census(const std::filesystem::path& checkpoint, const CensusOptions& opts) {
  CensusCheckpoint state = checkpoint_from_json(read_text(checkpoint));
  state.partial.spec.validate();
  CensusOptions o = opts;
  if (!o.checkpoint) o.checkpoint = checkpoint;
  return continue_census(std::move(state), o);
}

namespace {

json spec_to_json(const ExperimentSpec& s) {
  return json{{"ruleword", s.rule.to_string()},  {"runs", s.runs},
              {"steps_per_run", s.steps_per_run}, {"shape", s.shape.to_string()},
              {"seed", s.seed},                   {"max_period", s.max_period}};
}

ExperimentSpec spec_from_json(const json& j) {
  ExperimentSpec s;
  s.rule = RuleWord::parse(j.at("ruleword").get<std::string>());
  s.runs = j.at("runs").get<std::uint64_t>();
  s.steps_per_run = j.at("steps_per_run").get<std::uint64_t>();
  s.shape = PatternShape::parse(j.at("shape").get<std::string>());
  s.seed = j.at("seed").get<std::uint64_t>();
  s.max_period = j.at("max_period").get<std::size_t>();
  return s;
}

json report_to_json(const CensusReport& r, bool with_timing) {
  json periods = json::array();
  for (const auto& [p, n] : r.period_counts) {
    periods.push_back({{"period", p},
                       {"count", n},
                       {"share_of_highways", r.period_share(p)},
                       {"example_runs", r.example_runs.at(p)}});
  }
  json j{{"spec", spec_to_json(r.spec)},
         {"total_runs", r.total_runs},
         {"highway_runs", r.highway_runs()},
         {"no_highway", r.no_highway},
         {"resource_errors", r.resource_errors},
         {"highway_fraction", r.highway_fraction()},
         {"periods", periods}};
  if (with_timing) j["metadata"] = {{"wall_clock_seconds", r.wall_clock_seconds}};
  return j;
}

CensusReport report_from_json(const json& j) {
  CensusReport r;
  r.spec = spec_from_json(j.at("spec"));
  r.total_runs = j.at("total_runs").get<std::uint64_t>();
  r.no_highway = j.at("no_highway").get<std::uint64_t>();
  r.resource_errors = j.at("resource_errors").get<std::uint64_t>();
  for (const auto& p : j.at("periods")) {
    const auto period = p.at("period").get<std::size_t>();
    r.period_counts[period] = p.at("count").get<std::uint64_t>();
    r.example_runs[period] = p.at("example_runs").get<std::vector<std::uint64_t>>();
  }
  if (j.contains("metadata")) r.wall_clock_seconds = j["metadata"].value("wall_clock_seconds", 0.0);
  return r;
}

}  // namespace

std::string census_to_json(const CensusReport& r, bool with_timing) {
  return report_to_json(r, with_timing).dump(2) + "\n";
}

CensusReport census_from_json(const std::string& text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("census report: ") + e.what());
  }
}

std::string census_to_csv(const CensusReport& r) {
  std::ostringstream out;
  out << "period,count,frequency\n";
  for (const auto& [p, n] : r.period_counts) {
    out << p << ',' << n << ',' << r.period_share(p) << '\n';
  }
  return out.str();
}

std::string checkpoint_to_json(const CensusCheckpoint& c) {
  json j{{"format", "antlab-census-checkpoint"},
         {"version", 1},
         {"next_run", c.next_run},
         {"report", report_to_json(c.partial, true)}};
  return j.dump(2) + "\n";
}

CensusCheckpoint checkpoint_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.value("format", "") != "antlab-census-checkpoint") throw ParseError("not a census checkpoint");
    CensusCheckpoint c;
    c.next_run = j.at("next_run").get<std::uint64_t>();
    c.partial = report_from_json(j.at("report"));
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("census checkpoint: ") + e.what());
  }
}

MineResult mine(const ExperimentSpec& spec, const std::function<bool(const Highway&)>& predicate,
                const MineOptions& opts) {
  spec.validate();
  const unsigned workers = resolve_workers(opts.workers);
  const std::uint64_t batch = std::max<std::uint64_t>(1, opts.batch_size);
  MineResult result;
  std::set<HighwayKey> seen;

  for (std::uint64_t begin = 0; begin < spec.runs; begin += batch) {
    const std::uint64_t end = std::min(spec.runs, begin + batch);
    std::vector<std::optional<MinedHighway>> found(end - begin);
    parallel_for(begin, end, workers, [&](std::uint64_t i) {
      DetectionReport r;
      try {
        r = detect(spec.rule, random_initial(spec, i), spec.detect_options());
      } catch (const ResourceLimitError&) {
        return;
      }
      if (!r.found() || !predicate(*r.highway)) return;
      found[i - begin] = MinedHighway{canonicalise(*r.highway), spec.seed, i, r.detected_at};
    });
    for (auto& f : found) {
      if (!f) continue;
      if (seen.insert(canonical_key(f->highway)).second) result.highways.push_back(std::move(*f));
    }
    result.runs_done = end;
    if (opts.enough && opts.enough(result.highways)) break;
  }
  return result;
}

bool reproduces(const ExperimentSpec& spec, const MinedHighway& mined) {
  ExperimentSpec s = spec;
  s.seed = mined.seed;
  const DetectionReport r = detect(s.rule, random_initial(s, mined.run_index), s.detect_options());
  if (!r.found() || r.detected_at != mined.steps_to_detect) return false;
  return canonical_key(canonicalise(*r.highway)) == canonical_key(mined.highway);
}

}  // namespace antlab
