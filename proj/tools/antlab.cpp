// antlab: simulate, detect, census, mine, construct and verify generalised ants.
//
// Exit status: 0 on success, 1 on a rejected verification or a runtime failure,
// 2 on a usage error. Progress lines on stdout are key=value.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "antlab/antpat.hpp"
#include "antlab/catalog.hpp"
#include "antlab/constructions.hpp"
#include "antlab/detect.hpp"
#include "antlab/errors.hpp"
#include "antlab/montecarlo.hpp"
#include "antlab/render.hpp"
#include "antlab/widgets.hpp"

namespace {

using namespace antlab;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where JSON goes: a file, or stdout when the path is "-". Log lines move to stderr in
// the second case so stdout stays parseable.
struct Output {
  std::string path = "-";

  bool to_stdout() const { return path == "-"; }
  std::ostream& log() const { return to_stdout() ? std::cerr : std::cout; }
  void write(const std::string& text) const {
    if (to_stdout()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  }
};

std::string drift_text(Cell d) { return std::to_string(d.x) + "," + std::to_string(d.y); }

RuleWord parse_rule(const std::string& text) {
  try {
    return RuleWord::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

// Start configuration from --in or --white.
struct StartOptions {
  std::string rule;
  std::string input;
  bool white = false;

  void add(CLI::App* cmd) {
    cmd->add_option("rule", rule, "Rule word, e.g. LLRL or L^6R (taken from the file with --in)");
    auto* in = cmd->add_option("--in", input, "Start from an antpat file");
    auto* wh = cmd->add_flag("--white", white, "Start from the all-0 picture, ant at the origin facing north");
    in->excludes(wh);
  }

  AntpatDocument load() const {
    if (input.empty() && !white) throw UsageError("give --in FILE or --white");
    if (white) {
      if (rule.empty()) throw UsageError("--white needs a rule word");
      return {parse_rule(rule), Configuration{}};
    }
    AntpatDocument doc = load_antpat(input);
    if (!rule.empty() && !(parse_rule(rule) == doc.rule)) {
      throw UsageError("rule word " + rule + " differs from the file's " + doc.rule.to_string());
    }
    return doc;
  }
};

struct RenderOptions {
  std::string path;
  int cell_size = 4;
  bool no_ant = false;
  std::vector<std::int64_t> region;
  std::string format;

  void add(CLI::App* cmd) {
    cmd->add_option("--render", path, "Write an image of the final configuration (.pgm or .svg)");
    cmd->add_option("--cell-size", cell_size, "Pixels per cell")->check(CLI::Range(1, 256));
    cmd->add_flag("--no-ant", no_ant, "Do not draw the ant");
    cmd->add_option("--region", region, "Explicit region x0 y0 x1 y1")->expected(4);
    cmd->add_option("--format", format, "pgm or svg (default: from the file extension)")
        ->check(CLI::IsMember({"pgm", "svg"}));
  }

  void write(const RuleWord& w, const Configuration& c) const {
    if (path.empty()) return;
    RenderSpec spec;
    spec.cell_size = cell_size;
    spec.ant_marker = !no_ant;
    if (!region.empty()) spec.region = Box{{region[0], region[1]}, {region[2], region[3]}};
    const bool svg = format.empty() ? path.size() >= 4 && path.substr(path.size() - 4) == ".svg" : format == "svg";
    spec.format = svg ? ImageFormat::Svg : ImageFormat::Pgm;
    save_render(path, w, c, spec);
  }
};

struct ExperimentOptions {
  std::string rule;
  std::uint64_t runs = 1000;
  std::uint64_t steps = 100'000;
  std::string shape = "square:11";
  std::uint64_t seed = 1;
  std::size_t max_period = 2048;
  unsigned workers = 0;

  void add(CLI::App* cmd, std::size_t default_max_period) {
    max_period = default_max_period;
    cmd->add_option("rule", rule, "Rule word")->required();
    cmd->add_option("--runs", runs, "Number of random starts")->capture_default_str();
    cmd->add_option("--steps", steps, "Steps per run")->capture_default_str();
    cmd->add_option("--shape", shape, "square:S or cross:S")->capture_default_str();
    cmd->add_option("--seed", seed, "64-bit experiment seed")->capture_default_str();
    cmd->add_option("--max-period", max_period, "Longest period searched")->capture_default_str();
    cmd->add_option("--workers", workers, "Worker threads (default: ANTLAB_WORKERS or all cores)");
  }

  ExperimentSpec spec() const {
    ExperimentSpec s;
    s.rule = parse_rule(rule);
    s.runs = runs;
    s.steps_per_run = steps;
    try {
      s.shape = PatternShape::parse(shape);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    s.seed = seed;
    s.max_period = max_period;
    try {
      s.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return s;
  }
};

std::set<std::size_t> parse_periods(const std::vector<std::string>& items) {
  std::set<std::size_t> out;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(part, &used);
        if (used != part.size() || v == 0) throw std::invalid_argument(part);
        out.insert(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw UsageError("bad period '" + part + "'");
      }
    }
  }
  return out;
}

int cmd_simulate(const StartOptions& start, std::uint64_t steps, const std::string& out_path,
                 const RenderOptions& render) {
  AntpatDocument doc = start.load();
  RunResult r = run(doc.rule, std::move(doc.configuration), steps);
  const Configuration& c = r.configuration;
  if (!out_path.empty()) save_antpat(out_path, doc.rule, c);
  render.write(doc.rule, c);
  std::cout << "rule=" << doc.rule.to_string() << " steps=" << steps << " x=" << c.position.x
            << " y=" << c.position.y << " dir=" << direction_letter(c.direction)
            << " nonzero=" << c.picture.nonzero_count() << "\n";
  return 0;
}

int cmd_detect(const StartOptions& start, const DetectOptions& opts, const Output& out) {
  AntpatDocument doc = start.load();
  if (!doc.rule.nontrivial()) throw UsageError("detect needs a word with both L and R");
  const DetectionReport r = detect(doc.rule, std::move(doc.configuration), opts);
  std::ostream& log = out.log();
  if (!r.found()) {
    log << "outcome=no_highway steps_simulated=" << r.steps_simulated << "\n";
    return 0;
  }
  log << "outcome=highway period=" << r.period << " drift=" << drift_text(r.drift)
      << " preperiod_bound=" << r.preperiod_bound << " detected_at=" << r.detected_at
      << " steps_simulated=" << r.steps_simulated << "\n";
  Catalog cat;
  Provenance p;
  p.steps_to_detect = r.detected_at;
  cat.add(*r.highway, p);
  out.write(catalog_to_json(cat.records()));
  return 0;
}

int cmd_census(const ExperimentOptions& eo, const std::string& resume, const std::string& checkpoint,
               const std::string& csv, const Output& out) {
  CensusOptions opts;
  opts.workers = eo.workers;
  if (!checkpoint.empty()) opts.checkpoint = checkpoint;
  CensusReport r = resume.empty() ? run_census(eo.spec(), opts) : resume_census(resume, opts);
  std::ostream& log = out.log();
  log << "rule=" << r.spec.rule.to_string() << " runs=" << r.total_runs << " highway_runs=" << r.highway_runs()
      << " highway_fraction=" << r.highway_fraction() << " seconds=" << r.wall_clock_seconds << "\n";
  for (const auto& [p, n] : r.period_counts) {
    log << "period=" << p << " count=" << n << " share=" << r.period_share(p) << "\n";
  }
  if (!csv.empty()) {
    std::ofstream f(csv, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + csv);
    f << census_to_csv(r);
  }
  out.write(census_to_json(r));
  return 0;
}

int cmd_mine(const ExperimentOptions& eo, const std::vector<std::string>& periods, std::size_t enough,
             const Output& out) {
  const ExperimentSpec spec = eo.spec();
  const std::set<std::size_t> wanted = parse_periods(periods);
  MineOptions opts;
  opts.workers = eo.workers;
  if (enough > 0) {
    opts.enough = [enough](const std::vector<MinedHighway>& found) {
      std::set<std::size_t> distinct;
      for (const auto& m : found) distinct.insert(m.highway.period);
      return distinct.size() >= enough;
    };
  }
  const MineResult r = mine(
      spec, [&](const Highway& h) { return wanted.empty() || wanted.count(h.period) != 0; }, opts);
  std::ostream& log = out.log();
  Catalog cat;
  for (const MinedHighway& m : r.highways) {
    log << "period=" << m.highway.period << " drift=" << drift_text(m.highway.drift)
        << " run_index=" << m.run_index << " steps_to_detect=" << m.steps_to_detect << "\n";
    cat.add(m.highway, Provenance{m.seed, m.run_index, m.steps_to_detect});
  }
  log << "runs=" << r.runs_done << " highways=" << r.highways.size() << "\n";
  out.write(catalog_to_json(cat.records()));
  return 0;
}

int cmd_construct(const std::string& family, int k, const std::string& variant, std::size_t n,
                  const Output& out) {
  std::vector<Highway> built;
  if (family == "l2kr") {
    if (k < 1) throw UsageError("--k is required and must be at least 1");
    if (variant == "fundamental" || variant == "all") built.push_back(fundamental_highway(k));
    if (variant == "harmonic" || variant == "all") {
      for (Highway& h : harmonic_highways(k)) built.push_back(std::move(h));
    }
    if (variant != "fundamental" && variant != "harmonic" && variant != "all") {
      int i = 0;
      try {
        i = std::stoi(variant);
      } catch (const std::exception&) {
        throw UsageError("--variant must be fundamental, harmonic, all or an index 1..k-1");
      }
      if (i == k) {
        built.push_back(fundamental_highway(k));
      } else if (i >= 1 && i < k) {
        built.push_back(harmonic_highways(k).at(static_cast<std::size_t>(i - 1)));
      } else {
        throw UsageError("variant index must lie in 1..k");
      }
    }
  } else if (family == "l2k1r") {
    if (k < 1) throw UsageError("--k is required and must be at least 1");
    built.push_back(l2k1r_highway(k));
  } else if (family == "llrlrl") {
    built.push_back(llrlrl_highway(n));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }

  std::vector<CatalogRecord> records;
  for (const Highway& h : built) {
    out.log() << "rule=" << h.rule.to_string() << " period=" << h.period << " drift=" << drift_text(h.drift)
              << " cells=" << h.pattern.size() << "\n";
    records.push_back({h, Provenance{}});
  }
  out.write(catalog_to_json(records));
  return 0;
}

int cmd_verify(const std::string& path) {
  const std::vector<CatalogRecord> records = load_catalog(path);
  int status = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Highway& h = records[i].highway;
    const Verdict v = verify_highway(h);
    std::cout << "record=" << i << " rule=" << h.rule.to_string() << " period=" << h.period
              << " drift=" << drift_text(h.drift) << " verdict=" << (v ? "accept" : "reject") << "\n";
    if (!v) {
      std::cerr << "record " << i << ": " << to_string(v.clause) << ": " << v.reason << "\n";
      status = 1;
    }
  }
  return status;
}

int cmd_recover(std::uint64_t runs, std::uint64_t seed, unsigned workers, const std::string& dir) {
  RecoveryOptions opts;
  opts.spec.runs = runs;
  opts.spec.seed = seed;
  opts.workers = workers;
  const RecoveryReport r = recover_widgets(opts);
  const StageBudgets& b = r.widgets.budgets;
  std::cout << "runs_mined=" << r.runs_mined << " shorter_run=" << r.shorter_run << " longer_run=" << r.longer_run
            << " families=" << r.families << "\n";
  std::cout << "M1=" << b.main1 << " L1=" << b.link1 << " B1=" << b.bounce1 << " L2=" << b.link2
            << " M2=" << b.main2 << " L3=" << b.link3 << " B2=" << b.bounce2 << " L4=" << b.link4 << "\n";
  const bool same = r.widgets == llrlrl_widgets();
  std::cout << "matches_fixtures=" << (same ? "yes" : "no") << "\n";
  if (!dir.empty()) save_widgets(r.widgets, dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised Langton's ant toolkit"};
  app.require_subcommand(1);

  StartOptions sim_start;
  std::uint64_t sim_steps = 0;
  std::string sim_out;
  RenderOptions sim_render;
  auto* sim = app.add_subcommand("simulate", "Run N steps and write the final configuration");
  sim_start.add(sim);
  sim->add_option("--steps", sim_steps, "Number of steps")->required();
  sim->add_option("--out", sim_out, "Write the final configuration as antpat");
  sim_render.add(sim);

  StartOptions det_start;
  DetectOptions det_opts;
  Output det_out;
  auto* det = app.add_subcommand("detect", "Simulate until a highway is found and verified");
  det_start.add(det);
  det->add_option("--max-steps", det_opts.max_steps, "Step budget")->capture_default_str();
  det->add_option("--max-period", det_opts.max_period, "Longest period searched")->capture_default_str();
  det->add_option("--out", det_out.path, "Catalog JSON for the found highway (- for stdout)")->capture_default_str();

  ExperimentOptions cen_opts;
  std::string cen_resume, cen_checkpoint, cen_csv;
  Output cen_out;
  auto* cen = app.add_subcommand("census", "Classify random starts by highway period");
  cen_opts.add(cen, 2048);
  cen->add_option("--checkpoint", cen_checkpoint, "Write a checkpoint between batches");
  cen->add_option("--resume", cen_resume, "Continue the census stored in a checkpoint");
  cen->add_option("--csv", cen_csv, "Write period,count,frequency CSV");
  cen->add_option("--out", cen_out.path, "Census report JSON (- for stdout)")->capture_default_str();

  ExperimentOptions mine_opts;
  std::vector<std::string> mine_periods;
  std::size_t mine_enough = 0;
  Output mine_out;
  auto* mn = app.add_subcommand("mine", "Collect distinct verified highways from random starts");
  mine_opts.add(mn, 16384);
  mn->add_option("--period", mine_periods, "Keep only these periods (comma separated)");
  mn->add_option("--until-distinct", mine_enough, "Stop once this many distinct periods are found");
  mn->add_option("--out", mine_out.path, "Catalog JSON (- for stdout)")->capture_default_str();

  std::string con_family;
  int con_k = 0;
  std::string con_variant = "fundamental";
  std::size_t con_n = 0;
  Output con_out;
  auto* con = app.add_subcommand("construct", "Build a highway from an explicit construction");
  con->add_option("--family", con_family, "l2kr, l2k1r or llrlrl")
      ->required()
      ->check(CLI::IsMember({"l2kr", "l2k1r", "llrlrl"}));
  con->add_option("--k", con_k, "Family parameter k");
  con->add_option("--variant", con_variant, "l2kr: fundamental, harmonic, all or index i")->capture_default_str();
  con->add_option("--n", con_n, "llrlrl: number of link widgets")->capture_default_str();
  con->add_option("--out", con_out.path, "Catalog JSON (- for stdout)")->capture_default_str();

  std::string ver_path;
  auto* ver = app.add_subcommand("verify", "Check every highway of a catalog file");
  ver->add_option("catalog", ver_path, "Catalog JSON")->required();

  std::uint64_t rec_runs = 10'000, rec_seed = 1;
  unsigned rec_workers = 0;
  std::string rec_dir;
  auto* rec = app.add_subcommand("recover-widgets", "Rebuild the LLRLRL widgets from mined highways");
  rec->add_option("--runs", rec_runs, "Mining budget")->capture_default_str();
  rec->add_option("--seed", rec_seed, "Mining seed")->capture_default_str();
  rec->add_option("--workers", rec_workers, "Worker threads");
  rec->add_option("--out-dir", rec_dir, "Write fixture files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sim) return cmd_simulate(sim_start, sim_steps, sim_out, sim_render);
    if (*det) return cmd_detect(det_start, det_opts, det_out);
    if (*cen) return cmd_census(cen_opts, cen_resume, cen_checkpoint, cen_csv, cen_out);
    if (*mn) return cmd_mine(mine_opts, mine_periods, mine_enough, mine_out);
    if (*con) return cmd_construct(con_family, con_k, con_variant, con_n, con_out);
    if (*ver) return cmd_verify(ver_path);
    if (*rec) return cmd_recover(rec_runs, rec_seed, rec_workers, rec_dir);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
