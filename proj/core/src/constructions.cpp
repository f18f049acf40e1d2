#include "antlab/constructions.hpp"

#include <algorithm>
#include <string>

#include "antlab/errors.hpp"
#include "antlab/montecarlo.hpp"

namespace antlab {

namespace {

RuleWord l2kr_word(int k) { return RuleWord::left_power_right(static_cast<std::size_t>(2 * k)); }

void require_k(int k) {
  if (k < 1 || 2 * k + 1 > static_cast<int>(RuleWord::kMaxLength)) {
    throw DomainError("k must satisfy 1 <= k and 2k+1 <= " + std::to_string(RuleWord::kMaxLength));
  }
}

void require_variant(int k, int i) {
  require_k(k);
  if (i <= 0 || i >= 2 * k) throw DomainError("variant index i must satisfy 0 < i < 2k");
}

void append(Trace& out, const Trace& part) { out.insert(out.end(), part.begin(), part.end()); }

Highway checked(Highway h, const char* what) {
  if (Verdict v = verify_highway(h); !v) {
    throw ConstructionError(std::string(what) + " does not verify: " + v.reason);
  }
  return h;
}

}  // namespace

ElementaryCycle elementary_cycle_pattern(int k, int a, int b, int c, int d) {
  require_k(k);
  if (!(2 * k >= a && a >= b && a >= c && a >= d && b >= 0 && c >= 0 && d >= 0)) {
    throw DomainError("elementary cycle needs 2k >= a >= b, c, d >= 0");
  }
  const int rounds = 2 * k - a;
  auto make = [](int s0, int s1, int s2, int s3) {
    Pattern::Map m{{{0, 0}, static_cast<std::uint8_t>(s0)},
                   {{1, 0}, static_cast<std::uint8_t>(s1)},
                   {{1, 1}, static_cast<std::uint8_t>(s2)},
                   {{0, 1}, static_cast<std::uint8_t>(s3)}};
    return PatternState{Pattern(std::move(m)), {0, 0}, Direction::South};
  };
  return {make(a, b, c, d), make(2 * k, b + rounds, c + rounds, d + rounds),
          static_cast<std::uint64_t>(4 * rounds)};
}

Trace cycle_trace(int k, int a, int b, int c, int d) {
  require_k(k);
  if (!(2 * k >= a && a >= b && a >= c && a >= d && b >= 0 && c >= 0 && d >= 0)) {
    throw DomainError("cycle word needs 2k >= a >= b, c, d >= 0");
  }
  Trace t;
  t.reserve(static_cast<std::size_t>(4 * (2 * k - a)));
  for (int j = 0; j < 2 * k - a; ++j) {
    for (int s : {a, b, c, d}) t.push_back(static_cast<std::uint8_t>(s + j));
  }
  return t;
}

Box almost_highway_box() { return {{-1, -1}, {2, 1}}; }
Box harmonic_box() { return {{-2, -1}, {2, 2}}; }

Trace almost_highway_trace(int k, int i) {
  require_variant(k, i);
  const auto top = static_cast<std::uint8_t>(2 * k);
  Trace t = cycle_trace(k, 0, 0, 0, 0);
  t.push_back(top);
  append(t, cycle_trace(k, i, 0, 0, 0));
  t.push_back(top);
  append(t, cycle_trace(k, i + 1, i - 1, i, 0));
  for (int s : {2 * k, 2 * k, 2 * k - i, 2 * k}) t.push_back(static_cast<std::uint8_t>(s));
  return t;
}

Configuration l2kr_picture(int k, int i, int n) {
  require_variant(k, i);
  if (n < 0) throw DomainError("n must be non-negative");
  Configuration c;
  auto put = [&](std::int64_t x, std::int64_t y, int s) {
    c.picture.set({x, y}, static_cast<std::uint8_t>(s));
  };
  put(1 - n, n, i);
  put(2 - n, n, i);
  put(1 - n, n - 1, i + 1);
  put(2 - n, n - 1, i - 1);
  for (std::int64_t x = -n; x <= -1; ++x) put(x, -x - 2, 2 * k);
  for (std::int64_t x = 2; x <= n + 1; ++x) {
    put(x, -x + 2, 2 * k - 1);
    put(x, -x + 1, 2 * k - 2);
  }
  c.position = {-n, n};
  c.direction = Direction::North;
  return c;
}

AlmostHighway almost_highway(int k, int i) {
  require_variant(k, i);
  const Box box = almost_highway_box();
  AlmostHighway out;
  out.before = {Pattern::from_box(l2kr_picture(k, i, 0).picture, box), {0, 0}, Direction::North};
  out.after = {Pattern::from_box(l2kr_picture(k, 2 * k - i, 1).picture, box), {-1, 1}, Direction::North};
  out.steps = static_cast<std::uint64_t>(24 * k - 8 * i + 2);
  out.trace = almost_highway_trace(k, i);
  return out;
}

Highway fundamental_highway(int k) {
  require_k(k);
  Highway h;
  h.rule = l2kr_word(k);
  h.pattern = Pattern::from_box(l2kr_picture(k, k, 0).picture, almost_highway_box());
  h.position = {0, 0};
  h.direction = Direction::North;
  h.period = static_cast<std::size_t>(16 * k + 2);
  h.drift = {-1, 1};
  h.trace_cycle = almost_highway_trace(k, k);
  return checked(std::move(h), "fundamental highway");
}

std::vector<Highway> harmonic_highways(int k) {
  require_k(k);
  std::vector<Highway> out;
  for (int i = 1; i < k; ++i) {
    Highway h;
    h.rule = l2kr_word(k);
    h.pattern = Pattern::from_box(l2kr_picture(k, i, 0).picture, harmonic_box());
    h.position = {0, 0};
    h.direction = Direction::North;
    h.period = static_cast<std::size_t>(32 * k + 4);
    h.drift = {-2, 2};
    h.trace_cycle = almost_highway_trace(k, i);
    append(h.trace_cycle, almost_highway_trace(k, 2 * k - i));
    out.push_back(checked(std::move(h), "harmonic highway"));
  }
  return out;
}

Trace harmonic_witness(int i) {
  if (i < 1) throw DomainError("witness needs i >= 1");
  return {static_cast<std::uint8_t>(i + 1), static_cast<std::uint8_t>(i - 1),
          static_cast<std::uint8_t>(i), 0};
}

std::map<int, std::vector<Cell>> wake(const Highway& h, std::size_t periods) {
  Simulator sim(h.rule, h.configuration());
  sim.run(static_cast<std::uint64_t>(h.period) * periods);
  const Cell shift{h.drift.x * static_cast<std::int64_t>(periods),
                   h.drift.y * static_cast<std::int64_t>(periods)};
  std::map<int, std::vector<Cell>> out;
  sim.picture().for_each_nonzero([&](Cell c, std::uint8_t s) {
    if (!h.pattern.contains(c - shift)) out[s].push_back(c);
  });
  for (auto& [s, cells] : out) std::sort(cells.begin(), cells.end());
  return out;
}

bool is_diagonal_run(const std::vector<Cell>& cells, bool anti) {
  if (cells.empty()) return false;
  std::vector<std::int64_t> xs;
  const std::int64_t key = anti ? cells.front().x + cells.front().y : cells.front().x - cells.front().y;
  for (const Cell& c : cells) {
    if ((anti ? c.x + c.y : c.x - c.y) != key) return false;
    xs.push_back(c.x);
  }
  std::sort(xs.begin(), xs.end());
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (xs[j] != xs[j - 1] + 1) return false;
  }
  return true;
}

Highway l2k1r_highway(int k, std::uint64_t seed, std::uint64_t budget) {
  require_k(k);
  if (2 * k + 2 > static_cast<int>(RuleWord::kMaxLength)) throw DomainError("k too large");
  ExperimentSpec spec;
  spec.rule = RuleWord::left_power_right(static_cast<std::size_t>(2 * k + 1));
  spec.runs = budget;
  spec.seed = seed;
  const auto period = static_cast<std::size_t>(32 * k + 20);
  MineOptions opts;
  opts.batch_size = 64;
  opts.enough = [](const std::vector<MinedHighway>& found) { return !found.empty(); };
  MineResult r = mine(spec, [&](const Highway& h) { return h.period == period; }, opts);
  if (r.highways.empty()) {
    throw MiningBudgetError("no period-" + std::to_string(period) + " highway for " + spec.rule.to_string() +
                            " in " + std::to_string(budget) + " runs");
  }
  return checked(r.highways.front().highway, "mined highway");
}

}  // namespace antlab
