#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "antlab/highway.hpp"
#include "antlab/pattern.hpp"

namespace antlab {

// Explicit highway families of the L^{2k}R ants.
//
// Coordinates: x grows east, y grows north. The elementary cycle puts the ant on the
// lower-left cell of a 2x2 block facing south; the almost-highway and highway patterns
// are cut from l2kr_picture(k, i, 0), with the ant on the origin facing north.

/// P and P' of an elementary cycle: P is a at (0,0) under the ant, b at (1,0), c at
/// (1,1), d at (0,1); P' has a replaced by 2k and b, c, d raised by 2k-a. The ant faces
/// south on (0,0) in both.
struct ElementaryCycle {
  PatternState before;
  PatternState after;
  std::uint64_t steps = 0;  // 4(2k - a)
};

/// Requires k >= 1 and 2k >= a >= b, c, d >= 0.
ElementaryCycle elementary_cycle_pattern(int k, int a, int b, int c, int d);

/// (a)(b)(c)(d) (a+1)(b+1)(c+1)(d+1) ... for 2k-a rounds.
Trace cycle_trace(int k, int a, int b, int c, int d);

struct AlmostHighway {
  PatternState before;  // P_i, ant on (0,0) facing north
  PatternState after;   // P'_{2k-i}: same support, ant on (-1,1) facing north
  std::uint64_t steps = 0;  // 24k - 8i + 2
  Trace trace;              // t_{k,i}
};

/// Support of the almost highway: the box [-1,2] x [-1,1].
Box almost_highway_box();

AlmostHighway almost_highway(int k, int i);

/// t_{k,i} assembled from cycle words.
Trace almost_highway_trace(int k, int i);

/// The picture C^n_{k,i} with the ant on (-n, n) facing north.
Configuration l2kr_picture(int k, int i, int n);

/// Period 16k+2, drift (-1,1), cut from C^0_{k,k} on the almost-highway box.
Highway fundamental_highway(int k);

/// The k-1 highways of period 32k+4 and drift (-2,2) built from C^0_{k,i}, 0 < i < k,
/// in order of i.
std::vector<Highway> harmonic_highways(int k);

/// Support of a harmonic highway: the box [-2,2] x [-1,2].
Box harmonic_box();

/// i+1 . i-1 . i . 0, the factor that occurs in t_{k,i} and in no other variant's cycle.
Trace harmonic_witness(int i);

/// Cells left behind by a highway after `periods` periods on a 0 background: every nonzero
/// cell outside the support it occupies at the end, grouped by symbol.
std::map<int, std::vector<Cell>> wake(const Highway& h, std::size_t periods);

/// True iff `cells` is a contiguous run along the anti-diagonal x + y = const (or the main
/// diagonal x - y = const, when `anti` is false).
bool is_diagonal_run(const std::vector<Cell>& cells, bool anti);

/// A verified highway of period 32k+20 for L^{2k+1}R, mined from random 11x11 starts
/// (seed `seed`, at most `budget` runs). Throws MiningBudgetError.
Highway l2k1r_highway(int k, std::uint64_t seed = 1, std::uint64_t budget = 2000);

}  // namespace antlab
