#pragma once

// A deliberately plain ant: std::map picture, headings as (dx, dy) pairs, turns written
// out as matrix rotations. Shares nothing with the engine beyond the Cell type.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace naive {

struct Ant {
  std::string rule;                         // letters L/R
  std::map<std::pair<long, long>, int> grid;  // absent = 0
  long x = 0, y = 0;
  long dx = 0, dy = 1;                      // facing north

  int read() const {
    auto it = grid.find({x, y});
    return it == grid.end() ? 0 : it->second;
  }

  int step() {
    const int s = read();
    const int next = (s + 1) % static_cast<int>(rule.size());
    if (next == 0) {
      grid.erase({x, y});
    } else {
      grid[{x, y}] = next;
    }
    long ndx, ndy;
    if (rule[s] == 'L') {
      ndx = -dy;
      ndy = dx;
    } else {
      ndx = dy;
      ndy = -dx;
    }
    dx = ndx;
    dy = ndy;
    x += dx;
    y += dy;
    return s;
  }

  std::vector<int> run(long n) {
    std::vector<int> t;
    for (long i = 0; i < n; ++i) t.push_back(step());
    return t;
  }
};

}  // namespace naive
