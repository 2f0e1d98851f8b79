#pragma once

// Admission read straight off its definition, for checking the graph-based
// reductions in the library.

#include <cstddef>
#include <vector>

#include <premet/space.hpp>

namespace oracle {

/// Alternating sequences x_1..x_n with x_1 labelled a, x_n labelled b and
/// n ≤ max_length (2|Y| when 0): odd steps move inside the ball of radius
/// reps[h[x_i]], even steps move to a point with the same label.
inline bool literal_admits(const premet::ContinuitySpace& s, const std::vector<std::size_t>& labels,
                           const std::vector<premet::Value>& reps, const std::vector<std::size_t>& h,
                           std::size_t a, std::size_t b, std::size_t max_length = 0) {
  const auto n = s.size();
  if (max_length == 0) max_length = 2 * n;
  std::vector<bool> cur(n);
  for (std::size_t x = 0; x < n; ++x) cur[x] = labels[x] == a;
  auto hits = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      if (cur[x] && labels[x] == b) return true;
    }
    return false;
  };
  if (hits()) return true;
  for (std::size_t i = 1; i < max_length; ++i) {
    std::vector<bool> next(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (!cur[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const bool step = i % 2 == 1 ? s.lattice().well_above(reps[h[x]], s.distance(x, y))
                                     : labels[x] == labels[y];
        if (step) next[y] = true;
      }
    }
    cur = next;
    if (hits()) return true;
  }
  return false;
}

}  // namespace oracle
