#include <cmath>

#include "hypwave/residual.hpp"
#include "residual_detail.hpp"

namespace hypwave {

namespace {

detail::LevelStats serial_level(const Equation& eq, const Field& f, const GridSpec& grid) {
  detail::LevelStats stats;
  for (int j = 0; j < grid.nt; ++j) {
    const double t = grid.t_at(j);
    for (int i = 0; i < grid.nx; ++i) {
      const double x = grid.x_at(i);
      ResidualSample s;
      try {
        s = equation_residual_at(eq, f, x, t, grid.h_x, grid.h_t);
      } catch (const BranchGuard&) {
        ++stats.skipped;
        continue;
      }
      const double rel = detail::relative_residual(s);
      stats.max_abs = std::max(stats.max_abs, std::abs(s.residual));
      if (stats.points == 0 || rel > stats.max_rel) {
        stats.max_rel = rel;
        stats.worst_x = x;
        stats.worst_t = t;
      }
      ++stats.points;
    }
  }
  if (stats.points == 0) throw EmptyGrid("every grid point was skipped by the branch guard");
  return stats;
}

}  // namespace

ResidualReport residual_scan_serial(const Equation& eq, const Field& f, const GridSpec& grid, const ScanOptions& opts) {
  return detail::scan_with_levels(eq, f, grid, opts, [&](const GridSpec& g) { return serial_level(eq, f, g); });
}

}  // namespace hypwave
