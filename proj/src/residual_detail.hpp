#ifndef HYPWAVE_SRC_RESIDUAL_DETAIL_HPP
#define HYPWAVE_SRC_RESIDUAL_DETAIL_HPP

#include <cmath>
#include <vector>

#include "hypwave/residual.hpp"

namespace hypwave::detail {

/// Aggregate over one grid at one pair of probe steps.
struct LevelStats {
  double max_abs = 0.0;
  double max_rel = 0.0;
  double worst_x = 0.0;
  double worst_t = 0.0;
  long points = 0;
  long skipped = 0;
};

inline double relative_residual(const ResidualSample& s) {
  const double mag = std::abs(s.residual);
  if (s.normalizer > 0.0) return mag / s.normalizer;
  return mag == 0.0 ? 0.0 : INFINITY;
}

OrderEstimate order_from_levels(const std::vector<double>& steps, const std::vector<LevelStats>& levels);

/// Runs level_scan on the configured grid and, when requested, on the grid
/// with coarsened steps for the order estimate.
template <typename LevelScan>
ResidualReport scan_with_levels(const Equation& eq, const Field& f, const GridSpec& grid, const ScanOptions& opts,
                                LevelScan&& level_scan) {
  grid.validate();
  validate(eq);
  const LevelStats finest = level_scan(grid);

  ResidualReport report;
  report.equation = std::string(equation_name(eq));
  report.field = f.label;
  report.max_abs = finest.max_abs;
  report.max_rel = finest.max_rel;
  report.worst_x = finest.worst_x;
  report.worst_t = finest.worst_t;
  report.points_evaluated = finest.points;
  report.skipped = finest.skipped;

  if (opts.order_levels >= 2) {
    std::vector<double> steps;
    std::vector<LevelStats> stats;
    for (int level = opts.order_levels - 1; level >= 1; --level) {
      GridSpec coarse = grid;
      const double scale = std::ldexp(1.0, level);
      coarse.h_x *= scale;
      coarse.h_t *= scale;
      steps.push_back(scale);
      stats.push_back(level_scan(coarse));
    }
    steps.push_back(1.0);
    stats.push_back(finest);
    report.order = order_from_levels(steps, stats);
  }
  return report;
}

}  // namespace hypwave::detail

#endif  // HYPWAVE_SRC_RESIDUAL_DETAIL_HPP
