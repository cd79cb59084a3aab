#ifndef HYPWAVE_REPORT_HPP
#define HYPWAVE_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hypwave/packets.hpp"
#include "hypwave/residual.hpp"
#include "hypwave/scenario.hpp"

namespace hypwave {

enum class OutputFormat { Json, Csv };

/// Shortest decimal string that parses back to the same double (at most 17
/// significant digits). Non-finite values are written as nan/inf/-inf.
std::string format_number(double v);

/// {"re":..,"im":..} or a two-line "re,im" CSV with header.
std::string format_complex(cplx v, OutputFormat fmt);

/// Scenario as a JSON object whose keys are exactly the ones
/// parse_scenario_json accepts, in a fixed order.
std::string scenario_json(const ScenarioConfig& cfg);

/// Overlays the keys of a JSON object onto `defaults`. Unknown keys, wrong
/// types and malformed JSON raise UsageError.
ScenarioConfig parse_scenario_json(std::string_view text, ScenarioConfig defaults = {});

/// {"scenario": {...}, "report": {max_abs, max_rel, worst_point{x,t},
/// order_estimate, points_evaluated, skipped}}, pretty-printed with a
/// trailing newline. order_estimate is a number, "exact_within_noise", or
/// null when no estimate was requested.
std::string residual_json(const ScenarioConfig& cfg, const ResidualReport& report);

/// Header row plus one data row.
std::string residual_csv(const ScenarioConfig& cfg, const ResidualReport& report);

std::string selftest_json(const SelftestSummary& summary);

/// One PASS/FAIL line per pair and per negative control.
std::string selftest_text(const SelftestSummary& summary);

/// Closed-form coefficients at one time, optionally with the RK4 oracle.
struct PacketRow {
  double t = 0.0;
  CoeffTriple closed;
  bool has_oracle = false;
  CoeffTriple rk4;
  ComponentGap gap;
};

/// RK4 rows start from the closed form at t = 0 and integrate to each t.
std::vector<PacketRow> packet_table(const PacketKind& kind, const PacketConstants& k, const std::vector<double>& ts,
                                    bool oracle, int steps);

std::string packet_table_json(const PacketKind& kind, const PacketConstants& k, const std::vector<PacketRow>& rows);
std::string packet_table_csv(const std::vector<PacketRow>& rows);

struct LimitRow {
  double q = 0.0;
  ComponentGap gap;
};

struct LimitTable {
  double t = 0.0;
  std::vector<LimitRow> rows;  // sorted by decreasing |q - 1|
  bool monotone_decreasing = true;
};

/// Throws DomainError when any q is classical.
LimitTable limit_table(double t, const PacketConstants& k, const std::vector<double>& qs);

std::string limit_table_json(const PacketConstants& k, const LimitTable& table);
std::string limit_table_csv(const LimitTable& table);

}  // namespace hypwave

#endif  // HYPWAVE_REPORT_HPP
