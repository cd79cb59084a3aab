#ifndef HYPWAVE_SCENARIO_HPP
#define HYPWAVE_SCENARIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hypwave/residual.hpp"

namespace hypwave {

/// Everything needed to reproduce one residual run. All constants default to
/// natural units (hbar = m = c = 1).
///
/// `detune` scales one field parameter by (1 + detune) so that the field no
/// longer solves its equation: E for non-relativistic waves, omega for
/// relativistic waves, hbar inside the packet coefficients, and the first
/// hypergeometric parameter for the z-plane fields.
struct ScenarioConfig {
  std::string equation = "se_free";
  std::string field = "plane_wave";
  double q = 1.0;
  double hbar = 1.0;
  double m = 1.0;
  double c = 1.0;
  double p = 1.0;
  double k = 1.0;
  double alpha = 1.0;  // packet width constant
  double beta = 1.0;   // packet slope constant
  double amp_re = 1.0;
  double amp_im = 0.0;
  double hyp_a = 1.0;  // Kummer a / Gauss alpha
  double hyp_b = 2.0;  // Kummer b / Gauss beta
  double hyp_c = 2.5;  // Gauss gamma
  GridSpec grid{};
  int levels = 3;
  double tol = 1e-4;
  double detune = 0.0;
};

std::vector<std::string_view> equation_keys();
std::vector<std::string_view> field_keys();

/// Throws UsageError for an unknown key and DomainError for constants out
/// of range.
Equation make_equation(const ScenarioConfig& cfg);
Field make_field(const ScenarioConfig& cfg);

/// Parses "xmin:xmax:nx,tmin:tmax:nt" into the extent of `into`, keeping its
/// probe steps. Throws UsageError on malformed input.
GridSpec parse_grid(std::string_view text, GridSpec into = {});

/// Runs the configured scan with the configured order levels.
ResidualReport run_scenario(const ScenarioConfig& cfg);

/// One (equation, field) pair the toolkit certifies, with its grid.
struct CertificationCase {
  std::string name;
  ScenarioConfig config;
};

/// The nine pairs: (se_free, plane_wave), (kg, rel_plane_wave),
/// (nlse_hpg, q_plane_wave), (nlse_hpg, qgaussian_packet),
/// (nrt, q_plane_wave), (nlkg, q_rel_plane_wave), (kummer_ode, kummer_m),
/// (gauss_ode, gauss_2f1), (u_ode, u_kummer).
std::vector<CertificationCase> certification_matrix();

inline constexpr double kMinCertifiedOrder = 1.8;
inline constexpr double kNegativeControlDetune = 0.1;
inline constexpr double kNegativeControlThreshold = 1e-2;

struct CaseOutcome {
  CertificationCase test_case;
  ResidualReport report;
  bool pass = false;
};

/// Pass iff max_rel <= tol and the order estimate is >= 1.8 or at the
/// noise floor.
CaseOutcome certify(const CertificationCase& c);

/// Same case with the field detuned by 10%; pass iff max_rel > 1e-2.
CaseOutcome negative_control(const CertificationCase& c);

struct SelftestSummary {
  std::vector<CaseOutcome> pairs;
  std::vector<CaseOutcome> controls;
  bool all_pass() const;
};

SelftestSummary run_selftest();

}  // namespace hypwave

#endif  // HYPWAVE_SCENARIO_HPP
