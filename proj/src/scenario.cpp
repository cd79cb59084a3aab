#include "hypwave/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hypwave/packets.hpp"
#include "hypwave/waves.hpp"

namespace hypwave {

namespace {

constexpr std::string_view kEquations[] = {"se_free", "kg",         "nlse_hpg",  "nrt",
                                           "nlkg",    "kummer_ode", "gauss_ode", "u_ode"};
constexpr std::string_view kFields[] = {"plane_wave",       "rel_plane_wave",  "q_plane_wave",
                                        "q_rel_plane_wave", "gaussian_packet", "qgaussian_packet",
                                        "kummer_m",         "gauss_2f1",       "u_kummer"};

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("grid: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

int parse_count(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw UsageError("grid: bad point count '" + std::string(text) + "'");
  }
  return value;
}

struct Axis3 {
  double lo;
  double hi;
  int n;
};

Axis3 parse_axis(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
    throw UsageError("grid: expected min:max:count, got '" + std::string(text) + "'");
  }
  return {parse_double(text.substr(0, c1), "min"), parse_double(text.substr(c1 + 1, c2 - c1 - 1), "max"),
          parse_count(text.substr(c2 + 1))};
}

ScenarioConfig base(std::string equation, std::string field) {
  ScenarioConfig cfg;
  cfg.equation = std::move(equation);
  cfg.field = std::move(field);
  return cfg;
}

}  // namespace

std::vector<std::string_view> equation_keys() { return {std::begin(kEquations), std::end(kEquations)}; }

std::vector<std::string_view> field_keys() { return {std::begin(kFields), std::end(kFields)}; }

Equation make_equation(const ScenarioConfig& cfg) {
  const std::string_view key = cfg.equation;
  const QDeformation q(cfg.q);
  Equation eq;
  if (key == "se_free") {
    eq = eqn::SeFree{cfg.hbar, cfg.m};
  } else if (key == "kg") {
    eq = eqn::KleinGordon{cfg.hbar, cfg.m, cfg.c};
  } else if (key == "nlse_hpg") {
    eq = eqn::NlseHpg{cfg.hbar, cfg.m, q};
  } else if (key == "nrt") {
    eq = eqn::Nrt{cfg.hbar, cfg.m, q};
  } else if (key == "nlkg") {
    eq = eqn::Nlkg{cfg.hbar, cfg.m, cfg.c, q};
  } else if (key == "kummer_ode") {
    eq = eqn::KummerOde{cfg.hyp_a, cfg.hyp_b};
  } else if (key == "gauss_ode") {
    eq = eqn::GaussOde{cfg.hyp_a, cfg.hyp_b, cfg.hyp_c};
  } else if (key == "u_ode") {
    eq = eqn::UOde{cfg.hyp_a, cfg.hyp_b};
  } else {
    throw UsageError("unknown equation '" + cfg.equation + "'");
  }
  validate(eq);
  return eq;
}

Field make_field(const ScenarioConfig& cfg) {
  const std::string& key = cfg.field;
  const double scale = 1.0 + cfg.detune;
  const QDeformation q(cfg.q);

  if (key == "plane_wave" || key == "q_plane_wave") {
    NonRelParams prm = NonRelParams::make(cfg.hbar, cfg.m, cfg.p);
    prm.E *= scale;
    if (key == "plane_wave") return {key, [prm](double x, double t) { return plane_wave(x, t, prm); }};
    const Amplitude amp({cfg.amp_re, cfg.amp_im});
    return {key, [prm, q, amp](double x, double t) { return q_plane_wave(x, t, prm, q, amp); }};
  }
  if (key == "rel_plane_wave" || key == "q_rel_plane_wave") {
    RelParams prm = RelParams::make(cfg.hbar, cfg.m, cfg.c, cfg.k);
    prm.omega *= scale;
    if (key == "rel_plane_wave") return {key, [prm](double x, double t) { return rel_plane_wave(x, t, prm); }};
    const Amplitude amp({cfg.amp_re, cfg.amp_im});
    return {key, [prm, q, amp](double x, double t) { return q_rel_plane_wave(x, t, prm, q, amp); }};
  }
  if (key == "gaussian_packet" || key == "qgaussian_packet") {
    const PacketConstants constants = PacketConstants::make(cfg.alpha, cfg.beta, cfg.m, cfg.hbar * scale);
    const PacketKind kind = key == "gaussian_packet" ? PacketKind::classical() : PacketKind::q_deformed(q);
    return {key,
            [constants, kind](double x, double t) { return packet_value(x, packet_coeffs(t, constants, kind), kind); }};
  }
  if (key == "kummer_m") {
    const cplx a = cfg.hyp_a * scale, b = cfg.hyp_b;
    if (is_nonpositive_integer(b)) throw PoleError("kummer_m field: b is a nonpositive integer");
    return {key, [a, b](double x, double t) { return kummer_m(a, b, {x, t}); }};
  }
  if (key == "gauss_2f1") {
    const cplx alpha = cfg.hyp_a * scale, beta = cfg.hyp_b, gamma = cfg.hyp_c;
    if (is_nonpositive_integer(gamma)) throw PoleError("gauss_2f1 field: gamma is a nonpositive integer");
    return {key, [alpha, beta, gamma](double x, double t) { return gauss_2f1(alpha, beta, gamma, {x, t}); }};
  }
  if (key == "u_kummer") {
    const cplx a = cfg.hyp_a * scale, b = cfg.hyp_b;
    if (is_nonpositive_integer(b)) throw PoleError("u_kummer field: b is a nonpositive integer");
    return {key, [a, b](double x, double t) {
              const cplx z(x, t);
              return principal_pow(z, b / 2.0) * std::exp(-z) * kummer_m(a, b, z);
            }};
  }
  throw UsageError("unknown field '" + key + "'");
}

GridSpec parse_grid(std::string_view text, GridSpec into) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("grid: expected two comma-separated axes");
  const Axis3 xs = parse_axis(text.substr(0, comma));
  const Axis3 ts = parse_axis(text.substr(comma + 1));
  into.x_min = xs.lo;
  into.x_max = xs.hi;
  into.nx = xs.n;
  into.t_min = ts.lo;
  into.t_max = ts.hi;
  into.nt = ts.n;
  try {
    into.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return into;
}

ResidualReport run_scenario(const ScenarioConfig& cfg) {
  const Equation eq = make_equation(cfg);
  const Field f = make_field(cfg);
  return residual_scan(eq, f, cfg.grid, ScanOptions{cfg.levels});
}

std::vector<CertificationCase> certification_matrix() {
  std::vector<CertificationCase> cases;

  cases.push_back({"se_free/plane_wave", base("se_free", "plane_wave")});
  cases.push_back({"kg/rel_plane_wave", base("kg", "rel_plane_wave")});

  ScenarioConfig nlse = base("nlse_hpg", "q_plane_wave");
  nlse.q = 1.5;
  cases.push_back({"nlse_hpg/q_plane_wave", nlse});

  ScenarioConfig packet = base("nlse_hpg", "qgaussian_packet");
  packet.q = 2.0;
  packet.grid.x_min = -0.5;
  packet.grid.x_max = 0.5;
  packet.grid.t_min = 0.1;
  packet.grid.t_max = 0.5;
  cases.push_back({"nlse_hpg/qgaussian_packet", packet});

  ScenarioConfig nrt = base("nrt", "q_plane_wave");
  nrt.q = 1.5;
  cases.push_back({"nrt/q_plane_wave", nrt});

  ScenarioConfig nlkg = base("nlkg", "q_rel_plane_wave");
  nlkg.q = 1.5;
  cases.push_back({"nlkg/q_rel_plane_wave", nlkg});

  ScenarioConfig kummer = base("kummer_ode", "kummer_m");
  kummer.hyp_a = 1.0;
  kummer.hyp_b = 2.0;
  kummer.grid.x_min = -2.0;
  kummer.grid.x_max = 2.0;
  kummer.grid.t_min = -1.0;
  kummer.grid.t_max = 1.0;
  cases.push_back({"kummer_ode/kummer_m", kummer});

  // F(1/(q-1), gamma; gamma; z) at q = 1.5.
  ScenarioConfig gauss = base("gauss_ode", "gauss_2f1");
  gauss.hyp_a = 2.0;
  gauss.hyp_b = 2.5;
  gauss.hyp_c = 2.5;
  gauss.grid.x_min = -0.5;
  gauss.grid.x_max = 0.5;
  gauss.grid.t_min = -0.5;
  gauss.grid.t_max = 0.5;
  cases.push_back({"gauss_ode/gauss_2f1", gauss});

  ScenarioConfig u = base("u_ode", "u_kummer");
  u.hyp_a = 0.7;
  u.hyp_b = 1.6;
  u.grid.x_min = 0.5;
  u.grid.x_max = 2.5;
  u.grid.t_min = -0.5;
  u.grid.t_max = 0.5;
  cases.push_back({"u_ode/u_kummer", u});

  return cases;
}

CaseOutcome certify(const CertificationCase& c) {
  CaseOutcome out{c, run_scenario(c.config), false};
  out.pass = out.report.max_rel <= c.config.tol && out.report.order && out.report.order->certifies(kMinCertifiedOrder);
  return out;
}

CaseOutcome negative_control(const CertificationCase& c) {
  CertificationCase detuned = c;
  detuned.config.detune = kNegativeControlDetune;
  detuned.config.levels = 0;
  CaseOutcome out{detuned, run_scenario(detuned.config), false};
  out.pass = out.report.max_rel > kNegativeControlThreshold;
  return out;
}

bool SelftestSummary::all_pass() const {
  auto ok = [](const CaseOutcome& o) { return o.pass; };
  return std::ranges::all_of(pairs, ok) && std::ranges::all_of(controls, ok);
}

SelftestSummary run_selftest() {
  SelftestSummary summary;
  for (const CertificationCase& c : certification_matrix()) {
    summary.pairs.push_back(certify(c));
    summary.controls.push_back(negative_control(c));
  }
  return summary;
}

}  // namespace hypwave
