// Command-line front end: eval, residual, packet, limit, selftest.
//
// Exit codes: 0 success, 2 usage, 3 domain/numerical error, 4 tolerance
// exceeded (reports are still written).

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypwave/packets.hpp"
#include "hypwave/report.hpp"
#include "hypwave/scenario.hpp"
#include "hypwave/specfun.hpp"
#include "hypwave/waves.hpp"

namespace {

using namespace hypwave;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitTolerance = 4;

const std::map<std::string, OutputFormat> kFormats{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

double to_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a number: '" + std::string(s) + "'");
  return v;
}

// "re" or "re,im"
cplx to_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {to_double(s), 0.0};
  return {to_double(std::string_view(s).substr(0, comma)), to_double(std::string_view(s).substr(comma + 1))};
}

int to_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  out << text;
}

struct PhysOptions {
  double q = 1.0;
  double hbar = 1.0;
  double m = 1.0;
  double c = 1.0;
  double p = 1.0;
  double k = 1.0;
  double amp_re = 1.0;
  double amp_im = 0.0;
};

struct EvalOptions {
  std::string function;
  std::vector<std::string> args;
  PhysOptions phys;
  OutputFormat format = OutputFormat::Csv;
};

cplx run_eval(const EvalOptions& o) {
  const auto& a = o.args;
  auto need = [&](std::size_t n) {
    if (a.size() != n) {
      throw UsageError(o.function + " expects " + std::to_string(n) + " argument(s), got " + std::to_string(a.size()));
    }
  };
  const QDeformation q(o.phys.q);
  const std::string& fn = o.function;
  if (fn == "principal_pow") {
    need(2);
    return principal_pow(to_complex(a[0]), to_complex(a[1]));
  }
  if (fn == "qexp") {
    need(1);
    return qexp(to_complex(a[0]), q);
  }
  if (fn == "qlog") {
    need(1);
    return qlog(to_complex(a[0]), q);
  }
  if (fn == "pochhammer") {
    need(2);
    return pochhammer(to_complex(a[0]), to_int(a[1]));
  }
  if (fn == "kummer_m") {
    need(3);
    return kummer_m(to_complex(a[0]), to_complex(a[1]), to_complex(a[2]));
  }
  if (fn == "gauss_2f1") {
    need(4);
    return gauss_2f1(to_complex(a[0]), to_complex(a[1]), to_complex(a[2]), to_complex(a[3]));
  }
  const Amplitude amp({o.phys.amp_re, o.phys.amp_im});
  if (fn == "plane_wave" || fn == "q_plane_wave") {
    need(2);
    const NonRelParams prm = NonRelParams::make(o.phys.hbar, o.phys.m, o.phys.p);
    const double x = to_double(a[0]), t = to_double(a[1]);
    return fn == "plane_wave" ? plane_wave(x, t, prm) : q_plane_wave(x, t, prm, q, amp);
  }
  if (fn == "rel_plane_wave" || fn == "q_rel_plane_wave") {
    need(2);
    const RelParams prm = RelParams::make(o.phys.hbar, o.phys.m, o.phys.c, o.phys.k);
    const double x = to_double(a[0]), t = to_double(a[1]);
    return fn == "rel_plane_wave" ? rel_plane_wave(x, t, prm) : q_rel_plane_wave(x, t, prm, q, amp);
  }
  throw UsageError("unknown function '" + fn + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void add_format(CLI::App* cmd, OutputFormat& fmt) {
  cmd->add_option("--format", fmt, "Output encoding (json|csv)")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

int run(int argc, char** argv) {
  CLI::App app{"Hypergeometric wave-equation verification toolkit"};
  app.require_subcommand(1);

  // eval
  EvalOptions eval;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate one special function or wave at a point");
  cmd_eval
      ->add_option("function", eval.function,
                   "principal_pow|qexp|qlog|pochhammer|kummer_m|gauss_2f1|plane_wave|rel_plane_wave|"
                   "q_plane_wave|q_rel_plane_wave")
      ->required();
  cmd_eval->add_option("args", eval.args, "Arguments; complex values as re or re,im");
  cmd_eval->add_option("--q", eval.phys.q, "Deformation index");
  cmd_eval->add_option("--hbar", eval.phys.hbar);
  cmd_eval->add_option("--m", eval.phys.m);
  cmd_eval->add_option("--c", eval.phys.c);
  cmd_eval->add_option("--p", eval.phys.p);
  cmd_eval->add_option("--k", eval.phys.k);
  cmd_eval->add_option("--amp-re", eval.phys.amp_re);
  cmd_eval->add_option("--amp-im", eval.phys.amp_im);
  add_format(cmd_eval, eval.format);

  // residual
  ScenarioConfig cli_cfg;
  std::string config_path, grid_text, out_path;
  double h_step = 0.0;
  OutputFormat residual_format = OutputFormat::Json;
  auto* cmd_res = app.add_subcommand("residual", "Scan an equation residual for a field over a grid");
  cmd_res->set_help_flag("--help", "Print this help message and exit");  // -h is taken by --h
  cmd_res->add_option("--config", config_path, "Scenario JSON; explicit flags override its keys");
  auto* o_equation =
      cmd_res->add_option("--equation", cli_cfg.equation, "se_free|kg|nlse_hpg|nrt|nlkg|kummer_ode|gauss_ode|u_ode");
  auto* o_field = cmd_res->add_option("--field", cli_cfg.field,
                                      "plane_wave|rel_plane_wave|q_plane_wave|q_rel_plane_wave|gaussian_packet|"
                                      "qgaussian_packet|kummer_m|gauss_2f1|u_kummer");
  auto* o_q = cmd_res->add_option("--q", cli_cfg.q);
  auto* o_hbar = cmd_res->add_option("--hbar", cli_cfg.hbar);
  auto* o_m = cmd_res->add_option("--m", cli_cfg.m);
  auto* o_c = cmd_res->add_option("--c", cli_cfg.c);
  auto* o_p = cmd_res->add_option("--p", cli_cfg.p);
  auto* o_k = cmd_res->add_option("--k", cli_cfg.k);
  auto* o_alpha = cmd_res->add_option("--alpha", cli_cfg.alpha, "Packet width constant");
  auto* o_beta = cmd_res->add_option("--beta", cli_cfg.beta, "Packet slope constant");
  auto* o_amp_re = cmd_res->add_option("--amp-re", cli_cfg.amp_re);
  auto* o_amp_im = cmd_res->add_option("--amp-im", cli_cfg.amp_im);
  auto* o_ha = cmd_res->add_option("--hyp-a", cli_cfg.hyp_a, "Kummer a / Gauss alpha");
  auto* o_hb = cmd_res->add_option("--hyp-b", cli_cfg.hyp_b, "Kummer b / Gauss beta");
  auto* o_hc = cmd_res->add_option("--hyp-c", cli_cfg.hyp_c, "Gauss gamma");
  auto* o_grid = cmd_res->add_option("--grid", grid_text, "xmin:xmax:nx,tmin:tmax:nt");
  auto* o_h = cmd_res->add_option("--h", h_step, "Finite-difference probe step (both axes)");
  auto* o_levels = cmd_res->add_option("--levels", cli_cfg.levels, "Step levels for the order estimate (<2: off)");
  auto* o_tol = cmd_res->add_option("--tol", cli_cfg.tol, "Pass threshold on max_rel");
  auto* o_detune = cmd_res->add_option("--detune", cli_cfg.detune, "Relative detuning of one field parameter");
  cmd_res->add_option("--out", out_path, "Write the report here instead of stdout");
  add_format(cmd_res, residual_format);

  // packet
  std::string packet_kind;
  double packet_q = 1.0;
  std::vector<double> packet_ts{0.0, 0.5, 1.0};
  double p_alpha = 1.0, p_beta = 1.0, p_m = 1.0, p_hbar = 1.0;
  bool oracle = false;
  int steps = 10000;
  OutputFormat packet_format = OutputFormat::Csv;
  std::string packet_out;
  auto* cmd_packet = app.add_subcommand("packet", "Closed-form packet coefficients, optionally against RK4");
  cmd_packet->add_option("kind", packet_kind, "classical|q")->required()->check(CLI::IsMember({"classical", "q"}));
  auto* o_packet_q = cmd_packet->add_option("--q", packet_q, "Deformation index (kind=q)");
  cmd_packet->add_option("--t", packet_ts, "Times, e.g. --t 0,0.5,1")->delimiter(',');
  cmd_packet->add_option("--alpha", p_alpha);
  cmd_packet->add_option("--beta", p_beta);
  cmd_packet->add_option("--m", p_m);
  cmd_packet->add_option("--hbar", p_hbar);
  cmd_packet->add_flag("--oracle", oracle, "Add RK4 columns and gaps");
  cmd_packet->add_option("--steps", steps, "RK4 steps from t=0 to each t");
  cmd_packet->add_option("--out", packet_out);
  add_format(cmd_packet, packet_format);

  // limit
  double limit_t = 1.0;
  std::vector<double> limit_qs{1.01, 1.001, 1.0001};
  double l_alpha = 1.0, l_beta = 1.0, l_m = 1.0, l_hbar = 1.0;
  OutputFormat limit_format = OutputFormat::Csv;
  std::string limit_out;
  auto* cmd_limit = app.add_subcommand("limit", "Gap between q-Gaussian and Gaussian coefficients as q -> 1");
  cmd_limit->add_option("--t", limit_t);
  cmd_limit->add_option("--q", limit_qs, "Deformation indices, e.g. --q 1.01,1.001")->delimiter(',');
  cmd_limit->add_option("--alpha", l_alpha);
  cmd_limit->add_option("--beta", l_beta);
  cmd_limit->add_option("--m", l_m);
  cmd_limit->add_option("--hbar", l_hbar);
  cmd_limit->add_option("--out", limit_out);
  add_format(cmd_limit, limit_format);

  // selftest
  bool selftest_json_flag = false;
  std::string selftest_out;
  auto* cmd_self = app.add_subcommand("selftest", "Run the certification matrix and negative controls");
  cmd_self->add_flag("--json", selftest_json_flag, "Machine-readable summary");
  cmd_self->add_option("--out", selftest_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cmd_eval->parsed()) {
    emit(format_complex(run_eval(eval), eval.format), "");
    return kExitOk;
  }

  if (cmd_res->parsed()) {
    ScenarioConfig cfg;
    if (!config_path.empty()) cfg = parse_scenario_json(read_file(config_path));
    auto overlay = [](const CLI::Option* opt, auto& dst, const auto& src) {
      if (opt->count() > 0) dst = src;
    };
    overlay(o_equation, cfg.equation, cli_cfg.equation);
    overlay(o_field, cfg.field, cli_cfg.field);
    overlay(o_q, cfg.q, cli_cfg.q);
    overlay(o_hbar, cfg.hbar, cli_cfg.hbar);
    overlay(o_m, cfg.m, cli_cfg.m);
    overlay(o_c, cfg.c, cli_cfg.c);
    overlay(o_p, cfg.p, cli_cfg.p);
    overlay(o_k, cfg.k, cli_cfg.k);
    overlay(o_alpha, cfg.alpha, cli_cfg.alpha);
    overlay(o_beta, cfg.beta, cli_cfg.beta);
    overlay(o_amp_re, cfg.amp_re, cli_cfg.amp_re);
    overlay(o_amp_im, cfg.amp_im, cli_cfg.amp_im);
    overlay(o_ha, cfg.hyp_a, cli_cfg.hyp_a);
    overlay(o_hb, cfg.hyp_b, cli_cfg.hyp_b);
    overlay(o_hc, cfg.hyp_c, cli_cfg.hyp_c);
    overlay(o_levels, cfg.levels, cli_cfg.levels);
    overlay(o_tol, cfg.tol, cli_cfg.tol);
    overlay(o_detune, cfg.detune, cli_cfg.detune);
    if (o_grid->count() > 0) cfg.grid = parse_grid(grid_text, cfg.grid);
    if (o_h->count() > 0) cfg.grid.h_x = cfg.grid.h_t = h_step;
    // Key validation before any numerics so that typos are usage errors.
    const auto known = [](const std::vector<std::string_view>& keys, const std::string& key) {
      return std::ranges::find(keys, std::string_view(key)) != keys.end();
    };
    if (!known(equation_keys(), cfg.equation)) {
      throw UsageError("unknown equation '" + cfg.equation + "'");
    }
    if (!known(field_keys(), cfg.field)) {
      throw UsageError("unknown field '" + cfg.field + "'");
    }

    const ResidualReport report = run_scenario(cfg);
    emit(residual_format == OutputFormat::Json ? residual_json(cfg, report) : residual_csv(cfg, report), out_path);
    return report.max_rel <= cfg.tol ? kExitOk : kExitTolerance;
  }

  if (cmd_packet->parsed()) {
    const PacketConstants k = PacketConstants::make(p_alpha, p_beta, p_m, p_hbar);
    if (packet_kind == "q" && o_packet_q->count() == 0) throw UsageError("packet q requires --q");
    const PacketKind kind =
        packet_kind == "classical" ? PacketKind::classical() : PacketKind::q_deformed(QDeformation(packet_q));
    const auto rows = packet_table(kind, k, packet_ts, oracle, steps);
    emit(packet_format == OutputFormat::Json ? packet_table_json(kind, k, rows) : packet_table_csv(rows), packet_out);
    return kExitOk;
  }

  if (cmd_limit->parsed()) {
    const PacketConstants k = PacketConstants::make(l_alpha, l_beta, l_m, l_hbar);
    const LimitTable table = limit_table(limit_t, k, limit_qs);
    emit(limit_format == OutputFormat::Json ? limit_table_json(k, table) : limit_table_csv(table), limit_out);
    return kExitOk;
  }

  if (cmd_self->parsed()) {
    const SelftestSummary summary = run_selftest();
    emit(selftest_json_flag ? selftest_json(summary) : selftest_text(summary), selftest_out);
    return summary.all_pass() ? kExitOk : kExitTolerance;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hypwave::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hypwave::Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
