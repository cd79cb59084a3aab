#include "hypwave/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace hypwave {

namespace {

using ojson = nlohmann::ordered_json;

ojson complex_obj(cplx v) { return ojson{{"re", v.real()}, {"im", v.imag()}}; }

ojson grid_obj(const GridSpec& g) {
  return ojson{{"x_min", g.x_min}, {"x_max", g.x_max}, {"nx", g.nx},   {"t_min", g.t_min},
               {"t_max", g.t_max}, {"nt", g.nt},       {"h_x", g.h_x}, {"h_t", g.h_t}};
}

ojson scenario_obj(const ScenarioConfig& c) {
  return ojson{{"equation", c.equation},
               {"field", c.field},
               {"q", c.q},
               {"hbar", c.hbar},
               {"m", c.m},
               {"c", c.c},
               {"p", c.p},
               {"k", c.k},
               {"alpha", c.alpha},
               {"beta", c.beta},
               {"amp_re", c.amp_re},
               {"amp_im", c.amp_im},
               {"hyp_a", c.hyp_a},
               {"hyp_b", c.hyp_b},
               {"hyp_c", c.hyp_c},
               {"grid", grid_obj(c.grid)},
               {"levels", c.levels},
               {"tol", c.tol},
               {"detune", c.detune}};
}

ojson order_value(const ResidualReport& r) {
  if (!r.order) return nullptr;
  if (r.order->exact_within_noise) return "exact_within_noise";
  return r.order->slope;
}

std::string order_text(const ResidualReport& r) {
  if (!r.order) return "";
  if (r.order->exact_within_noise) return "exact_within_noise";
  return format_number(r.order->slope);
}

ojson report_obj(const ResidualReport& r) {
  return ojson{{"max_abs", r.max_abs},
               {"max_rel", r.max_rel},
               {"worst_point", ojson{{"x", r.worst_x}, {"t", r.worst_t}}},
               {"order_estimate", order_value(r)},
               {"points_evaluated", r.points_evaluated},
               {"skipped", r.skipped}};
}

ojson gap_obj(const ComponentGap& g) { return ojson{{"a", g.a}, {"b", g.b}, {"c", g.c}, {"max", g.max()}}; }

ojson coeff_obj(const CoeffTriple& c) {
  return ojson{{"a", complex_obj(c.a)}, {"b", complex_obj(c.b)}, {"c", complex_obj(c.c)}};
}

ojson constants_obj(const PacketConstants& k) {
  return ojson{{"alpha", k.alpha}, {"beta", k.beta}, {"m", k.m}, {"hbar", k.hbar}};
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

template <typename T>
void read_key(const nlohmann::json& obj, const char* key, T& into) {
  if (!obj.contains(key)) return;
  try {
    into = obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string("config: key '") + key + "' has the wrong type");
  }
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<std::string_view> known, const char* where) {
  for (const auto& item : obj.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw UsageError(std::string("config: unknown key '") + item.key() + "' in " + where);
    }
  }
}

void append_csv(std::string& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const std::string& cell : cells) {
    if (!first) out += ',';
    out += cell;
    first = false;
  }
  out += '\n';
}

std::string cx_re(cplx v) { return format_number(v.real()); }
std::string cx_im(cplx v) { return format_number(v.imag()); }

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_complex(cplx v, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return complex_obj(v).dump() + "\n";
  return "re,im\n" + format_number(v.real()) + "," + format_number(v.imag()) + "\n";
}

std::string scenario_json(const ScenarioConfig& cfg) { return dump(scenario_obj(cfg)); }

ScenarioConfig parse_scenario_json(std::string_view text, ScenarioConfig cfg) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (!obj.is_object()) throw UsageError("config: top level must be an object");
  reject_unknown(obj,
                 {"equation", "field", "q", "hbar", "m", "c", "p", "k", "alpha", "beta", "amp_re", "amp_im", "hyp_a",
                  "hyp_b", "hyp_c", "grid", "levels", "tol", "detune"},
                 "scenario");
  read_key(obj, "equation", cfg.equation);
  read_key(obj, "field", cfg.field);
  read_key(obj, "q", cfg.q);
  read_key(obj, "hbar", cfg.hbar);
  read_key(obj, "m", cfg.m);
  read_key(obj, "c", cfg.c);
  read_key(obj, "p", cfg.p);
  read_key(obj, "k", cfg.k);
  read_key(obj, "alpha", cfg.alpha);
  read_key(obj, "beta", cfg.beta);
  read_key(obj, "amp_re", cfg.amp_re);
  read_key(obj, "amp_im", cfg.amp_im);
  read_key(obj, "hyp_a", cfg.hyp_a);
  read_key(obj, "hyp_b", cfg.hyp_b);
  read_key(obj, "hyp_c", cfg.hyp_c);
  read_key(obj, "levels", cfg.levels);
  read_key(obj, "tol", cfg.tol);
  read_key(obj, "detune", cfg.detune);
  if (obj.contains("grid")) {
    const auto& g = obj.at("grid");
    if (!g.is_object()) throw UsageError("config: 'grid' must be an object");
    reject_unknown(g, {"x_min", "x_max", "nx", "t_min", "t_max", "nt", "h_x", "h_t"}, "grid");
    read_key(g, "x_min", cfg.grid.x_min);
    read_key(g, "x_max", cfg.grid.x_max);
    read_key(g, "nx", cfg.grid.nx);
    read_key(g, "t_min", cfg.grid.t_min);
    read_key(g, "t_max", cfg.grid.t_max);
    read_key(g, "nt", cfg.grid.nt);
    read_key(g, "h_x", cfg.grid.h_x);
    read_key(g, "h_t", cfg.grid.h_t);
  }
  return cfg;
}

std::string residual_json(const ScenarioConfig& cfg, const ResidualReport& report) {
  return dump(ojson{{"scenario", scenario_obj(cfg)}, {"report", report_obj(report)}});
}

std::string residual_csv(const ScenarioConfig& cfg, const ResidualReport& r) {
  std::string out;
  append_csv(out, {"equation", "field", "max_abs", "max_rel", "worst_x", "worst_t", "order_estimate",
                   "points_evaluated", "skipped"});
  append_csv(out,
             {cfg.equation, cfg.field, format_number(r.max_abs), format_number(r.max_rel), format_number(r.worst_x),
              format_number(r.worst_t), order_text(r), std::to_string(r.points_evaluated), std::to_string(r.skipped)});
  return out;
}

std::string selftest_json(const SelftestSummary& s) {
  ojson pairs = ojson::array();
  for (const CaseOutcome& o : s.pairs) {
    pairs.push_back(ojson{{"name", o.test_case.name},
                          {"equation", o.test_case.config.equation},
                          {"field", o.test_case.config.field},
                          {"max_rel", o.report.max_rel},
                          {"tol", o.test_case.config.tol},
                          {"order_estimate", order_value(o.report)},
                          {"pass", o.pass}});
  }
  ojson controls = ojson::array();
  for (const CaseOutcome& o : s.controls) {
    controls.push_back(ojson{{"name", o.test_case.name},
                             {"detune", o.test_case.config.detune},
                             {"max_rel", o.report.max_rel},
                             {"threshold", kNegativeControlThreshold},
                             {"pass", o.pass}});
  }
  return dump(ojson{{"pairs", pairs}, {"controls", controls}, {"all_pass", s.all_pass()}});
}

std::string selftest_text(const SelftestSummary& s) {
  std::ostringstream os;
  for (const CaseOutcome& o : s.pairs) {
    os << (o.pass ? "PASS" : "FAIL") << "  certify  " << o.test_case.name
       << "  max_rel=" << format_number(o.report.max_rel) << "  order=" << order_text(o.report) << "\n";
  }
  for (const CaseOutcome& o : s.controls) {
    os << (o.pass ? "PASS" : "FAIL") << "  control  " << o.test_case.name
       << "  detune=" << format_number(o.test_case.config.detune) << "  max_rel=" << format_number(o.report.max_rel)
       << "\n";
  }
  os << (s.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

std::vector<PacketRow> packet_table(const PacketKind& kind, const PacketConstants& k, const std::vector<double>& ts,
                                    bool oracle, int steps) {
  std::vector<PacketRow> rows;
  const CoeffTriple init = oracle ? packet_coeffs(0.0, k, kind) : CoeffTriple{};
  for (double t : ts) {
    PacketRow row;
    row.t = t;
    row.closed = packet_coeffs(t, k, kind);
    if (oracle) {
      row.has_oracle = true;
      row.rk4 = integrate_rk4(kind, k, init, 0.0, t, steps);
      row.gap = coeff_gap(row.rk4, row.closed);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string packet_table_json(const PacketKind& kind, const PacketConstants& k, const std::vector<PacketRow>& rows) {
  ojson out_rows = ojson::array();
  for (const PacketRow& r : rows) {
    ojson row{{"t", r.t}, {"closed", coeff_obj(r.closed)}};
    if (r.has_oracle) {
      row["rk4"] = coeff_obj(r.rk4);
      row["gap"] = gap_obj(r.gap);
    }
    out_rows.push_back(row);
  }
  ojson doc{{"kind", kind.is_classical() ? "classical" : "q"}};
  doc["q"] = kind.is_classical() ? ojson(nullptr) : ojson(kind.q().q());
  doc["constants"] = constants_obj(k);
  doc["rows"] = out_rows;
  return dump(doc);
}

std::string packet_table_csv(const std::vector<PacketRow>& rows) {
  const bool oracle = !rows.empty() && rows.front().has_oracle;
  std::string out = "t,a_re,a_im,b_re,b_im,c_re,c_im";
  if (oracle) out += ",rk4_a_re,rk4_a_im,rk4_b_re,rk4_b_im,rk4_c_re,rk4_c_im,gap_a,gap_b,gap_c";
  out += '\n';
  for (const PacketRow& r : rows) {
    out += format_number(r.t);
    for (cplx v : {r.closed.a, r.closed.b, r.closed.c}) out += "," + cx_re(v) + "," + cx_im(v);
    if (oracle) {
      for (cplx v : {r.rk4.a, r.rk4.b, r.rk4.c}) out += "," + cx_re(v) + "," + cx_im(v);
      for (double g : {r.gap.a, r.gap.b, r.gap.c}) out += "," + format_number(g);
    }
    out += '\n';
  }
  return out;
}

LimitTable limit_table(double t, const PacketConstants& k, const std::vector<double>& qs) {
  LimitTable table;
  table.t = t;
  for (double q : qs) {
    const QDeformation qd(q);
    if (qd.is_classical()) throw DomainError("limit: q = 1 has no deformed packet");
    table.rows.push_back({q, classical_limit_gaps(t, k, qd)});
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const LimitRow& l, const LimitRow& r) { return std::abs(l.q - 1.0) > std::abs(r.q - 1.0); });
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const LimitRow& prev = table.rows[i - 1];
    const LimitRow& cur = table.rows[i];
    if (std::abs(cur.q - 1.0) < std::abs(prev.q - 1.0) && !(cur.gap.max() < prev.gap.max())) {
      table.monotone_decreasing = false;
    }
  }
  return table;
}

std::string limit_table_json(const PacketConstants& k, const LimitTable& table) {
  ojson rows = ojson::array();
  for (const LimitRow& r : table.rows) rows.push_back(ojson{{"q", r.q}, {"gap", gap_obj(r.gap)}});
  return dump(ojson{{"t", table.t},
                    {"constants", constants_obj(k)},
                    {"rows", rows},
                    {"monotone_decreasing", table.monotone_decreasing}});
}

std::string limit_table_csv(const LimitTable& table) {
  std::string out = "q,gap,gap_a,gap_b,gap_c,monotone_decreasing\n";
  const std::string flag = table.monotone_decreasing ? "true" : "false";
  for (const LimitRow& r : table.rows) {
    append_csv(out, {format_number(r.q), format_number(r.gap.max()), format_number(r.gap.a), format_number(r.gap.b),
                     format_number(r.gap.c), flag});
  }
  return out;
}

}  // namespace hypwave
