#include "hypwave/residual.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "residual_detail.hpp"

namespace hypwave {

namespace {

constexpr cplx kI{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Nonlinear equations act on psi / psi(0,0).
Field normalized(const Field& f) {
  const cplx origin = f(0.0, 0.0);
  if (origin == cplx(0.0, 0.0)) throw DomainError("field '" + f.label + "' vanishes at the origin");
  return {f.label, [f, origin](double x, double t) { return f(x, t) / origin; }};
}

cplx guarded_pow(cplx base, double exponent) {
  if (std::abs(std::arg(base)) >= std::numbers::pi - kBranchGuardMargin) {
    throw BranchGuard("power base within the guard margin of the branch cut");
  }
  return principal_pow(base, exponent);
}

// g^exponent composed before any differencing.
Field powered(const Field& g, double exponent) {
  return {g.label, [g, exponent](double x, double t) { return guarded_pow(g(x, t), exponent); }};
}

ResidualSample sum_terms(std::initializer_list<cplx> terms) {
  ResidualSample s{{0.0, 0.0}, 0.0};
  for (const cplx& term : terms) {
    s.residual += term;
    s.normalizer = std::max(s.normalizer, std::abs(term));
  }
  return s;
}

ResidualSample schroedinger(double hbar, double m, const Field& f, double x, double t, double hx, double ht) {
  const cplx dt = fd_derivative(f, x, t, Axis::T, DerivOrder::First, ht);
  const cplx dxx = fd_derivative(f, x, t, Axis::X, DerivOrder::Second, hx);
  return sum_terms({kI * hbar * dt, hbar * hbar / (2.0 * m) * dxx});
}

ResidualSample klein_gordon(double hbar, double m, double c, const Field& f, double x, double t, double hx, double ht) {
  const cplx dtt = fd_derivative(f, x, t, Axis::T, DerivOrder::Second, ht);
  const cplx dxx = fd_derivative(f, x, t, Axis::X, DerivOrder::Second, hx);
  const double mass = m * c / hbar;
  return sum_terms({dtt / (c * c), -dxx, mass * mass * f(x, t)});
}

}  // namespace

cplx fd_derivative(const Field& f, double x, double t, Axis axis, DerivOrder order, double h) {
  if (!(h > 0.0)) throw DomainError("fd_derivative: step must be positive");
  const double dx = axis == Axis::X ? h : 0.0;
  const double dt = axis == Axis::T ? h : 0.0;
  const cplx plus = f(x + dx, t + dt);
  const cplx minus = f(x - dx, t - dt);
  if (order == DerivOrder::First) return (plus - minus) / (2.0 * h);
  return (plus - 2.0 * f(x, t) + minus) / (h * h);
}

std::string_view equation_name(const Equation& eq) {
  return std::visit(overloaded{
                        [](const eqn::SeFree&) { return std::string_view("se_free"); },
                        [](const eqn::KleinGordon&) { return std::string_view("kg"); },
                        [](const eqn::NlseHpg&) { return std::string_view("nlse_hpg"); },
                        [](const eqn::Nrt&) { return std::string_view("nrt"); },
                        [](const eqn::Nlkg&) { return std::string_view("nlkg"); },
                        [](const eqn::KummerOde&) { return std::string_view("kummer_ode"); },
                        [](const eqn::GaussOde&) { return std::string_view("gauss_ode"); },
                        [](const eqn::UOde&) { return std::string_view("u_ode"); },
                    },
                    eq);
}

void validate(const Equation& eq) {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0)) throw DomainError(std::string(what) + " must be positive");
  };
  std::visit(overloaded{
                 [&](const eqn::SeFree& e) {
                   positive(e.hbar, "hbar");
                   positive(e.m, "m");
                 },
                 [&](const eqn::KleinGordon& e) {
                   positive(e.hbar, "hbar");
                   positive(e.c, "c");
                   if (!(e.m >= 0.0)) throw DomainError("m must be non-negative");
                 },
                 [&](const eqn::NlseHpg& e) {
                   positive(e.hbar, "hbar");
                   positive(e.m, "m");
                 },
                 [&](const eqn::Nrt& e) {
                   positive(e.hbar, "hbar");
                   positive(e.m, "m");
                 },
                 [&](const eqn::Nlkg& e) {
                   positive(e.hbar, "hbar");
                   positive(e.c, "c");
                   if (!(e.m >= 0.0)) throw DomainError("m must be non-negative");
                 },
                 [](const eqn::KummerOde&) {},
                 [](const eqn::GaussOde&) {},
                 [](const eqn::UOde&) {},
             },
             eq);
}

ResidualSample equation_residual_at(const Equation& eq, const Field& f, double x, double t, double h_x, double h_t) {
  return std::visit(
      overloaded{
          [&](const eqn::SeFree& e) { return schroedinger(e.hbar, e.m, f, x, t, h_x, h_t); },
          [&](const eqn::KleinGordon& e) { return klein_gordon(e.hbar, e.m, e.c, f, x, t, h_x, h_t); },
          [&](const eqn::NlseHpg& e) {
            const Field g = normalized(f);
            if (e.q.is_classical()) return schroedinger(e.hbar, e.m, g, x, t, h_x, h_t);
            const cplx dt = fd_derivative(powered(g, e.q.q()), x, t, Axis::T, DerivOrder::First, h_t);
            const cplx dxx = fd_derivative(g, x, t, Axis::X, DerivOrder::Second, h_x);
            return sum_terms({kI * e.hbar * dt, e.hbar * e.hbar / (2.0 * e.m) * dxx});
          },
          [&](const eqn::Nrt& e) {
            const Field g = normalized(f);
            if (e.q.is_classical()) return schroedinger(e.hbar, e.m, g, x, t, h_x, h_t);
            const double two_minus_q = 2.0 - e.q.q();
            const cplx dt = fd_derivative(g, x, t, Axis::T, DerivOrder::First, h_t);
            const cplx dxx = fd_derivative(powered(g, two_minus_q), x, t, Axis::X, DerivOrder::Second, h_x);
            return sum_terms({kI * e.hbar * two_minus_q * dt, e.hbar * e.hbar / (2.0 * e.m) * dxx});
          },
          [&](const eqn::Nlkg& e) {
            const Field g = normalized(f);
            if (e.q.is_classical()) return klein_gordon(e.hbar, e.m, e.c, g, x, t, h_x, h_t);
            const double q = e.q.q();
            const cplx dtt = fd_derivative(g, x, t, Axis::T, DerivOrder::Second, h_t);
            const cplx dxx = fd_derivative(g, x, t, Axis::X, DerivOrder::Second, h_x);
            const double mass = e.m * e.c / e.hbar;
            return sum_terms({dtt / (e.c * e.c), -dxx, q * mass * mass * guarded_pow(g(x, t), 2.0 * q - 1.0)});
          },
          [&](const eqn::KummerOde& e) {
            const cplx z(x, t);
            const cplx d2 = fd_derivative(f, x, t, Axis::X, DerivOrder::Second, h_x);
            const cplx d1 = fd_derivative(f, x, t, Axis::X, DerivOrder::First, h_x);
            return sum_terms({z * d2, (e.b - z) * d1, -e.a * f(x, t)});
          },
          [&](const eqn::GaussOde& e) {
            const cplx z(x, t);
            const cplx d2 = fd_derivative(f, x, t, Axis::X, DerivOrder::Second, h_x);
            const cplx d1 = fd_derivative(f, x, t, Axis::X, DerivOrder::First, h_x);
            return sum_terms(
                {z * (1.0 - z) * d2, (e.gamma - (e.alpha + e.beta + 1.0) * z) * d1, -e.alpha * e.beta * f(x, t)});
          },
          [&](const eqn::UOde& e) {
            const cplx z(x, t);
            if (z == cplx(0.0, 0.0)) throw DomainError("u_ode: singular point z = 0");
            const cplx d2 = fd_derivative(f, x, t, Axis::X, DerivOrder::Second, h_x);
            const cplx d1 = fd_derivative(f, x, t, Axis::X, DerivOrder::First, h_x);
            const cplx potential = (e.b / 2.0 - e.a) / z - (e.b * e.b - 2.0 * e.b) / (4.0 * z * z);
            return sum_terms({d2, d1, potential * f(x, t)});
          },
      },
      eq);
}

void GridSpec::validate() const {
  if (nx < 1 || nt < 1) throw DomainError("grid: counts must be >= 1");
  if (!(x_max >= x_min) || !(t_max >= t_min)) throw DomainError("grid: max must not be below min");
  if (!(h_x > 0.0) || !(h_t > 0.0)) throw DomainError("grid: probe steps must be positive");
}

double GridSpec::x_at(int i) const { return nx == 1 ? x_min : x_min + (x_max - x_min) * i / (nx - 1); }

double GridSpec::t_at(int j) const { return nt == 1 ? t_min : t_min + (t_max - t_min) * j / (nt - 1); }

double fit_log_slope(std::span<const double> steps, std::span<const double> residuals) {
  const std::size_t n = std::min(steps.size(), residuals.size());
  if (n < 2) throw DomainError("fit_log_slope: need at least two samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(steps[i]);
    const double ly = std::log(residuals[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("fit_log_slope: steps must differ");
  return (n * sxy - sx * sy) / denom;
}

OrderEstimate convergence_order(const Equation& eq, const Field& f, double x, double t, double h0, int levels) {
  if (levels < 2) throw DomainError("convergence_order: levels must be >= 2");
  if (!(h0 > 0.0)) throw DomainError("convergence_order: h0 must be positive");
  std::vector<double> steps;
  std::vector<double> residuals;
  bool at_noise = true;
  for (int level = 0; level < levels; ++level) {
    const double h = std::ldexp(h0, -level);
    const ResidualSample s = equation_residual_at(eq, f, x, t, h, h);
    steps.push_back(h);
    residuals.push_back(std::abs(s.residual));
    if (!(detail::relative_residual(s) < kNoiseFloor)) at_noise = false;
  }
  if (at_noise || std::ranges::any_of(residuals, [](double r) { return r == 0.0; })) {
    return {0.0, true};
  }
  return {fit_log_slope(steps, residuals), false};
}

namespace detail {

OrderEstimate order_from_levels(const std::vector<double>& steps, const std::vector<LevelStats>& levels) {
  std::vector<double> residuals;
  bool at_noise = true;
  for (const LevelStats& s : levels) {
    residuals.push_back(s.max_abs);
    if (!(s.max_rel < kNoiseFloor)) at_noise = false;
  }
  if (at_noise || std::ranges::any_of(residuals, [](double r) { return r == 0.0; })) return {0.0, true};
  return {fit_log_slope(steps, residuals), false};
}

}  // namespace detail

namespace {

enum class PointStatus : unsigned char { Ok, Skipped, Failed };

struct PointResult {
  PointStatus status = PointStatus::Ok;
  ResidualSample sample{};
  std::exception_ptr error;
};

detail::LevelStats parallel_level(const Equation& eq, const Field& f, const GridSpec& grid) {
  const long total = grid.points();
  std::vector<PointResult> slots(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic, 16)
  for (long idx = 0; idx < total; ++idx) {
    const int j = static_cast<int>(idx / grid.nx);
    const int i = static_cast<int>(idx % grid.nx);
    PointResult& slot = slots[static_cast<std::size_t>(idx)];
    try {
      slot.sample = equation_residual_at(eq, f, grid.x_at(i), grid.t_at(j), grid.h_x, grid.h_t);
    } catch (const BranchGuard&) {
      slot.status = PointStatus::Skipped;
    } catch (...) {
      slot.status = PointStatus::Failed;
      slot.error = std::current_exception();
    }
  }

  // Serial fold in index order keeps the earliest worst point on ties.
  detail::LevelStats stats;
  for (long idx = 0; idx < total; ++idx) {
    const PointResult& slot = slots[static_cast<std::size_t>(idx)];
    if (slot.status == PointStatus::Failed) std::rethrow_exception(slot.error);
    if (slot.status == PointStatus::Skipped) {
      ++stats.skipped;
      continue;
    }
    const double rel = detail::relative_residual(slot.sample);
    stats.max_abs = std::max(stats.max_abs, std::abs(slot.sample.residual));
    if (stats.points == 0 || rel > stats.max_rel) {
      stats.max_rel = rel;
      stats.worst_x = grid.x_at(static_cast<int>(idx % grid.nx));
      stats.worst_t = grid.t_at(static_cast<int>(idx / grid.nx));
    }
    ++stats.points;
  }
  if (stats.points == 0) throw EmptyGrid("every grid point was skipped by the branch guard");
  return stats;
}

}  // namespace

ResidualReport residual_scan(const Equation& eq, const Field& f, const GridSpec& grid, const ScanOptions& opts) {
  return detail::scan_with_levels(eq, f, grid, opts, [&](const GridSpec& g) { return parallel_level(eq, f, g); });
}

}  // namespace hypwave
