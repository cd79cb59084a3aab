#ifndef HYPWAVE_RESIDUAL_HPP
#define HYPWAVE_RESIDUAL_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "hypwave/specfun.hpp"

namespace hypwave {

/// A complex field psi(x, t). Must be a pure function: scans evaluate it
/// concurrently from several threads.
struct Field {
  std::string label;
  std::function<cplx(double, double)> eval;

  cplx operator()(double x, double t) const { return eval(x, t); }
};

enum class Axis { X, T };
enum class DerivOrder { First = 1, Second = 2 };

/// Central difference of f along one axis:
/// (f(+h) - f(-h)) / 2h or (f(+h) - 2 f(0) + f(-h)) / h^2.
cplx fd_derivative(const Field& f, double x, double t, Axis axis, DerivOrder order, double h);

/// Equations a field can be checked against. PDE kinds act on (x, t);
/// the ODE kinds (Kummer, Gauss, U) read the grid point as z = x + i t and
/// difference along x.
namespace eqn {

/// i hbar psi_t = -(hbar^2 / 2m) psi_xx
struct SeFree {
  double hbar = 1.0;
  double m = 1.0;
};

/// psi_tt / c^2 - psi_xx + (m c / hbar)^2 psi = 0
struct KleinGordon {
  double hbar = 1.0;
  double m = 1.0;
  double c = 1.0;
};

/// i hbar d/dt[g^q] = -(hbar^2 / 2m) g_xx with g = psi / psi(0,0)
struct NlseHpg {
  double hbar = 1.0;
  double m = 1.0;
  QDeformation q{1.0};
};

/// i hbar (2-q) g_t = -(hbar^2 / 2m) d^2/dx^2[g^{2-q}] with g = psi / psi(0,0)
struct Nrt {
  double hbar = 1.0;
  double m = 1.0;
  QDeformation q{1.0};
};

/// g_tt / c^2 - g_xx + q (m c / hbar)^2 g^{2q-1} = 0 with g = psi / psi(0,0)
struct Nlkg {
  double hbar = 1.0;
  double m = 1.0;
  double c = 1.0;
  QDeformation q{1.0};
};

/// z w'' + (b - z) w' - a w = 0
struct KummerOde {
  cplx a{1.0, 0.0};
  cplx b{2.0, 0.0};
};

/// z(1-z) w'' + [gamma - (alpha + beta + 1) z] w' - alpha beta w = 0
struct GaussOde {
  cplx alpha{1.0, 0.0};
  cplx beta{1.0, 0.0};
  cplx gamma{2.0, 0.0};
};

/// U'' + U' + [(b/2 - a)/z - (b^2 - 2b)/(4 z^2)] U = 0
struct UOde {
  cplx a{1.0, 0.0};
  cplx b{2.0, 0.0};
};

}  // namespace eqn

using Equation = std::variant<eqn::SeFree, eqn::KleinGordon, eqn::NlseHpg, eqn::Nrt, eqn::Nlkg, eqn::KummerOde,
                              eqn::GaussOde, eqn::UOde>;

/// Lower-case key of the equation ("se_free", "kg", ...).
std::string_view equation_name(const Equation& eq);

/// Throws DomainError when a physical constant is out of range
/// (hbar, m, c must be positive; KG allows m = 0).
void validate(const Equation& eq);

/// Bases of nonlinear powers must keep |arg| below pi minus this margin.
inline constexpr double kBranchGuardMargin = 0.1;

struct ResidualSample {
  cplx residual;      // LHS - RHS
  double normalizer;  // largest magnitude among the individual terms
};

/// Residual of eq for field f at one point with probe steps h_x, h_t.
/// Throws BranchGuard when a power base sits within the guard margin of the
/// cut at any stencil point.
ResidualSample equation_residual_at(const Equation& eq, const Field& f, double x, double t, double h_x, double h_t);

struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  int nx = 21;
  double t_min = 0.0;
  double t_max = 1.0;
  int nt = 21;
  double h_x = 1e-3;
  double h_t = 1e-3;

  void validate() const;
  double x_at(int i) const;
  double t_at(int j) const;
  long points() const { return static_cast<long>(nx) * nt; }
};

/// Slope of log|residual| against log h, or a flag that every residual is
/// already at the floating-point noise floor.
struct OrderEstimate {
  double slope = 0.0;
  bool exact_within_noise = false;

  bool certifies(double min_order) const { return exact_within_noise || slope >= min_order; }
};

/// Relative residuals below this are indistinguishable from rounding.
inline constexpr double kNoiseFloor = 1e-13;

struct ResidualReport {
  std::string equation;
  std::string field;
  double max_abs = 0.0;
  double max_rel = 0.0;
  double worst_x = 0.0;
  double worst_t = 0.0;
  std::optional<OrderEstimate> order;
  long points_evaluated = 0;
  long skipped = 0;
};

struct ScanOptions {
  /// Number of step sizes h * 2^(L-1), ..., 2h, h used for the order
  /// estimate; values below 2 disable it.
  int order_levels = 0;
};

/// Scans the grid in parallel (OpenMP). Points are visited in row-major
/// order (t outer, x inner); ties in max_rel keep the earliest point, so the
/// report does not depend on the thread count.
ResidualReport residual_scan(const Equation& eq, const Field& f, const GridSpec& grid, const ScanOptions& opts = {});

/// Single-threaded reference implementation of residual_scan.
ResidualReport residual_scan_serial(const Equation& eq, const Field& f, const GridSpec& grid,
                                    const ScanOptions& opts = {});

/// Least-squares slope of log(residual) against log(h).
double fit_log_slope(std::span<const double> steps, std::span<const double> residuals);

/// Pointwise order estimate from residuals at h0, h0/2, ..., h0/2^(levels-1).
OrderEstimate convergence_order(const Equation& eq, const Field& f, double x, double t, double h0, int levels);

}  // namespace hypwave

#endif  // HYPWAVE_RESIDUAL_HPP
