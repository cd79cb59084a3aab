#ifndef HYPWAVE_PACKETS_HPP
#define HYPWAVE_PACKETS_HPP

#include "hypwave/specfun.hpp"

namespace hypwave {

/// Integration constants and physical constants of a wave packet.
///
/// alpha > 0 keeps the t = 0 denominators off zero and every fractional-power
/// base of the closed forms in the right half plane for real t.
struct PacketConstants {
  double alpha = 1.0;
  double beta = 1.0;
  double m = 1.0;
  double hbar = 1.0;

  static PacketConstants make(double alpha, double beta, double m, double hbar);
};

/// Coefficients of the exponent a x^2 + b x + c at one instant.
struct CoeffTriple {
  cplx a{};
  cplx b{};
  cplx c{};

  friend CoeffTriple operator+(const CoeffTriple& l, const CoeffTriple& r) { return {l.a + r.a, l.b + r.b, l.c + r.c}; }
  friend CoeffTriple operator*(double s, const CoeffTriple& r) { return {s * r.a, s * r.b, s * r.c}; }
};

/// Gaussian (exp) or q-Gaussian (q-exponential) packet family.
class PacketKind {
 public:
  enum class Family { Classical, QDeformed };

  static PacketKind classical() { return PacketKind(Family::Classical, QDeformation(1.0)); }
  /// Throws DomainError when q is classical.
  static PacketKind q_deformed(const QDeformation& q);

  Family family() const { return family_; }
  const QDeformation& q() const { return q_; }
  bool is_classical() const { return family_ == Family::Classical; }

 private:
  PacketKind(Family f, QDeformation q) : family_(f), q_(q) {}
  Family family_;
  QDeformation q_;
};

/// Closed-form Gaussian coefficients; c(0) = 0.
CoeffTriple gaussian_coeffs(double t, const PacketConstants& k);

/// Closed-form q-Gaussian coefficients; c(0) = 0. Rejects classical q,
/// q = 0 and q = -1.
CoeffTriple qgaussian_coeffs(double t, const PacketConstants& k, const QDeformation& q);

/// Dispatches to gaussian_coeffs or qgaussian_coeffs.
CoeffTriple packet_coeffs(double t, const PacketConstants& k, const PacketKind& kind);

/// exp(-(a x^2 + b x + c)) or [1 + (q-1)(a x^2 + b x + c)]^{1/(1-q)}.
cplx packet_value(double x, const CoeffTriple& coeffs, const PacketKind& kind);

/// Time derivative (a', b', c') of the coefficient system.
CoeffTriple ode_rhs(const CoeffTriple& coeffs, const PacketConstants& k, const PacketKind& kind);

/// Classical fourth-order Runge-Kutta on ode_rhs from t0 to t1.
CoeffTriple integrate_rk4(const PacketKind& kind, const PacketConstants& k, const CoeffTriple& init, double t0,
                          double t1, int steps);

/// Componentwise relative differences; a component whose reference is
/// exactly zero is compared in absolute terms.
struct ComponentGap {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double max() const;
};

ComponentGap coeff_gap(const CoeffTriple& value, const CoeffTriple& reference);

/// Gaps between the q-Gaussian and the Gaussian coefficients at time t.
ComponentGap classical_limit_gaps(double t, const PacketConstants& k, const QDeformation& q);

/// Largest component of classical_limit_gaps.
double classical_limit_gap(double t, const PacketConstants& k, const QDeformation& q);

}  // namespace hypwave

#endif  // HYPWAVE_PACKETS_HPP
