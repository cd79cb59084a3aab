#include "hypwave/packets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypwave {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_valid_q(const QDeformation& q) {
  if (q.is_classical()) throw DomainError("q-Gaussian packet requires q != 1");
  if (q.q() == 0.0) throw DomainError("q-Gaussian packet requires q != 0");
  if (q.q() == -1.0) throw DomainError("q-Gaussian packet requires q != -1");
}

double relative(cplx value, cplx reference) {
  const double diff = std::abs(value - reference);
  const double scale = std::abs(reference);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

PacketConstants PacketConstants::make(double alpha, double beta, double m, double hbar) {
  if (!(alpha > 0.0)) throw DomainError("PacketConstants: alpha must be positive");
  if (beta == 0.0 || std::isnan(beta)) throw DomainError("PacketConstants: beta must be nonzero");
  if (!(m > 0.0)) throw DomainError("PacketConstants: m must be positive");
  if (!(hbar > 0.0)) throw DomainError("PacketConstants: hbar must be positive");
  return {alpha, beta, m, hbar};
}

PacketKind PacketKind::q_deformed(const QDeformation& q) {
  if (q.is_classical()) throw DomainError("PacketKind: Q_DEFORMED requires q != 1");
  return PacketKind(Family::QDeformed, q);
}

CoeffTriple gaussian_coeffs(double t, const PacketConstants& k) {
  const double m = k.m;
  const double b2 = k.beta * k.beta;
  const cplx den = 2.0 * kI * k.hbar * t + m * k.alpha;
  // b carries no factor of m: that is the form for which c(t) below solves
  // c' = hbar (b^2 - 2a)/(2im) for every m (they coincide at m = 1).
  const cplx a = m / den;
  const cplx b = 1.0 / (k.beta * den);
  const cplx c = 1.0 / (4.0 * m * b2 * den) + 0.5 * principal_log(den) - 1.0 / (4.0 * m * m * b2 * k.alpha) -
                 0.5 * std::log(m * k.alpha);
  return {a, b, c};
}

CoeffTriple qgaussian_coeffs(double t, const PacketConstants& k, const QDeformation& q) {
  require_valid_q(q);
  const double qq = q.q();
  const double m = k.m;
  const double b2 = k.beta * k.beta;
  const double base0 = m * qq * k.alpha;
  const cplx den = kI * k.hbar * (qq + 1.0) * t + base0;

  const cplx a = m * qq / den;
  const cplx b = 1.0 / (k.beta * den);
  const cplx prefactor = principal_pow(cplx(base0, 0.0), (1.0 - qq) / (1.0 + qq));
  const double bracket = 1.0 / (qq - 1.0) - 1.0 / (4.0 * m * m * qq * qq * b2 * k.alpha);
  const cplx c = prefactor * bracket * principal_pow(den, (qq - 1.0) / (qq + 1.0)) + 1.0 / (4.0 * m * qq * b2 * den) +
                 1.0 / (1.0 - qq);
  return {a, b, c};
}

CoeffTriple packet_coeffs(double t, const PacketConstants& k, const PacketKind& kind) {
  return kind.is_classical() ? gaussian_coeffs(t, k) : qgaussian_coeffs(t, k, kind.q());
}

cplx packet_value(double x, const CoeffTriple& coeffs, const PacketKind& kind) {
  const cplx exponent = (coeffs.a * x + coeffs.b) * x + coeffs.c;
  if (kind.is_classical()) return std::exp(-exponent);
  const double qq = kind.q().q();
  return principal_pow(1.0 + (qq - 1.0) * exponent, 1.0 / (1.0 - qq));
}

CoeffTriple ode_rhs(const CoeffTriple& s, const PacketConstants& k, const PacketKind& kind) {
  const cplx im = kI * k.m;
  if (kind.is_classical()) {
    return {2.0 * k.hbar * s.a * s.a / im, 2.0 * k.hbar * s.a * s.b / im,
            k.hbar * (s.b * s.b - 2.0 * s.a) / (2.0 * im)};
  }
  const double qq = kind.q().q();
  if (qq == 0.0) throw DomainError("ode_rhs: q = 0 is singular");
  const cplx imq = im * qq;
  return {k.hbar * (qq + 1.0) * s.a * s.a / imq, k.hbar * (qq + 1.0) * s.a * s.b / imq,
          k.hbar * (qq * s.b * s.b - 2.0 * (qq - 1.0) * s.a * s.c - 2.0 * s.a) / (2.0 * imq)};
}

CoeffTriple integrate_rk4(const PacketKind& kind, const PacketConstants& k, const CoeffTriple& init, double t0,
                          double t1, int steps) {
  if (steps < 1) throw DomainError("integrate_rk4: steps must be >= 1, got " + std::to_string(steps));
  if (t1 == t0) return init;
  const double h = (t1 - t0) / steps;
  CoeffTriple y = init;
  for (int i = 0; i < steps; ++i) {
    const CoeffTriple k1 = ode_rhs(y, k, kind);
    const CoeffTriple k2 = ode_rhs(y + (0.5 * h) * k1, k, kind);
    const CoeffTriple k3 = ode_rhs(y + (0.5 * h) * k2, k, kind);
    const CoeffTriple k4 = ode_rhs(y + h * k3, k, kind);
    y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

double ComponentGap::max() const { return std::max({a, b, c}); }

ComponentGap coeff_gap(const CoeffTriple& value, const CoeffTriple& reference) {
  return {relative(value.a, reference.a), relative(value.b, reference.b), relative(value.c, reference.c)};
}

ComponentGap classical_limit_gaps(double t, const PacketConstants& k, const QDeformation& q) {
  return coeff_gap(qgaussian_coeffs(t, k, q), gaussian_coeffs(t, k));
}

double classical_limit_gap(double t, const PacketConstants& k, const QDeformation& q) {
  return classical_limit_gaps(t, k, q).max();
}

}  // namespace hypwave
