#include "hypwave/waves.hpp"

#include <cmath>

namespace hypwave {

NonRelParams NonRelParams::make(double hbar, double m, double p) {
  if (!(hbar > 0.0)) throw DomainError("NonRelParams: hbar must be positive");
  if (!(m > 0.0)) throw DomainError("NonRelParams: m must be positive");
  return {hbar, m, p, p * p / (2.0 * m)};
}

RelParams RelParams::make(double hbar, double m, double c, double k) {
  if (!(hbar > 0.0)) throw DomainError("RelParams: hbar must be positive");
  if (!(c > 0.0)) throw DomainError("RelParams: c must be positive");
  if (!(m >= 0.0)) throw DomainError("RelParams: m must be non-negative");
  // hypot keeps omega == |k| c exactly in the massless case.
  return {hbar, m, c, k, std::hypot(k * c, m * c * c / hbar)};
}

Amplitude::Amplitude(cplx value) : value_(value) {
  if (value == cplx(0.0, 0.0)) throw DomainError("Amplitude: A must be nonzero");
}

cplx plane_wave(double x, double t, const NonRelParams& prm) {
  const double phase = (prm.p * x - prm.E * t) / prm.hbar;
  return {std::cos(phase), std::sin(phase)};
}

cplx rel_plane_wave(double x, double t, const RelParams& prm) {
  const double phase = prm.k * x - prm.omega * t;
  return {std::cos(phase), std::sin(phase)};
}

cplx q_plane_wave(double x, double t, const NonRelParams& prm, const QDeformation& q, const Amplitude& amp) {
  if (q.is_classical()) return amp.value() * plane_wave(x, t, prm);
  const double u = (prm.p * x - prm.E * t) / prm.hbar;
  return amp.value() * qexp(cplx(0.0, u), q);
}

cplx q_rel_plane_wave(double x, double t, const RelParams& prm, const QDeformation& q, const Amplitude& amp) {
  if (q.is_classical()) return amp.value() * rel_plane_wave(x, t, prm);
  const double u = prm.k * x - prm.omega * t;
  return amp.value() * qexp(cplx(0.0, u), q);
}

}  // namespace hypwave
