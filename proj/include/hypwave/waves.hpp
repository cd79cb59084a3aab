#ifndef HYPWAVE_WAVES_HPP
#define HYPWAVE_WAVES_HPP

#include "hypwave/specfun.hpp"

namespace hypwave {

/// Non-relativistic plane-wave constants; E is fixed to p^2/(2m) by make().
struct NonRelParams {
  double hbar = 1.0;
  double m = 1.0;
  double p = 1.0;
  double E = 0.5;

  /// Throws DomainError unless hbar > 0 and m > 0.
  static NonRelParams make(double hbar, double m, double p);
};

/// Relativistic constants with omega the positive root of
/// omega^2 = k^2 c^2 + m^2 c^4 / hbar^2.
struct RelParams {
  double hbar = 1.0;
  double m = 1.0;
  double c = 1.0;
  double k = 1.0;
  double omega = 1.4142135623730951;

  /// Throws DomainError unless hbar > 0, c > 0 and m >= 0.
  static RelParams make(double hbar, double m, double c, double k);
};

/// Nonzero complex prefactor of a q-plane wave.
class Amplitude {
 public:
  explicit Amplitude(cplx value = {1.0, 0.0});
  cplx value() const { return value_; }

 private:
  cplx value_;
};

/// exp(i (p x - E t) / hbar).
cplx plane_wave(double x, double t, const NonRelParams& prm);

/// exp(i (k x - omega t)).
cplx rel_plane_wave(double x, double t, const RelParams& prm);

/// A * exp_q(i (p x - E t) / hbar); the phase is divided by hbar.
cplx q_plane_wave(double x, double t, const NonRelParams& prm, const QDeformation& q,
                  const Amplitude& amp = Amplitude{});

/// A * exp_q(i (k x - omega t)); the phase is not divided by hbar.
cplx q_rel_plane_wave(double x, double t, const RelParams& prm, const QDeformation& q,
                      const Amplitude& amp = Amplitude{});

}  // namespace hypwave

#endif  // HYPWAVE_WAVES_HPP
