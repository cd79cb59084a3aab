#ifndef HYPWAVE_SPECFUN_HPP
#define HYPWAVE_SPECFUN_HPP

#include <complex>

#include "hypwave/errors.hpp"

namespace hypwave {

using cplx = std::complex<double>;

/// Deformation index q of the Tsallis q-exponential family.
///
/// Values with |q - 1| < kClassicalEps are flagged classical; every
/// q-formula then dispatches to its exact q = 1 form instead of dividing
/// by a vanishing (1 - q).
class QDeformation {
 public:
  static constexpr double kClassicalEps = 1e-9;

  explicit QDeformation(double q = 1.0) : q_(q), one_minus_q_(1.0 - q), classical_(std::abs(q - 1.0) < kClassicalEps) {}

  double q() const { return q_; }
  double one_minus_q() const { return one_minus_q_; }
  bool is_classical() const { return classical_; }

 private:
  double q_;
  double one_minus_q_;
  bool classical_;
};

/// Truncation controls shared by the hypergeometric series.
struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 500;

  /// Throws DomainError unless rel_tol > 0 and max_terms >= 1.
  void validate() const;
};

/// exp(w * Log(base)) with Im Log in (-pi, pi].
///
/// A base with a negative-zero imaginary part is treated as lying on the
/// upper side of the cut, so (-1)^0.5 is +i. base = 0 yields 0 when
/// Re(w) > 0 and throws DomainError otherwise.
cplx principal_pow(cplx base, cplx exponent);

/// Principal logarithm with the same negative-zero convention as
/// principal_pow.
cplx principal_log(cplx z);

/// Tsallis q-exponential [1 + (1-q) z]^{1/(1-q)}; exp(z) when q is classical.
cplx qexp(cplx z, const QDeformation& q);

/// Inverse of qexp on the principal branch: (w^{1-q} - 1)/(1-q).
cplx qlog(cplx w, const QDeformation& q);

/// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
cplx pochhammer(cplx a, int n);

/// True when z is zero or a negative integer (a pole of the series
/// denominators).
bool is_nonpositive_integer(cplx z);

/// Confluent hypergeometric function M(a, b; z) = sum (a)_n/(b)_n z^n/n!.
///
/// Summed directly for Re z >= 0 and through Kummer's transformation
/// M(a,b,z) = e^z M(b-a,b,-z) otherwise; both branches are the defining
/// series. Requires |z| <= 50.
cplx kummer_m(cplx a, cplx b, cplx z, const SeriesControl& ctrl = {});

/// Gauss hypergeometric function 2F1(alpha, beta; gamma; z) inside the
/// convergence disk (|z| <= 0.95) or for a terminating series anywhere.
cplx gauss_2f1(cplx alpha, cplx beta, cplx gamma, cplx z, const SeriesControl& ctrl = {});

}  // namespace hypwave

#endif  // HYPWAVE_SPECFUN_HPP
