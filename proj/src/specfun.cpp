#include "hypwave/specfun.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

namespace hypwave {

namespace {

using lcplx = std::complex<long double>;

constexpr double kKummerMaxAbsZ = 50.0;
constexpr double kGaussMaxAbsZ = 0.95;

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

// Number of nonzero terms when z is a nonpositive integer -N, i.e. N + 1.
std::optional<int> terminating_length(cplx a) {
  if (!is_nonpositive_integer(a)) return std::nullopt;
  return static_cast<int>(-a.real()) + 1;
}

// Shared summation of sum_n prod(num + n) / prod(den + n) * z^n / n!.
//
// The running term and the partial sum are kept in long double: terminating
// polynomials evaluated near their zeros (e.g. (1+z)^6 at z ~ -0.9) lose
// ~8 digits to cancellation in plain double.
template <std::size_t NNum, std::size_t NDen>
cplx hypergeometric_series(const cplx (&num)[NNum], const cplx (&den)[NDen], cplx z, const SeriesControl& ctrl,
                           const char* name) {
  std::optional<int> length;
  for (const cplx& a : num) {
    if (auto n = terminating_length(a)) length = length ? std::min(*length, *n) : *n;
  }

  const lcplx lz(z.real(), z.imag());
  lcplx term(1.0L, 0.0L);
  lcplx sum(1.0L, 0.0L);
  int small_run = 0;
  const long double tol = ctrl.rel_tol;

  for (int n = 0;; ++n) {
    if (length && n + 1 >= *length) break;
    const long double ln = static_cast<long double>(n);
    lcplx ratio = lz / (ln + 1.0L);
    for (const cplx& a : num) ratio *= lcplx(a.real() + ln, a.imag());
    for (const cplx& b : den) ratio /= lcplx(b.real() + ln, b.imag());
    term *= ratio;
    sum += term;
    if (length) continue;

    small_run = std::abs(term) <= tol * std::abs(sum) ? small_run + 1 : 0;
    if (small_run == 3) break;
    if (n + 2 >= ctrl.max_terms) {
      throw NoConvergence(std::string(name) + ": no convergence within " + std::to_string(ctrl.max_terms) +
                          " terms at z=" + describe(z));
    }
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be positive");
  if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
}

cplx principal_log(cplx z) {
  // -0.0 imaginary part would select the lower lip of the cut.
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
  return std::log(z);
}

cplx principal_pow(cplx base, cplx exponent) {
  if (base == cplx(0.0, 0.0)) {
    if (exponent.real() > 0.0) return {0.0, 0.0};
    throw DomainError("principal_pow: zero base with exponent " + describe(exponent));
  }
  return std::exp(exponent * principal_log(base));
}

cplx qexp(cplx z, const QDeformation& q) {
  if (q.is_classical()) return std::exp(z);
  const double omq = q.one_minus_q();
  const cplx base = 1.0 + omq * z;
  if (base == cplx(0.0, 0.0) && 1.0 / omq <= 0.0) {
    throw DomainError("qexp: 1+(1-q)z vanishes with non-positive exponent at z=" + describe(z));
  }
  return principal_pow(base, 1.0 / omq);
}

cplx qlog(cplx w, const QDeformation& q) {
  if (w == cplx(0.0, 0.0)) throw DomainError("qlog: argument is zero");
  if (q.is_classical()) return principal_log(w);
  const double omq = q.one_minus_q();
  return (principal_pow(w, omq) - 1.0) / omq;
}

cplx pochhammer(cplx a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative order " + std::to_string(n));
  cplx acc(1.0, 0.0);
  for (int k = 0; k < n; ++k) acc *= a + static_cast<double>(k);
  return acc;
}

bool is_nonpositive_integer(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real(); }

cplx kummer_m(cplx a, cplx b, cplx z, const SeriesControl& ctrl) {
  ctrl.validate();
  if (is_nonpositive_integer(b)) throw PoleError("kummer_m: b is a nonpositive integer " + describe(b));
  if (!(std::abs(z) <= kKummerMaxAbsZ)) throw DomainError("kummer_m: |z| > 50 at z=" + describe(z));

  if (z.real() < 0.0) {
    const cplx num[] = {b - a};
    const cplx den[] = {b};
    return std::exp(z) * hypergeometric_series(num, den, -z, ctrl, "kummer_m");
  }
  const cplx num[] = {a};
  const cplx den[] = {b};
  return hypergeometric_series(num, den, z, ctrl, "kummer_m");
}

cplx gauss_2f1(cplx alpha, cplx beta, cplx gamma, cplx z, const SeriesControl& ctrl) {
  ctrl.validate();
  if (is_nonpositive_integer(gamma)) {
    throw PoleError("gauss_2f1: gamma is a nonpositive integer " + describe(gamma));
  }
  const bool terminating = is_nonpositive_integer(alpha) || is_nonpositive_integer(beta);
  if (!terminating && !(std::abs(z) <= kGaussMaxAbsZ)) {
    throw DomainError("gauss_2f1: |z| > 0.95 for a non-terminating series at z=" + describe(z));
  }
  const cplx num[] = {alpha, beta};
  const cplx den[] = {gamma};
  return hypergeometric_series(num, den, z, ctrl, "gauss_2f1");
}

}  // namespace hypwave
