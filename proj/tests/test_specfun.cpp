#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "hypwave/specfun.hpp"

using namespace hypwave;

namespace {

constexpr cplx kI{0.0, 1.0};

// Composite Simpson rule on [0, 1]; n must be even.
cplx simpson01(const std::function<cplx(double)>& f, int n) {
  const double h = 1.0 / n;
  cplx acc = f(0.0) + f(1.0);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(QDeformation, CachesOneMinusQAndClassicalFlag) {
  const QDeformation q(1.5);
  EXPECT_EQ(q.one_minus_q(), 1.0 - 1.5);
  EXPECT_FALSE(q.is_classical());
  EXPECT_TRUE(QDeformation(1.0).is_classical());
  EXPECT_TRUE(QDeformation(1.0 + 5e-10).is_classical());
  EXPECT_FALSE(QDeformation(1.0 + 2e-9).is_classical());
}

TEST(PrincipalPow, IdentityBase) {
  for (cplx w : {cplx(0.3, 0.0), cplx(-2.0, 1.0), cplx(0.0, 7.0)}) {
    EXPECT_EQ(principal_pow({1.0, 0.0}, w), cplx(1.0, 0.0));
  }
}

TEST(PrincipalPow, SquareRootOfMinusOneIsPlusI) {
  const cplx r = principal_pow({-1.0, 0.0}, 0.5);
  EXPECT_NEAR(r.real(), 0.0, 1e-16);
  EXPECT_NEAR(r.imag(), 1.0, 1e-16);
  // A negative-zero imaginary part stays on the upper lip.
  const cplx r2 = principal_pow({-1.0, -0.0}, 0.5);
  EXPECT_NEAR(r2.imag(), 1.0, 1e-16);
}

TEST(PrincipalPow, IntegerPowerMatchesMultiplication) {
  const cplx base(1.0, 1.0);
  const cplx oracle = base * base;  // 2i
  EXPECT_LT(std::abs(principal_pow(base, 2.0) - oracle), 1e-15);
  EXPECT_LT(std::abs(oracle - 2.0 * kI), 1e-16);
}

TEST(PrincipalPow, ZeroBase) {
  EXPECT_EQ(principal_pow({0.0, 0.0}, 2.5), cplx(0.0, 0.0));
  EXPECT_THROW(principal_pow({0.0, 0.0}, 0.0), DomainError);
  EXPECT_THROW(principal_pow({0.0, 0.0}, cplx(-1.0, 3.0)), DomainError);
}

TEST(QExp, ClassicalLimitIsExp) { EXPECT_NEAR(qexp(1.0, QDeformation(1.0)).real(), std::numbers::e, 1e-15); }

TEST(QExp, PolynomialAndReciprocalCases) {
  EXPECT_NEAR(std::abs(qexp(1.0, QDeformation(0.5)) - 2.25), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(qexp(0.5, QDeformation(2.0)) - 2.0), 0.0, 1e-15);
}

TEST(QExp, ZeroBaseErrors) {
  // q = 2: 1 - z vanishes at z = 1 with exponent -1.
  EXPECT_THROW(qexp(1.0, QDeformation(2.0)), DomainError);
  // q = 0.5: base 1 + 0.5 z vanishes at z = -2 with exponent 2 -> 0.
  EXPECT_EQ(qexp(-2.0, QDeformation(0.5)), cplx(0.0, 0.0));
}

TEST(QExp, ContinuityAtQNearOne) {
  const QDeformation q(1.0 + 1e-8);
  ASSERT_FALSE(q.is_classical());
  for (double re = -2.0; re <= 2.0; re += 0.25) {
    for (double im = -2.0; im <= 2.0; im += 0.25) {
      const cplx z(re, im);
      if (std::abs(z) > 2.0) continue;
      EXPECT_LE(std::abs(qexp(z, q) - std::exp(z)), 1e-6) << z;
    }
  }
}

TEST(QLog, UnitArgumentAndClassical) {
  for (double q : {0.5, 1.0, 1.5, 2.0, 3.0}) EXPECT_EQ(qlog(1.0, QDeformation(q)), cplx(0.0, 0.0));
  EXPECT_NEAR(qlog(std::numbers::e, QDeformation(1.0)).real(), 1.0, 1e-15);
  EXPECT_THROW(qlog(0.0, QDeformation(1.5)), DomainError);
}

TEST(QLog, RoundTripSpecificPoint) {
  const cplx z(0.3, 0.1);
  const QDeformation q(1.5);
  EXPECT_LT(std::abs(qlog(qexp(z, q), q) - z), 1e-12);
}

TEST(QLog, RoundTripProperty) {
  int checked = 0;
  for (double q : {0.5, 1.5, 2.0}) {
    const QDeformation qd(q);
    for (int i = -10; i <= 10; ++i) {
      for (int j = -10; j <= 10; ++j) {
        const cplx z(0.1 * i, 0.1 * j);
        const cplx base = 1.0 + qd.one_minus_q() * z;
        if (base == cplx(0.0, 0.0) || !(std::abs(std::arg(base)) < std::numbers::pi / 2)) continue;
        EXPECT_LE(std::abs(qlog(qexp(z, qd), qd) - z), 1e-12) << "q=" << q << " z=" << z;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer({3.7, -1.0}, 0), cplx(1.0, 0.0));
  EXPECT_EQ(pochhammer(1.0, 4), cplx(24.0, 0.0));
  const double oracle = 0.5 * 1.5 * 2.5;
  EXPECT_NEAR(pochhammer(0.5, 3).real(), oracle, 1e-15);
  EXPECT_NEAR(oracle, 1.875, 1e-15);
  EXPECT_THROW(pochhammer(1.0, -1), DomainError);
}

TEST(SeriesControl, Validation) {
  EXPECT_THROW(kummer_m(1.0, 2.0, 0.5, SeriesControl{0.0, 100}), DomainError);
  EXPECT_THROW(kummer_m(1.0, 2.0, 0.5, SeriesControl{1e-14, 0}), DomainError);
}

TEST(KummerM, IdentityCaseGivesExp) { EXPECT_NEAR(std::abs(kummer_m(2.7, 2.7, 1.0) - std::numbers::e), 0.0, 1e-14); }

TEST(KummerM, ClosedFormForAEqualsOneBEqualsTwo) {
  // M(1, 2; z) = (e^z - 1)/z.
  EXPECT_NEAR(std::abs(kummer_m(1.0, 2.0, 1.0) - std::expm1(1.0)), 0.0, 1e-15);
  for (cplx z : {cplx(-3.0, 0.5), cplx(0.2, -1.7), cplx(4.0, 4.0)}) {
    EXPECT_LT(rel_err(kummer_m(1.0, 2.0, z), (std::exp(z) - 1.0) / z), 1e-13) << z;
  }
}

TEST(KummerM, ZeroArgument) { EXPECT_EQ(kummer_m(cplx(0.3, 2.0), cplx(-1.5, 0.0), 0.0), cplx(1.0, 0.0)); }

TEST(KummerM, MatchesEulerIntegral) {
  // M(1, 3; z) = 2 * int_0^1 e^{z s} (1 - s) ds, independent of the series.
  for (cplx z : {cplx(1.5, 0.0), cplx(-2.0, 1.0), cplx(0.5, -3.0)}) {
    const cplx oracle = 2.0 * simpson01([z](double s) { return std::exp(z * s) * (1.0 - s); }, 4000);
    EXPECT_LT(rel_err(kummer_m(1.0, 3.0, z), oracle), 1e-12) << z;
  }
}

TEST(KummerM, TerminatingPolynomial) {
  // M(-2, b; z) = 1 - 2z/b + z^2/(b(b+1)).
  const cplx b(1.5, 0.0);
  for (cplx z : {cplx(3.0, 0.0), cplx(-7.0, 2.0)}) {
    const cplx oracle = 1.0 - 2.0 * z / b + z * z / (b * (b + 1.0));
    EXPECT_LT(rel_err(kummer_m(-2.0, b, z), oracle), 1e-13) << z;
  }
}

TEST(KummerM, Errors) {
  EXPECT_THROW(kummer_m(1.0, 0.0, 1.0), PoleError);
  EXPECT_THROW(kummer_m(1.0, -3.0, 1.0), PoleError);
  EXPECT_NO_THROW(kummer_m(1.0, cplx(-3.0, 1e-3), 1.0));
  EXPECT_THROW(kummer_m(1.0, 2.0, 50.5), DomainError);
  EXPECT_THROW(kummer_m(1.0, 2.0, 30.0, SeriesControl{1e-14, 10}), NoConvergence);
}

TEST(KummerM, ExpIdentityProperty) {
  std::mt19937 rng(20241016);
  std::uniform_real_distribution<double> radius(0.05, 5.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 200; ++trial) {
    const cplx a = std::polar(radius(rng), angle(rng));
    for (int iz = -20; iz <= 20; ++iz) {
      const double z = 0.5 * iz;
      EXPECT_LE(std::abs(kummer_m(a, a, z) - std::exp(z)), 1e-10 * std::exp(z)) << "a=" << a << " z=" << z;
    }
  }
}

TEST(Gauss2F1, BinomialIdentityCase) {
  // F(-2, g; g; -0.5) = (1 + 0.5)^2.
  for (double g : {1.0, 2.5, 7.0}) EXPECT_NEAR(std::abs(gauss_2f1(-2.0, g, g, -0.5) - 2.25), 0.0, 1e-15);
}

TEST(Gauss2F1, LogClosedForm) {
  // F(1, 1; 2; z) = -ln(1 - z)/z.
  const double oracle = -std::log(1.0 - 0.5) / 0.5;
  EXPECT_NEAR(gauss_2f1(1.0, 1.0, 2.0, 0.5).real(), oracle, 1e-14);
  EXPECT_NEAR(oracle, 1.386294361, 1e-9);
}

TEST(Gauss2F1, ZeroArgument) { EXPECT_EQ(gauss_2f1(0.7, cplx(1.0, 2.0), 3.3, 0.0), cplx(1.0, 0.0)); }

TEST(Gauss2F1, MatchesEulerIntegral) {
  // F(a, 1; 2; z) = int_0^1 (1 - z s)^{-a} ds.
  const cplx a(0.5, 0.3);
  for (cplx z : {cplx(0.5, 0.0), cplx(0.0, 0.5), cplx(-0.6, -0.4)}) {
    const cplx oracle = simpson01([a, z](double s) { return std::pow(1.0 - z * s, -a); }, 4000);
    EXPECT_LT(rel_err(gauss_2f1(a, 1.0, 2.0, z), oracle), 1e-12) << z;
  }
}

TEST(Gauss2F1, Errors) {
  EXPECT_THROW(gauss_2f1(1.0, 1.0, 0.0, 0.5), PoleError);
  EXPECT_THROW(gauss_2f1(1.0, 1.0, -2.0, 0.5), PoleError);
  EXPECT_THROW(gauss_2f1(1.0, 1.0, 2.0, 0.96), DomainError);
  // Terminating series are fine anywhere.
  EXPECT_NEAR(std::abs(gauss_2f1(-3.0, 1.0, 1.0, -4.0) - 125.0), 0.0, 1e-12);
  EXPECT_THROW(gauss_2f1(1.0, 1.0, 2.0, 0.95, SeriesControl{1e-14, 50}), NoConvergence);
}

TEST(Gauss2F1, TerminatingBinomialProperty) {
  int checked = 0;
  for (int alpha = 0; alpha <= 6; ++alpha) {
    for (double gamma : {1.0, 2.5}) {
      for (int ir = 0; ir <= 9; ++ir) {
        for (int ia = 0; ia < 24; ++ia) {
          const cplx z = std::polar(0.1 * ir, 2.0 * std::numbers::pi * ia / 24.0);
          const cplx oracle = std::pow(1.0 + z, static_cast<double>(alpha));
          const cplx got = gauss_2f1(-static_cast<double>(alpha), gamma, gamma, -z);
          EXPECT_LE(std::abs(got - oracle), 1e-10 * std::abs(oracle)) << "alpha=" << alpha << " z=" << z;
          ++checked;
        }
      }
    }
  }
  EXPECT_EQ(checked, 7 * 2 * 10 * 24);
}
