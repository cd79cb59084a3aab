#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hypwave/packets.hpp"

using namespace hypwave;

namespace {

constexpr cplx kI{0.0, 1.0};
const PacketConstants kUnit = PacketConstants::make(1.0, 1.0, 1.0, 1.0);

std::vector<PacketKind> sweep_kinds() {
  std::vector<PacketKind> kinds{PacketKind::classical()};
  for (double q : {0.5, 1.5, 2.0, 3.0}) kinds.push_back(PacketKind::q_deformed(QDeformation(q)));
  return kinds;
}

std::string describe(const PacketKind& kind) {
  return kind.is_classical() ? std::string("classical") : "q=" + std::to_string(kind.q().q());
}

}  // namespace

TEST(PacketConstants, Validation) {
  EXPECT_THROW(PacketConstants::make(0.0, 1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(PacketConstants::make(-1.0, 1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(PacketConstants::make(1.0, 0.0, 1.0, 1.0), DomainError);
  EXPECT_NO_THROW(PacketConstants::make(1.0, -2.0, 1.0, 1.0));
}

TEST(PacketKind, QDeformedRejectsClassicalQ) {
  EXPECT_THROW(PacketKind::q_deformed(QDeformation(1.0)), DomainError);
  EXPECT_THROW(qgaussian_coeffs(1.0, kUnit, QDeformation(1.0)), DomainError);
  EXPECT_THROW(qgaussian_coeffs(1.0, kUnit, QDeformation(0.0)), DomainError);
}

TEST(GaussianCoeffs, InitialValues) {
  const CoeffTriple c0 = gaussian_coeffs(0.0, kUnit);
  EXPECT_EQ(c0.a, cplx(1.0, 0.0));
  EXPECT_LE(std::abs(c0.c), 1e-15);
}

TEST(GaussianCoeffs, UnitTimeDivision) {
  const cplx oracle = 1.0 / cplx(1.0, 2.0);
  EXPECT_LT(std::abs(gaussian_coeffs(1.0, kUnit).a - oracle), 1e-16);
  EXPECT_LT(std::abs(oracle - cplx(0.2, -0.4)), 1e-16);
}

TEST(QGaussianCoeffs, InitialValues) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const PacketConstants k = PacketConstants::make(alpha, 1.0, 1.3, 0.7);
    for (double q : {0.5, 1.5, 2.0, 3.0}) {
      EXPECT_NEAR(std::abs(qgaussian_coeffs(0.0, k, QDeformation(q)).a - 1.0 / alpha), 0.0, 1e-15);
    }
  }
}

TEST(QGaussianCoeffs, UnitTimeDivision) {
  const cplx oracle = 2.0 / cplx(2.0, 3.0);
  EXPECT_LT(std::abs(qgaussian_coeffs(1.0, kUnit, QDeformation(2.0)).a - oracle), 1e-16);
  EXPECT_LT(std::abs(oracle - cplx(4.0, -6.0) / 13.0), 1e-16);
}

TEST(Coeffs, BoundaryConditionSweep) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const PacketConstants k = PacketConstants::make(alpha, beta, 1.0, 1.0);
      EXPECT_LE(std::abs(gaussian_coeffs(0.0, k).c), 1e-13);
      for (double q : {0.5, 1.5, 2.0, 3.0}) {
        EXPECT_LE(std::abs(qgaussian_coeffs(0.0, k, QDeformation(q)).c), 1e-13)
            << "alpha=" << alpha << " beta=" << beta << " q=" << q;
      }
    }
  }
}

TEST(PacketValue, Examples) {
  const PacketKind q2 = PacketKind::q_deformed(QDeformation(2.0));
  const CoeffTriple unit_a{1.0, 0.0, 0.0};
  EXPECT_NEAR(std::abs(packet_value(1.0, unit_a, PacketKind::classical()) - std::exp(-1.0)), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(packet_value(1.0, unit_a, q2) - 0.5), 0.0, 1e-16);
  for (const PacketKind& kind : sweep_kinds()) {
    const cplx origin = packet_value(0.0, packet_coeffs(0.0, kUnit, kind), kind);
    EXPECT_LT(std::abs(origin - 1.0), 1e-15) << describe(kind);
  }
  // Zero base with a negative exponent.
  EXPECT_THROW(packet_value(1.0, CoeffTriple{-1.0, 0.0, 0.0}, q2), DomainError);
}

TEST(OdeRhs, FixedPoint) {
  for (const PacketKind& kind : sweep_kinds()) {
    const CoeffTriple d = ode_rhs(CoeffTriple{}, kUnit, kind);
    EXPECT_EQ(d.a, cplx(0.0, 0.0));
    EXPECT_EQ(d.b, cplx(0.0, 0.0));
    EXPECT_EQ(d.c, cplx(0.0, 0.0));
  }
}

TEST(OdeRhs, SubstitutionValues) {
  const CoeffTriple unit_a{1.0, 0.0, 0.0};
  // Classical: a' = 2a^2/i, b' = 0, c' = -2a/(2i).
  const CoeffTriple dc = ode_rhs(unit_a, kUnit, PacketKind::classical());
  EXPECT_LT(std::abs(dc.a - 2.0 / kI), 1e-15);
  EXPECT_LT(std::abs(dc.a - cplx(0.0, -2.0)), 1e-15);
  EXPECT_EQ(dc.b, cplx(0.0, 0.0));
  EXPECT_LT(std::abs(dc.c - kI), 1e-15);
  // q = 2: a' = 3a^2/(2i), c' = -2a/(4i).
  const CoeffTriple dq = ode_rhs(unit_a, kUnit, PacketKind::q_deformed(QDeformation(2.0)));
  EXPECT_LT(std::abs(dq.a - 3.0 / (2.0 * kI)), 1e-15);
  EXPECT_EQ(dq.b, cplx(0.0, 0.0));
  EXPECT_LT(std::abs(dq.c - (-2.0) / (4.0 * kI)), 1e-15);
  EXPECT_LT(std::abs(dq.c - 0.5 * kI), 1e-15);
}

TEST(IntegrateRk4, ZeroIntervalAndStepValidation) {
  const CoeffTriple init{cplx(1.0, 2.0), cplx(-0.5, 0.0), cplx(0.0, 3.0)};
  const CoeffTriple out = integrate_rk4(PacketKind::classical(), kUnit, init, 0.0, 0.0, 10);
  EXPECT_EQ(out.a, init.a);
  EXPECT_EQ(out.b, init.b);
  EXPECT_EQ(out.c, init.c);
  EXPECT_THROW(integrate_rk4(PacketKind::classical(), kUnit, init, 0.0, 1.0, 0), DomainError);
}

TEST(IntegrateRk4, MatchesClosedFormSweep) {
  for (const PacketKind& kind : sweep_kinds()) {
    const CoeffTriple init = packet_coeffs(0.0, kUnit, kind);
    for (double t : {0.25, 0.5, 1.0}) {
      const CoeffTriple rk = integrate_rk4(kind, kUnit, init, 0.0, t, 10000);
      const ComponentGap gap = coeff_gap(rk, packet_coeffs(t, kUnit, kind));
      EXPECT_LE(gap.max(), 1e-8) << describe(kind) << " t=" << t;
    }
  }
}

TEST(IntegrateRk4, ClassicalSlopeCoefficientAtNonUnitMass) {
  // b(t) = 1/(beta (2 i hbar t + m alpha)) is the form that solves the
  // coefficient system when m != 1.
  const PacketConstants k = PacketConstants::make(0.8, 1.5, 2.0, 0.7);
  const CoeffTriple init = gaussian_coeffs(0.0, k);
  const CoeffTriple rk = integrate_rk4(PacketKind::classical(), k, init, 0.0, 1.0, 10000);
  EXPECT_LE(coeff_gap(rk, gaussian_coeffs(1.0, k)).max(), 1e-8);
  const cplx den = 2.0 * kI * k.hbar + k.m * k.alpha;
  EXPECT_LT(std::abs(gaussian_coeffs(1.0, k).b - 1.0 / (k.beta * den)), 1e-15);
}

TEST(ClosedForm, TimeDerivativeMatchesOdeRhs) {
  const double h = 1e-5;
  for (const PacketKind& kind : sweep_kinds()) {
    for (double t : {0.25, 0.5, 1.0}) {
      const CoeffTriple fd =
          (0.5 / h) * (packet_coeffs(t + h, kUnit, kind) + (-1.0) * packet_coeffs(t - h, kUnit, kind));
      const CoeffTriple rhs = ode_rhs(packet_coeffs(t, kUnit, kind), kUnit, kind);
      EXPECT_LE(coeff_gap(fd, rhs).max(), 1e-6) << describe(kind) << " t=" << t;
    }
  }
}

TEST(ComponentGap, RelativeOrAbsolute) {
  const ComponentGap g = coeff_gap({2.0, 0.1, 3.0}, {1.0, 0.0, 3.0});
  EXPECT_DOUBLE_EQ(g.a, 1.0);
  EXPECT_DOUBLE_EQ(g.b, 0.1);
  EXPECT_DOUBLE_EQ(g.c, 0.0);
  EXPECT_DOUBLE_EQ(g.max(), 1.0);
}

TEST(ClassicalLimit, SmallDeformation) { EXPECT_LE(classical_limit_gap(1.0, kUnit, QDeformation(1.0 + 1e-6)), 1e-4); }

TEST(ClassicalLimit, LinearConvergence) {
  const double g1 = classical_limit_gap(1.0, kUnit, QDeformation(1.0 + 1e-3));
  const double g2 = classical_limit_gap(1.0, kUnit, QDeformation(1.0 + 5e-4));
  EXPECT_NEAR(g1 / g2, 2.0, 0.4);
}

TEST(ClassicalLimit, InitialTimeComponents) {
  for (double q : {0.5, 1.5, 2.0}) {
    const ComponentGap g = classical_limit_gaps(0.0, kUnit, QDeformation(q));
    EXPECT_EQ(g.a, 0.0);
    EXPECT_LE(g.c, 1e-13);
    // b(0) = 1/(beta m q alpha) against 1/(beta m alpha).
    EXPECT_NEAR(g.b, std::abs(1.0 / q - 1.0), 1e-15);
  }
}

TEST(ClassicalLimit, MonotoneAndPointwise) {
  double previous = INFINITY;
  double previous_value_gap = INFINITY;
  for (double dq : {1e-2, 1e-3, 1e-4}) {
    const QDeformation q(1.0 + dq);
    const double gap = classical_limit_gap(1.0, kUnit, q);
    EXPECT_LT(gap, previous) << dq;
    previous = gap;

    const PacketKind kind = PacketKind::q_deformed(q);
    double value_gap = 0.0;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const double x = -1.0 + 0.5 * i;
        const double t = 0.25 * j;
        const cplx ref = packet_value(x, gaussian_coeffs(t, kUnit), PacketKind::classical());
        const cplx got = packet_value(x, qgaussian_coeffs(t, kUnit, q), kind);
        value_gap = std::max(value_gap, std::abs(got - ref) / std::abs(ref));
      }
    }
    EXPECT_LT(value_gap, previous_value_gap) << dq;
    EXPECT_LE(value_gap, 20.0 * dq) << dq;
    previous_value_gap = value_gap;
  }
}

TEST(ClassicalLimit, BothSidesOfOne) {
  const double below = classical_limit_gap(1.0, kUnit, QDeformation(0.99));
  const double above = classical_limit_gap(1.0, kUnit, QDeformation(1.01));
  EXPECT_TRUE(std::isfinite(below));
  EXPECT_TRUE(std::isfinite(above));
  EXPECT_LT(std::abs(std::log10(below / above)), 1.0);
}
