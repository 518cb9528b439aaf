#include "wedgecp/limits.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "wedgecp/errors.hpp"

namespace wedgecp::limits {
namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

TEST(WallNonRetarded, Values) {
  const auto atom = AtomModel::unit();
  EXPECT_DOUBLE_EQ(wall_nonretarded(atom, 1.0), -1.0 / 8);
  EXPECT_DOUBLE_EQ(wall_nonretarded(atom, 2.0), -1.0 / 64);
  EXPECT_DOUBLE_EQ(wall_nonretarded(AtomModel({{0.3, 1.0}, {0.7, 2.0}}), 1.0),
                   -(0.3 + 1.4) / 8);
  EXPECT_THROW(wall_nonretarded(atom, 0.0), DomainError);
}

TEST(WallRetarded, Values) {
  const auto atom = AtomModel::unit();
  EXPECT_DOUBLE_EQ(wall_retarded(atom, 1.0), -3.0 / (8 * kPi));
  EXPECT_NEAR(wall_retarded(atom, 1.0), -0.1193662, 1e-7);
  EXPECT_DOUBLE_EQ(wall_retarded(atom, 2.0), wall_retarded(atom, 1.0) / 16);
  EXPECT_THROW(wall_retarded(atom, -1.0), DomainError);
}

TEST(WallRetarded, EqualsClosedWedgeAtQOne) {
  const auto atom = AtomModel::unit();
  for (double z : {0.5, 1.0, 3.0}) {
    EXPECT_DOUBLE_EQ(wall_retarded(atom, z), cp_wedge_closed(1.0, z, kPi / 2, 1.0));
  }
  EXPECT_DOUBLE_EQ(cp_bracket(kPi / 2, 1.0), -1.5);
}

TEST(CpWedgeSum, WallCase) {
  EXPECT_NEAR(cp_wedge_sum(1.0, 1.0, kPi / 2, 1), -3.0 / (8 * kPi), 1e-16);
}

TEST(CpWedgeSum, RightAngleWedge) {
  EXPECT_NEAR(cp_wedge_sum(1.0, 1.0, kPi / 4, 2), -46.0 / (16 * kPi), 1e-14);
  EXPECT_NEAR(cp_wedge_sum(1.0, 1.0, kPi / 4, 2), -11.5 / (4 * kPi), 1e-14);
}

TEST(CpWedgeClosed, RightAngleWedgeBracket) {
  EXPECT_NEAR(cp_bracket(kPi / 4, 2.0), -11.5, 1e-13);
  EXPECT_NEAR(cp_wedge_closed(1.0, 1.0, kPi / 4, 2.0), -11.5 / (4 * kPi), 1e-14);
}

TEST(CpWedgeClosed, AgreesWithSumAtQThree) {
  const double a = cp_wedge_closed(1.0, 1.0, kPi / 6, 3.0);
  EXPECT_LT(rel_err(a, cp_wedge_sum(1.0, 1.0, kPi / 6, 3)), 1e-10);
}

TEST(CpWedge, SumEqualsClosedOnGrid) {
  for (int q = 1; q <= 8; ++q) {
    for (int j = 1; j <= 9; ++j) {
      const double phi = (kPi / q) * j / 10.0;
      for (double rho : {0.7, 2.0}) {
        EXPECT_LT(rel_err(cp_wedge_sum(1.3, rho, phi, q),
                          cp_wedge_closed(1.3, rho, phi, q)),
                  1e-10)
            << "q=" << q << " phi=" << phi;
      }
    }
  }
}

TEST(CpWedgeClosed, AcceptsRealQ) {
  // phi0 = pi/1.5 = 120 degrees; mid-plane point.
  const double q = 1.5;
  const double v = cp_wedge_closed(1.0, 1.0, kPi / (2 * q), q);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_LT(v, 0.0);
  EXPECT_THROW(cp_wedge_closed(1.0, 1.0, 0.0, q), SingularityError);
  EXPECT_THROW(cp_wedge_closed(1.0, 1.0, 0.3, -2.0), DomainError);
}

TEST(CpWedgeClosed, PartsAddUp) {
  for (int q = 1; q <= 6; ++q) {
    const double phi = 0.37 * kPi / q;
    const auto parts = cp_wedge_closed_parts(1.0, 1.4, phi, q);
    EXPECT_NEAR(parts.direct + parts.corner, cp_wedge_closed(1.0, 1.4, phi, q),
                1e-14 * std::abs(parts.direct));
    if (q == 1) EXPECT_EQ(parts.corner, 0.0);
  }
}

TEST(Csc4CornerSum, SmallQ) {
  EXPECT_EQ(csc4_corner_sum(1), 0.0);
  EXPECT_EQ(csc4_corner_closed(1), 0.0);
  EXPECT_NEAR(csc4_corner_sum(2), 1.0, 1e-15);
  EXPECT_NEAR(csc4_corner_closed(2), 1.0, 1e-15);
  EXPECT_NEAR(csc4_corner_sum(3), 32.0 / 9, 1e-14);
  EXPECT_NEAR(csc4_corner_closed(3), 32.0 / 9, 1e-14);
}

TEST(Csc4CornerSum, ClosedFormUpToTwelve) {
  for (int q = 2; q <= 12; ++q) {
    EXPECT_LT(rel_err(csc4_corner_sum(q), csc4_corner_closed(q)), 1e-12) << q;
  }
}

TEST(Csc4FieldSum, BracketReconstruction) {
  EXPECT_NEAR(csc4_field_sum(1, kPi / 2), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(bracket_from_sums(1.0, 0.0), -1.5);
  EXPECT_NEAR(csc4_field_sum(2, kPi / 4), 8.0, 1e-14);
  EXPECT_NEAR(bracket_from_sums(csc4_field_sum(2, kPi / 4), csc4_corner_sum(2)),
              -11.5, 1e-13);
  const double phi = kPi / 6;
  const double rebuilt =
      bracket_from_sums(csc4_field_sum(3, phi), csc4_corner_sum(3));
  EXPECT_LT(rel_err(rebuilt, cp_bracket(phi, 3.0)), 1e-12);
}

TEST(Csc4FieldSum, ClosedFormOnGrid) {
  for (int q = 1; q <= 10; ++q) {
    for (int j = 1; j <= 9; ++j) {
      const double phi = (kPi / q) * j / 10.0;
      EXPECT_LT(rel_err(csc4_field_sum(q, phi), csc4_field_closed(q, phi)), 1e-12)
          << "q=" << q << " phi=" << phi;
    }
  }
}

TEST(Csc4, AgreesWithLongDoubleBruteForce) {
  const auto ref = oracle::brute_lattice_sums(3, kPi / 6);
  EXPECT_LT(rel_err(csc4_field_sum(3, kPi / 6), ref.field_sum), 1e-12);
  EXPECT_LT(rel_err(csc4_corner_sum(3), ref.corner_sum), 1e-12);
}

TEST(Limits, NegativeOnDomain) {
  const auto atom = AtomModel::unit();
  for (double z = 0.1; z < 100; z *= 2) {
    EXPECT_LT(wall_nonretarded(atom, z), 0.0);
    EXPECT_LT(wall_retarded(atom, z), 0.0);
  }
  for (int q = 1; q <= 8; ++q) {
    for (int j = 1; j <= 9; ++j) {
      const double phi = (kPi / q) * j / 10.0;
      EXPECT_LT(cp_wedge_closed(1.0, 1.0, phi, q), 0.0);
      EXPECT_LT(cp_wedge_sum(1.0, 1.0, phi, q), 0.0);
    }
  }
}

TEST(Limits, BoundaryIsSingular) {
  EXPECT_THROW(cp_wedge_sum(1.0, 1.0, 0.0, 2), SingularityError);
  EXPECT_THROW(csc4_field_sum(2, kPi / 2), SingularityError);
}

}  // namespace
}  // namespace wedgecp::limits
