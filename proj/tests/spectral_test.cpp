// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bargmann/error.hpp"
#include "bargmann/spectral.hpp"
#include "oracles.hpp"

namespace bargmann {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kJ{0.0, 1.0};

Signal random_signal(std::size_t n, double d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Signal(SampleGrid(n, d), testing::random_complex(static_cast<Eigen::Index>(n), rng));
}

Field gaussian_field(const FieldGrid& g) {
  Field f(g, FieldKind::normalized);
  for (std::size_t p = 0; p < g.x.count(); ++p) {
    for (std::size_t q = 0; q < g.y.count(); ++q) {
      const double x = g.x.position(p);
      const double y = g.y.position(q);
      f.values(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
          std::exp(-0.5 * (x * x + y * y));
    }
  }
  return f;
}

TEST(CenteredDft1d, CenteredDeltaGivesConstant) {
  Signal s(SampleGrid(15, 0.3));
  s.samples(7) = 1.0;
  const Signal x = centered_dft_1d(s, Direction::forward, dual_spacing(s.grid));
  for (Eigen::Index i = 0; i < x.samples.size(); ++i) {
    EXPECT_NEAR(std::abs(x.samples(i) - Complex(0.3, 0.0)), 0.0, 1e-15);
  }
}

TEST(CenteredDft1d, MatchesDefiningSum) {
  const Signal s = random_signal(11, 0.7, 3);
  const double d_out = dual_spacing(s.grid);
  for (Direction dir : {Direction::forward, Direction::inverse}) {
    const Signal x = centered_dft_1d(s, dir, d_out);
    const double sign = dir == Direction::forward ? -1.0 : 1.0;
    const double scale = dir == Direction::forward ? 0.7 : 0.7 / (2.0 * kPi);
    for (int q = -5; q <= 5; ++q) {
      Complex acc = 0.0;
      for (int n = -5; n <= 5; ++n) {
        acc += s.samples(n + 5) * std::exp(sign * kJ * (q * d_out * n * 0.7));
      }
      EXPECT_NEAR(std::abs(x.samples(q + 5) - scale * acc), 0.0, 1e-13);
    }
    EXPECT_NEAR(x.grid.spacing(), d_out, 1e-15);
  }
}

TEST(CenteredDft1d, RoundTrip) {
  const Signal s = random_signal(63, 0.21, 5);
  const double d_out = dual_spacing(s.grid);
  const Signal x = centered_dft_1d(s, Direction::forward, d_out);
  const Signal back = centered_dft_1d(x, Direction::inverse, dual_spacing(x.grid));
  const double linf = s.samples.cwiseAbs().maxCoeff();
  EXPECT_LE((back.samples - s.samples).cwiseAbs().maxCoeff(), 1e-12 * linf);
  EXPECT_NEAR(back.grid.spacing(), 0.21, 1e-14);
}

TEST(CenteredDft1d, Parseval) {
  const Signal s = random_signal(101, 0.157, 9);
  const double d_out = dual_spacing(s.grid);
  const Signal x = centered_dft_1d(s, Direction::forward, d_out);
  const double lhs = s.grid.spacing() * s.samples.squaredNorm();
  const double rhs = d_out / (2.0 * kPi) * x.samples.squaredNorm();
  EXPECT_NEAR(rhs, lhs, 1e-10 * lhs);
}

TEST(CenteredDft1d, Linear) {
  const Signal a = random_signal(31, 0.4, 1);
  const Signal b = random_signal(31, 0.4, 2);
  const Complex alpha(0.3, -1.2);
  const Complex beta(2.0, 0.5);
  const double d = dual_spacing(a.grid);
  for (Direction dir : {Direction::forward, Direction::inverse}) {
    const Signal combo(a.grid, alpha * a.samples + beta * b.samples);
    const Eigen::VectorXcd lhs = centered_dft_1d(combo, dir, d).samples;
    const Eigen::VectorXcd rhs = alpha * centered_dft_1d(a, dir, d).samples +
                                 beta * centered_dft_1d(b, dir, d).samples;
    EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13 * rhs.cwiseAbs().maxCoeff());
  }
}

TEST(CenteredDft1d, SpacingConstraintNamesRequiredValue) {
  const Signal s = random_signal(15, 0.3, 4);
  try {
    centered_dft_1d(s, Direction::forward, 0.5);
    FAIL() << "constraint not enforced";
  } catch (const GridConstraintError& e) {
    const double required = 2.0 * kPi / (15 * 0.3);
    EXPECT_NE(std::string(e.what()).find(std::to_string(required).substr(0, 6)), std::string::npos)
        << e.what();
  }
  EXPECT_NO_THROW(centered_dft_1d(s, Direction::forward, dual_spacing(s.grid) * (1 + 1e-14)));
}

TEST(CenteredDft2d, SeparableProduct) {
  const Signal a = random_signal(9, 0.5, 21);
  const Signal b = random_signal(13, 0.3, 22);
  Field f(FieldGrid{a.grid, b.grid}, a.samples * b.samples.transpose(), FieldKind::normalized);
  const Field x = centered_dft_2d(f, Direction::forward);
  const Eigen::VectorXcd xa = centered_dft_1d(a, Direction::forward, dual_spacing(a.grid)).samples;
  const Eigen::VectorXcd xb = centered_dft_1d(b, Direction::forward, dual_spacing(b.grid)).samples;
  const Eigen::MatrixXcd expect = xa * xb.transpose();
  EXPECT_LE((x.values - expect).cwiseAbs().maxCoeff(), 1e-13 * expect.cwiseAbs().maxCoeff());
}

TEST(CenteredDft2d, RoundTripAndDelta) {
  std::mt19937_64 rng(8);
  const FieldGrid g{SampleGrid(17, 0.2), SampleGrid(11, 0.6)};
  Field f(g, FieldKind::gabor);
  for (Eigen::Index p = 0; p < 17; ++p) f.values.row(p) = testing::random_complex(11, rng).transpose();
  const Field back = centered_dft_2d(centered_dft_2d(f, Direction::forward), Direction::inverse);
  EXPECT_LE(*nmse(f.values, back.values).nmse, 1e-24);
  EXPECT_EQ(back.kind, FieldKind::gabor);

  Field delta(g, FieldKind::normalized);
  delta.values(8, 5) = 1.0;
  const Field plane = centered_dft_2d(delta, Direction::forward);
  EXPECT_LE((plane.values.array() - Complex(0.2 * 0.6, 0.0)).abs().maxCoeff(), 1e-15);
}

TEST(ChirpMatrix2, RejectsAsymmetric) {
  Eigen::Matrix2cd c;
  c << 0.0, 1.0, 2.0, 0.0;
  EXPECT_THROW(ChirpMatrix2{c}, ArgumentError);
}

TEST(ChirpMatrix2, ReportsGrowth) {
  Eigen::Matrix2cd c;
  c << kJ, 0.0, 0.0, 0.0;
  EXPECT_TRUE(ChirpMatrix2(c).decays());
  c(1, 1) = -kJ;
  EXPECT_FALSE(ChirpMatrix2(c).decays());
  EXPECT_TRUE(ChirpMatrix2(c).decays_on_x_axis());
}

TEST(ChirpMultiply2d, ZeroIsIdentity) {
  const FieldGrid g{SampleGrid(9, 0.4), SampleGrid(9, 0.4)};
  const Field f = gaussian_field(g);
  EXPECT_EQ(chirp_multiply_2d(f, ChirpMatrix2(Eigen::Matrix2cd::Zero())).values, f.values);
}

TEST(ChirpMultiply2d, CrossTermAndGaussian) {
  const FieldGrid g{SampleGrid(9, 0.4), SampleGrid(7, 0.3)};
  Field ones(g, Eigen::MatrixXcd::Ones(9, 7), FieldKind::normalized);
  const double gamma = 0.8;
  Eigen::Matrix2cd c;
  c << 0.0, gamma, gamma, 0.0;
  const Field cross = chirp_multiply_2d(ones, ChirpMatrix2(c));
  Eigen::Matrix2cd gauss;
  gauss << kJ, 0.0, 0.0, 0.0;
  const Field damped = chirp_multiply_2d(ones, ChirpMatrix2(gauss));
  for (std::size_t p = 0; p < 9; ++p) {
    for (std::size_t q = 0; q < 7; ++q) {
      const double x = g.x.position(p);
      const double y = g.y.position(q);
      const auto ip = static_cast<Eigen::Index>(p);
      const auto iq = static_cast<Eigen::Index>(q);
      EXPECT_NEAR(std::abs(cross.values(ip, iq) - std::exp(kJ * gamma * x * y)), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(damped.values(ip, iq) - std::exp(-0.5 * x * x)), 0.0, 1e-15);
    }
  }
}

TEST(ChirpMultiply2d, RealChirpPreservesMagnitude) {
  std::mt19937_64 rng(3);
  const FieldGrid g{SampleGrid(11, 0.5), SampleGrid(11, 0.5)};
  Field f(g, FieldKind::normalized);
  for (Eigen::Index p = 0; p < 11; ++p) f.values.row(p) = testing::random_complex(11, rng).transpose();
  Eigen::Matrix2cd c;
  c << 0.3, -0.7, -0.7, 1.1;
  const Field out = chirp_multiply_2d(f, ChirpMatrix2(c));
  EXPECT_LE((out.values.cwiseAbs() - f.values.cwiseAbs()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ChirpMultiply2d, GrowingChirpRejected) {
  const FieldGrid g{SampleGrid(5, 0.5), SampleGrid(5, 0.5)};
  Eigen::Matrix2cd c;
  c << -kJ, 0.0, 0.0, 0.0;
  EXPECT_THROW(chirp_multiply_2d(gaussian_field(g), ChirpMatrix2(c)), ArgumentError);
}

TEST(ChirpConvolve2d, MatchesQuadratureOracle) {
  const double d = std::sqrt(2.0 * kPi / 33.0);
  const FieldGrid g{SampleGrid(33, d), SampleGrid(33, d)};
  for (double beta : {0.5, -0.7}) {
    Eigen::Matrix2cd b;
    b << 0.0, beta, beta, 0.0;
    const Field fast = chirp_convolve_2d(gaussian_field(g), b);
    const Field ref = testing::chirp_convolution_quadrature(g, beta, 512, 12.0);
    EXPECT_LE(*nmse(ref, fast).nmse, 1e-8) << "beta=" << beta;
  }
}

TEST(ChirpConvolve2d, OppositeChirpsCancel) {
  const SampleGrid s(63, std::sqrt(2.0 * kPi / 63.0));
  const FieldGrid g{s, s};
  const Field f = gaussian_field(g);
  Eigen::Matrix2cd b;
  b << 0.4, -0.3, -0.3, 0.9;
  const Field back = chirp_convolve_2d(chirp_convolve_2d(f, b), -b);
  EXPECT_LE(*nmse(f, back).nmse, 1e-20);
}

TEST(ChirpConvolve2d, ZeroFieldStaysZero) {
  const FieldGrid g{SampleGrid(9, 0.5), SampleGrid(9, 0.5)};
  Eigen::Matrix2cd b;
  b << 0.0, 1.0, 1.0, 0.0;
  const Field out = chirp_convolve_2d(Field(g, FieldKind::normalized), b);
  EXPECT_EQ(out.values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(ChirpConvolve2d, SingularMatrixPointsToBZeroBranch) {
  const FieldGrid g{SampleGrid(9, 0.5), SampleGrid(9, 0.5)};
  Eigen::Matrix2cd b;
  b << 1.0, 1.0, 1.0, 1.0;
  try {
    chirp_convolve_2d(gaussian_field(g), b);
    FAIL() << "singular B accepted";
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("B = 0"), std::string::npos);
  }
  Eigen::Matrix2cd asym;
  asym << 0.0, 1.0, 2.0, 0.0;
  EXPECT_THROW(chirp_convolve_2d(gaussian_field(g), asym), ArgumentError);
}

}  // namespace
}  // namespace bargmann
