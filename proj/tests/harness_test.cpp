// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "bargmann/error.hpp"
#include "bargmann/harness.hpp"

namespace bargmann {
namespace {

const SampleGrid kFig(255, 0.157);

std::vector<Method> all_methods() { return {std::begin(kAllMethods), std::end(kAllMethods)}; }

TEST(Method, NamesRoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("fractional"), ArgumentError);
}

TEST(AccuracySweep, OrderZeroIsExact) {
  const auto rows = accuracy_sweep(all_methods(), 0, 0, 127, 0.2224);
  ASSERT_EQ(rows.size(), 5u);
  for (const SweepRow& r : rows) {
    ASSERT_TRUE(r.nmse.has_value());
    EXPECT_LE(*r.nmse, 1e-8) << to_string(r.method);
  }
}

TEST(AccuracySweep, HgBeatsGaborAboveRoundingFloor) {
  const auto rows = accuracy_sweep({Method::gabor, Method::hg}, 10, 60, 127, 0.2224);
  ASSERT_EQ(rows.size(), 102u);
  // Below 1e-26 both sit at the rounding floor and the order is noise.
  constexpr double kFloor = 1e-26;
  for (std::size_t i = 0; i < 51; ++i) {
    const double gabor = *rows[i].nmse;
    const double hg = *rows[51 + i].nmse;
    if (gabor > kFloor) {
      EXPECT_LT(hg, gabor) << "order " << rows[i].order;
    } else {
      EXPECT_LE(hg, kFloor) << "order " << rows[i].order;
    }
  }
}

TEST(AccuracySweep, GrowsWithOrder) {
  const auto rows = accuracy_sweep({Method::gyrator}, 0, 100, 127, 0.2224);
  double running = 0.0;
  for (const SweepRow& r : rows) {
    const double v = std::max(*r.nmse, 1e-26);
    EXPECT_GE(v, running / 10.0) << "order " << r.order;
    running = std::max(running, v);
  }
  EXPECT_GT(*rows.back().nmse, 1e-3);
}

TEST(AccuracySweep, IndependentOfMethodOrder) {
  const auto a = accuracy_sweep({Method::direct, Method::nslct}, 3, 8, 63, 0.3);
  const auto b = accuracy_sweep({Method::nslct, Method::direct}, 3, 8, 63, 0.3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(a[i].method, b[6 + i].method);
    EXPECT_EQ(a[i].order, b[6 + i].order);
    EXPECT_EQ(*a[i].nmse, *b[6 + i].nmse);
  }
}

TEST(AccuracySweep, RejectsBadRange) {
  EXPECT_THROW(accuracy_sweep(all_methods(), 0, 127, 127, 0.2224), ArgumentError);
  EXPECT_THROW(accuracy_sweep(all_methods(), 5, 4, 127, 0.2224), ArgumentError);
  EXPECT_THROW(accuracy_sweep(all_methods(), -1, 4, 127, 0.2224), ArgumentError);
}

TEST(RoundtripNmse, TestSignal) {
  const Signal s = make_test_signal(kFig);
  EXPECT_LE(*roundtrip_nmse(Method::gabor, s, GaborInverse::double_sum).nmse, 1e-20);
  EXPECT_LE(*roundtrip_nmse(Method::nslct, s).nmse, 1e-20);
}

TEST(RoundtripNmse, ZeroSignalHasZeroMse) {
  const Signal zero(SampleGrid(31, 0.4));
  for (Method m : kAllMethods) {
    const Metric r = roundtrip_nmse(m, zero);
    EXPECT_FALSE(r.nmse.has_value());
    EXPECT_EQ(r.mse, 0.0) << to_string(m);
  }
}

TEST(PredictedRealMults, Examples) {
  EXPECT_EQ(predicted_real_mults(Method::direct, 255), 66325500u);
  EXPECT_EQ(predicted_real_mults(Method::gabor, 256), 1441792u);
  EXPECT_EQ(predicted_real_mults(Method::nslct, 256), 4980736u);
  EXPECT_EQ(predicted_real_mults(Method::gyrator, 256), 5111808u);
  EXPECT_EQ(predicted_real_mults(Method::gyrator, 256) - predicted_real_mults(Method::nslct, 256),
            2u * 256 * 256);
}

TEST(PredictedRealMults, FormulasAtPowersOfTwo) {
  for (std::uint64_t log = 1; log <= 16; ++log) {
    const std::uint64_t n = std::uint64_t{1} << log;
    EXPECT_EQ(predicted_real_mults(Method::direct, n), 4 * n * n * n);
    EXPECT_EQ(predicted_real_mults(Method::gabor, n), 2 * n * n * log + 6 * n * n);
    EXPECT_EQ(predicted_real_mults(Method::hg, n), 3 * n * n * n + 5 * n * n + 2 * n);
    EXPECT_EQ(predicted_real_mults(Method::gyrator, n), 8 * n * n * log + 14 * n * n);
    EXPECT_EQ(predicted_real_mults(Method::nslct, n), 8 * n * n * log + 12 * n * n);
  }
}

TEST(PredictedRealMults, RoundsOtherSizes) {
  const long double n = 255;
  const long double lg = std::log2(n);
  EXPECT_EQ(predicted_real_mults(Method::gabor, 255),
            static_cast<std::uint64_t>(std::llround(2 * n * n * lg + 6 * n * n)));
  EXPECT_EQ(predicted_real_mults(Method::nslct, 255),
            static_cast<std::uint64_t>(std::llround(8 * n * n * lg + 12 * n * n)));
  EXPECT_THROW(predicted_real_mults(Method::direct, 1), ArgumentError);
}

TEST(CompareMethods, SymmetricWithExpectedAgreement) {
  const MethodComparison c = compare_methods(make_test_signal(kFig));
  ASSERT_EQ(c.labels.size(), 6u);
  ASSERT_EQ(c.nmse.rows(), 6);
  for (Eigen::Index i = 0; i < 6; ++i) {
    EXPECT_EQ(c.nmse(i, i), 0.0);
    for (Eigen::Index j = 0; j < 6; ++j) {
      if (std::isnan(c.nmse(i, j))) {
        EXPECT_TRUE(std::isnan(c.nmse(j, i)));
      } else {
        EXPECT_EQ(c.nmse(i, j), c.nmse(j, i));
      }
    }
  }
  EXPECT_LE(c.nmse(0, 1), 1e-18);  // direct@gabor vs gabor
  EXPECT_LE(c.nmse(4, 5), 1e-6);   // gyrator vs nslct
  EXPECT_LE(c.nmse(2, 4), 1e-6);   // direct vs gyrator
  EXPECT_TRUE(std::isnan(c.nmse(0, 2)));
}

TEST(DefaultOutputGrid, MatchesMethodConventions) {
  const FieldGrid d = default_output_grid(Method::direct, kFig);
  EXPECT_NEAR(d.x.spacing(), 0.157 / std::sqrt(2.0), 1e-15);
  const FieldGrid g = default_output_grid(Method::gyrator, kFig);
  EXPECT_EQ(g.x, kFig);
  EXPECT_EQ(g.y, kFig);
}

}  // namespace
}  // namespace bargmann
