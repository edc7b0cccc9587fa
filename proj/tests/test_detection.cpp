#include "ltd/detection.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ltd/errors.hpp"
#include "ltd/rng.hpp"
#include "ltd/signal.hpp"
#include "oracles.hpp"

namespace {

// Signals whose samples are integer multiples of 2^-10 stay exactly
// representable under the translations and scalings below, so the
// invariance checks can demand bit-identical results.
ltd::Signal dyadic_signal(ltd::Rng& rng, std::size_t n) {
  ltd::Signal x(n);
  for (double& v : x) {
    const double k = std::floor(rng.uniform() * 32769.0) - 16384.0;
    v = k / 1024.0;
  }
  return x;
}

TEST(SecondDifferences, AffineIsZero) {
  EXPECT_EQ(ltd::second_differences({1, 2, 3, 4}),
            (std::vector<double>{0, 0}));
}

TEST(SecondDifferences, HandChecked) {
  EXPECT_EQ(ltd::second_differences({0, 1, 0}), (std::vector<double>{-2}));
}

TEST(SecondDifferences, MatchesDirectFormulaSeed3) {
  ltd::Rng rng(3);
  ltd::Signal x(10);
  for (double& v : x) v = rng.normal();
  const std::vector<double> dd = ltd::second_differences(x);
  ASSERT_EQ(dd.size(), 8u);
  for (std::size_t i = 0; i < dd.size(); ++i) {
    EXPECT_EQ(dd[i], x[i + 2] - 2.0 * x[i + 1] + x[i]);
  }
}

TEST(SecondDifferences, TooShortThrows) {
  EXPECT_THROW(ltd::second_differences({1, 2}), ltd::TooShortError);
}

TEST(SelectNoisyIndices, AffineSelectsNothing) {
  const ltd::DetectionResult result = ltd::select_noisy_indices({1, 2, 3, 4, 5});
  EXPECT_EQ(result.max_abs, 0.0);
  EXPECT_TRUE(result.indices.empty());
  EXPECT_TRUE(result.gt.empty());
}

TEST(SelectNoisyIndices, HandChecked) {
  // dd = [1, -2, 1], M = 2, threshold 1.4: only |-2| passes.
  const ltd::DetectionResult result = ltd::select_noisy_indices({0, 0, 1, 0, 0});
  EXPECT_EQ(result.dd, (std::vector<double>{1, -2, 1}));
  EXPECT_DOUBLE_EQ(result.max_abs, 2.0);
  EXPECT_EQ(result.indices, (std::vector<std::size_t>{2}));
  EXPECT_EQ(result.gt, (std::vector<double>{1}));
}

TEST(SelectNoisyIndices, RatioOneExcludesEvenTheArgmax) {
  const ltd::DetectionResult result =
      ltd::select_noisy_indices({0, 0, 1, 0, 0}, 1.0);
  EXPECT_TRUE(result.indices.empty());
}

TEST(SelectNoisyIndices, MatchesBruteForceOnSpikySignalSeed9) {
  ltd::Rng rng(9);
  ltd::Signal x(50);
  for (double& v : x) v = rng.normal(0.0, 0.3);
  for (const std::size_t pos : {7u, 23u, 41u}) x[pos] += rng.normal(0.0, 4.0);
  const ltd::DetectionResult result = ltd::select_noisy_indices(x, 0.7);
  EXPECT_EQ(result.indices, oracle::brute_force_select(x, 0.7));
}

TEST(SelectNoisyIndices, AgreesWithBruteForceAcrossSeeds) {
  ltd::Rng rng(100);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform() * 98.0);
    ltd::Signal x(n);
    for (double& v : x) v = rng.normal();
    if (rng.uniform() < 0.5) x[n / 2] += rng.normal(0.0, 10.0);
    const double ratio = 0.05 + 0.95 * rng.uniform();
    const ltd::DetectionResult result = ltd::select_noisy_indices(x, ratio);
    EXPECT_EQ(result.indices, oracle::brute_force_select(x, ratio));
  }
}

TEST(SelectNoisyIndices, StrictConditionHoldsExhaustively) {
  ltd::Rng rng(55);
  for (int rep = 0; rep < 50; ++rep) {
    ltd::Signal x(12);
    for (double& v : x) v = rng.normal();
    const double ratio = 0.3 + 0.7 * rng.uniform();
    const ltd::DetectionResult result = ltd::select_noisy_indices(x, ratio);
    for (std::size_t p = 1; p + 1 < x.size(); ++p) {
      const double dd = x[p + 1] - 2.0 * x[p] + x[p - 1];
      const bool selected =
          std::find(result.indices.begin(), result.indices.end(), p) !=
          result.indices.end();
      EXPECT_EQ(selected, std::abs(dd) - ratio * result.max_abs > 0.0);
    }
  }
}

TEST(SelectNoisyIndices, ArgmaxAlwaysSelectedBelowRatioOne) {
  ltd::Rng rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 4 + static_cast<std::size_t>(rng.uniform() * 40.0);
    ltd::Signal x(n);
    for (double& v : x) v = rng.normal();
    const double ratio = 0.05 + 0.9 * rng.uniform();  // strictly below 1
    const ltd::DetectionResult result = ltd::select_noisy_indices(x, ratio);
    if (result.max_abs == 0.0) continue;
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < result.dd.size(); ++i) {
      if (std::abs(result.dd[i]) > std::abs(result.dd[argmax])) argmax = i;
    }
    EXPECT_NE(std::find(result.indices.begin(), result.indices.end(),
                        argmax + 1),
              result.indices.end());
  }
}

TEST(SelectNoisyIndices, TranslationLeavesEverythingIdentical) {
  ltd::Rng rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const ltd::Signal x = dyadic_signal(rng, 40);
    ltd::Signal shifted = x;
    const double c = std::floor(rng.uniform() * 2049.0 - 1024.0) / 64.0;
    for (double& v : shifted) v += c;
    const ltd::DetectionResult a = ltd::select_noisy_indices(x, 0.7);
    const ltd::DetectionResult b = ltd::select_noisy_indices(shifted, 0.7);
    EXPECT_EQ(a.dd, b.dd);
    EXPECT_EQ(a.max_abs, b.max_abs);
    EXPECT_EQ(a.indices, b.indices);
  }
}

TEST(SelectNoisyIndices, PowerOfTwoScalingKeepsSelection) {
  ltd::Rng rng(8);
  for (const double c : {0.25, 0.5, 2.0, 8.0, -4.0}) {
    const ltd::Signal x = dyadic_signal(rng, 40);
    ltd::Signal scaled = x;
    for (double& v : scaled) v *= c;
    EXPECT_EQ(ltd::select_noisy_indices(x, 0.7).indices,
              ltd::select_noisy_indices(scaled, 0.7).indices);
  }
}

TEST(SelectNoisyIndices, ExactAffineSignalsAlwaysEmpty) {
  ltd::Rng rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    const double a = std::floor(rng.uniform() * 32769.0 - 16384.0) / 1024.0;
    const double b = std::floor(rng.uniform() * 32769.0 - 16384.0) / 1024.0;
    const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform() * 60.0);
    ltd::Signal x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = a + b * static_cast<double>(i);
    }
    const ltd::DetectionResult result = ltd::select_noisy_indices(x, 0.7);
    EXPECT_EQ(result.max_abs, 0.0);
    EXPECT_TRUE(result.indices.empty());
  }
}

TEST(SelectNoisyIndices, RejectsBadInputs) {
  EXPECT_THROW(ltd::select_noisy_indices({1, 2}), ltd::TooShortError);
  EXPECT_THROW(ltd::select_noisy_indices({1, 2, 3}, 0.0), ltd::BadParamsError);
  EXPECT_THROW(ltd::select_noisy_indices({1, 2, 3}, 1.5), ltd::BadParamsError);
  EXPECT_THROW(ltd::select_noisy_indices({1, 2, 3}, -0.7), ltd::BadParamsError);
}

}  // namespace
