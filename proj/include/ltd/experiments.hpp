#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ltd/baselines.hpp"
#include "ltd/denoiser.hpp"
#include "ltd/errors.hpp"
#include "ltd/rng.hpp"
#include "ltd/signal.hpp"

namespace ltd {

enum class SignalKind { uniform, gaussian, sine };

inline SignalKind parse_signal_kind(const std::string& name) {
  if (name == "uniform") return SignalKind::uniform;
  if (name == "gaussian") return SignalKind::gaussian;
  if (name == "sine") return SignalKind::sine;
  throw BadParamsError("unknown signal kind: " + name);
}

inline std::string to_string(SignalKind kind) {
  switch (kind) {
    case SignalKind::uniform: return "uniform";
    case SignalKind::gaussian: return "gaussian";
    case SignalKind::sine: return "sine";
  }
  throw BadParamsError("unknown signal kind");
}

/// Reference signals for benchmarks: i.i.d. uniform[0,1), i.i.d. standard
/// normal, or the deterministic three-period sine sin(2*pi*3*i/n) (the seed
/// is ignored for sine).
inline Signal generate_exact(SignalKind kind, std::size_t n,
                             std::uint64_t seed) {
  if (n < 3) {
    throw TooShortError("generate_exact: need n >= 3, got " +
                        std::to_string(n));
  }
  Signal out(n);
  Rng rng(seed);
  switch (kind) {
    case SignalKind::uniform:
      for (double& v : out) v = rng.uniform();
      break;
    case SignalKind::gaussian:
      for (double& v : out) v = rng.normal();
      break;
    case SignalKind::sine:
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::sin(2.0 * std::numbers::pi * 3.0 *
                          static_cast<double>(i) / static_cast<double>(n));
      }
      break;
  }
  return out;
}

/// Adds i.i.d. normal(0, stddev) noise; stddev 0 returns an exact copy.
inline Signal add_noise(const Signal& signal, double stddev,
                        std::uint64_t seed) {
  if (stddev < 0.0) {
    throw BadParamsError("add_noise: stddev must be >= 0");
  }
  Signal out = signal;
  if (stddev == 0.0) return out;
  Rng rng(seed);
  for (double& v : out) v += rng.normal(0.0, stddev);
  return out;
}

/// One algorithm run on one benchmark problem. `seed` is the problem seed
/// shared by every algorithm on that problem, so (n, seed) identifies the
/// problem when building profiles. A failed run keeps mse1 (the input is
/// known) but has no usable time or mse2.
struct TrialRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  double mse1 = 0.0;
  double mse2 = 0.0;
  bool failed = false;
};

struct SuiteConfig {
  SignalKind kind = SignalKind::sine;
  std::vector<std::size_t> sizes;
  std::size_t trials_per_size = 1;
  std::vector<std::string> algorithms;  // of: ltd, ma, ssa, hybrid
  double noise_std = 0.1;
  std::uint64_t base_seed = 0;
};

inline void validate(const SuiteConfig& config) {
  if (config.sizes.empty()) {
    throw BadParamsError("suite: need at least one size");
  }
  if (config.trials_per_size < 1) {
    throw BadParamsError("suite: trials_per_size must be >= 1");
  }
  if (config.algorithms.empty()) {
    throw BadParamsError("suite: need at least one algorithm");
  }
  for (const std::string& algo : config.algorithms) {
    if (algo != "ltd" && algo != "ma" && algo != "ssa" && algo != "hybrid") {
      throw BadParamsError("suite: unknown algorithm '" + algo + "'");
    }
  }
  if (config.noise_std < 0.0) {
    throw BadParamsError("suite: noise_std must be >= 0");
  }
}

namespace detail {

/// Runs one named algorithm on a noisy signal; elapsed time covers only the
/// algorithm call itself.
inline std::pair<Signal, double> run_algorithm(const std::string& algo,
                                               const Signal& noisy,
                                               std::uint64_t seed) {
  LtdParams params = default_params(noisy.size());
  params.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  Signal denoised;
  if (algo == "ltd") {
    denoised = denoise(noisy, params).denoised;
  } else if (algo == "hybrid") {
    denoised = hybrid_denoise(noisy, params).denoised;
  } else if (algo == "ma") {
    denoised = moving_average(noisy, params.window);
  } else if (algo == "ssa") {
    denoised = ssa_denoise(noisy, default_ssa_params(noisy.size()));
  } else {
    throw BadParamsError("unknown algorithm '" + algo + "'");
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return {std::move(denoised), elapsed};
}

}  // namespace detail

/// Runs every configured algorithm on every (size, trial) problem.
///
/// Each problem derives its own seed from (base_seed, size, trial), so
/// extending the size list or trial count never changes existing problems,
/// and all algorithms of one problem share the identical noisy input
/// (paired comparison; mse1 is constant across them). Records appear in
/// deterministic (size, trial, algorithm) order. An algorithm error marks
/// the record failed instead of aborting the suite.
inline std::vector<TrialRecord> run_suite(const SuiteConfig& config) {
  validate(config);
  std::vector<TrialRecord> records;
  records.reserve(config.sizes.size() * config.trials_per_size *
                  config.algorithms.size());
  for (const std::size_t n : config.sizes) {
    for (std::size_t trial = 0; trial < config.trials_per_size; ++trial) {
      const std::uint64_t problem_seed = mix_seed(config.base_seed, n, trial);
      const Signal exact =
          generate_exact(config.kind, n, mix_seed(problem_seed, 1, 0));
      const Signal noisy =
          add_noise(exact, config.noise_std, mix_seed(problem_seed, 2, 0));
      const double mse1 = mean_squared_error(exact, noisy);
      const std::uint64_t algo_seed = mix_seed(problem_seed, 3, 0);
      for (const std::string& algo : config.algorithms) {
        TrialRecord record;
        record.algorithm = algo;
        record.n = n;
        record.seed = problem_seed;
        record.mse1 = mse1;
        try {
          auto [denoised, elapsed] =
              detail::run_algorithm(algo, noisy, algo_seed);
          record.elapsed_seconds = elapsed;
          record.mse2 = mean_squared_error(exact, denoised);
        } catch (const std::exception&) {
          record.failed = true;
          record.elapsed_seconds =
              std::numeric_limits<double>::infinity();
          record.mse2 = std::numeric_limits<double>::quiet_NaN();
        }
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

/// Per-(algorithm, n) means over the successful trials.
struct AggregateRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double mean_time = 0.0;  // over successes; 0 when all failed
  double mean_mse2 = 0.0;  // over successes; 0 when all failed
};

/// Groups records by (n, algorithm) and averages time and mse2 over the
/// successful trials; failures are counted, not averaged.
inline std::vector<AggregateRow> aggregate(
    const std::vector<TrialRecord>& records) {
  if (records.empty()) {
    throw BadParamsError("aggregate: no records");
  }
  std::map<std::pair<std::size_t, std::string>, AggregateRow> rows;
  for (const TrialRecord& record : records) {
    AggregateRow& row = rows[{record.n, record.algorithm}];
    row.algorithm = record.algorithm;
    row.n = record.n;
    ++row.trials;
    if (record.failed) {
      ++row.failures;
    } else {
      row.mean_time += record.elapsed_seconds;
      row.mean_mse2 += record.mse2;
    }
  }
  std::vector<AggregateRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) {
    const std::size_t successes = row.trials - row.failures;
    if (successes > 0) {
      row.mean_time /= static_cast<double>(successes);
      row.mean_mse2 /= static_cast<double>(successes);
    }
    out.push_back(std::move(row));
  }
  return out;
}

struct ProfilePoint {
  double tau = 1.0;   // >= 1
  double rho = 0.0;   // in [0, 1]
};

/// One algorithm's performance-profile step curve: rho(tau) is the fraction
/// of problems whose time is within a factor tau of the per-problem best.
struct ProfileCurve {
  std::string algorithm;
  std::vector<ProfilePoint> points;
};

/// Performance profiles over a complete record matrix.
///
/// A problem is one (n, seed) pair; every problem must carry exactly one
/// record per algorithm, and at least one of them must have finite time,
/// otherwise IncompleteMatrixError is raised. Failed records take ratio
/// +infinity and so never enter any curve. All curves are emitted on the
/// shared grid of finite ratio breakpoints (always including tau = 1), so
/// each is a non-decreasing step function starting at its win fraction and
/// ending at its overall success fraction.
inline std::vector<ProfileCurve> dolan_more_profile(
    const std::vector<TrialRecord>& records) {
  if (records.empty()) {
    throw BadParamsError("profile: no records");
  }
  std::vector<std::string> algorithms;
  std::vector<std::pair<std::size_t, std::uint64_t>> problems;
  for (const TrialRecord& record : records) {
    if (std::find(algorithms.begin(), algorithms.end(), record.algorithm) ==
        algorithms.end()) {
      algorithms.push_back(record.algorithm);
    }
    const std::pair<std::size_t, std::uint64_t> key{record.n, record.seed};
    if (std::find(problems.begin(), problems.end(), key) == problems.end()) {
      problems.push_back(key);
    }
  }

  // times[p][a], +infinity for failures.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> times(
      problems.size(), std::vector<double>(algorithms.size(), -1.0));
  for (const TrialRecord& record : records) {
    const std::size_t p = static_cast<std::size_t>(
        std::find(problems.begin(), problems.end(),
                  std::make_pair(record.n, record.seed)) -
        problems.begin());
    const std::size_t a = static_cast<std::size_t>(
        std::find(algorithms.begin(), algorithms.end(), record.algorithm) -
        algorithms.begin());
    if (times[p][a] >= 0.0) {
      throw IncompleteMatrixError("profile: duplicate record for problem");
    }
    times[p][a] = record.failed ? inf : record.elapsed_seconds;
  }

  std::vector<std::vector<double>> ratios(
      problems.size(), std::vector<double>(algorithms.size()));
  for (std::size_t p = 0; p < problems.size(); ++p) {
    double best = inf;
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      if (times[p][a] < 0.0) {
        throw IncompleteMatrixError(
            "profile: missing record for a (problem, algorithm) pair");
      }
      best = std::min(best, times[p][a]);
    }
    if (best == inf) {
      throw IncompleteMatrixError(
          "profile: no finite time for a problem");
    }
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      const double t = times[p][a];
      if (t == inf) {
        ratios[p][a] = inf;
      } else if (best > 0.0) {
        ratios[p][a] = t / best;
      } else {
        ratios[p][a] = t == 0.0 ? 1.0 : inf;
      }
    }
  }

  std::vector<double> grid;
  grid.push_back(1.0);
  for (const auto& row : ratios) {
    for (double r : row) {
      if (std::isfinite(r)) grid.push_back(r);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<ProfileCurve> curves;
  curves.reserve(algorithms.size());
  const double count = static_cast<double>(problems.size());
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    ProfileCurve curve;
    curve.algorithm = algorithms[a];
    curve.points.reserve(grid.size());
    for (const double tau : grid) {
      std::size_t within = 0;
      for (std::size_t p = 0; p < problems.size(); ++p) {
        if (ratios[p][a] <= tau) ++within;
      }
      curve.points.push_back(
          ProfilePoint{tau, static_cast<double>(within) / count});
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace ltd
