// Command-line front end: generate test signals, denoise signal files, run
// benchmark suites, and emit performance-profile data.
//
// Exit codes: 0 success, 1 usage error, 2 data/parse error, 3 internal
// numerical error. Every failure prints a single-line diagnostic to stderr.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ltd/baselines.hpp"
#include "ltd/denoiser.hpp"
#include "ltd/errors.hpp"
#include "ltd/experiments.hpp"
#include "ltd/io.hpp"
#include "ltd/rng.hpp"
#include "ltd/signal.hpp"

namespace {

struct GenOptions {
  std::string kind = "sine";
  std::size_t n = 0;
  double noise_std = 0.1;
  std::uint64_t seed = 0;
  std::string out_exact;
  std::string out_noisy;
};

struct DenoiseOptions {
  std::string algo = "ltd";
  std::string in_path;
  std::string out_path;
  std::string exact_path;
  std::string trace_path;
  std::optional<int> kmax;
  std::optional<double> delta;
  std::optional<double> ratio;
  std::optional<int> window;
  std::optional<int> max_outer;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> ssa_window;
  std::optional<std::size_t> ssa_rank;
  double hybrid_threshold = 0.5;
};

struct BenchOptions {
  std::string kind = "sine";
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::vector<std::string> algos;
  double noise_std = 0.1;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct ProfileOptions {
  std::string in_path;
  std::string out_path;
};

int run_gen(const GenOptions& opt) {
  const ltd::SignalKind kind = ltd::parse_signal_kind(opt.kind);
  const ltd::Signal exact =
      ltd::generate_exact(kind, opt.n, ltd::mix_seed(opt.seed, 1, 0));
  const ltd::Signal noisy =
      ltd::add_noise(exact, opt.noise_std, ltd::mix_seed(opt.seed, 2, 0));
  ltd::write_signal(opt.out_exact, exact);
  ltd::write_signal(opt.out_noisy, noisy);
  std::cout << "kind=" << opt.kind << " n=" << opt.n
            << " noise_std=" << ltd::format_double(opt.noise_std)
            << " exact=" << opt.out_exact << " noisy=" << opt.out_noisy
            << '\n';
  return 0;
}

int run_denoise(const DenoiseOptions& opt) {
  if ((opt.algo == "ltd" || opt.algo == "hybrid") && !opt.seed) {
    throw ltd::BadParamsError("--seed is required for --algo " + opt.algo);
  }
  const ltd::Signal input = ltd::read_signal(opt.in_path);

  ltd::LtdParams params = ltd::default_params(input.size());
  if (opt.kmax) params.kmax = *opt.kmax;
  if (opt.delta) params.delta = *opt.delta;
  if (opt.ratio) params.ratio = *opt.ratio;
  if (opt.window) params.window = *opt.window;
  if (opt.max_outer) params.max_outer = *opt.max_outer;
  if (opt.seed) params.seed = *opt.seed;

  ltd::DenoiseResult result;
  if (opt.algo == "ltd") {
    result = ltd::denoise(input, params);
  } else if (opt.algo == "hybrid") {
    result = ltd::hybrid_denoise(input, params, opt.hybrid_threshold);
  } else if (opt.algo == "ma" || opt.algo == "ssa") {
    const auto start = std::chrono::steady_clock::now();
    if (opt.algo == "ma") {
      result.denoised = ltd::moving_average(input, params.window);
    } else {
      ltd::SsaParams ssa = ltd::default_ssa_params(input.size());
      if (opt.ssa_window) ssa.embed_dim = *opt.ssa_window;
      if (opt.ssa_rank) ssa.rank = *opt.ssa_rank;
      result.denoised = ltd::ssa_denoise(input, ssa);
    }
    result.elapsed_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
  } else {
    throw ltd::BadParamsError("unknown --algo '" + opt.algo + "'");
  }

  ltd::write_signal(opt.out_path, result.denoised);
  if (!opt.trace_path.empty()) {
    ltd::write_trace_csv(opt.trace_path, result.error_trace);
  }

  std::cout << "algorithm=" << opt.algo << " n=" << input.size()
            << " iterations=" << result.iterations_total << " elapsed_seconds="
            << ltd::format_double(result.elapsed_seconds);
  if (result.presmoothed) std::cout << " presmoothed=1";
  if (!opt.exact_path.empty()) {
    const ltd::Signal exact = ltd::read_signal(opt.exact_path);
    const auto [mse1, mse2] =
        ltd::mse_before_after(exact, input, result.denoised);
    std::cout << " mse1=" << ltd::format_double(mse1)
              << " mse2=" << ltd::format_double(mse2);
  }
  std::cout << '\n';
  return 0;
}

void print_aggregate_table(const ltd::ResultsDocument& doc) {
  std::map<std::pair<std::size_t, std::string>, const ltd::AggregateRow*> rows;
  for (const ltd::AggregateRow& row : doc.aggregate) {
    rows[{row.n, row.algorithm}] = &row;
  }
  std::vector<std::size_t> sizes;
  for (std::size_t n : doc.config.sizes) {
    if (std::find(sizes.begin(), sizes.end(), n) == sizes.end()) {
      sizes.push_back(n);
    }
  }
  std::printf("%8s", "n");
  for (const std::string& algo : doc.config.algorithms) {
    std::printf("  %14s  %14s", (algo + " time[s]").c_str(),
                (algo + " mse2").c_str());
  }
  std::printf("\n");
  for (std::size_t n : sizes) {
    std::printf("%8zu", n);
    for (const std::string& algo : doc.config.algorithms) {
      const auto it = rows.find({n, algo});
      if (it == rows.end()) continue;
      std::printf("  %14.6g  %14.6g", it->second->mean_time,
                  it->second->mean_mse2);
    }
    std::printf("\n");
  }
  for (const ltd::AggregateRow& row : doc.aggregate) {
    if (row.failures > 0) {
      std::printf("note: %s at n=%zu failed %zu of %zu trials\n",
                  row.algorithm.c_str(), row.n, row.failures, row.trials);
    }
  }
}

int run_bench(const BenchOptions& opt) {
  ltd::ResultsDocument doc;
  doc.config.kind = ltd::parse_signal_kind(opt.kind);
  doc.config.sizes = opt.sizes;
  doc.config.trials_per_size = opt.trials;
  doc.config.algorithms = opt.algos;
  doc.config.noise_std = opt.noise_std;
  doc.config.base_seed = opt.seed;
  doc.records = ltd::run_suite(doc.config);
  doc.aggregate = ltd::aggregate(doc.records);
  ltd::write_results(opt.out_path, doc);
  print_aggregate_table(doc);
  return 0;
}

int run_profile(const ProfileOptions& opt) {
  const ltd::ResultsDocument doc = ltd::read_results(opt.in_path);
  const std::vector<ltd::ProfileCurve> curves =
      ltd::dolan_more_profile(doc.records);
  ltd::write_profile_csv(opt.out_path, curves);
  std::cout << "profiles=" << curves.size() << " out=" << opt.out_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tridiagonal signal denoising toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate an exact/noisy signal pair");
  cmd_gen->add_option("--kind", gen.kind, "signal kind: uniform, gaussian, sine")
      ->check(CLI::IsMember({"uniform", "gaussian", "sine"}))
      ->capture_default_str();
  cmd_gen->add_option("--n", gen.n, "number of samples")->required();
  cmd_gen->add_option("--noise-std", gen.noise_std, "noise standard deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_gen->add_option("--seed", gen.seed, "random seed")->required();
  cmd_gen->add_option("--out-exact", gen.out_exact, "output path, exact signal")
      ->required();
  cmd_gen->add_option("--out-noisy", gen.out_noisy, "output path, noisy signal")
      ->required();

  DenoiseOptions den;
  CLI::App* cmd_denoise = app.add_subcommand("denoise", "denoise a signal file");
  cmd_denoise->add_option("--algo", den.algo, "algorithm: ltd, ma, ssa, hybrid")
      ->check(CLI::IsMember({"ltd", "ma", "ssa", "hybrid"}))
      ->capture_default_str();
  cmd_denoise->add_option("--in", den.in_path, "input signal file")->required();
  cmd_denoise->add_option("--out", den.out_path, "output signal file")
      ->required();
  cmd_denoise->add_option("--exact", den.exact_path,
                          "exact signal file; adds mse1/mse2 to the report");
  cmd_denoise->add_option("--trace", den.trace_path,
                          "write the error trace as CSV (pass,k,E)");
  cmd_denoise->add_option("--kmax", den.kmax, "inner iterations per pass");
  cmd_denoise->add_option("--delta", den.delta, "error tolerance");
  cmd_denoise->add_option("--ratio", den.ratio, "selection threshold ratio");
  cmd_denoise->add_option("--window", den.window, "moving-average window");
  cmd_denoise->add_option("--max-outer", den.max_outer, "outer pass cap");
  cmd_denoise->add_option("--seed", den.seed,
                          "random seed (required for ltd and hybrid)");
  cmd_denoise->add_option("--ssa-window", den.ssa_window,
                          "SSA embedding window L");
  cmd_denoise->add_option("--ssa-rank", den.ssa_rank, "SSA reconstruction rank");
  cmd_denoise
      ->add_option("--hybrid-threshold", den.hybrid_threshold,
                   "noise-to-range ratio that triggers pre-smoothing")
      ->capture_default_str();

  BenchOptions bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "run a benchmark suite");
  cmd_bench->add_option("--kind", bench.kind, "signal kind: uniform, gaussian, sine")
      ->check(CLI::IsMember({"uniform", "gaussian", "sine"}))
      ->capture_default_str();
  cmd_bench->add_option("--sizes", bench.sizes, "comma-separated data sizes")
      ->delimiter(',')
      ->required();
  cmd_bench->add_option("--trials", bench.trials, "trials per size")
      ->check(CLI::PositiveNumber)
      ->required();
  cmd_bench->add_option("--algos", bench.algos,
                        "comma-separated algorithms of: ltd, ma, ssa, hybrid")
      ->delimiter(',')
      ->required();
  cmd_bench->add_option("--noise-std", bench.noise_std,
                        "noise standard deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench.seed, "base seed")->required();
  cmd_bench->add_option("--out", bench.out_path, "output results JSON")
      ->required();

  ProfileOptions prof;
  CLI::App* cmd_profile =
      app.add_subcommand("profile", "performance profiles from bench results");
  cmd_profile->add_option("--in", prof.in_path, "input results JSON")
      ->required();
  cmd_profile->add_option("--out", prof.out_path, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_denoise->parsed()) return run_denoise(den);
    if (cmd_bench->parsed()) return run_bench(bench);
    return run_profile(prof);
  } catch (const ltd::BadParamsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ltd::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ltd::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ltd::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ltd::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ltd::TooShortError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
