#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltd/errors.hpp"
#include "ltd/experiments.hpp"
#include "ltd/denoiser.hpp"
#include "ltd/signal.hpp"

namespace ltd {

/// Formats a double with 17 significant digits, enough for a lossless
/// text round trip of any finite value.
inline std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

/// Writes one sample per line as decimal text.
inline void write_signal(const std::string& path, const Signal& signal) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  for (double v : signal) {
    out << format_double(v) << '\n';
  }
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

/// Reads a signal file: one finite real per line, with an optional single
/// leading header line "value". Malformed rows raise ParseError naming the
/// 1-based line number.
inline Signal read_signal(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open for reading: " + path);
  }
  Signal signal;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t begin = 0;
    std::size_t end = line.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(line[begin])))
      ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1])))
      --end;
    const std::string token = line.substr(begin, end - begin);
    if (line_no == 1 && token == "value") continue;  // optional header
    if (token.empty()) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": empty line");
    }
    char* parse_end = nullptr;
    const double value = std::strtod(token.c_str(), &parse_end);
    if (parse_end != token.c_str() + token.size()) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": not a number: '" + token + "'");
    }
    if (!std::isfinite(value)) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": value is not finite");
    }
    signal.push_back(value);
  }
  return signal;
}

/// Benchmark results as stored on disk: the configuration that produced
/// them, every trial record, and the aggregate table.
struct ResultsDocument {
  std::string schema_version = "1";
  SuiteConfig config;
  std::vector<TrialRecord> records;
  std::vector<AggregateRow> aggregate;
};

inline nlohmann::json to_json(const ResultsDocument& doc) {
  nlohmann::json j;
  j["schema_version"] = doc.schema_version;
  j["config"] = {
      {"kind", to_string(doc.config.kind)},
      {"sizes", doc.config.sizes},
      {"trials_per_size", doc.config.trials_per_size},
      {"algorithms", doc.config.algorithms},
      {"noise_std", doc.config.noise_std},
      {"base_seed", doc.config.base_seed},
  };
  j["records"] = nlohmann::json::array();
  for (const TrialRecord& r : doc.records) {
    nlohmann::json jr = {
        {"algorithm", r.algorithm}, {"n", r.n},
        {"seed", r.seed},           {"mse1", r.mse1},
        {"failed", r.failed},
    };
    if (r.failed) {
      jr["elapsed_seconds"] = nullptr;
      jr["mse2"] = nullptr;
    } else {
      jr["elapsed_seconds"] = r.elapsed_seconds;
      jr["mse2"] = r.mse2;
    }
    j["records"].push_back(std::move(jr));
  }
  j["aggregate"] = nlohmann::json::array();
  for (const AggregateRow& row : doc.aggregate) {
    j["aggregate"].push_back({
        {"algorithm", row.algorithm},
        {"n", row.n},
        {"trials", row.trials},
        {"failures", row.failures},
        {"mean_time", row.mean_time},
        {"mean_mse2", row.mean_mse2},
    });
  }
  return j;
}

/// Parses and validates a results document; any structural problem raises
/// SchemaError. The record count must equal sizes x trials x algorithms.
inline ResultsDocument parse_results(const nlohmann::json& j) {
  try {
    ResultsDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1") {
      throw SchemaError("unsupported schema_version '" + doc.schema_version +
                        "'");
    }
    const nlohmann::json& jc = j.at("config");
    doc.config.kind = parse_signal_kind(jc.at("kind").get<std::string>());
    doc.config.sizes = jc.at("sizes").get<std::vector<std::size_t>>();
    doc.config.trials_per_size = jc.at("trials_per_size").get<std::size_t>();
    doc.config.algorithms =
        jc.at("algorithms").get<std::vector<std::string>>();
    doc.config.noise_std = jc.at("noise_std").get<double>();
    doc.config.base_seed = jc.at("base_seed").get<std::uint64_t>();
    for (const nlohmann::json& jr : j.at("records")) {
      TrialRecord r;
      r.algorithm = jr.at("algorithm").get<std::string>();
      r.n = jr.at("n").get<std::size_t>();
      r.seed = jr.at("seed").get<std::uint64_t>();
      r.mse1 = jr.at("mse1").get<double>();
      r.failed = jr.at("failed").get<bool>();
      if (r.failed) {
        r.elapsed_seconds = std::numeric_limits<double>::infinity();
        r.mse2 = std::numeric_limits<double>::quiet_NaN();
      } else {
        r.elapsed_seconds = jr.at("elapsed_seconds").get<double>();
        r.mse2 = jr.at("mse2").get<double>();
      }
      doc.records.push_back(std::move(r));
    }
    for (const nlohmann::json& ja : j.at("aggregate")) {
      AggregateRow row;
      row.algorithm = ja.at("algorithm").get<std::string>();
      row.n = ja.at("n").get<std::size_t>();
      row.trials = ja.at("trials").get<std::size_t>();
      row.failures = ja.at("failures").get<std::size_t>();
      row.mean_time = ja.at("mean_time").get<double>();
      row.mean_mse2 = ja.at("mean_mse2").get<double>();
      doc.aggregate.push_back(std::move(row));
    }
    const std::size_t expected = doc.config.sizes.size() *
                                 doc.config.trials_per_size *
                                 doc.config.algorithms.size();
    if (doc.records.size() != expected) {
      throw SchemaError("record count " + std::to_string(doc.records.size()) +
                        " does not match sizes x trials x algorithms = " +
                        std::to_string(expected));
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed results document: ") + e.what());
  } catch (const BadParamsError& e) {
    throw SchemaError(std::string("malformed results document: ") + e.what());
  }
}

inline void write_results(const std::string& path,
                          const ResultsDocument& doc) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << to_json(doc).dump(2) << '\n';
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

inline ResultsDocument read_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open for reading: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  return parse_results(j);
}

/// Error-trace CSV with header "pass,k,E", one accepted candidate per row.
inline void write_trace_csv(const std::string& path,
                            const std::vector<TraceEntry>& trace) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << "pass,k,E\n";
  for (const TraceEntry& entry : trace) {
    out << entry.pass << ',' << entry.k << ',' << format_double(entry.error)
        << '\n';
  }
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

/// Profile CSV with header "algorithm,tau,rho"; curves are concatenated and
/// each point becomes one row.
inline void write_profile_csv(const std::string& path,
                              const std::vector<ProfileCurve>& curves) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << "algorithm,tau,rho\n";
  for (const ProfileCurve& curve : curves) {
    for (const ProfilePoint& point : curve.points) {
      out << curve.algorithm << ',' << format_double(point.tau) << ','
          << format_double(point.rho) << '\n';
    }
  }
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

}  // namespace ltd
