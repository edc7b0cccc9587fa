#include "ltd/io.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ltd/errors.hpp"
#include "ltd/signal.hpp"

namespace {

class IoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "ltd_io_XXXXXX").string();
    std::vector<char> buf(pattern.begin(), pattern.end());
    buf.push_back('\0');
    ASSERT_NE(mkdtemp(buf.data()), nullptr);
    dir_ = buf.data();
  }

  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return dir_ + "/" + name; }

  static void write_text(const std::string& file, const std::string& text) {
    std::ofstream out(file);
    out << text;
  }

  static std::string read_text(const std::string& file) {
    std::ifstream in(file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::string dir_;
};

TEST_F(IoTest, SignalRoundTripIsBitIdentical) {
  const ltd::Signal values{0.1,
                           1.0 / 3.0,
                           -0.0,
                           5e-324,
                           1.7976931348623157e308,
                           -1.23456789012345e-100,
                           42.0,
                           -12345.678901234567};
  const std::string file = path("signal.txt");
  ltd::write_signal(file, values);
  const ltd::Signal restored = ltd::read_signal(file);
  ASSERT_EQ(restored.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_EQ(std::bit_cast<std::uint64_t>(restored[i]),
              std::bit_cast<std::uint64_t>(values[i]))
        << "value index " << i;
  }
}

TEST_F(IoTest, ReadSignalAcceptsOptionalHeader) {
  const std::string file = path("header.txt");
  write_text(file, "value\n1.5\n2.5\n");
  EXPECT_EQ(ltd::read_signal(file), (ltd::Signal{1.5, 2.5}));
}

TEST_F(IoTest, ReadSignalToleratesSurroundingWhitespace) {
  const std::string file = path("ws.txt");
  write_text(file, "  1.5 \n\t-2.5\r\n");
  EXPECT_EQ(ltd::read_signal(file), (ltd::Signal{1.5, -2.5}));
}

TEST_F(IoTest, ReadSignalReportsLineNumbers) {
  const std::string file = path("bad.txt");
  write_text(file, "1.0\nnot-a-number\n3.0\n");
  try {
    ltd::read_signal(file);
    FAIL() << "expected ParseError";
  } catch (const ltd::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos);
  }
}

TEST_F(IoTest, ReadSignalRejectsBadRows) {
  const std::string trailing = path("trailing.txt");
  write_text(trailing, "1.5abc\n");
  EXPECT_THROW(ltd::read_signal(trailing), ltd::ParseError);

  const std::string blank = path("blank.txt");
  write_text(blank, "1.0\n\n2.0\n");
  EXPECT_THROW(ltd::read_signal(blank), ltd::ParseError);

  const std::string nonfinite = path("nonfinite.txt");
  write_text(nonfinite, "inf\n");
  EXPECT_THROW(ltd::read_signal(nonfinite), ltd::ParseError);

  const std::string nan_file = path("nan.txt");
  write_text(nan_file, "nan\n");
  EXPECT_THROW(ltd::read_signal(nan_file), ltd::ParseError);
}

TEST_F(IoTest, MissingFileRaisesIoError) {
  EXPECT_THROW(ltd::read_signal(path("missing.txt")), ltd::IoError);
}

ltd::ResultsDocument sample_document() {
  ltd::ResultsDocument doc;
  doc.config.kind = ltd::SignalKind::sine;
  doc.config.sizes = {100};
  doc.config.trials_per_size = 2;
  doc.config.algorithms = {"ltd", "ssa"};
  doc.config.noise_std = 0.1;
  doc.config.base_seed = 99;

  ltd::TrialRecord ok;
  ok.algorithm = "ltd";
  ok.n = 100;
  ok.seed = 12345;
  ok.elapsed_seconds = 0.25;
  ok.mse1 = 0.5;
  ok.mse2 = 0.125;
  doc.records.push_back(ok);

  ltd::TrialRecord failed = ok;
  failed.algorithm = "ssa";
  failed.failed = true;
  failed.elapsed_seconds = std::numeric_limits<double>::infinity();
  failed.mse2 = std::numeric_limits<double>::quiet_NaN();
  doc.records.push_back(failed);

  ok.seed = 23456;
  doc.records.push_back(ok);
  failed.seed = 23456;
  doc.records.push_back(failed);

  doc.aggregate = ltd::aggregate(doc.records);
  return doc;
}

TEST_F(IoTest, ResultsDocumentRoundTrip) {
  const ltd::ResultsDocument doc = sample_document();
  const std::string file = path("results.json");
  ltd::write_results(file, doc);
  const ltd::ResultsDocument restored = ltd::read_results(file);

  EXPECT_EQ(restored.schema_version, "1");
  EXPECT_EQ(restored.config.kind, doc.config.kind);
  EXPECT_EQ(restored.config.sizes, doc.config.sizes);
  EXPECT_EQ(restored.config.trials_per_size, doc.config.trials_per_size);
  EXPECT_EQ(restored.config.algorithms, doc.config.algorithms);
  EXPECT_EQ(restored.config.noise_std, doc.config.noise_std);
  EXPECT_EQ(restored.config.base_seed, doc.config.base_seed);

  ASSERT_EQ(restored.records.size(), doc.records.size());
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    EXPECT_EQ(restored.records[i].algorithm, doc.records[i].algorithm);
    EXPECT_EQ(restored.records[i].n, doc.records[i].n);
    EXPECT_EQ(restored.records[i].seed, doc.records[i].seed);
    EXPECT_EQ(restored.records[i].mse1, doc.records[i].mse1);
    EXPECT_EQ(restored.records[i].failed, doc.records[i].failed);
    if (doc.records[i].failed) {
      EXPECT_TRUE(std::isinf(restored.records[i].elapsed_seconds));
      EXPECT_TRUE(std::isnan(restored.records[i].mse2));
    } else {
      EXPECT_EQ(restored.records[i].elapsed_seconds,
                doc.records[i].elapsed_seconds);
      EXPECT_EQ(restored.records[i].mse2, doc.records[i].mse2);
    }
  }

  ASSERT_EQ(restored.aggregate.size(), doc.aggregate.size());
  for (std::size_t i = 0; i < doc.aggregate.size(); ++i) {
    EXPECT_EQ(restored.aggregate[i].algorithm, doc.aggregate[i].algorithm);
    EXPECT_EQ(restored.aggregate[i].n, doc.aggregate[i].n);
    EXPECT_EQ(restored.aggregate[i].trials, doc.aggregate[i].trials);
    EXPECT_EQ(restored.aggregate[i].failures, doc.aggregate[i].failures);
    EXPECT_EQ(restored.aggregate[i].mean_time, doc.aggregate[i].mean_time);
    EXPECT_EQ(restored.aggregate[i].mean_mse2, doc.aggregate[i].mean_mse2);
  }
}

TEST_F(IoTest, ParseResultsRejectsSchemaViolations) {
  nlohmann::json good = ltd::to_json(sample_document());

  nlohmann::json wrong_version = good;
  wrong_version["schema_version"] = "2";
  EXPECT_THROW(ltd::parse_results(wrong_version), ltd::SchemaError);

  nlohmann::json missing_field = good;
  missing_field.erase("records");
  EXPECT_THROW(ltd::parse_results(missing_field), ltd::SchemaError);

  nlohmann::json wrong_count = good;
  wrong_count["records"].erase(0);
  EXPECT_THROW(ltd::parse_results(wrong_count), ltd::SchemaError);

  nlohmann::json bad_kind = good;
  bad_kind["config"]["kind"] = "triangle";
  EXPECT_THROW(ltd::parse_results(bad_kind), ltd::SchemaError);
}

TEST_F(IoTest, UnparseableResultsFileRaisesParseError) {
  const std::string file = path("broken.json");
  write_text(file, "{not json");
  EXPECT_THROW(ltd::read_results(file), ltd::ParseError);
}

TEST_F(IoTest, TraceCsvFormat) {
  const std::vector<ltd::TraceEntry> trace{{1, 1, 0.5}, {1, 3, 0.25},
                                           {2, 1, 0.125}};
  const std::string file = path("trace.csv");
  ltd::write_trace_csv(file, trace);
  EXPECT_EQ(read_text(file), "pass,k,E\n1,1,0.5\n1,3,0.25\n2,1,0.125\n");
}

TEST_F(IoTest, ProfileCsvFormat) {
  std::vector<ltd::ProfileCurve> curves(2);
  curves[0].algorithm = "a";
  curves[0].points = {{1.0, 0.5}, {2.0, 1.0}};
  curves[1].algorithm = "b";
  curves[1].points = {{1.0, 0.5}, {2.0, 1.0}};
  const std::string file = path("profile.csv");
  ltd::write_profile_csv(file, curves);
  EXPECT_EQ(read_text(file),
            "algorithm,tau,rho\na,1,0.5\na,2,1\nb,1,0.5\nb,2,1\n");
}

}  // namespace
