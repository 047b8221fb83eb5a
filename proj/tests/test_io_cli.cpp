// Copyright 2026 The Spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "spectra/error.hpp"
#include "spectra/io.hpp"
#include "spectra/perturb.hpp"
#include "spectra/polygeom.hpp"
#include "support/random_instances.hpp"

using namespace spectra;
namespace fs = std::filesystem;

namespace {

const std::string kCyclic = R"({"n": 3, "data": [[0, 1, 0], [0, 0, 1], [1, 0, 0]]})";
const std::string kB = "-0.5";
const std::string kC = "0.8660254037844386";

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spectra_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    io::write_file(path(name), text);
    return path(name);
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST(Io, MatrixRoundTripIsExact) {
  spectra::testing::Rng rng(501);
  for (int trial = 0; trial < 50; ++trial) {
    const DenseMatrix a = spectra::testing::random_gaussian(1 + trial % 6, 1 + trial % 6, rng,
                                                            std::pow(10.0, trial % 9 - 4));
    EXPECT_EQ(io::parse_matrix(io::format_matrix(a)), a);
  }
}

TEST(Io, MatrixParseErrors) {
  EXPECT_THROW(io::parse_matrix("{"), Error);
  EXPECT_THROW(io::parse_matrix(R"({"n": 2, "data": [[1, 2]]})"), Error);
  EXPECT_THROW(io::parse_matrix(R"({"n": 2, "data": [[1, 2], [3]]})"), Error);
  EXPECT_THROW(io::parse_matrix(R"({"n": 1, "data": [["x"]]})"), Error);
  EXPECT_THROW(io::parse_matrix(R"({"data": [[1]]})"), Error);
}

TEST(Io, PolygonRoundTrip) {
  const ConvexPolygon p = extremal_pentagon();
  EXPECT_EQ(io::parse_polygon(io::format_polygon(p)).vertices(), p.vertices());
  EXPECT_THROW(io::parse_polygon(R"({"vertices": [[0, 0], [0, 1], [1, 0]]})"), Error);
}

TEST(Io, CertificateRoundTripIsExact) {
  spectra::testing::Rng rng(502);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = spectra::testing::random_shift_instance(3 + trial % 6, rng);
    const Certificate cert = shift_complex_pair(inst.a, inst.pair.b, inst.pair.c, 0.4, 0.9);
    const io::CertificateRecord rec = io::to_record(cert);
    const std::string text = io::format_certificate(rec);
    EXPECT_EQ(io::parse_certificate(text), rec);
    EXPECT_EQ(io::format_certificate(io::parse_certificate(text)), text);
  }
}

TEST_F(CliTest, PerturbCyclic) {
  const std::string m = write("a.json", kCyclic);
  const std::string cert = path("cert.json");
  ASSERT_EQ(run({"perturb", "--matrix", m, "--b", kB, "--c", kC, "--t", "0.3", "--out", cert}), 0)
      << err_.str();
  EXPECT_NE(out_.str().find("status: verified"), std::string::npos);
  const io::CertificateRecord rec = io::parse_certificate(io::read_file(cert));
  bool found = false;
  for (const Complex& z : rec.spectrum_after.values) found |= std::abs(z - Complex(1.3)) < 1e-12;
  EXPECT_TRUE(found);
  EXPECT_EQ(rec.t_tilde, 0.3);  // gamma(3) t
}

TEST_F(CliTest, PerturbBelowThreshold) {
  const std::string m = write("a.json", kCyclic);
  EXPECT_EQ(run({"perturb", "--matrix", m, "--b", kB, "--c", kC, "--t", "0.3", "--t-tilde", "0.1",
                 "--out", path("c.json")}),
            1);
  EXPECT_NE(err_.str().find("ThresholdViolated"), std::string::npos);
}

TEST_F(CliTest, PerturbReducible) {
  const std::string m = write("r.json", R"({"n": 3, "data": [[1, 1, 0], [0, 1, 1], [0, 0, 1]]})");
  EXPECT_EQ(run({"perturb", "--matrix", m, "--b", "1", "--c", "1", "--t", "0.3", "--out", path("c.json")}), 1);
  EXPECT_NE(err_.str().find("NotIrreducible"), std::string::npos);
  const std::string m2 = write("r2.json", R"({"n": 2, "data": [[1, 1], [0, 1]]})");
  EXPECT_EQ(run({"perturb", "--matrix", m2, "--b", "1", "--c", "1", "--t", "0.3", "--out", path("c.json")}), 1);
  EXPECT_NE(err_.str().find("NotIrreducible"), std::string::npos);
}

TEST_F(CliTest, PerturbUnmatchableToleranceIsAVerificationFailure) {
  const std::string m = write("a.json", kCyclic);
  EXPECT_EQ(run({"perturb", "--matrix", m, "--b", kB, "--c", kC, "--t", "0.3", "--match-tol", "0",
                 "--out", path("c.json")}),
            2);
  EXPECT_NE(err_.str().find("PostconditionFailed"), std::string::npos);
}

TEST_F(CliTest, BadArguments) {
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"perturb", "--matrix", path("missing.json"), "--b", "0", "--c", "1", "--t", "0",
                 "--out", path("c.json")}),
            1);
  EXPECT_EQ(run({"geometry-ratio", "--fixture", "octagon"}), 1);
}

TEST_F(CliTest, Check) {
  const std::string m = write("a.json", kCyclic);
  ASSERT_EQ(run({"check", "--matrix", m}), 0);
  const std::string s = out_.str();
  EXPECT_NE(s.find("irreducible: true"), std::string::npos);
  EXPECT_NE(s.find("rho: 1\n"), std::string::npos);
  EXPECT_NE(s.find("row_sum_residual: 0\n"), std::string::npos);
}

TEST_F(CliTest, GeometryRatioFixtures) {
  ASSERT_EQ(run({"geometry-ratio", "--fixture", "hexagon"}), 0);
  EXPECT_NE(out_.str().find("ratio: 2.25\n"), std::string::npos);
  EXPECT_NE(out_.str().find("status: tight"), std::string::npos);
  ASSERT_EQ(run({"geometry-ratio", "--fixture", "pentagon"}), 0);
  EXPECT_NE(out_.str().find("ratio: 2.2360679774997898\n"), std::string::npos);
  ASSERT_EQ(run({"geometry-ratio", "--fixture", "square"}), 0);
  EXPECT_NE(out_.str().find("ratio: 2\n"), std::string::npos);
}

TEST_F(CliTest, GeometryRatioFromFile) {
  const std::string p = write("p.json", io::format_polygon(random_convex_polygon(6, 3)));
  ASSERT_EQ(run({"geometry-ratio", "--polygon", p}), 0);
  EXPECT_NE(out_.str().find("status: within"), std::string::npos);
}

TEST_F(CliTest, GeometrySearchIsDeterministic) {
  const std::vector<std::string> args = {"geometry-search", "--n", "5", "--restarts", "2",
                                         "--iters", "100", "--seed", "9", "--trace",
                                         path("trace.csv")};
  ASSERT_EQ(run(args), 0);
  const std::string first_out = out_.str();
  const std::string first_trace = io::read_file(path("trace.csv"));
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(out_.str(), first_out);
  EXPECT_EQ(io::read_file(path("trace.csv")), first_trace);
  EXPECT_EQ(first_trace.rfind("iteration,ratio\n", 0), 0u);
  EXPECT_EQ(std::count(first_trace.begin(), first_trace.end(), '\n'), 201);
}

TEST_F(CliTest, GeometrySearchSeedFromEnvironment) {
  const std::vector<std::string> args = {"geometry-search", "--n", "4", "--restarts", "1", "--iters", "20"};
  ::setenv("SPECTRA_SEED", "42", 1);
  ASSERT_EQ(run(args), 0);
  ::unsetenv("SPECTRA_SEED");
  EXPECT_NE(out_.str().find("seed: 42\n"), std::string::npos);
  ASSERT_EQ(run(args), 0);
  EXPECT_NE(out_.str().find("seed: 0\n"), std::string::npos);
}

TEST_F(CliTest, ThresholdScan) {
  const std::string m = write("a.json", R"({"n": 4, "data": [[0, 1, 0, 0.5], [0, 0, 1, 0], [0.3, 0, 0, 1], [1, 0.2, 0, 0]]})");
  const auto ev = eigenvalues(io::parse_matrix(io::read_file(m)));
  Complex pair;
  for (const Complex& z : ev.values) {
    if (z.imag() > 1e-3) pair = z;
  }
  ASSERT_GT(pair.imag(), 0.0);
  const std::vector<std::string> args = {"threshold-scan", "--matrix", m, "--b",
                                         exact(pair.real()), "--c", exact(pair.imag()),
                                         "--samples", "25", "--seed", "5", "--out", path("scan.csv")};
  ASSERT_EQ(run(args), 0) << err_.str();
  const std::string csv = io::read_file(path("scan.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 26);
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(io::read_file(path("scan.csv")), csv);
}
