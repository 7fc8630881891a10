// Copyright 2026 The ecocnet Authors
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

#include <catch2/catch.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ecoc/harness.hpp"

using namespace ecoc;
using namespace ecoc::harness;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("ecocnet_harness_" + std::to_string(::getpid()) +
                                        "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }

  std::string at(const std::string& name) const { return (path / name).string(); }
};

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Small synthetic experiment that trains in well under a second.
const char* kTinyConfig = R"({
  "dataset": {"type": "synthetic", "class_count": 5, "dim": 8,
              "samples_per_class": 8, "cluster_spread": 0.15, "seed": 3},
  "pca_k": 4,
  "code": {"method": "onevsall"},
  "train": {"cost": "weighted", "epochs": 40, "learning_rate": 0.3,
            "hidden": 10, "seed": 5},
  "split": {"train_per_class": 4, "test_per_class": 4, "splits": 3, "seed": 11},
  "threshold": 25,
  "compare_columns": [[2, 6], [4, 4]]
})";

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ECOC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse_config applies the documented defaults", "[harness]") {
  const ExperimentConfig cfg =
      parse_config(R"({"dataset": {"type": "synthetic"}})", "inline");
  CHECK(cfg.pca_k == 30);
  CHECK(cfg.threshold == 25.0);
  CHECK(cfg.split.split_count == 10);
  CHECK(cfg.code.method == "bch");
  CHECK(cfg.train.cost == CostVariant::Weighted);
  CHECK(cfg.train.update == UpdateMode::PerSample);
  CHECK(cfg.compare_columns.size() == 4);
  CHECK(cfg.compare_columns[0] == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(cfg.dataset.synthetic.class_count == 15);
  CHECK(cfg.dataset.synthetic.samples_per_class == 11);
}

TEST_CASE("parse_config rejects malformed input", "[harness]") {
  const auto expect_parse_error = [](const std::string& text) {
    CHECK_THROWS_MATCHES(parse_config(text, "inline"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == errc::parse_error;
                         }));
  };
  expect_parse_error("{not json");
  expect_parse_error(R"({"dataset": {"type": "mystery"}})");
  expect_parse_error(R"({"dataset": {"type": "synthetic"}, "typo_key": 1})");
  expect_parse_error(R"({"dataset": {"type": "synthetic"}, "train": {"cost": "fast"}})");
  expect_parse_error(R"({"dataset": {"type": "synthetic"}, "threshold": 200})");
  expect_parse_error(R"({"dataset": {"type": "csv"}})");             // missing path
  expect_parse_error(R"({"dataset": {"type": "csv", "path": "/nonexistent/x.csv"}})");
  expect_parse_error(R"({"threshold": 10})");                        // missing dataset
  expect_parse_error(R"({"dataset": {"type": "synthetic"}, "compare_columns": [[1]]})");
}

TEST_CASE("make_code dispatches every generator", "[harness]") {
  CodeSpec spec;
  spec.method = "onevsone";
  CHECK(make_code(spec, 4).code_length() == 6);
  spec.method = "bch";
  spec.length = 31;
  CHECK(make_code(spec, 15).code_length() == 31);
  spec.method = "dense";
  spec.length = 20;
  CHECK(make_code(spec, 8).code_length() == 20);
  spec.method = "mystery";
  CHECK_THROWS_AS(make_code(spec, 8), Error);
  spec.method = "bch";
  spec.length = std::nullopt;
  CHECK(make_code(spec, 15).code_length() == 31);  // documented default
}

TEST_CASE("make_code reads and validates matrix files", "[harness]") {
  TempDir tmp;
  const std::string good = tmp.file("good.txt", serialize(one_vs_all(4)));
  CodeSpec spec;
  spec.file = good;
  CHECK(make_code(spec, 4) == one_vs_all(4));
  CHECK_THROWS_MATCHES(make_code(spec, 5), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == errc::invalid_dimension;
                       }));

  const std::string bad = tmp.file("bad.txt", "11\n11\n00\n");
  spec.file = bad;
  CHECK_THROWS_MATCHES(make_code(spec, 3), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == errc::invalid_matrix;
                       }));
}

TEST_CASE("load_data_source resolves csv, json, and directories", "[harness]") {
  TempDir tmp;
  const std::string csv = tmp.file("d.csv", "f0,label\n1,0\n2,1\n");
  CHECK(load_data_source(csv).size() == 2);

  const std::string spec = tmp.file(
      "d.json",
      R"({"type": "synthetic", "class_count": 3, "dim": 4, "samples_per_class": 2})");
  const Dataset ds = load_data_source(spec);
  CHECK(ds.size() == 6);
  CHECK(ds.class_count == 3);

  CHECK_THROWS_AS(load_data_source(tmp.file("d.xyz", "?")), Error);
}

TEST_CASE("bundles round trip bit for bit", "[harness]") {
  TempDir tmp;
  ModelBundle bundle;
  bundle.matrix = bch(15, 15);
  bundle.network = init(6, 5, 15, 17);
  SyntheticSpec spec;
  spec.class_count = 4;
  spec.dim = 6;
  bundle.pca = pca_fit(generate_synthetic(spec).features, 3);

  const std::string path = tmp.at("model.bundle");
  save_bundle(path, bundle);
  const ModelBundle loaded = load_bundle(path);
  CHECK(loaded.network.hidden_weights == bundle.network.hidden_weights);
  CHECK(loaded.network.output_weights == bundle.network.output_weights);
  CHECK(loaded.matrix == bundle.matrix);
  REQUIRE(loaded.pca.has_value());
  CHECK(loaded.pca->mean == bundle.pca->mean);
  CHECK(loaded.pca->components == bundle.pca->components);
  CHECK(loaded.pca->eigenvalues == bundle.pca->eigenvalues);
}

TEST_CASE("load_bundle rejects damaged files", "[harness]") {
  TempDir tmp;
  CHECK_THROWS_AS(load_bundle(tmp.file("junk.bundle", "hello")), Error);
  CHECK_THROWS_AS(load_bundle(tmp.file("wrong.bundle", R"({"format": "other"})")), Error);
  CHECK_THROWS_AS(
      load_bundle(tmp.file("ver.bundle", R"({"format": "ecocnet-bundle", "version": 9})")),
      Error);
}

TEST_CASE("cmd_codegen writes the matrix and prints its analysis", "[harness]") {
  TempDir tmp;
  CodegenOptions options;
  options.method = "onevsall";
  options.classes = 15;
  options.out_path = tmp.at("code.txt");
  std::ostringstream out;
  cmd_codegen(options, out);
  CHECK(read_all(options.out_path) == serialize(one_vs_all(15)));
  CHECK(out.str().find("d=2") != std::string::npos);
  CHECK(out.str().find("t=0") != std::string::npos);
}

TEST_CASE("cmd_train writes a bundle that reproduces its final cost", "[harness]") {
  TempDir tmp;
  const std::string config = tmp.file("config.json", kTinyConfig);
  const std::string bundle_path = tmp.at("model.bundle");
  std::ostringstream out;
  cmd_train(config, bundle_path, out);

  REQUIRE(fs::exists(bundle_path));
  REQUIRE(fs::exists(bundle_path + ".trace.csv"));

  // Last trace row against a fresh reload of the bundle.
  const std::string trace = read_all(bundle_path + ".trace.csv");
  const std::size_t last_line_start = trace.rfind('\n', trace.size() - 2) + 1;
  std::istringstream last(trace.substr(last_line_start));
  std::string epoch_field;
  std::string standard_field;
  std::getline(last, epoch_field, ',');
  std::getline(last, standard_field, ',');
  const double final_standard = std::stod(standard_field);

  const ModelBundle bundle = load_bundle(bundle_path);
  const ExperimentConfig cfg = load_config(config);
  const Dataset ds = load_dataset(cfg.dataset);
  REQUIRE(bundle.pca.has_value());
  const Matrix projected = pca_project_rows(*bundle.pca, ds.features);
  std::vector<Target> targets;
  for (int label : ds.labels) targets.push_back(encode_targets(label, bundle.matrix));
  CHECK(cost_standard(bundle.network, projected, targets) ==
        Approx(final_standard).margin(1e-10));
}

TEST_CASE("cmd_eval writes a rate report", "[harness]") {
  TempDir tmp;
  const std::string config = tmp.file("config.json", kTinyConfig);
  const std::string bundle_path = tmp.at("model.bundle");
  std::ostringstream out;
  cmd_train(config, bundle_path, out);

  const std::string data = tmp.file(
      "data.json",
      R"({"type": "synthetic", "class_count": 5, "dim": 8,
          "samples_per_class": 8, "cluster_spread": 0.15, "seed": 3})");
  const std::string report = tmp.at("report.csv");
  cmd_eval(bundle_path, data, 25.0, report, out);

  const std::string csv = read_all(report);
  CHECK(csv.find("samples,recognition_rate,error_rate,rejection_rate,reliability") == 0);
  // One data row: rates must total 100.
  std::istringstream row(csv.substr(csv.find('\n') + 1));
  std::string field;
  std::getline(row, field, ',');  // sample count
  CHECK(field == "40");
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    std::getline(row, field, ',');
    total += std::stod(field);
  }
  CHECK(total == Approx(100.0).margin(1e-6));
}

TEST_CASE("cmd_compare emits one row per method", "[harness]") {
  TempDir tmp;
  const std::string config = tmp.file("config.json", kTinyConfig);
  const std::string report = tmp.at("compare.csv");
  std::ostringstream out;
  cmd_compare(config, report, out);

  const std::string csv = read_all(report);
  CHECK(csv.find("method,G2/P6,G4/P4\n") == 0);
  CHECK(csv.find("\nstandard,") != std::string::npos);
  CHECK(csv.find("\nweighted,") != std::string::npos);
  CHECK(out.str().find("Recognition rate") != std::string::npos);
}

TEST_CASE("compare runs are byte-identical", "[harness]") {
  TempDir tmp;
  const std::string config = tmp.file("config.json", kTinyConfig);
  std::ostringstream out;
  cmd_compare(config, tmp.at("a.csv"), out);
  cmd_compare(config, tmp.at("b.csv"), out);
  const std::string a = read_all(tmp.at("a.csv"));
  CHECK_FALSE(a.empty());
  CHECK(a == read_all(tmp.at("b.csv")));
}

TEST_CASE("the CLI maps failure categories to exit codes", "[harness]") {
  TempDir tmp;
  // success
  CHECK(run_cli("codegen --method onevsall --classes 15 --out " + tmp.at("m.txt")) == 0);
  // usage errors
  CHECK(run_cli("codegen --method onevsall --classes 15") == 1);  // missing --out
  CHECK(run_cli("--bogus") == 1);
  CHECK(run_cli("codegen --method onevsall --classes 2 --out " + tmp.at("x.txt")) == 1);
  // data error: unreadable bundle
  CHECK(run_cli("eval --bundle " + tmp.file("junk.bundle", "junk") + " --data " +
                tmp.file("d.csv", "f0,label\n1,0\n2,1\n") + " --report " +
                tmp.at("r.csv")) == 2);
  // numerical failure: BCH block too long for 3 classes
  CHECK(run_cli("codegen --method bch --classes 3 --length 15 --out " + tmp.at("y.txt")) ==
        3);
}

TEST_CASE("the CLI writes usable artifacts end to end", "[harness]") {
  TempDir tmp;
  const std::string config = tmp.file("config.json", kTinyConfig);
  const std::string bundle = tmp.at("model.bundle");
  const std::string report = tmp.at("report.csv");
  CHECK(run_cli("train --config " + config + " --out " + bundle) == 0);
  const std::string data = tmp.file(
      "data.json",
      R"({"type": "synthetic", "class_count": 5, "dim": 8,
          "samples_per_class": 8, "cluster_spread": 0.15, "seed": 3})");
  CHECK(run_cli("eval --bundle " + bundle + " --data " + data + " --threshold 25 --report " +
                report) == 0);
  CHECK(fs::exists(report));
}
