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
//
// Command line front end. Exit codes: 0 success, 1 usage error, 2 data
// error, 3 numerical failure. Failures print one line of the form
// "error: <category>: <message>".

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ecoc/ecoc.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ECOC multi-class classification toolkit"};
  app.require_subcommand(1);

  ecoc::harness::CodegenOptions codegen;
  auto* gen = app.add_subcommand("codegen", "generate a code matrix file");
  gen->add_option("--method", codegen.method, "onevsall|onevsone|exhaustive|dense|sparse|bch")
      ->required();
  gen->add_option("--classes", codegen.classes, "number of classes")->required();
  std::size_t length = 0;
  auto* length_opt = gen->add_option("--length", length, "code length (dense/sparse) or block length (bch)");
  gen->add_option("--seed", codegen.seed, "random seed for dense/sparse");
  gen->add_option("--trials", codegen.trials, "candidate count for dense/sparse");
  gen->add_option("--out", codegen.out_path, "output matrix file")->required();

  std::string train_config;
  std::string train_out;
  auto* train = app.add_subcommand("train", "train a model bundle from a config file");
  train->add_option("--config", train_config, "experiment config (JSON)")->required();
  train->add_option("--out", train_out, "output bundle path")->required();

  std::string eval_bundle;
  std::string eval_data;
  std::string eval_report;
  double eval_threshold = -1.0;
  auto* eval = app.add_subcommand("eval", "evaluate a bundle on a data source");
  eval->add_option("--bundle", eval_bundle, "model bundle path")->required();
  eval->add_option("--data", eval_data, "directory, .csv file or .json dataset spec")
      ->required();
  auto* threshold_opt =
      eval->add_option("--threshold", eval_threshold, "rejection threshold in [0, 100]");
  eval->add_option("--report", eval_report, "output report CSV")->required();

  std::string compare_config;
  std::string compare_report;
  auto* compare =
      app.add_subcommand("compare", "standard vs weighted training across Gm/Pn columns");
  compare->add_option("--config", compare_config, "experiment config (JSON)")->required();
  compare->add_option("--report", compare_report, "output report CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: usage: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) {
      if (*length_opt) codegen.length = length;
      ecoc::harness::cmd_codegen(codegen, std::cout);
    } else if (train->parsed()) {
      ecoc::harness::cmd_train(train_config, train_out, std::cout);
    } else if (eval->parsed()) {
      std::optional<double> threshold;
      if (*threshold_opt) threshold = eval_threshold;
      ecoc::harness::cmd_eval(eval_bundle, eval_data, threshold, eval_report, std::cout);
    } else if (compare->parsed()) {
      ecoc::harness::cmd_compare(compare_config, compare_report, std::cout);
    }
  } catch (const ecoc::Error& e) {
    std::cerr << "error: " << ecoc::to_string(e.code()) << ": " << e.what() << "\n";
    return static_cast<int>(ecoc::classify_exit(e.code()));
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
