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
// Experiment harness: JSON configuration, model bundles, report emission,
// and the codegen / train / eval / compare commands the CLI dispatches to.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ecoc/codebook.hpp"
#include "ecoc/dataset.hpp"
#include "ecoc/decoder.hpp"
#include "ecoc/error.hpp"
#include "ecoc/evaluator.hpp"
#include "ecoc/features.hpp"
#include "ecoc/network.hpp"

namespace ecoc::harness {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Configuration.
// ---------------------------------------------------------------------------

struct DataSourceSpec {
  enum class Kind { Csv, Images, Synthetic };
  Kind kind = Kind::Synthetic;
  std::string path;
  SyntheticSpec synthetic;
};

struct CodeSpec {
  std::optional<std::string> file;  // when set, the matrix is read from disk
  std::string method = "bch";
  std::optional<std::size_t> classes;  // defaults to the dataset's class count
  std::optional<std::size_t> length;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
};

struct ExperimentConfig {
  DataSourceSpec dataset;
  std::size_t pca_k = 30;  // 0 disables the projection stage
  CodeSpec code;
  TrainConfig train;
  SplitSpec split{6, 5, 10, 1};
  double threshold = 25.0;
  std::vector<std::pair<std::size_t, std::size_t>> compare_columns{
      {2, 9}, {4, 7}, {6, 5}, {8, 3}};
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, path + ": cannot open file for writing");
  out << content;
  if (!out) fail(errc::parse_error, path + ": write failed");
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

/// Full-precision form that parses back to the identical double.
inline std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail(errc::parse_error, where + ": unknown key '" + item.key() + "'");
  }
}

inline void require_exists(const std::string& path, const std::string& what) {
  if (!std::filesystem::exists(path)) {
    fail(errc::parse_error, what + " '" + path + "' does not exist");
  }
}

inline DataSourceSpec parse_dataset_spec(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "dataset: expected an object");
  DataSourceSpec spec;
  const std::string type = j.value("type", std::string());
  if (type == "csv" || type == "images") {
    check_keys(j, {"type", "path"}, "dataset");
    spec.kind = type == "csv" ? DataSourceSpec::Kind::Csv : DataSourceSpec::Kind::Images;
    if (!j.contains("path")) fail(errc::parse_error, "dataset: missing 'path'");
    spec.path = j.at("path").get<std::string>();
    require_exists(spec.path, "dataset path");
  } else if (type == "synthetic") {
    check_keys(j,
               {"type", "class_count", "dim", "samples_per_class", "cluster_spread",
                "seed"},
               "dataset");
    spec.kind = DataSourceSpec::Kind::Synthetic;
    spec.synthetic.class_count = j.value("class_count", spec.synthetic.class_count);
    spec.synthetic.dim = j.value("dim", spec.synthetic.dim);
    spec.synthetic.samples_per_class =
        j.value("samples_per_class", spec.synthetic.samples_per_class);
    spec.synthetic.cluster_spread =
        j.value("cluster_spread", spec.synthetic.cluster_spread);
    spec.synthetic.seed = j.value("seed", spec.synthetic.seed);
  } else {
    fail(errc::parse_error, "dataset: type must be csv, images or synthetic");
  }
  return spec;
}

inline CodeSpec parse_code_spec(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "code: expected an object");
  CodeSpec spec;
  if (j.contains("file")) {
    check_keys(j, {"file"}, "code");
    spec.file = j.at("file").get<std::string>();
    require_exists(*spec.file, "code matrix file");
    return spec;
  }
  check_keys(j, {"method", "classes", "length", "seed", "trials"}, "code");
  spec.method = j.value("method", spec.method);
  if (j.contains("classes")) spec.classes = j.at("classes").get<std::size_t>();
  if (j.contains("length")) spec.length = j.at("length").get<std::size_t>();
  spec.seed = j.value("seed", spec.seed);
  spec.trials = j.value("trials", spec.trials);
  return spec;
}

inline TrainConfig parse_train_config(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "train: expected an object");
  check_keys(j,
             {"cost", "epochs", "learning_rate", "lr_decay", "hidden", "update",
              "seed", "init_scale"},
             "train");
  TrainConfig cfg;
  cfg.cost = CostVariant::Weighted;
  cfg.epochs = 150;
  cfg.learning_rate = 0.1;
  cfg.hidden_dim = 40;
  cfg.seed = 1;
  const std::string cost = j.value("cost", std::string("weighted"));
  if (cost == "standard") {
    cfg.cost = CostVariant::Standard;
  } else if (cost == "weighted") {
    cfg.cost = CostVariant::Weighted;
  } else {
    fail(errc::parse_error, "train: cost must be 'standard' or 'weighted'");
  }
  cfg.epochs = j.value("epochs", cfg.epochs);
  cfg.learning_rate = j.value("learning_rate", cfg.learning_rate);
  cfg.lr_decay = j.value("lr_decay", cfg.lr_decay);
  cfg.hidden_dim = j.value("hidden", cfg.hidden_dim);
  const std::string update = j.value("update", std::string("per_sample"));
  if (update == "per_sample") {
    cfg.update = UpdateMode::PerSample;
  } else if (update == "full_batch") {
    cfg.update = UpdateMode::FullBatch;
  } else {
    fail(errc::parse_error, "train: update must be 'per_sample' or 'full_batch'");
  }
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("init_scale")) cfg.init_scale = j.at("init_scale").get<double>();
  return cfg;
}

inline SplitSpec parse_split_spec(const json& j, const SplitSpec& defaults) {
  if (!j.is_object()) fail(errc::parse_error, "split: expected an object");
  check_keys(j, {"train_per_class", "test_per_class", "splits", "seed"}, "split");
  SplitSpec spec = defaults;
  spec.train_per_class = j.value("train_per_class", spec.train_per_class);
  spec.test_per_class = j.value("test_per_class", spec.test_per_class);
  spec.split_count = j.value("splits", spec.split_count);
  spec.seed = j.value("seed", spec.seed);
  return spec;
}

}  // namespace detail

inline ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, origin + ": " + e.what());
  }
  try {
    if (!j.is_object()) fail(errc::parse_error, origin + ": expected a JSON object");
    detail::check_keys(
        j, {"dataset", "pca_k", "code", "train", "split", "threshold", "compare_columns"},
        origin);
    ExperimentConfig cfg;
    if (!j.contains("dataset")) fail(errc::parse_error, origin + ": missing 'dataset'");
    cfg.dataset = detail::parse_dataset_spec(j.at("dataset"));
    cfg.pca_k = j.value("pca_k", cfg.pca_k);
    if (j.contains("code")) cfg.code = detail::parse_code_spec(j.at("code"));
    if (j.contains("train")) {
      cfg.train = detail::parse_train_config(j.at("train"));
    } else {
      cfg.train = detail::parse_train_config(json::object());
    }
    if (j.contains("split")) cfg.split = detail::parse_split_spec(j.at("split"), cfg.split);
    cfg.threshold = j.value("threshold", cfg.threshold);
    if (!(cfg.threshold >= 0.0 && cfg.threshold <= 100.0)) {
      fail(errc::parse_error, origin + ": threshold must be in [0, 100]");
    }
    if (j.contains("compare_columns")) {
      cfg.compare_columns.clear();
      for (const auto& col : j.at("compare_columns")) {
        if (!col.is_array() || col.size() != 2) {
          fail(errc::parse_error, origin + ": compare_columns entries must be [m, n]");
        }
        cfg.compare_columns.emplace_back(col[0].get<std::size_t>(),
                                         col[1].get<std::size_t>());
      }
      if (cfg.compare_columns.empty()) {
        fail(errc::parse_error, origin + ": compare_columns must not be empty");
      }
    }
    return cfg;
  } catch (const json::exception& e) {
    fail(errc::parse_error, origin + ": " + e.what());
  }
}

inline ExperimentConfig load_config(const std::string& path) {
  return parse_config(detail::read_file(path), path);
}

inline Dataset load_dataset(const DataSourceSpec& spec) {
  switch (spec.kind) {
    case DataSourceSpec::Kind::Csv: return load_csv(spec.path);
    case DataSourceSpec::Kind::Images: return load_image_dir(spec.path);
    case DataSourceSpec::Kind::Synthetic: return generate_synthetic(spec.synthetic);
  }
  fail(errc::invalid_argument, "unreachable dataset kind");
}

/// Resolves a --data argument: a directory is an image corpus, *.csv a
/// feature table, *.json a dataset spec object.
inline Dataset load_data_source(const std::string& src) {
  namespace fs = std::filesystem;
  if (fs::is_directory(src)) {
    return load_image_dir(src);
  }
  if (src.size() > 4 && src.substr(src.size() - 4) == ".csv") {
    return load_csv(src);
  }
  if (src.size() > 5 && src.substr(src.size() - 5) == ".json") {
    json j;
    try {
      j = json::parse(detail::read_file(src));
    } catch (const json::exception& e) {
      fail(errc::parse_error, src + ": " + e.what());
    }
    return load_dataset(detail::parse_dataset_spec(j));
  }
  fail(errc::parse_error, src + ": expected a directory, .csv file or .json dataset spec");
}

/// Builds the code matrix named by a CodeSpec. `dataset_classes` fills in
/// the class count when the spec leaves it open; a matrix loaded from disk
/// is validated and checked against it.
inline CodeMatrix make_code(const CodeSpec& spec, std::size_t dataset_classes) {
  if (spec.file) {
    CodeMatrix m = deserialize(detail::read_file(*spec.file));
    if (auto err = validation_error(m)) {
      fail(errc::invalid_matrix, *spec.file + ": " + *err);
    }
    if (dataset_classes != 0 && m.class_count() != dataset_classes) {
      fail(errc::invalid_dimension,
           *spec.file + " has " + std::to_string(m.class_count()) +
               " rows, dataset has " + std::to_string(dataset_classes) + " classes");
    }
    return m;
  }
  const std::size_t classes = spec.classes.value_or(dataset_classes);
  if (classes == 0) fail(errc::invalid_argument, "code: class count is required");
  if (spec.method == "onevsall") return one_vs_all(classes);
  if (spec.method == "onevsone") return one_vs_one(classes);
  if (spec.method == "exhaustive") return exhaustive(classes);
  if (spec.method == "dense") {
    return dense_random(classes, spec.length.value_or(39), spec.seed, spec.trials);
  }
  if (spec.method == "sparse") {
    return sparse_random(classes, spec.length.value_or(59), spec.seed, spec.trials);
  }
  if (spec.method == "bch") return bch(classes, spec.length.value_or(31));
  fail(errc::invalid_argument, "unknown code method '" + spec.method + "'");
}

// ---------------------------------------------------------------------------
// Model bundles.
// ---------------------------------------------------------------------------

/// Everything needed to evaluate later: the optional PCA front end, the
/// trained network, and the code matrix it was trained against.
struct ModelBundle {
  std::optional<PcaModel> pca;
  Mlp network;
  CodeMatrix matrix;
};

namespace detail {

inline json matrix_to_json(const Matrix& m) {
  json flat = json::array();
  for (double v : m.data()) flat.push_back(v);
  return flat;
}

inline Matrix matrix_from_json(const json& flat, std::size_t rows, std::size_t cols,
                               const std::string& what) {
  if (!flat.is_array() || flat.size() != rows * cols) {
    fail(errc::parse_error, what + ": expected " + std::to_string(rows * cols) +
                                " values");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < flat.size(); ++i) m.data()[i] = flat[i].get<double>();
  return m;
}

}  // namespace detail

inline void save_bundle(const std::string& path, const ModelBundle& bundle) {
  json j;
  j["format"] = "ecocnet-bundle";
  j["version"] = 1;
  if (bundle.pca) {
    json p;
    p["input_dim"] = bundle.pca->input_dim();
    p["output_dim"] = bundle.pca->output_dim();
    p["mean"] = bundle.pca->mean;
    p["eigenvalues"] = bundle.pca->eigenvalues;
    p["components"] = detail::matrix_to_json(bundle.pca->components);
    j["pca"] = std::move(p);
  } else {
    j["pca"] = nullptr;
  }
  json n;
  n["input_dim"] = bundle.network.input_dim;
  n["hidden_dim"] = bundle.network.hidden_dim;
  n["output_dim"] = bundle.network.output_dim;
  n["hidden_weights"] = detail::matrix_to_json(bundle.network.hidden_weights);
  n["output_weights"] = detail::matrix_to_json(bundle.network.output_weights);
  j["network"] = std::move(n);
  j["code_matrix"] = serialize(bundle.matrix);
  detail::write_file(path, j.dump(2) + "\n");
}

inline ModelBundle load_bundle(const std::string& path) {
  json j;
  try {
    j = json::parse(detail::read_file(path));
  } catch (const json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  try {
    if (j.value("format", std::string()) != "ecocnet-bundle") {
      fail(errc::parse_error, path + ": not a model bundle");
    }
    if (j.value("version", 0) != 1) {
      fail(errc::parse_error, path + ": unsupported bundle version");
    }
    ModelBundle bundle;
    const json& n = j.at("network");
    bundle.network.input_dim = n.at("input_dim").get<std::size_t>();
    bundle.network.hidden_dim = n.at("hidden_dim").get<std::size_t>();
    bundle.network.output_dim = n.at("output_dim").get<std::size_t>();
    bundle.network.hidden_weights =
        detail::matrix_from_json(n.at("hidden_weights"), bundle.network.input_dim + 1,
                                 bundle.network.hidden_dim, path + ": hidden_weights");
    bundle.network.output_weights =
        detail::matrix_from_json(n.at("output_weights"), bundle.network.hidden_dim + 1,
                                 bundle.network.output_dim, path + ": output_weights");
    if (!j.at("pca").is_null()) {
      const json& p = j.at("pca");
      PcaModel pca;
      const auto input_dim = p.at("input_dim").get<std::size_t>();
      const auto output_dim = p.at("output_dim").get<std::size_t>();
      pca.mean = p.at("mean").get<std::vector<double>>();
      pca.eigenvalues = p.at("eigenvalues").get<std::vector<double>>();
      if (pca.mean.size() != input_dim || pca.eigenvalues.size() != output_dim) {
        fail(errc::parse_error, path + ": inconsistent PCA dimensions");
      }
      pca.components = detail::matrix_from_json(p.at("components"), output_dim,
                                                input_dim, path + ": components");
      bundle.pca = std::move(pca);
    }
    bundle.matrix = deserialize(j.at("code_matrix").get<std::string>());
    if (auto err = validation_error(bundle.matrix)) {
      fail(errc::parse_error, path + ": bundled code matrix invalid: " + *err);
    }
    if (bundle.matrix.code_length() != bundle.network.output_dim) {
      fail(errc::parse_error, path + ": code length does not match network outputs");
    }
    return bundle;
  } catch (const json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

struct CodegenOptions {
  std::string method;
  std::size_t classes = 0;
  std::optional<std::size_t> length;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string out_path;
};

/// Generates a code matrix, writes its text form, and prints the analysis.
inline void cmd_codegen(const CodegenOptions& options, std::ostream& out) {
  CodeSpec spec;
  spec.method = options.method;
  spec.classes = options.classes;
  spec.length = options.length;
  spec.seed = options.seed;
  spec.trials = options.trials;
  const CodeMatrix matrix = make_code(spec, options.classes);
  detail::write_file(options.out_path, serialize(matrix));
  const CodeAnalysis analysis = analyze(matrix);
  out << "wrote " << options.out_path << ": C=" << matrix.class_count()
      << " b=" << matrix.code_length() << " d=" << analysis.min_row_distance
      << " t=" << analysis.correcting_capability << "\n";
}

namespace detail {

inline std::vector<Target> targets_for(const Dataset& ds, const CodeMatrix& matrix) {
  std::vector<Target> class_targets;
  class_targets.reserve(matrix.class_count());
  for (std::size_t cls = 0; cls < matrix.class_count(); ++cls) {
    class_targets.push_back(encode_targets(cls, matrix));
  }
  std::vector<Target> targets;
  targets.reserve(ds.size());
  for (int label : ds.labels) {
    targets.push_back(class_targets[static_cast<std::size_t>(label)]);
  }
  return targets;
}

inline std::string trace_csv(const TrainTrace& trace) {
  std::string csv = "epoch,standard_cost,weighted_cost\n";
  for (std::size_t e = 0; e < trace.standard_cost.size(); ++e) {
    csv += std::to_string(e);
    csv += ',';
    csv += format_full(trace.standard_cost[e]);
    csv += ',';
    csv += format_full(trace.weighted_cost[e]);
    csv += '\n';
  }
  return csv;
}

inline std::string report_csv(std::size_t samples, const SplitReport& r) {
  std::string csv = "samples,recognition_rate,error_rate,rejection_rate,reliability\n";
  csv += std::to_string(samples);
  csv += ',';
  csv += format_fixed(r.recognition_rate, 6);
  csv += ',';
  csv += format_fixed(r.error_rate, 6);
  csv += ',';
  csv += format_fixed(r.rejection_rate, 6);
  csv += ',';
  csv += r.reliability ? format_fixed(*r.reliability, 6) : std::string("n/a");
  csv += '\n';
  return csv;
}

}  // namespace detail

/// Trains one network on the configured dataset (PCA fitted on the same
/// data when pca_k > 0) and writes the model bundle plus a per-epoch cost
/// trace CSV at <bundle>.trace.csv.
inline void cmd_train(const std::string& config_path, const std::string& bundle_path,
                      std::ostream& out) {
  const ExperimentConfig cfg = load_config(config_path);
  const Dataset ds = load_dataset(cfg.dataset);
  ModelBundle bundle;
  bundle.matrix = make_code(cfg.code, static_cast<std::size_t>(ds.class_count));

  Matrix features = ds.features;
  if (cfg.pca_k > 0) {
    bundle.pca = pca_fit(ds.features, cfg.pca_k);
    features = pca_project_rows(*bundle.pca, ds.features);
  }
  const std::vector<Target> targets = detail::targets_for(ds, bundle.matrix);

  Mlp net = init(features.cols(), cfg.train.hidden_dim, bundle.matrix.code_length(),
                 derive_seed(cfg.train.seed, 1), cfg.train.init_scale);
  TrainConfig train_cfg = cfg.train;
  train_cfg.seed = derive_seed(cfg.train.seed, 2);
  auto [trained, trace] = train(std::move(net), features, targets, train_cfg);
  bundle.network = std::move(trained);

  save_bundle(bundle_path, bundle);
  detail::write_file(bundle_path + ".trace.csv", detail::trace_csv(trace));

  const CodeAnalysis analysis = analyze(bundle.matrix);
  out << "trained on " << ds.size() << " samples (" << ds.features.cols() << " -> "
      << features.cols() << " dims), code " << bundle.matrix.class_count() << "x"
      << bundle.matrix.code_length() << " (d=" << analysis.min_row_distance
      << ", t=" << analysis.correcting_capability << ")\n";
  out << "final cost: E=" << detail::format_full(trace.standard_cost.back())
      << " weighted=" << detail::format_full(trace.weighted_cost.back()) << "\n";
  out << "wrote " << bundle_path << " and " << bundle_path << ".trace.csv\n";
}

/// Evaluates a bundle on a data source and writes the rate report.
inline void cmd_eval(const std::string& bundle_path, const std::string& data_source,
                     std::optional<double> threshold, const std::string& report_path,
                     std::ostream& out) {
  const ModelBundle bundle = load_bundle(bundle_path);
  const Dataset ds = load_data_source(data_source);
  if (static_cast<std::size_t>(ds.class_count) != bundle.matrix.class_count()) {
    fail(errc::invalid_dimension,
         "data source has " + std::to_string(ds.class_count) + " classes, bundle has " +
             std::to_string(bundle.matrix.class_count()));
  }
  Matrix features = ds.features;
  if (bundle.pca) features = pca_project_rows(*bundle.pca, ds.features);
  if (features.cols() != bundle.network.input_dim) {
    fail(errc::invalid_dimension,
         "features have dimension " + std::to_string(features.cols()) +
             ", network expects " + std::to_string(bundle.network.input_dim));
  }
  const double t = threshold.value_or(25.0);
  const SplitReport report =
      evaluate(bundle.network, features, ds.labels, bundle.matrix, t);

  detail::write_file(report_path, detail::report_csv(ds.size(), report));
  out << "evaluated " << ds.size() << " samples at threshold "
      << detail::format_fixed(t, 2) << "\n";
  out << "recognition " << detail::format_fixed(report.recognition_rate, 2)
      << "%  error " << detail::format_fixed(report.error_rate, 2) << "%  rejection "
      << detail::format_fixed(report.rejection_rate, 2) << "%  reliability "
      << (report.reliability ? detail::format_fixed(*report.reliability, 2) + "%"
                             : std::string("n/a"))
      << "\n";
  out << "wrote " << report_path << "\n";
}

/// Result of one compare run: mean recognition rate per (column, variant).
struct CompareResult {
  std::vector<std::string> column_names;          // "G2/P9", ...
  std::vector<double> standard_means;
  std::vector<double> weighted_means;
};

/// Runs both cost variants over the configured Gm/Pn columns on shared
/// splits (and shared initial weights per split), the usual paired setup
/// for comparing the two training rules.
inline CompareResult run_compare(const ExperimentConfig& cfg) {
  Dataset ds = load_dataset(cfg.dataset);
  const CodeMatrix matrix = make_code(cfg.code, static_cast<std::size_t>(ds.class_count));
  if (cfg.pca_k > 0) {
    const PcaModel pca = pca_fit(ds.features, cfg.pca_k);
    ds.features = pca_project_rows(pca, ds.features);
  }

  CompareResult result;
  for (const auto& [m, n] : cfg.compare_columns) {
    SplitSpec spec = cfg.split;
    spec.train_per_class = m;
    spec.test_per_class = n;
    result.column_names.push_back("G" + std::to_string(m) + "/P" + std::to_string(n));

    TrainConfig standard_cfg = cfg.train;
    standard_cfg.cost = CostVariant::Standard;
    TrainConfig weighted_cfg = cfg.train;
    weighted_cfg.cost = CostVariant::Weighted;

    result.standard_means.push_back(
        run_experiment(ds, matrix, standard_cfg, spec, cfg.threshold)
            .mean.recognition_rate);
    result.weighted_means.push_back(
        run_experiment(ds, matrix, weighted_cfg, spec, cfg.threshold)
            .mean.recognition_rate);
  }
  return result;
}

namespace detail {

inline std::string compare_csv(const CompareResult& r) {
  std::string csv = "method";
  for (const std::string& name : r.column_names) csv += "," + name;
  csv += "\nstandard";
  for (double v : r.standard_means) csv += "," + format_fixed(v, 2);
  csv += "\nweighted";
  for (double v : r.weighted_means) csv += "," + format_fixed(v, 2);
  csv += "\n";
  return csv;
}

inline void print_compare_table(const CompareResult& r, std::size_t splits,
                                double threshold, std::ostream& out) {
  out << "Recognition rate (%), mean over " << splits << " splits, threshold "
      << format_fixed(threshold, 0) << "\n";
  out << "method   ";
  for (const std::string& name : r.column_names) {
    out << ' ' << name;
    for (std::size_t pad = name.size(); pad < 8; ++pad) out << ' ';
  }
  out << "\nstandard ";
  for (double v : r.standard_means) {
    const std::string s = format_fixed(v, 2);
    out << ' ' << s;
    for (std::size_t pad = s.size(); pad < 8; ++pad) out << ' ';
  }
  out << "\nweighted ";
  for (double v : r.weighted_means) {
    const std::string s = format_fixed(v, 2);
    out << ' ' << s;
    for (std::size_t pad = s.size(); pad < 8; ++pad) out << ' ';
  }
  out << "\n";
}

}  // namespace detail

/// Standard-vs-weighted comparison table across the configured Gm/Pn
/// columns, written as CSV and echoed as an aligned text table.
inline void cmd_compare(const std::string& config_path, const std::string& report_path,
                        std::ostream& out) {
  const ExperimentConfig cfg = load_config(config_path);
  const CompareResult result = run_compare(cfg);
  detail::write_file(report_path, detail::compare_csv(result));
  detail::print_compare_table(result, cfg.split.split_count, cfg.threshold, out);
  out << "wrote " << report_path << "\n";
}

}  // namespace ecoc::harness
