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
// Experiment protocol: per-class Gm/Pn train/test splits, recognition /
// error / rejection / reliability metrics, and multi-split averaging with a
// fresh network trained per split.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecoc/codebook.hpp"
#include "ecoc/dataset.hpp"
#include "ecoc/decoder.hpp"
#include "ecoc/error.hpp"
#include "ecoc/matrix.hpp"
#include "ecoc/network.hpp"
#include "ecoc/rng.hpp"

namespace ecoc {

/// Gm/Pn protocol: per class, m samples train and n test, repeated over
/// `split_count` random splits.
struct SplitSpec {
  std::size_t train_per_class = 1;  // m
  std::size_t test_per_class = 1;   // n
  std::size_t split_count = 10;
  std::uint64_t seed = 0;
};

struct Split {
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;
};

/// Rates of one evaluation, in percent. recognition + error + rejection
/// always totals 100; reliability is recognition over (recognition + error)
/// among accepted samples and is absent when everything was rejected.
struct SplitReport {
  double recognition_rate = 0.0;
  double error_rate = 0.0;
  double rejection_rate = 0.0;
  std::optional<double> reliability;
};

struct EvaluationReport {
  std::vector<SplitReport> per_split;
  SplitReport mean;  // arithmetic mean; reliability averaged where defined
};

/// Draws split `split_index` of the Gm/Pn protocol: per class, m indices
/// sampled without replacement for training and n of the remainder for
/// testing. Deterministic in (spec.seed, split_index); train and test are
/// disjoint by construction.
inline Split split_gm_pn(const Dataset& dataset, const SplitSpec& spec,
                         std::size_t split_index) {
  if (spec.train_per_class < 1 || spec.test_per_class < 1) {
    fail(errc::invalid_argument, "both m and n must be at least 1");
  }
  std::vector<std::vector<std::size_t>> by_class(
      static_cast<std::size_t>(dataset.class_count));
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    by_class[static_cast<std::size_t>(dataset.labels[i])].push_back(i);
  }
  const std::size_t need = spec.train_per_class + spec.test_per_class;
  for (std::size_t cls = 0; cls < by_class.size(); ++cls) {
    if (by_class[cls].size() < need) {
      fail(errc::insufficient_data,
           "class " + std::to_string(cls) + " has " +
               std::to_string(by_class[cls].size()) + " samples, split needs " +
               std::to_string(need));
    }
  }

  SplitMix64 rng(derive_seed(spec.seed, split_index));
  Split split;
  for (auto& indices : by_class) {
    rng.shuffle(indices);
    for (std::size_t i = 0; i < spec.train_per_class; ++i) {
      split.train_indices.push_back(indices[i]);
    }
    for (std::size_t i = 0; i < spec.test_per_class; ++i) {
      split.test_indices.push_back(indices[spec.train_per_class + i]);
    }
  }
  return split;
}

/// Aggregates per-sample decode outcomes into rates.
inline SplitReport tally(const std::vector<DecodeResult>& decisions,
                         const std::vector<int>& labels) {
  if (decisions.empty()) fail(errc::empty_input, "nothing to tally");
  if (decisions.size() != labels.size()) {
    fail(errc::invalid_dimension, "decision and label counts differ");
  }
  std::size_t correct = 0;
  std::size_t wrong = 0;
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    if (decisions[i].rejected) {
      ++rejected;
    } else if (decisions[i].predicted_class ==
               static_cast<std::size_t>(labels[i])) {
      ++correct;
    } else {
      ++wrong;
    }
  }
  const double n = static_cast<double>(decisions.size());
  SplitReport report;
  report.recognition_rate = 100.0 * static_cast<double>(correct) / n;
  report.error_rate = 100.0 * static_cast<double>(wrong) / n;
  report.rejection_rate = 100.0 * static_cast<double>(rejected) / n;
  if (correct + wrong > 0) {
    report.reliability = 100.0 * static_cast<double>(correct) /
                         static_cast<double>(correct + wrong);
  }
  return report;
}

/// Runs the trained network over a test set and tallies the rates at the
/// given rejection threshold.
inline SplitReport evaluate(const Mlp& net, const Matrix& features,
                            const std::vector<int>& labels, const CodeMatrix& matrix,
                            double threshold) {
  if (features.rows() == 0) fail(errc::empty_input, "test set is empty");
  if (features.rows() != labels.size()) {
    fail(errc::invalid_dimension, "feature and label counts differ");
  }
  std::vector<DecodeResult> decisions;
  decisions.reserve(features.rows());
  for (std::size_t i = 0; i < features.rows(); ++i) {
    const std::vector<double> y =
        forward(net, std::vector<double>(features.row(i), features.row(i) + features.cols()));
    decisions.push_back(classify_with_reject(y, matrix, threshold));
  }
  return tally(decisions, labels);
}

namespace detail {

inline Matrix gather_rows(const Matrix& src, const std::vector<std::size_t>& rows) {
  Matrix out(rows.size(), src.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) out(i, j) = src(rows[i], j);
  }
  return out;
}

}  // namespace detail

/// Full protocol: for each split, trains a fresh network (initialization and
/// shuffling seeds derived from (spec.seed, split_index), so two runs with
/// the same spec share splits and starting weights) and evaluates it on the
/// split's test set. The mean row averages the per-split rates.
inline EvaluationReport run_experiment(const Dataset& dataset, const CodeMatrix& matrix,
                                       const TrainConfig& train_config,
                                       const SplitSpec& spec, double threshold) {
  if (static_cast<std::size_t>(dataset.class_count) != matrix.class_count()) {
    fail(errc::invalid_dimension,
         "dataset has " + std::to_string(dataset.class_count) + " classes, matrix has " +
             std::to_string(matrix.class_count()));
  }
  if (spec.split_count < 1) fail(errc::invalid_argument, "need at least one split");

  std::vector<Target> class_targets;
  class_targets.reserve(matrix.class_count());
  for (std::size_t cls = 0; cls < matrix.class_count(); ++cls) {
    class_targets.push_back(encode_targets(cls, matrix));
  }

  EvaluationReport report;
  for (std::size_t s = 0; s < spec.split_count; ++s) {
    const Split split = split_gm_pn(dataset, spec, s);
    const Matrix train_x = detail::gather_rows(dataset.features, split.train_indices);
    std::vector<Target> train_targets;
    train_targets.reserve(split.train_indices.size());
    for (std::size_t idx : split.train_indices) {
      train_targets.push_back(class_targets[static_cast<std::size_t>(dataset.labels[idx])]);
    }

    const std::uint64_t split_seed = derive_seed(spec.seed, s);
    Mlp net = init(train_x.cols(), train_config.hidden_dim, matrix.code_length(),
                   derive_seed(split_seed, 1), train_config.init_scale);
    TrainConfig cfg = train_config;
    cfg.seed = derive_seed(split_seed, 2);
    auto [trained, trace] = train(std::move(net), train_x, train_targets, cfg);

    const Matrix test_x = detail::gather_rows(dataset.features, split.test_indices);
    std::vector<int> test_labels;
    test_labels.reserve(split.test_indices.size());
    for (std::size_t idx : split.test_indices) test_labels.push_back(dataset.labels[idx]);
    report.per_split.push_back(evaluate(trained, test_x, test_labels, matrix, threshold));
  }

  double rel_sum = 0.0;
  std::size_t rel_count = 0;
  for (const SplitReport& r : report.per_split) {
    report.mean.recognition_rate += r.recognition_rate;
    report.mean.error_rate += r.error_rate;
    report.mean.rejection_rate += r.rejection_rate;
    if (r.reliability) {
      rel_sum += *r.reliability;
      ++rel_count;
    }
  }
  const double n = static_cast<double>(report.per_split.size());
  report.mean.recognition_rate /= n;
  report.mean.error_rate /= n;
  report.mean.rejection_rate /= n;
  if (rel_count > 0) report.mean.reliability = rel_sum / static_cast<double>(rel_count);
  return report;
}

}  // namespace ecoc
