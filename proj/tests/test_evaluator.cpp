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

#include <algorithm>
#include <set>
#include <vector>

#include "ecoc/evaluator.hpp"

using namespace ecoc;

namespace {

Dataset yale_scale_dataset(std::uint64_t seed = 7) {
  SyntheticSpec spec;
  spec.cluster_spread = 0.35;
  spec.seed = seed;
  return generate_synthetic(spec);
}

// Small trained model shared by the metric tests.
struct TrainedFixture {
  Dataset data;
  CodeMatrix matrix;
  Mlp net;
  Matrix test_x;
  std::vector<int> test_labels;

  TrainedFixture() : data(yale_scale_dataset()), matrix(bch(15, 31)) {
    SplitSpec spec{8, 3, 1, 99};
    const Split split = split_gm_pn(data, spec, 0);
    Matrix train_x(split.train_indices.size(), data.dim());
    std::vector<Target> train_targets;
    for (std::size_t i = 0; i < split.train_indices.size(); ++i) {
      for (std::size_t j = 0; j < data.dim(); ++j) {
        train_x(i, j) = data.features(split.train_indices[i], j);
      }
      train_targets.push_back(
          encode_targets(data.labels[split.train_indices[i]], matrix));
    }
    TrainConfig cfg;
    cfg.cost = CostVariant::Weighted;
    cfg.epochs = 80;
    cfg.learning_rate = 0.1;
    cfg.hidden_dim = 30;
    cfg.seed = 17;
    net = train(init(data.dim(), 30, 31, 23), train_x, train_targets, cfg).first;

    test_x = Matrix(split.test_indices.size(), data.dim());
    for (std::size_t i = 0; i < split.test_indices.size(); ++i) {
      for (std::size_t j = 0; j < data.dim(); ++j) {
        test_x(i, j) = data.features(split.test_indices[i], j);
      }
      test_labels.push_back(data.labels[split.test_indices[i]]);
    }
  }
};

DecodeResult fake_decision(std::size_t predicted, bool rejected) {
  DecodeResult r;
  r.predicted_class = predicted;
  r.rejected = rejected;
  return r;
}

}  // namespace

TEST_CASE("split sizes follow the Gm/Pn arithmetic", "[evaluator]") {
  const Dataset ds = yale_scale_dataset();

  const Split g8p3 = split_gm_pn(ds, SplitSpec{8, 3, 10, 1}, 0);
  CHECK(g8p3.train_indices.size() == 120);
  CHECK(g8p3.test_indices.size() == 45);

  const Split g2p9 = split_gm_pn(ds, SplitSpec{2, 9, 10, 1}, 0);
  CHECK(g2p9.train_indices.size() == 30);
  CHECK(g2p9.test_indices.size() == 135);
}

TEST_CASE("splits are deterministic, disjoint, and class balanced", "[evaluator]") {
  const Dataset ds = yale_scale_dataset();
  const SplitSpec spec{6, 5, 10, 42};

  const Split a = split_gm_pn(ds, spec, 3);
  const Split b = split_gm_pn(ds, spec, 3);
  CHECK(a.train_indices == b.train_indices);
  CHECK(a.test_indices == b.test_indices);

  const Split other = split_gm_pn(ds, spec, 4);
  CHECK(a.train_indices != other.train_indices);

  std::set<std::size_t> train(a.train_indices.begin(), a.train_indices.end());
  for (std::size_t idx : a.test_indices) CHECK(train.count(idx) == 0);

  std::vector<int> train_counts(15, 0);
  std::vector<int> test_counts(15, 0);
  for (std::size_t idx : a.train_indices) ++train_counts[ds.labels[idx]];
  for (std::size_t idx : a.test_indices) ++test_counts[ds.labels[idx]];
  for (int c : train_counts) CHECK(c == 6);
  for (int c : test_counts) CHECK(c == 5);
}

TEST_CASE("a split may leave samples unused", "[evaluator]") {
  const Dataset ds = yale_scale_dataset();
  const Split s = split_gm_pn(ds, SplitSpec{3, 3, 1, 5}, 0);
  CHECK(s.train_indices.size() == 45);
  CHECK(s.test_indices.size() == 45);
}

TEST_CASE("split_gm_pn rejects oversubscribed classes", "[evaluator]") {
  const Dataset ds = yale_scale_dataset();
  CHECK_THROWS_MATCHES(split_gm_pn(ds, SplitSpec{8, 4, 1, 1}, 0), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == errc::insufficient_data;
                       }));
  CHECK_THROWS_AS(split_gm_pn(ds, SplitSpec{0, 5, 1, 1}, 0), Error);
}

TEST_CASE("tally computes the documented rates", "[evaluator]") {
  // 4 samples: two correct, one wrong, one rejected.
  const std::vector<DecodeResult> decisions{
      fake_decision(0, false), fake_decision(1, false),
      fake_decision(2, false), fake_decision(0, true)};
  const std::vector<int> labels{0, 1, 0, 3};
  const SplitReport r = tally(decisions, labels);
  CHECK(r.recognition_rate == 50.0);
  CHECK(r.error_rate == 25.0);
  CHECK(r.rejection_rate == 25.0);
  REQUIRE(r.reliability.has_value());
  CHECK(*r.reliability == Approx(66.666666667).margin(1e-6));
}

TEST_CASE("tally reports reliability as absent when everything is rejected",
          "[evaluator]") {
  const std::vector<DecodeResult> decisions{fake_decision(0, true),
                                            fake_decision(1, true)};
  const SplitReport r = tally(decisions, {0, 1});
  CHECK(r.rejection_rate == 100.0);
  CHECK_FALSE(r.reliability.has_value());
  CHECK_THROWS_AS(tally({}, {}), Error);
}

TEST_CASE("evaluate rates always total 100", "[evaluator]") {
  const TrainedFixture fx;
  for (double threshold : {0.0, 10.0, 25.0, 50.0, 90.0}) {
    const SplitReport r =
        evaluate(fx.net, fx.test_x, fx.test_labels, fx.matrix, threshold);
    CHECK(r.recognition_rate + r.error_rate + r.rejection_rate ==
          Approx(100.0).margin(1e-9));
  }
}

TEST_CASE("at threshold zero reliability equals the recognition rate", "[evaluator]") {
  const TrainedFixture fx;
  const SplitReport r = evaluate(fx.net, fx.test_x, fx.test_labels, fx.matrix, 0.0);
  CHECK(r.rejection_rate == 0.0);
  REQUIRE(r.reliability.has_value());
  CHECK(*r.reliability == Approx(r.recognition_rate).margin(1e-9));
}

TEST_CASE("rejection rate is monotone in the threshold", "[evaluator]") {
  const TrainedFixture fx;
  double previous = -1.0;
  for (double threshold : {0.0, 10.0, 25.0, 50.0}) {
    const SplitReport r =
        evaluate(fx.net, fx.test_x, fx.test_labels, fx.matrix, threshold);
    CHECK(r.rejection_rate >= previous);
    previous = r.rejection_rate;
  }
}

TEST_CASE("threshold 100 rejects every off-codeword output", "[evaluator]") {
  const TrainedFixture fx;
  // Sigmoid outputs never hit a binary codeword exactly.
  const SplitReport r = evaluate(fx.net, fx.test_x, fx.test_labels, fx.matrix, 100.0);
  CHECK(r.rejection_rate == 100.0);
  CHECK_FALSE(r.reliability.has_value());
}

TEST_CASE("run_experiment with one split equals that split", "[evaluator]") {
  const Dataset ds = yale_scale_dataset();
  const CodeMatrix matrix = one_vs_all(15);
  TrainConfig cfg;
  cfg.epochs = 15;
  cfg.learning_rate = 0.2;
  cfg.hidden_dim = 12;
  const EvaluationReport r = run_experiment(ds, matrix, cfg, SplitSpec{4, 7, 1, 3}, 25.0);
  REQUIRE(r.per_split.size() == 1);
  CHECK(r.mean.recognition_rate == r.per_split[0].recognition_rate);
  CHECK(r.mean.error_rate == r.per_split[0].error_rate);
  CHECK(r.mean.rejection_rate == r.per_split[0].rejection_rate);
}

TEST_CASE("run_experiment is deterministic and averages correctly", "[evaluator]") {
  const Dataset ds = yale_scale_dataset(11);
  const CodeMatrix matrix = bch(15, 15);
  TrainConfig cfg;
  cfg.cost = CostVariant::Weighted;
  cfg.epochs = 20;
  cfg.learning_rate = 0.15;
  cfg.hidden_dim = 16;
  const SplitSpec spec{4, 7, 4, 21};

  const EvaluationReport a = run_experiment(ds, matrix, cfg, spec, 25.0);
  const EvaluationReport b = run_experiment(ds, matrix, cfg, spec, 25.0);
  REQUIRE(a.per_split.size() == 4);
  for (std::size_t s = 0; s < 4; ++s) {
    CHECK(a.per_split[s].recognition_rate == b.per_split[s].recognition_rate);
    CHECK(a.per_split[s].rejection_rate == b.per_split[s].rejection_rate);
  }

  double recognition = 0.0;
  double error = 0.0;
  double rejection = 0.0;
  for (const SplitReport& r : a.per_split) {
    recognition += r.recognition_rate;
    error += r.error_rate;
    rejection += r.rejection_rate;
    CHECK(r.recognition_rate + r.error_rate + r.rejection_rate ==
          Approx(100.0).margin(1e-9));
  }
  CHECK(a.mean.recognition_rate == Approx(recognition / 4.0).margin(1e-12));
  CHECK(a.mean.error_rate == Approx(error / 4.0).margin(1e-12));
  CHECK(a.mean.rejection_rate == Approx(rejection / 4.0).margin(1e-12));
}

TEST_CASE("run_experiment rejects a class-count mismatch", "[evaluator]") {
  const Dataset ds = yale_scale_dataset();
  const CodeMatrix matrix = one_vs_all(4);
  TrainConfig cfg;
  CHECK_THROWS_MATCHES(run_experiment(ds, matrix, cfg, SplitSpec{4, 7, 1, 3}, 25.0),
                       Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == errc::invalid_dimension;
                       }));
}
