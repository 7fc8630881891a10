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
// Three-layer sigmoid perceptron trained by plain back-propagation or by
// the codeword-error-weighted variant, where each sample's output error is
// scaled by the total squared error it produces across its target codeword.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecoc/codebook.hpp"
#include "ecoc/error.hpp"
#include "ecoc/matrix.hpp"
#include "ecoc/rng.hpp"

namespace ecoc {

enum class CostVariant { Standard, Weighted };
enum class UpdateMode { PerSample, FullBatch };

/// Fully connected input -> hidden -> output network with sigmoid units on
/// both layers. Each weight matrix carries the bias as its last row, so a
/// layer with fan-out h over inputs of size d is a (d+1) x h matrix.
struct Mlp {
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 0;
  std::size_t output_dim = 0;        // code length b
  Matrix hidden_weights;             // (input_dim + 1) x hidden_dim
  Matrix output_weights;             // (hidden_dim + 1) x output_dim
};

struct TrainConfig {
  CostVariant cost = CostVariant::Standard;
  std::size_t epochs = 100;
  double learning_rate = 0.1;
  double lr_decay = 1.0;             // eta at epoch e is learning_rate * lr_decay^e
  std::uint64_t seed = 0;            // drives per-epoch shuffling
  UpdateMode update = UpdateMode::PerSample;
  std::size_t hidden_dim = 20;
  std::optional<double> init_scale;  // weights uniform in [-r, r]; default 1/sqrt(fan_in)
};

/// Costs on the training set after each epoch: E is the mean squared error,
/// weighted is the mean of squared per-sample codeword errors.
struct TrainTrace {
  std::vector<double> standard_cost;
  std::vector<double> weighted_cost;
};

struct Gradient {
  Matrix hidden;
  Matrix output;
};

namespace detail {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double default_init_scale(std::size_t fan_in) {
  return 1.0 / std::sqrt(static_cast<double>(fan_in));
}

struct Activations {
  std::vector<double> hidden;
  std::vector<double> output;
};

inline void forward_into(const Mlp& net, const double* u, Activations& act) {
  act.hidden.resize(net.hidden_dim);
  act.output.resize(net.output_dim);
  for (std::size_t j = 0; j < net.hidden_dim; ++j) {
    double z = net.hidden_weights(net.input_dim, j);  // bias row
    for (std::size_t i = 0; i < net.input_dim; ++i) z += u[i] * net.hidden_weights(i, j);
    act.hidden[j] = sigmoid(z);
  }
  for (std::size_t c = 0; c < net.output_dim; ++c) {
    double z = net.output_weights(net.hidden_dim, c);
    for (std::size_t j = 0; j < net.hidden_dim; ++j) {
      z += act.hidden[j] * net.output_weights(j, c);
    }
    act.output[c] = sigmoid(z);
  }
}

inline double squared_error(const Activations& act, const Target& target) {
  double e = 0.0;
  for (std::size_t c = 0; c < act.output.size(); ++c) {
    if (target.masked[c]) continue;
    const double diff = act.output[c] - target.value[c];
    e += diff * diff;
  }
  return e;
}

inline void check_batch(const Mlp& net, const Matrix& inputs,
                        const std::vector<Target>& targets) {
  if (inputs.rows() == 0) fail(errc::empty_input, "batch is empty");
  if (inputs.rows() != targets.size()) {
    fail(errc::invalid_dimension, "batch has " + std::to_string(inputs.rows()) +
                                      " inputs but " + std::to_string(targets.size()) +
                                      " targets");
  }
  if (inputs.cols() != net.input_dim) {
    fail(errc::invalid_dimension, "inputs have dimension " +
                                      std::to_string(inputs.cols()) +
                                      ", network expects " +
                                      std::to_string(net.input_dim));
  }
  for (const Target& t : targets) {
    if (t.size() != net.output_dim) {
      fail(errc::invalid_dimension, "target has length " + std::to_string(t.size()) +
                                        ", network emits " +
                                        std::to_string(net.output_dim));
    }
  }
}

/// Back-propagates one sample into the gradient accumulators, scaled by
/// `scale`. For the weighted variant the caller passes the sample's own
/// codeword error as part of the scale; the weight is treated as a constant
/// of the presentation, not differentiated through.
inline void accumulate_sample_gradient(const Mlp& net, const double* u,
                                       const Target& target, const Activations& act,
                                       double scale, Gradient& grad,
                                       std::vector<double>& delta_out,
                                       std::vector<double>& delta_hidden) {
  delta_out.resize(net.output_dim);
  delta_hidden.resize(net.hidden_dim);
  for (std::size_t c = 0; c < net.output_dim; ++c) {
    if (target.masked[c]) {
      delta_out[c] = 0.0;
      continue;
    }
    const double y = act.output[c];
    delta_out[c] = scale * 2.0 * (y - target.value[c]) * y * (1.0 - y);
  }
  for (std::size_t j = 0; j < net.hidden_dim; ++j) {
    double back = 0.0;
    for (std::size_t c = 0; c < net.output_dim; ++c) {
      back += delta_out[c] * net.output_weights(j, c);
    }
    const double h = act.hidden[j];
    delta_hidden[j] = back * h * (1.0 - h);
  }
  for (std::size_t j = 0; j < net.hidden_dim; ++j) {
    const double d = delta_hidden[j];
    if (d == 0.0) continue;
    for (std::size_t i = 0; i < net.input_dim; ++i) grad.hidden(i, j) += d * u[i];
    grad.hidden(net.input_dim, j) += d;
  }
  for (std::size_t c = 0; c < net.output_dim; ++c) {
    const double d = delta_out[c];
    if (d == 0.0) continue;
    for (std::size_t j = 0; j < net.hidden_dim; ++j) {
      grad.output(j, c) += d * act.hidden[j];
    }
    grad.output(net.hidden_dim, c) += d;
  }
}

}  // namespace detail

/// Fresh network with weights drawn uniformly from [-r, r]. When no scale is
/// given each layer uses 1/sqrt(fan_in) with the bias counted into fan-in.
inline Mlp init(std::size_t input_dim, std::size_t hidden_dim, std::size_t code_length,
                std::uint64_t seed, std::optional<double> init_scale = {}) {
  if (input_dim < 1 || hidden_dim < 1 || code_length < 1) {
    fail(errc::invalid_dimension, "network dimensions must be positive");
  }
  Mlp net;
  net.input_dim = input_dim;
  net.hidden_dim = hidden_dim;
  net.output_dim = code_length;
  net.hidden_weights = Matrix(input_dim + 1, hidden_dim);
  net.output_weights = Matrix(hidden_dim + 1, code_length);

  SplitMix64 rng(seed);
  const double r_hidden = init_scale.value_or(detail::default_init_scale(input_dim + 1));
  for (double& w : net.hidden_weights.data()) w = rng.next_in(-r_hidden, r_hidden);
  const double r_output = init_scale.value_or(detail::default_init_scale(hidden_dim + 1));
  for (double& w : net.output_weights.data()) w = rng.next_in(-r_output, r_output);
  return net;
}

/// Output activations for one input vector; every entry lies in (0, 1).
inline std::vector<double> forward(const Mlp& net, const std::vector<double>& u) {
  if (u.size() != net.input_dim) {
    fail(errc::invalid_dimension, "input has dimension " + std::to_string(u.size()) +
                                      ", network expects " +
                                      std::to_string(net.input_dim));
  }
  detail::Activations act;
  detail::forward_into(net, u.data(), act);
  return act.output;
}

/// Mean squared error over the batch; masked target positions are skipped.
inline double cost_standard(const Mlp& net, const Matrix& inputs,
                            const std::vector<Target>& targets) {
  detail::check_batch(net, inputs, targets);
  detail::Activations act;
  double total = 0.0;
  for (std::size_t i = 0; i < inputs.rows(); ++i) {
    detail::forward_into(net, inputs.row(i), act);
    total += detail::squared_error(act, targets[i]);
  }
  return total / static_cast<double>(inputs.rows());
}

/// Total squared error a sample produces across its target codeword. This is
/// the per-sample weight of the weighted cost.
inline double sample_weight(const Mlp& net, const std::vector<double>& u,
                            const Target& target) {
  if (u.size() != net.input_dim || target.size() != net.output_dim) {
    fail(errc::invalid_dimension, "sample does not match network dimensions");
  }
  detail::Activations act;
  detail::forward_into(net, u.data(), act);
  return detail::squared_error(act, target);
}

/// Weighted cost: mean over samples of (codeword error) x (squared error),
/// i.e. the mean of squared per-sample codeword errors.
inline double cost_weighted(const Mlp& net, const Matrix& inputs,
                            const std::vector<Target>& targets) {
  detail::check_batch(net, inputs, targets);
  detail::Activations act;
  double total = 0.0;
  for (std::size_t i = 0; i < inputs.rows(); ++i) {
    detail::forward_into(net, inputs.row(i), act);
    const double e = detail::squared_error(act, targets[i]);
    total += e * e;
  }
  return total / static_cast<double>(inputs.rows());
}

/// Batch gradient. Standard: exact gradient of the mean squared error.
/// Weighted: each sample's back-propagated error is scaled by its own
/// codeword error from the same forward pass, with that weight held
/// constant; this equals exactly half the gradient of the weighted cost.
inline Gradient gradient(const Mlp& net, const Matrix& inputs,
                         const std::vector<Target>& targets, CostVariant variant) {
  detail::check_batch(net, inputs, targets);
  Gradient grad{Matrix(net.input_dim + 1, net.hidden_dim),
                Matrix(net.hidden_dim + 1, net.output_dim)};
  detail::Activations act;
  std::vector<double> delta_out;
  std::vector<double> delta_hidden;
  const double inv_n = 1.0 / static_cast<double>(inputs.rows());
  for (std::size_t i = 0; i < inputs.rows(); ++i) {
    detail::forward_into(net, inputs.row(i), act);
    double scale = inv_n;
    if (variant == CostVariant::Weighted) {
      scale *= detail::squared_error(act, targets[i]);
    }
    detail::accumulate_sample_gradient(net, inputs.row(i), targets[i], act, scale,
                                       grad, delta_out, delta_hidden);
  }
  return grad;
}

/// Gradient descent training. PerSample shuffles the presentation order each
/// epoch (seeded) and updates after every sample, with the weighted variant
/// reading each sample's weight off its current forward pass; FullBatch does
/// one update per epoch. The trace records both costs after every epoch.
/// Aborts with training-diverged when a cost turns non-finite.
inline std::pair<Mlp, TrainTrace> train(Mlp net, const Matrix& inputs,
                                        const std::vector<Target>& targets,
                                        const TrainConfig& config) {
  detail::check_batch(net, inputs, targets);
  if (config.epochs < 1) fail(errc::invalid_argument, "epochs must be at least 1");
  if (!(config.learning_rate > 0.0)) {
    fail(errc::invalid_argument, "learning rate must be positive");
  }
  if (!(config.lr_decay > 0.0)) {
    fail(errc::invalid_argument, "learning-rate decay must be positive");
  }

  const std::size_t n = inputs.rows();
  TrainTrace trace;
  trace.standard_cost.reserve(config.epochs);
  trace.weighted_cost.reserve(config.epochs);

  SplitMix64 shuffle_rng(config.seed);
  std::vector<std::size_t> order(n);
  Gradient grad{Matrix(net.input_dim + 1, net.hidden_dim),
                Matrix(net.hidden_dim + 1, net.output_dim)};
  detail::Activations act;
  std::vector<double> delta_out;
  std::vector<double> delta_hidden;

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const double eta =
        config.learning_rate * std::pow(config.lr_decay, static_cast<double>(epoch));

    if (config.update == UpdateMode::PerSample) {
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      shuffle_rng.shuffle(order);
      for (std::size_t idx : order) {
        detail::forward_into(net, inputs.row(idx), act);
        double scale = 1.0;
        if (config.cost == CostVariant::Weighted) {
          scale = detail::squared_error(act, targets[idx]);
        }
        std::fill(grad.hidden.data().begin(), grad.hidden.data().end(), 0.0);
        std::fill(grad.output.data().begin(), grad.output.data().end(), 0.0);
        detail::accumulate_sample_gradient(net, inputs.row(idx), targets[idx], act,
                                           scale, grad, delta_out, delta_hidden);
        for (std::size_t w = 0; w < grad.hidden.data().size(); ++w) {
          net.hidden_weights.data()[w] -= eta * grad.hidden.data()[w];
        }
        for (std::size_t w = 0; w < grad.output.data().size(); ++w) {
          net.output_weights.data()[w] -= eta * grad.output.data()[w];
        }
      }
    } else {
      const Gradient g = gradient(net, inputs, targets, config.cost);
      for (std::size_t w = 0; w < g.hidden.data().size(); ++w) {
        net.hidden_weights.data()[w] -= eta * g.hidden.data()[w];
      }
      for (std::size_t w = 0; w < g.output.data().size(); ++w) {
        net.output_weights.data()[w] -= eta * g.output.data()[w];
      }
    }

    const double e = cost_standard(net, inputs, targets);
    const double e_weighted = cost_weighted(net, inputs, targets);
    if (!std::isfinite(e) || !std::isfinite(e_weighted)) {
      fail(errc::training_diverged,
           "cost became non-finite at epoch " + std::to_string(epoch) +
               "; last finite epoch " +
               (epoch == 0 ? std::string("none")
                           : std::to_string(epoch - 1) + " (E = " +
                                 std::to_string(trace.standard_cost.back()) + ")"));
    }
    trace.standard_cost.push_back(e);
    trace.weighted_cost.push_back(e_weighted);
  }
  return {std::move(net), std::move(trace)};
}

}  // namespace ecoc
