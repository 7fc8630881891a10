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
// Decoding of network output vectors against a code matrix: L1 distances to
// every codeword, nearest-row classification, the robustness rate of a
// decision, and threshold rejection.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ecoc/codebook.hpp"
#include "ecoc/error.hpp"

namespace ecoc {

/// Outcome of decoding one output vector. The tentative class is populated
/// even for rejected samples so reports can show what would have been said.
struct DecodeResult {
  std::size_t predicted_class = 0;
  std::vector<double> distances;   // L, one entry per class
  double robustness_rate = 0.0;    // percent
  bool rejected = false;
};

namespace detail {

inline void check_output(const std::vector<double>& y, const CodeMatrix& m) {
  if (y.size() != m.code_length()) {
    fail(errc::invalid_dimension, "output has length " + std::to_string(y.size()) +
                                      ", matrix rows have " +
                                      std::to_string(m.code_length()));
  }
}

/// Indices of the closest and second closest rows; ties go to the lower
/// class index.
inline std::pair<std::size_t, std::size_t> two_closest(const std::vector<double>& l) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i] < l[best]) best = i;
  }
  std::size_t second = best == 0 ? 1 : 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i == best) continue;
    if (l[i] < l[second]) second = i;
  }
  return {best, second};
}

}  // namespace detail

/// L1 distance from the output vector to every row, skipping each row's
/// masked positions: L_i = sum over unmasked j of |Z_ij - y_j|.
inline std::vector<double> distances(const std::vector<double>& y, const CodeMatrix& m) {
  detail::check_output(y, m);
  std::vector<double> l(m.class_count(), 0.0);
  for (std::size_t i = 0; i < m.class_count(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m.code_length(); ++j) {
      switch (m.at(i, j)) {
        case Trit::Zero: acc += y[j] < 0.0 ? -y[j] : y[j]; break;
        case Trit::One: acc += y[j] > 1.0 ? y[j] - 1.0 : 1.0 - y[j]; break;
        case Trit::DontCare: break;
      }
    }
    l[i] = acc;
  }
  return l;
}

/// Index of the closest codeword; ties broken by the lowest class index.
inline std::size_t classify(const std::vector<double>& y, const CodeMatrix& m) {
  const std::vector<double> l = distances(y, m);
  std::size_t best = 0;
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i] < l[best]) best = i;
  }
  return best;
}

/// Normalized margin of the decision, in percent: the gap between the
/// second-closest and closest row distances over the Hamming distance
/// between those two rows (counted where both are unmasked). 100 means the
/// output sits exactly on the winning codeword; 0 means a coin flip.
inline double robustness_rate(const std::vector<double>& y, const CodeMatrix& m) {
  if (m.class_count() < 2) {
    fail(errc::invalid_matrix, "robustness rate needs at least two classes");
  }
  const std::vector<double> l = distances(y, m);
  const auto [best, second] = detail::two_closest(l);
  const std::size_t separation = detail::row_distance(m, best, second);
  if (separation == 0) {
    fail(errc::invalid_matrix, "closest rows are indistinguishable");
  }
  return (l[second] - l[best]) / static_cast<double>(separation) * 100.0;
}

/// Nearest-row decision plus rejection: the sample is rejected when its
/// robustness rate falls below the threshold (percent, in [0, 100]).
inline DecodeResult classify_with_reject(const std::vector<double>& y,
                                         const CodeMatrix& m,
                                         double threshold_percent) {
  if (!(threshold_percent >= 0.0 && threshold_percent <= 100.0)) {
    fail(errc::invalid_threshold,
         "threshold must be in [0, 100], got " + std::to_string(threshold_percent));
  }
  if (m.class_count() < 2) {
    fail(errc::invalid_matrix, "decoding needs at least two classes");
  }
  DecodeResult result;
  result.distances = distances(y, m);
  const auto [best, second] = detail::two_closest(result.distances);
  const std::size_t separation = detail::row_distance(m, best, second);
  if (separation == 0) {
    fail(errc::invalid_matrix, "closest rows are indistinguishable");
  }
  result.predicted_class = best;
  result.robustness_rate = (result.distances[second] - result.distances[best]) /
                           static_cast<double>(separation) * 100.0;
  result.rejected = result.robustness_rate < threshold_percent;
  return result;
}

}  // namespace ecoc
