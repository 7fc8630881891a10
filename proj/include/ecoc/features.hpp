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
// PCA representation stage: fit on a sample matrix, project raw feature
// vectors to the top-k principal coordinates, reconstruct back.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ecoc/error.hpp"
#include "ecoc/matrix.hpp"

namespace ecoc {

/// Fitted PCA basis. Component rows are orthonormal and ordered by
/// descending eigenvalue; eigenvalues are the variances of the training
/// data along each component (sample covariance, N-1 normalization).
struct PcaModel {
  std::vector<double> mean;        // length l
  Matrix components;               // k x l, rows are eigenvectors
  std::vector<double> eigenvalues; // length k, nonincreasing, >= 0

  std::size_t input_dim() const { return mean.size(); }
  std::size_t output_dim() const { return components.rows(); }
};

namespace detail {

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Fills
/// `values`/`vectors` with all n eigenpairs sorted by descending eigenvalue;
/// eigenvectors are the rows of `vectors`. Plenty accurate and fast for the
/// few-hundred-dimensional matrices this toolkit sees.
inline void jacobi_eigen_symmetric(Matrix a, std::vector<double>& values,
                                   Matrix& vectors) {
  const std::size_t n = a.rows();
  Matrix v(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double frob2 = 0.0;
  for (double x : a.data()) frob2 += x * x;
  const double stop = 1e-28 * std::max(frob2, 1e-300);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off2 = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off2 += a(p, q) * a(p, q);
    }
    if (off2 <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = a(p, i) = c * aip - s * aiq;
          a(i, q) = a(q, i) = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  values.resize(n);
  vectors = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    values[r] = a(order[r], order[r]);
    for (std::size_t i = 0; i < n; ++i) vectors(r, i) = v(i, order[r]);
  }
}

/// Deterministic sign convention: the entry of largest magnitude (first one
/// on ties) is made positive.
inline void fix_component_sign(Matrix& components, std::size_t r) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < components.cols(); ++i) {
    const double mag = std::abs(components(r, i));
    if (mag > best) {
      best = mag;
      arg = i;
    }
  }
  if (components(r, arg) < 0.0) {
    for (std::size_t i = 0; i < components.cols(); ++i) components(r, i) = -components(r, i);
  }
}

}  // namespace detail

/// Fits PCA to an N x l sample matrix (one sample per row) and keeps the
/// top k components. For wide data (l > N) the N x N Gram matrix is
/// decomposed instead of the l x l covariance; the spectra coincide on the
/// nonzero part. Requires 1 <= k <= min(N-1, l) and enough rank to support
/// k; otherwise reports how many components are achievable.
inline PcaModel pca_fit(const Matrix& samples, std::size_t k) {
  const std::size_t n = samples.rows();
  const std::size_t l = samples.cols();
  if (n < 2) fail(errc::invalid_dimension, "PCA needs at least two samples");
  const std::size_t max_k = std::min(n - 1, l);
  if (k < 1 || k > max_k) {
    fail(errc::invalid_dimension, "k = " + std::to_string(k) +
                                      " outside [1, " + std::to_string(max_k) + "]");
  }

  PcaModel model;
  model.mean.assign(l, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < l; ++j) model.mean[j] += samples(i, j);
  }
  for (double& mj : model.mean) mj /= static_cast<double>(n);

  Matrix centered(n, l);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < l; ++j) centered(i, j) = samples(i, j) - model.mean[j];
  }

  std::vector<double> values;
  Matrix vectors;
  model.components = Matrix(k, l);
  model.eigenvalues.resize(k);

  // A spectrum entry this far below the leading one is numerical noise, not
  // signal; asking for a component there is a rank failure.
  const auto achievable = [](const std::vector<double>& vals) {
    const double tol = std::max(vals.empty() ? 0.0 : vals[0], 0.0) * 1e-12 + 1e-300;
    std::size_t r = 0;
    while (r < vals.size() && vals[r] > tol) ++r;
    return r;
  };

  if (l > n) {
    // Gram route: G = Xc Xc^T, eigenvector w maps to component Xc^T w / sqrt(mu).
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double dot = 0.0;
        const double* ri = centered.row(i);
        const double* rj = centered.row(j);
        for (std::size_t t = 0; t < l; ++t) dot += ri[t] * rj[t];
        gram(i, j) = dot;
        gram(j, i) = dot;
      }
    }
    detail::jacobi_eigen_symmetric(std::move(gram), values, vectors);
    const std::size_t rank = achievable(values);
    if (rank < k) {
      fail(errc::rank_deficient, "data supports only " + std::to_string(rank) +
                                     " components, requested " + std::to_string(k));
    }
    for (std::size_t r = 0; r < k; ++r) {
      const double mu = values[r];
      model.eigenvalues[r] = std::max(mu / static_cast<double>(n - 1), 0.0);
      const double inv = 1.0 / std::sqrt(mu);
      for (std::size_t j = 0; j < l; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += centered(i, j) * vectors(r, i);
        model.components(r, j) = acc * inv;
      }
      detail::fix_component_sign(model.components, r);
    }
  } else {
    Matrix cov(l, l);
    const double norm = 1.0 / static_cast<double>(n - 1);
    for (std::size_t p = 0; p < l; ++p) {
      for (std::size_t q = p; q < l; ++q) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += centered(i, p) * centered(i, q);
        cov(p, q) = acc * norm;
        cov(q, p) = acc * norm;
      }
    }
    detail::jacobi_eigen_symmetric(std::move(cov), values, vectors);
    const std::size_t rank = achievable(values);
    if (rank < k) {
      fail(errc::rank_deficient, "data supports only " + std::to_string(rank) +
                                     " components, requested " + std::to_string(k));
    }
    for (std::size_t r = 0; r < k; ++r) {
      model.eigenvalues[r] = std::max(values[r], 0.0);
      for (std::size_t j = 0; j < l; ++j) model.components(r, j) = vectors(r, j);
      detail::fix_component_sign(model.components, r);
    }
  }
  return model;
}

/// components * (x - mean).
inline std::vector<double> pca_project(const PcaModel& model,
                                       const std::vector<double>& x) {
  if (x.size() != model.input_dim()) {
    fail(errc::invalid_dimension, "vector has dimension " + std::to_string(x.size()) +
                                      ", model expects " +
                                      std::to_string(model.input_dim()));
  }
  std::vector<double> z(model.output_dim(), 0.0);
  for (std::size_t r = 0; r < model.output_dim(); ++r) {
    double acc = 0.0;
    for (std::size_t j = 0; j < model.input_dim(); ++j) {
      acc += model.components(r, j) * (x[j] - model.mean[j]);
    }
    z[r] = acc;
  }
  return z;
}

/// mean + components^T * z.
inline std::vector<double> pca_reconstruct(const PcaModel& model,
                                           const std::vector<double>& z) {
  if (z.size() != model.output_dim()) {
    fail(errc::invalid_dimension, "vector has dimension " + std::to_string(z.size()) +
                                      ", model expects " +
                                      std::to_string(model.output_dim()));
  }
  std::vector<double> x(model.mean);
  for (std::size_t r = 0; r < model.output_dim(); ++r) {
    for (std::size_t j = 0; j < model.input_dim(); ++j) {
      x[j] += model.components(r, j) * z[r];
    }
  }
  return x;
}

/// Projects every row of a sample matrix.
inline Matrix pca_project_rows(const PcaModel& model, const Matrix& samples) {
  if (samples.cols() != model.input_dim()) {
    fail(errc::invalid_dimension, "samples have dimension " +
                                      std::to_string(samples.cols()) +
                                      ", model expects " +
                                      std::to_string(model.input_dim()));
  }
  Matrix out(samples.rows(), model.output_dim());
  for (std::size_t i = 0; i < samples.rows(); ++i) {
    for (std::size_t r = 0; r < model.output_dim(); ++r) {
      double acc = 0.0;
      for (std::size_t j = 0; j < model.input_dim(); ++j) {
        acc += model.components(r, j) * (samples(i, j) - model.mean[j]);
      }
      out(i, r) = acc;
    }
  }
  return out;
}

}  // namespace ecoc
