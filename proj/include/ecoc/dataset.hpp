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
// Dataset ingestion: labeled CSV feature tables, directories of binary PGM
// images (one subdirectory per class), and a seeded synthetic generator of
// Gaussian class clusters.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ecoc/error.hpp"
#include "ecoc/matrix.hpp"
#include "ecoc/rng.hpp"

namespace ecoc {

/// Labeled feature table. Labels are 0-based and contiguous.
struct Dataset {
  Matrix features;          // N x dim
  std::vector<int> labels;  // length N
  int class_count = 0;

  std::size_t size() const { return features.rows(); }
  std::size_t dim() const { return features.cols(); }
};

/// Parameters of the synthetic corpus: one isotropic Gaussian cluster per
/// class around a seeded random center in the unit cube. The defaults match
/// the scale of a small face-recognition corpus after feature extraction.
struct SyntheticSpec {
  std::size_t class_count = 15;
  std::size_t dim = 30;
  std::size_t samples_per_class = 11;
  double cluster_spread = 0.35;
  std::uint64_t seed = 1;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline double parse_finite_double(const std::string& field, std::size_t line_no) {
  const std::string s = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(errc::parse_error,
         "line " + std::to_string(line_no) + ": cannot parse value '" + s + "'");
  }
  if (!std::isfinite(value)) {
    fail(errc::parse_error,
         "line " + std::to_string(line_no) + ": non-finite value '" + s + "'");
  }
  return value;
}

inline int parse_label(const std::string& field, std::size_t line_no) {
  const std::string s = trim(field);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    fail(errc::parse_error,
         "line " + std::to_string(line_no) + ": invalid label '" + s + "'");
  }
  return value;
}

struct PgmImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};

/// Binary (P5) PGM reader. Accepts '#' comments in the header and a maxval
/// of at most 255.
inline PgmImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, path.string() + ": cannot open file");

  const auto next_token = [&]() -> std::string {
    std::string token;
    int ch = 0;
    while ((ch = in.get()) != EOF) {
      if (ch == '#') {
        while ((ch = in.get()) != EOF && ch != '\n') {
        }
        continue;
      }
      if (std::isspace(ch)) {
        if (!token.empty()) break;
        continue;
      }
      token += static_cast<char>(ch);
    }
    return token;
  };

  if (next_token() != "P5") fail(errc::parse_error, path.string() + ": not a binary PGM (P5)");
  const auto read_size = [&](const char* what) -> std::size_t {
    const std::string tok = next_token();
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
      fail(errc::parse_error, path.string() + ": bad " + what + " '" + tok + "'");
    }
    return value;
  };
  PgmImage img;
  img.width = read_size("width");
  img.height = read_size("height");
  const std::size_t maxval = read_size("maxval");
  if (maxval > 255) {
    fail(errc::parse_error, path.string() + ": 16-bit PGM (maxval " +
                                std::to_string(maxval) + ") is not supported");
  }
  img.pixels.resize(img.width * img.height);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != img.pixels.size()) {
    fail(errc::parse_error, path.string() + ": truncated pixel data");
  }
  return img;
}

}  // namespace detail

/// Loads a CSV file with header "f0,...,f{l-1},label". Labels must be
/// 0-based contiguous integers; NaN and infinity are rejected. Errors carry
/// 1-based line numbers (the header is line 1).
inline Dataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, path + ": cannot open file");

  std::string line;
  if (!std::getline(in, line)) fail(errc::parse_error, path + ": empty file");
  const auto header = detail::split_csv_line(line);
  if (header.size() < 2 || detail::trim(header.back()) != "label") {
    fail(errc::parse_error, "line 1: header must be f0,...,f{l-1},label");
  }
  const std::size_t dim = header.size() - 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (detail::trim(header[j]) != "f" + std::to_string(j)) {
      fail(errc::parse_error, "line 1: expected column 'f" + std::to_string(j) +
                                  "', found '" + detail::trim(header[j]) + "'");
    }
  }

  std::vector<double> values;
  std::vector<int> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != dim + 1) {
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(dim + 1) + " fields, found " +
                                  std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      values.push_back(detail::parse_finite_double(fields[j], line_no));
    }
    labels.push_back(detail::parse_label(fields.back(), line_no));
  }
  if (labels.empty()) fail(errc::parse_error, path + ": no data rows");

  const int max_label = *std::max_element(labels.begin(), labels.end());
  std::vector<char> seen(static_cast<std::size_t>(max_label) + 1, 0);
  for (int l : labels) seen[static_cast<std::size_t>(l)] = 1;
  for (int l = 0; l <= max_label; ++l) {
    if (!seen[static_cast<std::size_t>(l)]) {
      fail(errc::parse_error,
           "labels are not contiguous: class " + std::to_string(l) + " has no samples");
    }
  }

  Dataset ds;
  ds.class_count = max_label + 1;
  ds.labels = std::move(labels);
  ds.features = Matrix(ds.labels.size(), dim);
  std::copy(values.begin(), values.end(), ds.features.data().begin());
  return ds;
}

/// Loads a directory with one subdirectory per class, each holding binary
/// PGM images of a single common size. Classes are ordered by subdirectory
/// name; pixels are flattened row-major and scaled by 1/256. Every file
/// either loads or is named in an error; nothing is skipped silently.
inline Dataset load_image_dir(const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path root(path);
  if (!fs::is_directory(root)) fail(errc::parse_error, path + ": not a directory");

  std::vector<fs::path> class_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) {
      class_dirs.push_back(entry.path());
    } else {
      fail(errc::parse_error,
           entry.path().string() + ": stray file; expected one subdirectory per class");
    }
  }
  if (class_dirs.empty()) fail(errc::parse_error, path + ": no class subdirectories");
  std::sort(class_dirs.begin(), class_dirs.end());

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::size_t width = 0;
  std::size_t height = 0;
  std::string first_file;

  for (std::size_t cls = 0; cls < class_dirs.size(); ++cls) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(class_dirs[cls])) {
      files.push_back(entry.path());
    }
    if (files.empty()) {
      fail(errc::insufficient_data, class_dirs[cls].string() + ": class has no images");
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      const detail::PgmImage img = detail::read_pgm(file);
      if (width == 0) {
        width = img.width;
        height = img.height;
        first_file = file.string();
      } else if (img.width != width || img.height != height) {
        fail(errc::inconsistent_images,
             file.string() + " is " + std::to_string(img.width) + "x" +
                 std::to_string(img.height) + " but " + first_file + " is " +
                 std::to_string(width) + "x" + std::to_string(height));
      }
      std::vector<double> row(img.pixels.size());
      for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        row[i] = static_cast<double>(img.pixels[i]) / 256.0;
      }
      rows.push_back(std::move(row));
      labels.push_back(static_cast<int>(cls));
    }
  }

  Dataset ds;
  ds.class_count = static_cast<int>(class_dirs.size());
  ds.labels = std::move(labels);
  ds.features = Matrix(rows.size(), width * height);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(rows[i].begin(), rows[i].end(), ds.features.row(i));
  }
  return ds;
}

/// Seeded synthetic corpus: class centers uniform in [0, 1]^dim, samples
/// center + spread * standard normal noise, samples grouped by class.
inline Dataset generate_synthetic(const SyntheticSpec& spec) {
  if (spec.class_count < 1 || spec.dim < 1 || spec.samples_per_class < 1) {
    fail(errc::invalid_argument, "synthetic spec counts must be positive");
  }
  if (!(spec.cluster_spread >= 0.0)) {
    fail(errc::invalid_argument, "cluster spread must be nonnegative");
  }
  SplitMix64 rng(spec.seed);
  Dataset ds;
  ds.class_count = static_cast<int>(spec.class_count);
  const std::size_t n = spec.class_count * spec.samples_per_class;
  ds.features = Matrix(n, spec.dim);
  ds.labels.resize(n);

  std::size_t row = 0;
  std::vector<double> center(spec.dim);
  for (std::size_t cls = 0; cls < spec.class_count; ++cls) {
    for (double& c : center) c = rng.next_double();
    for (std::size_t s = 0; s < spec.samples_per_class; ++s, ++row) {
      for (std::size_t j = 0; j < spec.dim; ++j) {
        ds.features(row, j) = center[j] + spec.cluster_spread * rng.next_gaussian();
      }
      ds.labels[row] = static_cast<int>(cls);
    }
  }
  return ds;
}

}  // namespace ecoc
