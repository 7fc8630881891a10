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

#pragma once

#include <stdexcept>
#include <string>

namespace ecoc {

/// Failure categories raised by the toolkit. The CLI prints the category
/// name verbatim so scripts can match on it.
enum class errc {
  invalid_argument,
  invalid_class_count,
  invalid_dimension,
  invalid_label,
  invalid_matrix,
  invalid_threshold,
  unsupported_size,
  generation_failed,
  rank_deficient,
  empty_input,
  training_diverged,
  parse_error,
  inconsistent_images,
  insufficient_data,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::invalid_class_count: return "invalid-class-count";
    case errc::invalid_dimension: return "invalid-dimension";
    case errc::invalid_label: return "invalid-label";
    case errc::invalid_matrix: return "invalid-matrix";
    case errc::invalid_threshold: return "invalid-threshold";
    case errc::unsupported_size: return "unsupported-size";
    case errc::generation_failed: return "generation-failed";
    case errc::rank_deficient: return "rank-deficient";
    case errc::empty_input: return "empty-input";
    case errc::training_diverged: return "training-diverged";
    case errc::parse_error: return "parse-error";
    case errc::inconsistent_images: return "inconsistent-images";
    case errc::insufficient_data: return "insufficient-data";
  }
  return "unknown";
}

/// Process exit classes used by the CLI: usage errors exit 1, bad input
/// data exits 2, numerical failures exit 3.
enum class exit_class : int { usage = 1, data = 2, numeric = 3 };

inline exit_class classify_exit(errc c) {
  switch (c) {
    case errc::parse_error:
    case errc::inconsistent_images:
    case errc::insufficient_data:
      return exit_class::data;
    case errc::generation_failed:
    case errc::rank_deficient:
    case errc::training_diverged:
      return exit_class::numeric;
    default:
      return exit_class::usage;
  }
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ecoc
