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
// Code matrices for error-correcting output coding: generators (one-vs-all,
// one-vs-one, exhaustive, random dense/sparse, BCH, randomized hill
// climbing), validation, distance analysis, target encoding, and a plain
// text interchange format.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecoc/error.hpp"
#include "ecoc/rng.hpp"

namespace ecoc {

/// One cell of a code matrix. DontCare positions take part in neither the
/// training loss nor decoding distances.
enum class Trit : std::uint8_t { Zero = 0, One = 1, DontCare = 2 };

/// C x b table whose row i is the target codeword of class i.
class CodeMatrix {
 public:
  CodeMatrix() = default;
  CodeMatrix(std::size_t class_count, std::size_t code_length, Trit fill = Trit::Zero)
      : class_count_(class_count),
        code_length_(code_length),
        entries_(class_count * code_length, fill) {}

  std::size_t class_count() const { return class_count_; }  // C
  std::size_t code_length() const { return code_length_; }  // b

  Trit& at(std::size_t row, std::size_t col) {
    return entries_[row * code_length_ + col];
  }
  Trit at(std::size_t row, std::size_t col) const {
    return entries_[row * code_length_ + col];
  }

  /// True when no cell is DontCare.
  bool binary() const {
    return std::none_of(entries_.begin(), entries_.end(),
                        [](Trit t) { return t == Trit::DontCare; });
  }

  friend bool operator==(const CodeMatrix& a, const CodeMatrix& b) = default;

 private:
  std::size_t class_count_ = 0;
  std::size_t code_length_ = 0;
  std::vector<Trit> entries_;
};

struct CodeAnalysis {
  std::size_t min_row_distance = 0;       // d, over mutually unmasked positions
  std::size_t correcting_capability = 0;  // t = floor((d - 1) / 2)
};

namespace detail {

/// Hamming distance between two rows counted only where both are unmasked.
inline std::size_t row_distance(const CodeMatrix& m, std::size_t a, std::size_t b) {
  std::size_t d = 0;
  for (std::size_t j = 0; j < m.code_length(); ++j) {
    Trit x = m.at(a, j);
    Trit y = m.at(b, j);
    if (x != Trit::DontCare && y != Trit::DontCare && x != y) ++d;
  }
  return d;
}

inline std::size_t min_row_distance(const CodeMatrix& m) {
  std::size_t d = m.code_length() + 1;
  for (std::size_t a = 0; a + 1 < m.class_count(); ++a) {
    for (std::size_t b = a + 1; b < m.class_count(); ++b) {
      d = std::min(d, row_distance(m, a, b));
    }
  }
  return m.class_count() < 2 ? 0 : d;
}

inline bool columns_identical(const CodeMatrix& m, std::size_t p, std::size_t q) {
  for (std::size_t r = 0; r < m.class_count(); ++r) {
    if (m.at(r, p) != m.at(r, q)) return false;
  }
  return true;
}

inline bool columns_complementary(const CodeMatrix& m, std::size_t p, std::size_t q) {
  for (std::size_t r = 0; r < m.class_count(); ++r) {
    Trit a = m.at(r, p);
    Trit b = m.at(r, q);
    if (a == Trit::DontCare || b == Trit::DontCare || a == b) return false;
  }
  return true;
}

/// Number of validation rules the matrix currently breaks. Zero means valid.
/// Used by the repair loops, which need a quantity to descend on.
inline std::size_t violation_count(const CodeMatrix& m) {
  const std::size_t C = m.class_count();
  const std::size_t b = m.code_length();
  std::size_t v = 0;
  for (std::size_t r = 0; r < C; ++r) {
    bool all_masked = true;
    for (std::size_t j = 0; j < b; ++j) {
      if (m.at(r, j) != Trit::DontCare) all_masked = false;
    }
    if (all_masked) ++v;
  }
  for (std::size_t j = 0; j < b; ++j) {
    bool has_zero = false;
    bool has_one = false;
    for (std::size_t r = 0; r < C; ++r) {
      if (m.at(r, j) == Trit::Zero) has_zero = true;
      if (m.at(r, j) == Trit::One) has_one = true;
    }
    if (!has_zero) ++v;
    if (!has_one) ++v;
  }
  for (std::size_t a = 0; a + 1 < C; ++a) {
    for (std::size_t c = a + 1; c < C; ++c) {
      if (row_distance(m, a, c) == 0) ++v;
    }
  }
  if (m.binary()) {
    for (std::size_t p = 0; p + 1 < b; ++p) {
      for (std::size_t q = p + 1; q < b; ++q) {
        if (columns_identical(m, p, q)) ++v;
        if (columns_complementary(m, p, q)) ++v;
      }
    }
  }
  return v;
}

}  // namespace detail

/// Checks the structural rules every usable code matrix must satisfy:
/// no all-DontCare row; every column carries at least one Zero and one One;
/// every row pair differs somewhere both are unmasked; and, for strictly
/// binary matrices, no identical or complementary column pair.
/// Returns a description of the first broken rule, or nullopt when valid.
inline std::optional<std::string> validation_error(const CodeMatrix& m) {
  const std::size_t C = m.class_count();
  const std::size_t b = m.code_length();
  if (C == 0 || b == 0) return "matrix is empty";
  for (std::size_t r = 0; r < C; ++r) {
    bool all_masked = true;
    for (std::size_t j = 0; j < b; ++j) {
      if (m.at(r, j) != Trit::DontCare) all_masked = false;
    }
    if (all_masked) return "row " + std::to_string(r) + " is all don't-care";
  }
  for (std::size_t j = 0; j < b; ++j) {
    bool has_zero = false;
    bool has_one = false;
    for (std::size_t r = 0; r < C; ++r) {
      if (m.at(r, j) == Trit::Zero) has_zero = true;
      if (m.at(r, j) == Trit::One) has_one = true;
    }
    if (!has_zero || !has_one) {
      return "column " + std::to_string(j) + " lacks a " + (has_zero ? "One" : "Zero");
    }
  }
  for (std::size_t a = 0; a + 1 < C; ++a) {
    for (std::size_t c = a + 1; c < C; ++c) {
      if (detail::row_distance(m, a, c) == 0) {
        return "rows " + std::to_string(a) + " and " + std::to_string(c) +
               " are indistinguishable";
      }
    }
  }
  if (m.binary()) {
    for (std::size_t p = 0; p + 1 < b; ++p) {
      for (std::size_t q = p + 1; q < b; ++q) {
        if (detail::columns_identical(m, p, q)) {
          return "columns " + std::to_string(p) + " and " + std::to_string(q) +
                 " are identical";
        }
        if (detail::columns_complementary(m, p, q)) {
          return "columns " + std::to_string(p) + " and " + std::to_string(q) +
                 " are complementary";
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_valid(const CodeMatrix& m) { return !validation_error(m).has_value(); }

/// Minimum pairwise row distance d and correcting capability
/// t = floor((d - 1) / 2).
inline CodeAnalysis analyze(const CodeMatrix& m) {
  CodeAnalysis a;
  a.min_row_distance = detail::min_row_distance(m);
  a.correcting_capability =
      a.min_row_distance >= 1 ? (a.min_row_distance - 1) / 2 : 0;
  return a;
}

namespace detail {

inline void require_class_count(std::size_t class_count) {
  if (class_count < 3) {
    fail(errc::invalid_class_count,
         "need at least 3 classes, got " + std::to_string(class_count));
  }
}

/// Smallest k with 2^k >= n.
inline std::size_t bits_needed(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace detail

/// C x C identity-pattern matrix: row i is One at column i, Zero elsewhere.
/// Its minimum row distance is always exactly 2.
inline CodeMatrix one_vs_all(std::size_t class_count) {
  detail::require_class_count(class_count);
  CodeMatrix m(class_count, class_count, Trit::Zero);
  for (std::size_t i = 0; i < class_count; ++i) m.at(i, i) = Trit::One;
  return m;
}

/// C x C(C-1)/2 matrix with one column per unordered class pair (p, q),
/// p < q in lexicographic order: One at row p, Zero at row q, DontCare
/// elsewhere. Each row has exactly C-1 unmasked entries.
inline CodeMatrix one_vs_one(std::size_t class_count) {
  detail::require_class_count(class_count);
  const std::size_t b = class_count * (class_count - 1) / 2;
  CodeMatrix m(class_count, b, Trit::DontCare);
  std::size_t col = 0;
  for (std::size_t p = 0; p < class_count; ++p) {
    for (std::size_t q = p + 1; q < class_count; ++q, ++col) {
      m.at(p, col) = Trit::One;
      m.at(q, col) = Trit::Zero;
    }
  }
  return m;
}

/// C x (2^(C-1) - 1) binary matrix enumerating every non-trivial two-way
/// partition of the classes. Row 0 is all Ones; row r >= 1 alternates runs
/// of Zeros and Ones of length 2^(C-1-r). Only practical for small C.
inline CodeMatrix exhaustive(std::size_t class_count) {
  if (class_count < 3 || class_count > 7) {
    fail(errc::unsupported_size,
         "exhaustive codes are generated for 3..7 classes, got " +
             std::to_string(class_count));
  }
  const std::size_t b = (std::size_t{1} << (class_count - 1)) - 1;
  CodeMatrix m(class_count, b, Trit::Zero);
  for (std::size_t j = 0; j < b; ++j) m.at(0, j) = Trit::One;
  for (std::size_t r = 1; r < class_count; ++r) {
    const std::size_t run = std::size_t{1} << (class_count - 1 - r);
    for (std::size_t j = 0; j < b; ++j) {
      m.at(r, j) = ((j / run) % 2 == 1) ? Trit::One : Trit::Zero;
    }
  }
  return m;
}

namespace detail {

template <typename CellFn>
CodeMatrix best_of_random_trials(std::size_t class_count, std::size_t code_length,
                                 std::uint64_t seed, std::size_t trials,
                                 CellFn&& cell, const char* kind) {
  require_class_count(class_count);
  if (code_length < bits_needed(class_count)) {
    fail(errc::invalid_dimension,
         "code length " + std::to_string(code_length) + " is below ceil(log2(" +
             std::to_string(class_count) + "))");
  }
  if (trials < 1) fail(errc::invalid_argument, "trials must be at least 1");

  CodeMatrix best;
  std::size_t best_d = 0;
  bool found = false;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    // Each trial gets its own stream so results do not depend on whether
    // trials run sequentially or concurrently.
    SplitMix64 rng(derive_seed(seed, trial));
    CodeMatrix cand(class_count, code_length);
    for (std::size_t r = 0; r < class_count; ++r) {
      for (std::size_t j = 0; j < code_length; ++j) cand.at(r, j) = cell(rng);
    }
    if (!is_valid(cand)) continue;
    const std::size_t d = min_row_distance(cand);
    if (!found || d > best_d) {  // ties keep the first generated candidate
      best = std::move(cand);
      best_d = d;
      found = true;
    }
  }
  if (!found) {
    fail(errc::generation_failed,
         std::string(kind) + ": no valid candidate in " + std::to_string(trials) +
             " trials");
  }
  return best;
}

}  // namespace detail

/// Random binary matrix, entries uniform over {Zero, One}. Generates
/// `trials` candidates and keeps the valid one with the largest minimum row
/// distance (ties: first generated). Deterministic in (seed, trials).
inline CodeMatrix dense_random(std::size_t class_count, std::size_t code_length,
                               std::uint64_t seed, std::size_t trials) {
  return detail::best_of_random_trials(
      class_count, code_length, seed, trials,
      [](SplitMix64& g) { return g.next_bool() ? Trit::One : Trit::Zero; },
      "dense_random");
}

/// Random ternary matrix, entries drawn with P(Zero)=P(One)=1/4 and
/// P(DontCare)=1/2. Candidate selection as in dense_random, with distances
/// taken over mutually unmasked positions.
inline CodeMatrix sparse_random(std::size_t class_count, std::size_t code_length,
                                std::uint64_t seed, std::size_t trials) {
  return detail::best_of_random_trials(
      class_count, code_length, seed, trials,
      [](SplitMix64& g) {
        switch (g.next_below(4)) {
          case 0: return Trit::Zero;
          case 1: return Trit::One;
          default: return Trit::DontCare;
        }
      },
      "sparse_random");
}

/// Randomized hill climbing on a valid binary matrix: proposes one random
/// single-cell flip per iteration and accepts it iff the matrix stays valid
/// and the minimum row distance does not decrease. The result's distance is
/// therefore never below the input's. Deterministic in seed.
inline CodeMatrix hill_climb_improve(CodeMatrix m, std::size_t iterations,
                                     std::uint64_t seed) {
  if (!m.binary()) fail(errc::invalid_matrix, "hill climbing needs a binary matrix");
  if (auto err = validation_error(m)) fail(errc::invalid_matrix, *err);

  SplitMix64 rng(seed);
  std::size_t current_d = detail::min_row_distance(m);
  for (std::size_t i = 0; i < iterations; ++i) {
    const std::size_t r = rng.next_below(m.class_count());
    const std::size_t c = rng.next_below(m.code_length());
    const Trit old = m.at(r, c);
    m.at(r, c) = (old == Trit::One) ? Trit::Zero : Trit::One;
    if (is_valid(m)) {
      const std::size_t d = detail::min_row_distance(m);
      if (d >= current_d) {
        current_d = d;
        continue;  // accepted
      }
    }
    m.at(r, c) = old;  // rejected
  }
  return m;
}

// ---------------------------------------------------------------------------
// BCH codebooks.
//
// Narrow-sense binary BCH codes of length n = 2^m - 1 built from their
// generator polynomial over GF(2). The field GF(2^m) is represented by
// log/antilog tables over a fixed primitive polynomial; the generator
// polynomial for designed correction t is the product of the minimal
// polynomials of alpha^1 .. alpha^2t.
// ---------------------------------------------------------------------------

namespace detail::bch {

struct Field {
  int m = 0;
  int n = 0;                  // 2^m - 1
  std::vector<int> alpha_to;  // alpha_to[i] = alpha^i
  std::vector<int> index_of;  // index_of[alpha^i] = i
};

inline Field make_field(int m) {
  // Primitive polynomials: x^4+x+1, x^5+x^2+1, x^6+x+1.
  int pp = 0;
  switch (m) {
    case 4: pp = 0b10011; break;
    case 5: pp = 0b100101; break;
    case 6: pp = 0b1000011; break;
    default: fail(errc::unsupported_size, "unsupported field GF(2^" + std::to_string(m) + ")");
  }
  Field f;
  f.m = m;
  f.n = (1 << m) - 1;
  f.alpha_to.assign(f.n + 1, 0);
  f.index_of.assign(f.n + 1, -1);
  int x = 1;
  for (int i = 0; i < f.n; ++i) {
    f.alpha_to[i] = x;
    f.index_of[x] = i;
    x <<= 1;
    if (x & (1 << m)) x ^= pp;
  }
  return f;
}

inline int gf_mul(const Field& f, int a, int b) {
  if (a == 0 || b == 0) return 0;
  return f.alpha_to[(f.index_of[a] + f.index_of[b]) % f.n];
}

/// Multiplies a polynomial over GF(2^m) by (x + alpha^root_pow).
inline std::vector<int> mul_by_root(const Field& f, const std::vector<int>& p,
                                    int root_pow) {
  std::vector<int> q(p.size() + 1, 0);
  const int root = f.alpha_to[root_pow % f.n];
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == 0) continue;
    q[j + 1] ^= p[j];
    q[j] ^= gf_mul(f, p[j], root);
  }
  return q;
}

/// All (k, generator polynomial) pairs achievable for this field's block
/// length, produced by absorbing the cyclotomic cosets of alpha^1, alpha^2,
/// ... in order. Listed with k strictly decreasing.
inline std::vector<std::pair<int, std::vector<int>>> generator_table(const Field& f) {
  std::vector<char> covered(f.n, 0);
  std::vector<int> g{1};
  std::vector<std::pair<int, std::vector<int>>> table;
  int last_k = f.n;
  for (int s = 1; s < f.n; ++s) {
    if (!covered[s]) {
      int i = s;
      do {
        covered[i] = 1;
        g = mul_by_root(f, g, i);
        i = (2 * i) % f.n;
      } while (i != s);
    }
    const int k = f.n - static_cast<int>(g.size() - 1);
    if (k <= 0) break;
    if (k != last_k) {
      // Coefficients of a GF(2) generator polynomial must be 0/1.
      for (int coeff : g) {
        if (coeff > 1) fail(errc::generation_failed, "generator polynomial not binary");
      }
      table.emplace_back(k, g);
      last_k = k;
    }
  }
  return table;
}

/// Systematic encoding: data bits occupy the top k coefficients, parity the
/// low n-k. Returns the codeword as matrix-row trits.
inline std::vector<Trit> encode(const std::vector<int>& gen, int n, int k,
                                std::uint64_t message) {
  const int parity = n - k;
  std::vector<int> buf(n, 0);
  for (int j = 0; j < k; ++j) buf[parity + j] = static_cast<int>((message >> j) & 1);
  for (int i = n - 1; i >= parity; --i) {
    if (buf[i] == 0) continue;
    for (int t = 0; t <= parity; ++t) buf[i - parity + t] ^= gen[t];
  }
  std::vector<Trit> row(n);
  for (int j = 0; j < parity; ++j) row[j] = buf[j] ? Trit::One : Trit::Zero;
  for (int j = 0; j < k; ++j) {
    row[parity + j] = ((message >> j) & 1) ? Trit::One : Trit::Zero;
  }
  return row;
}

inline void set_row(CodeMatrix& m, std::size_t r, const std::vector<Trit>& row) {
  for (std::size_t j = 0; j < row.size(); ++j) m.at(r, j) = row[j];
}

}  // namespace detail::bch

/// Binary codebook cut from a BCH code of length `block_length` (15, 31 or
/// 63). Uses the smallest standard message size k whose 2^k - 1 nonzero
/// codewords can seat every class, assigns classes the codewords of messages
/// 1..C, and, when that selection breaks a column rule, repairs it by greedy
/// codeword swaps against the unused pool. Row distances always stay at or
/// above the code's design distance because rows remain codewords of one
/// linear code.
inline CodeMatrix bch(std::size_t class_count, std::size_t block_length) {
  detail::require_class_count(class_count);
  int m = 0;
  switch (block_length) {
    case 15: m = 4; break;
    case 31: m = 5; break;
    case 63: m = 6; break;
    default:
      fail(errc::unsupported_size,
           "BCH block length must be 15, 31 or 63, got " + std::to_string(block_length));
  }
  // A C-row binary matrix admits at most 2^(C-1) - 1 columns that are
  // non-constant and pairwise neither identical nor complementary, so longer
  // blocks can never validate.
  if (class_count < 64) {
    const std::uint64_t usable = (std::uint64_t{1} << (class_count - 1)) - 1;
    if (block_length > usable) {
      fail(errc::generation_failed,
           "block length " + std::to_string(block_length) + " exceeds the " +
               std::to_string(usable) + " usable columns for " +
               std::to_string(class_count) + " classes");
    }
  }
  const auto field = detail::bch::make_field(m);
  const auto table = detail::bch::generator_table(field);

  // Smallest achievable k with enough distinct nonzero codewords.
  int k = 0;
  std::vector<int> gen;
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    const std::uint64_t capacity = (std::uint64_t{1} << it->first) - 1;
    if (capacity >= class_count) {
      k = it->first;
      gen = it->second;
      break;
    }
  }
  if (k == 0) {
    fail(errc::unsupported_size,
         std::to_string(class_count) + " classes do not fit any (n=" +
             std::to_string(block_length) + ", k) code");
  }

  const int n = field.n;
  const std::uint64_t pool = (std::uint64_t{1} << k) - 1;  // messages 1..pool
  std::vector<std::uint64_t> chosen(class_count);
  CodeMatrix matrix(class_count, block_length);
  for (std::size_t i = 0; i < class_count; ++i) {
    chosen[i] = i + 1;
    detail::bch::set_row(matrix, i, detail::bch::encode(gen, n, k, chosen[i]));
  }

  // Greedy repair: swap one selected codeword for an unused one whenever the
  // swap strictly lowers the number of broken validation rules.
  std::size_t violations = detail::violation_count(matrix);
  const std::size_t max_steps = 4 * class_count;
  for (std::size_t step = 0; violations > 0 && step < max_steps; ++step) {
    std::size_t best_v = violations;
    std::size_t best_row = 0;
    std::uint64_t best_msg = 0;
    std::vector<Trit> best_codeword;
    for (std::size_t r = 0; r < class_count; ++r) {
      const std::vector<Trit> saved = [&] {
        std::vector<Trit> s(block_length);
        for (std::size_t j = 0; j < block_length; ++j) s[j] = matrix.at(r, j);
        return s;
      }();
      for (std::uint64_t msg = 1; msg <= pool; ++msg) {
        if (std::find(chosen.begin(), chosen.end(), msg) != chosen.end()) continue;
        const auto candidate = detail::bch::encode(gen, n, k, msg);
        detail::bch::set_row(matrix, r, candidate);
        const std::size_t v = detail::violation_count(matrix);
        if (v < best_v) {
          best_v = v;
          best_row = r;
          best_msg = msg;
          best_codeword = candidate;
        }
      }
      detail::bch::set_row(matrix, r, saved);
    }
    if (best_v >= violations) break;  // no improving swap left
    detail::bch::set_row(matrix, best_row, best_codeword);
    chosen[best_row] = best_msg;
    violations = best_v;
  }
  if (violations > 0) {
    fail(errc::generation_failed,
         "BCH codeword selection could not be repaired to a valid matrix");
  }
  return matrix;
}

// ---------------------------------------------------------------------------
// Target encoding and text form.
// ---------------------------------------------------------------------------

/// A class's training target: per-output desired value plus a mask flag.
/// Masked positions are skipped by every cost, gradient, and distance.
struct Target {
  std::vector<double> value;
  std::vector<bool> masked;

  std::size_t size() const { return value.size(); }
};

/// Row `label` of the matrix as a target vector.
inline Target encode_targets(std::size_t label, const CodeMatrix& m) {
  if (label >= m.class_count()) {
    fail(errc::invalid_label, "label " + std::to_string(label) + " out of range [0, " +
                                  std::to_string(m.class_count()) + ")");
  }
  Target t;
  t.value.resize(m.code_length(), 0.0);
  t.masked.resize(m.code_length(), false);
  for (std::size_t j = 0; j < m.code_length(); ++j) {
    switch (m.at(label, j)) {
      case Trit::One: t.value[j] = 1.0; break;
      case Trit::Zero: t.value[j] = 0.0; break;
      case Trit::DontCare: t.masked[j] = true; break;
    }
  }
  return t;
}

/// One row per line, characters '0', '1', '*', trailing newline.
inline std::string serialize(const CodeMatrix& m) {
  std::string out;
  out.reserve(m.class_count() * (m.code_length() + 1));
  for (std::size_t r = 0; r < m.class_count(); ++r) {
    for (std::size_t j = 0; j < m.code_length(); ++j) {
      switch (m.at(r, j)) {
        case Trit::Zero: out += '0'; break;
        case Trit::One: out += '1'; break;
        case Trit::DontCare: out += '*'; break;
      }
    }
    out += '\n';
  }
  return out;
}

/// Inverse of serialize. Ragged rows or characters outside '0'/'1'/'*' are
/// parse errors; structural validity is the caller's concern.
inline CodeMatrix deserialize(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) fail(errc::parse_error, "code matrix text is empty");

  const std::size_t b = lines[0].size();
  CodeMatrix m(lines.size(), b);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != b) {
      fail(errc::parse_error, "row " + std::to_string(r) + " has length " +
                                  std::to_string(lines[r].size()) + ", expected " +
                                  std::to_string(b));
    }
    for (std::size_t j = 0; j < b; ++j) {
      switch (lines[r][j]) {
        case '0': m.at(r, j) = Trit::Zero; break;
        case '1': m.at(r, j) = Trit::One; break;
        case '*': m.at(r, j) = Trit::DontCare; break;
        default:
          fail(errc::parse_error, "row " + std::to_string(r) +
                                      ": invalid character '" +
                                      std::string(1, lines[r][j]) + "'");
      }
    }
  }
  if (b == 0) fail(errc::parse_error, "code matrix rows are empty");
  return m;
}

}  // namespace ecoc
