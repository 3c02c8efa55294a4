// Copyright 2026 The pauli-tree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pauli_tree {

/// Largest qubit count any index array in this library is sized for.
inline constexpr unsigned kMaxQubits = 30;

/// Largest qubit count that is ever materialized as a dense matrix by default.
inline constexpr unsigned kDenseMaxQubits = 12;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<PauliLetter, 4> kAllLetters = {
    PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

/// 1 for the off-diagonal letters X and Y, 0 for I and Z.
constexpr unsigned diagonality(PauliLetter letter) noexcept {
  return letter == PauliLetter::X || letter == PauliLetter::Y ? 1u : 0u;
}

/// Row-doubling sign of the letter in the {I, X, iY, Z} representation.
constexpr int sign_factor(PauliLetter letter) noexcept {
  return letter == PauliLetter::I || letter == PauliLetter::X ? 1 : -1;
}

constexpr char to_char(PauliLetter letter) noexcept {
  constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<unsigned>(letter)];
}

inline PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default: break;
  }
  throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
}

/// An element of the group {1, i, -1, -i}, stored as the exponent of i.
class Phase {
 public:
  constexpr Phase() = default;

  static constexpr Phase i_pow(int exponent) noexcept {
    return Phase(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4));
  }
  static constexpr Phase one() noexcept { return i_pow(0); }
  static constexpr Phase i() noexcept { return i_pow(1); }
  static constexpr Phase minus_one() noexcept { return i_pow(2); }
  static constexpr Phase minus_i() noexcept { return i_pow(3); }

  constexpr unsigned exponent() const noexcept { return exponent_; }

  constexpr Phase operator*(Phase other) const noexcept {
    return i_pow(exponent_ + other.exponent_);
  }
  constexpr Phase& operator*=(Phase other) noexcept { return *this = *this * other; }

  constexpr bool operator==(const Phase&) const = default;

  std::complex<double> value() const noexcept {
    switch (exponent_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }

  /// Multiplies z by this phase without any floating-point rounding.
  std::complex<double> rotate(std::complex<double> z) const noexcept {
    switch (exponent_) {
      case 0: return z;
      case 1: return {-z.imag(), z.real()};
      case 2: return {-z.real(), -z.imag()};
      default: return {z.imag(), -z.real()};
    }
  }

  std::string str() const {
    constexpr const char* kNames[] = {"+1", "+i", "-1", "-i"};
    return kNames[exponent_];
  }

 private:
  constexpr explicit Phase(std::uint8_t e) : exponent_(e) {}
  std::uint8_t exponent_ = 0;
};

struct PhasedLetter {
  PauliLetter letter;
  Phase phase;
  bool operator==(const PhasedLetter&) const = default;
};

/// Product a*b of two single-qubit Pauli matrices as phase * letter.
constexpr PhasedLetter letter_product(PauliLetter a, PauliLetter b) noexcept {
  if (a == PauliLetter::I) return {b, Phase::one()};
  if (b == PauliLetter::I) return {a, Phase::one()};
  if (a == b) return {PauliLetter::I, Phase::one()};
  // XY = iZ, YZ = iX, ZX = iY; reversed order flips the sign.
  const auto ia = static_cast<unsigned>(a);
  const auto ib = static_cast<unsigned>(b);
  const auto third = static_cast<PauliLetter>(6 - ia - ib);
  const bool cyclic = (ib == ia % 3 + 1);
  return {third, cyclic ? Phase::i() : Phase::minus_i()};
}

/// An n-letter word over {I, X, Y, Z}. Text position 0 is the most
/// significant tensor factor, so sigma(0) is the last character.
class PauliString {
 public:
  PauliString() = default;

  explicit PauliString(std::string_view text) : text_(text) {
    if (text_.empty()) throw std::invalid_argument("Pauli string must have at least one letter");
    for (char c : text_) (void)letter_from_char(c);
  }

  explicit PauliString(const std::vector<PauliLetter>& letters) {
    if (letters.empty()) throw std::invalid_argument("Pauli string must have at least one letter");
    text_.reserve(letters.size());
    for (auto l : letters) text_.push_back(to_char(l));
  }

  static PauliString identity(unsigned n) { return PauliString(std::string(n, 'I')); }

  std::size_t size() const noexcept { return text_.size(); }
  const std::string& str() const noexcept { return text_; }

  /// Letter at text position pos (leftmost = 0).
  PauliLetter operator[](std::size_t pos) const { return letter_from_char(text_[pos]); }

  /// Tensor factor acting on qubit l, i.e. bit l of the row index.
  PauliLetter sigma(std::size_t l) const { return (*this)[text_.size() - 1 - l]; }

  unsigned num_y() const noexcept {
    unsigned count = 0;
    for (char c : text_) count += c == 'Y';
    return count;
  }

  /// Bitmask whose bit l is the diagonality of sigma(l).
  std::uint64_t x_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t l = 0; l < size(); ++l) mask |= std::uint64_t{diagonality(sigma(l))} << l;
    return mask;
  }

  /// Prepends a letter as the new most significant factor.
  PauliString prepend(PauliLetter letter) const {
    PauliString out;
    out.text_.reserve(text_.size() + 1);
    out.text_.push_back(to_char(letter));
    out.text_ += text_;
    return out;
  }

  auto operator<=>(const PauliString&) const = default;
  bool operator==(const PauliString&) const = default;

 private:
  std::string text_;
};

struct PhasedString {
  PauliString string;
  Phase phase;
  bool operator==(const PhasedString&) const = default;
};

inline PhasedString string_product(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("Pauli string product needs equal lengths (" +
                                std::to_string(p.size()) + " vs " + std::to_string(q.size()) + ")");
  }
  std::vector<PauliLetter> letters(p.size());
  Phase phase;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto r = letter_product(p[i], q[i]);
    letters[i] = r.letter;
    phase *= r.phase;
  }
  return {PauliString(letters), phase};
}

inline void check_qubit_count(unsigned n, unsigned ceiling = kMaxQubits) {
  if (n == 0) throw std::invalid_argument("qubit count must be at least 1");
  if (n > ceiling) {
    throw std::invalid_argument("qubit count " + std::to_string(n) + " exceeds the ceiling of " +
                                std::to_string(ceiling));
  }
}

/// Row-sparse form of a Pauli operator: row j has its single nonzero in
/// column columns[j] with value (-i)^(n_y mod 4) * signs[j].
class SparsePauliOperator {
 public:
  SparsePauliOperator(unsigned n, std::vector<std::uint32_t> columns, std::vector<std::int8_t> signs,
                      unsigned n_y)
      : n_(n), columns_(std::move(columns)), signs_(std::move(signs)), n_y_(n_y) {}

  unsigned qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return columns_.size(); }
  const std::vector<std::uint32_t>& columns() const noexcept { return columns_; }
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }
  unsigned n_y() const noexcept { return n_y_; }

  /// (-i)^(n_y mod 4).
  Phase phase() const noexcept { return Phase::i_pow(-static_cast<int>(n_y_ % 4)); }

  /// Column and value of the nonzero in the given row.
  std::pair<std::uint32_t, std::complex<double>> entry(std::size_t row) const {
    if (row >= columns_.size()) {
      throw std::out_of_range("row " + std::to_string(row) + " outside a " +
                              std::to_string(columns_.size()) + "-row operator");
    }
    const auto value = signs_[row] > 0 ? phase() : phase() * Phase::minus_one();
    return {columns_[row], value.value()};
  }

  bool operator==(const SparsePauliOperator&) const = default;

 private:
  unsigned n_;
  std::vector<std::uint32_t> columns_;
  std::vector<std::int8_t> signs_;
  unsigned n_y_;
};

/// Builds the row-sparse form of a Pauli string by segment doubling.
inline SparsePauliOperator compose(const PauliString& s) {
  const auto n = static_cast<unsigned>(s.size());
  check_qubit_count(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> k(dim);
  std::vector<std::int8_t> m(dim);
  k[0] = static_cast<std::uint32_t>(s.x_mask());
  m[0] = 1;
  for (unsigned l = 0; l < n; ++l) {
    const auto letter = s.sigma(l);
    const std::size_t half = std::size_t{1} << l;
    const auto shift = static_cast<std::uint32_t>(half);
    const bool off_diagonal = diagonality(letter) == 1;
    const auto zeta = static_cast<std::int8_t>(sign_factor(letter));
    for (std::size_t j = 0; j < half; ++j) {
      k[j + half] = off_diagonal ? k[j] - shift : k[j] + shift;
      m[j + half] = static_cast<std::int8_t>(zeta * m[j]);
    }
  }
  return SparsePauliOperator(n, std::move(k), std::move(m), s.num_y());
}

inline std::pair<std::uint32_t, std::complex<double>> operator_entry(const SparsePauliOperator& op,
                                                                     std::size_t row) {
  return op.entry(row);
}

/// Dense 2^n x 2^n matrix of the operator.
inline Eigen::MatrixXcd dense(const SparsePauliOperator& op, unsigned max_qubits = kDenseMaxQubits) {
  if (op.qubits() > max_qubits) {
    throw std::length_error("refusing to materialize a dense " + std::to_string(op.qubits()) +
                            "-qubit operator (ceiling " + std::to_string(max_qubits) + ")");
  }
  const auto dim = static_cast<Eigen::Index>(op.dimension());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    const auto [col, value] = op.entry(static_cast<std::size_t>(row));
    out(row, static_cast<Eigen::Index>(col)) = value;
  }
  return out;
}

inline Eigen::MatrixXcd dense(const PauliString& s, unsigned max_qubits = kDenseMaxQubits) {
  return dense(compose(s), max_qubits);
}

}  // namespace pauli_tree
