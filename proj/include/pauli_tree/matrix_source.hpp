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

#include "pauli_tree/pauli.hpp"
#include "pauli_tree/structure.hpp"

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pauli_tree {

using Complex = std::complex<double>;

/// Read-only entry oracle over a 2^n x 2^n matrix. entry() must be pure:
/// the parallel executor calls it from several threads at once.
template <class S>
concept MatrixSource = requires(const S& s, std::uint64_t row, std::uint64_t col) {
  { s.qubits() } -> std::convertible_to<unsigned>;
  { s.entry(row, col) } -> std::convertible_to<Complex>;
  { s.structure() } -> std::convertible_to<StructureClass>;
};

/// Sources whose entries can be enumerated cheaply enough for a full scan.
template <class S>
inline constexpr bool kScannable = true;

inline unsigned qubits_for_dimension(std::uint64_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  return static_cast<unsigned>(std::countr_zero(dim));
}

/// Dense column-major storage. The tree walk reads entry(k[j], j), which
/// stays inside column j.
class DenseMatrix {
 public:
  explicit DenseMatrix(Eigen::MatrixXcd values, StructureClass hint = StructureClass::general())
      : values_(std::move(values)), hint_(hint) {
    if (values_.rows() != values_.cols()) {
      throw std::invalid_argument("dense matrix must be square");
    }
    n_ = qubits_for_dimension(static_cast<std::uint64_t>(values_.rows()));
    hint_.check_compatible(n_);
  }

  unsigned qubits() const noexcept { return n_; }
  StructureClass structure() const noexcept { return hint_; }
  void set_structure(StructureClass hint) {
    hint.check_compatible(n_);
    hint_ = hint;
  }

  Complex entry(std::uint64_t row, std::uint64_t col) const noexcept {
    return values_.data()[col * static_cast<std::uint64_t>(values_.rows()) + row];
  }

  const Eigen::MatrixXcd& values() const noexcept { return values_; }

 private:
  Eigen::MatrixXcd values_;
  StructureClass hint_;
  unsigned n_ = 0;
};

/// Matrix defined by a pure function (row, col) -> complex; never stored.
template <class F>
  requires std::invocable<const F&, std::uint64_t, std::uint64_t>
class FunctionMatrix {
 public:
  FunctionMatrix(unsigned n, F f, StructureClass hint = StructureClass::general())
      : n_(n), f_(std::move(f)), hint_(hint) {
    check_qubit_count(n_);
    hint_.check_compatible(n_);
  }

  unsigned qubits() const noexcept { return n_; }
  StructureClass structure() const noexcept { return hint_; }
  Complex entry(std::uint64_t row, std::uint64_t col) const { return f_(row, col); }

 private:
  unsigned n_;
  F f_;
  StructureClass hint_;
};

template <class F>
inline constexpr bool kScannable<FunctionMatrix<F>> = false;

class DiagonalMatrix {
 public:
  explicit DiagonalMatrix(std::vector<Complex> diagonal)
      : diagonal_(std::move(diagonal)), n_(qubits_for_dimension(diagonal_.size())) {}

  unsigned qubits() const noexcept { return n_; }
  StructureClass structure() const noexcept { return StructureClass::diagonal(); }
  Complex entry(std::uint64_t row, std::uint64_t col) const noexcept {
    return row == col ? diagonal_[row] : Complex{};
  }

 private:
  std::vector<Complex> diagonal_;
  unsigned n_;
};

/// Band storage of half-width s: diagonals[s + offset][row] holds entry
/// (row, row + offset) for offset in [-s, s]; out-of-range slots are unused.
class BandMatrix {
 public:
  BandMatrix(unsigned n, std::uint64_t half_width)
      : n_(n), half_width_(half_width), dim_(std::uint64_t{1} << n) {
    check_qubit_count(n_);
    StructureClass::band(half_width_).check_compatible(n_);
    diagonals_.assign(2 * half_width_ + 1, std::vector<Complex>(dim_));
  }

  unsigned qubits() const noexcept { return n_; }
  std::uint64_t half_width() const noexcept { return half_width_; }
  StructureClass structure() const { return StructureClass::band(half_width_); }

  Complex entry(std::uint64_t row, std::uint64_t col) const noexcept {
    const auto offset = static_cast<std::int64_t>(col) - static_cast<std::int64_t>(row);
    const auto s = static_cast<std::int64_t>(half_width_);
    if (offset < -s || offset > s) return {};
    return diagonals_[static_cast<std::size_t>(offset + s)][row];
  }

  void set(std::uint64_t row, std::uint64_t col, Complex value) {
    const auto offset = static_cast<std::int64_t>(col) - static_cast<std::int64_t>(row);
    const auto s = static_cast<std::int64_t>(half_width_);
    if (row >= dim_ || col >= dim_ || offset < -s || offset > s) {
      throw std::out_of_range("entry (" + std::to_string(row) + ", " + std::to_string(col) +
                              ") lies outside the band");
    }
    diagonals_[static_cast<std::size_t>(offset + s)][row] = value;
  }

 private:
  unsigned n_;
  std::uint64_t half_width_;
  std::uint64_t dim_;
  std::vector<std::vector<Complex>> diagonals_;
};

/// Materializes any source (n <= max_qubits) as a dense Eigen matrix.
template <MatrixSource S>
Eigen::MatrixXcd to_dense(const S& src, unsigned max_qubits = kDenseMaxQubits) {
  const unsigned n = src.qubits();
  if (n > max_qubits) {
    throw std::length_error("refusing to materialize a dense " + std::to_string(n) +
                            "-qubit matrix (ceiling " + std::to_string(max_qubits) + ")");
  }
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      out(r, c) = src.entry(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c));
    }
  }
  return out;
}

/// Result of zero-padding a matrix up to a power-of-two square.
struct PaddedMatrix {
  DenseMatrix matrix;
  Eigen::Index original_rows;
  Eigen::Index original_cols;
  bool padded;
};

inline PaddedMatrix pad_to_power_of_two(const Eigen::MatrixXcd& values) {
  const auto rows = values.rows();
  const auto cols = values.cols();
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix has dimension 0");
  const auto dim = std::max<std::uint64_t>(
      2, std::bit_ceil(static_cast<std::uint64_t>(std::max(rows, cols))));
  const auto d = static_cast<Eigen::Index>(dim);
  if (d == rows && d == cols) return {DenseMatrix(values), rows, cols, false};
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  out.topLeftCorner(rows, cols) = values;
  return {DenseMatrix(std::move(out)), rows, cols, true};
}

}  // namespace pauli_tree
