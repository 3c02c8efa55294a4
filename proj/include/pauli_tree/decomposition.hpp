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

#include "pauli_tree/matrix_source.hpp"
#include "pauli_tree/pauli.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace pauli_tree {

/// Coefficients whose magnitude is at or below this are not stored.
inline constexpr double kDefaultPruneTolerance = 1e-12;

inline bool keep_coefficient(Complex value, double tolerance) {
  return std::abs(value) > tolerance;
}

/// A = sum over terms of coefficient * P. Keys are kept in ascending
/// I < X < Y < Z order; absent keys are zero.
class Decomposition {
 public:
  using Terms = std::map<PauliString, Complex>;

  Decomposition() = default;
  explicit Decomposition(unsigned n) : n_(n) { check_qubit_count(n_); }

  unsigned qubits() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  Complex coefficient(const PauliString& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Complex{} : it->second;
  }

  /// Stores a new term, dropping it if |value| <= tolerance. Duplicate keys
  /// and keys of the wrong length are errors.
  void insert(PauliString key, Complex value, double tolerance = kDefaultPruneTolerance) {
    check_key(key);
    if (terms_.contains(key)) throw std::invalid_argument("duplicate Pauli term " + key.str());
    if (keep_coefficient(value, tolerance)) terms_.emplace(std::move(key), value);
  }

  /// Returns a copy without the terms at or below the tolerance.
  Decomposition pruned(double tolerance) const {
    Decomposition out(n_);
    for (const auto& [key, value] : terms_) {
      if (keep_coefficient(value, tolerance)) out.terms_.emplace(key, value);
    }
    return out;
  }

  bool operator==(const Decomposition&) const = default;

 private:
  void check_key(const PauliString& key) const {
    if (key.size() != n_) {
      throw std::invalid_argument("term " + key.str() + " does not have " + std::to_string(n_) +
                                  " letters");
    }
  }

  unsigned n_ = 0;
  Terms terms_;
};

/// Dense sum of coefficient * P over all terms.
inline Eigen::MatrixXcd reconstruct(const Decomposition& d, unsigned max_qubits = kDenseMaxQubits) {
  const unsigned n = d.qubits();
  if (n > max_qubits) {
    throw std::length_error("refusing to reconstruct a dense " + std::to_string(n) +
                            "-qubit matrix (ceiling " + std::to_string(max_qubits) + ")");
  }
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, value] : d) {
    const auto op = compose(key);
    for (Eigen::Index row = 0; row < dim; ++row) {
      const auto [col, entry] = op.entry(static_cast<std::size_t>(row));
      out(row, static_cast<Eigen::Index>(col)) += value * entry;
    }
  }
  return out;
}

}  // namespace pauli_tree
