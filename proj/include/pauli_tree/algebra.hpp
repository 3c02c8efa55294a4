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

// Decompositions of combined matrices built from existing decompositions.
// Missing keys read as zero; outputs never store terms at or below the
// prune tolerance.

#include "pauli_tree/decomposition.hpp"
#include "pauli_tree/pauli.hpp"

#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pauli_tree {

namespace detail {

inline void require_same_size(const Decomposition& a, const Decomposition& b, const char* op) {
  if (a.qubits() != b.qubits()) {
    throw std::invalid_argument(std::string(op) + ": qubit counts differ (" + std::to_string(a.qubits()) +
                                " vs " + std::to_string(b.qubits()) + ")");
  }
}

inline std::set<PauliString> key_union(const Decomposition& a, const Decomposition& b) {
  std::set<PauliString> keys;
  for (const auto& term : a) keys.insert(term.first);
  for (const auto& term : b) keys.insert(term.first);
  return keys;
}

}  // namespace detail

/// A (+) B = I (x) (A + B)/2 + Z (x) (A - B)/2.
inline Decomposition direct_sum(const Decomposition& a, const Decomposition& b,
                                double tolerance = kDefaultPruneTolerance) {
  detail::require_same_size(a, b, "direct_sum");
  Decomposition out(a.qubits() + 1);
  const auto keys = detail::key_union(a, b);
  for (const auto& key : keys) {
    out.insert(key.prepend(PauliLetter::I), (a.coefficient(key) + b.coefficient(key)) / 2.0, tolerance);
  }
  for (const auto& key : keys) {
    out.insert(key.prepend(PauliLetter::Z), (a.coefficient(key) - b.coefficient(key)) / 2.0, tolerance);
  }
  return out;
}

/// diag(A_1, ..., A_N), padded with zero blocks to a power-of-two count and
/// assembled by pairwise direct sums.
inline Decomposition block_diagonal(std::vector<Decomposition> blocks,
                                    double tolerance = kDefaultPruneTolerance) {
  if (blocks.empty()) throw std::invalid_argument("block_diagonal needs at least one block");
  const unsigned n = blocks.front().qubits();
  for (const auto& block : blocks) {
    if (block.qubits() != n) throw std::invalid_argument("block_diagonal: blocks differ in qubit count");
  }
  blocks.resize(std::bit_ceil(blocks.size()), Decomposition(n));
  while (blocks.size() > 1) {
    std::vector<Decomposition> next;
    next.reserve(blocks.size() / 2);
    for (std::size_t i = 0; i < blocks.size(); i += 2) next.push_back(direct_sum(blocks[i], blocks[i + 1], tolerance));
    blocks = std::move(next);
  }
  return std::move(blocks.front());
}

/// mu A + B.
inline Decomposition linear_combination(Complex mu, const Decomposition& a, const Decomposition& b,
                                        double tolerance = kDefaultPruneTolerance) {
  detail::require_same_size(a, b, "linear_combination");
  Decomposition out(a.qubits());
  for (const auto& key : detail::key_union(a, b)) {
    out.insert(key, mu * a.coefficient(key) + b.coefficient(key), tolerance);
  }
  return out;
}

/// A B from the letterwise product table; |A| |B| term pairs.
inline Decomposition product(const Decomposition& a, const Decomposition& b,
                             double tolerance = kDefaultPruneTolerance) {
  detail::require_same_size(a, b, "product");
  std::map<PauliString, Complex> accumulated;
  for (const auto& [p, alpha] : a) {
    for (const auto& [q, beta] : b) {
      const auto r = string_product(p, q);
      accumulated[r.string] += r.phase.rotate(alpha * beta);
    }
  }
  Decomposition out(a.qubits());
  for (auto& [key, value] : accumulated) out.insert(key, value, tolerance);
  return out;
}

/// [[0, A*], [A, 0]] = X (x) Re(A) + Y (x) Im(A), where Re and Im act on the
/// coefficients. All output coefficients are exactly real.
inline Decomposition hermitian_augment(const Decomposition& a, double tolerance = kDefaultPruneTolerance) {
  Decomposition out(a.qubits() + 1);
  for (const auto& [key, value] : a) out.insert(key.prepend(PauliLetter::X), value.real(), tolerance);
  for (const auto& [key, value] : a) out.insert(key.prepend(PauliLetter::Y), value.imag(), tolerance);
  return out;
}

/// d(A (x) B): coefficients multiply, strings concatenate.
inline Decomposition tensor_product(const Decomposition& a, const Decomposition& b,
                                    double tolerance = kDefaultPruneTolerance) {
  Decomposition out(a.qubits() + b.qubits());
  for (const auto& [p, alpha] : a) {
    for (const auto& [q, beta] : b) out.insert(PauliString(p.str() + q.str()), alpha * beta, tolerance);
  }
  return out;
}

}  // namespace pauli_tree
