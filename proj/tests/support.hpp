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

// Random generators and independent oracles shared by the test suites.
// The oracles use nothing from the library except PauliString parsing.

#include "pauli_tree/pauli_tree.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pauli_tree::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

inline Eigen::MatrixXcd random_dense(unsigned n, Rng& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) a(r, c) = random_complex(rng);
  }
  return a;
}

inline Eigen::MatrixXcd random_hermitian(unsigned n, Rng& rng) {
  const Eigen::MatrixXcd a = random_dense(n, rng);
  return (a + a.adjoint()) / 2.0;
}

/// Random matrix whose nonzeros satisfy `keep(row, col)`.
template <class Keep>
Eigen::MatrixXcd random_masked(unsigned n, Rng& rng, Keep keep) {
  Eigen::MatrixXcd a = random_dense(n, rng);
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (!keep(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c))) a(r, c) = 0.0;
    }
  }
  return a;
}

inline Eigen::MatrixXcd random_band(unsigned n, std::uint64_t s, Rng& rng) {
  return random_masked(n, rng, [s](std::uint64_t r, std::uint64_t c) { return (r > c ? r - c : c - r) <= s; });
}

inline Eigen::MatrixXcd random_diagonal(unsigned n, Rng& rng) {
  return random_masked(n, rng, [](std::uint64_t r, std::uint64_t c) { return r == c; });
}

inline Eigen::MatrixXcd random_anti_diagonal(unsigned n, Rng& rng) {
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  return random_masked(n, rng, [last](std::uint64_t r, std::uint64_t c) { return r + c == last; });
}

inline PauliString random_pauli(unsigned n, Rng& rng) {
  static constexpr char kLetters[] = "IXYZ";
  std::string text(n, 'I');
  for (auto& ch : text) ch = kLetters[rng() % 4];
  return PauliString(text);
}

/// Random decomposition with up to `terms` entries (duplicates collapse).
inline Decomposition random_decomposition(unsigned n, unsigned terms, Rng& rng) {
  Decomposition d(n);
  for (unsigned t = 0; t < terms; ++t) {
    const auto key = random_pauli(n, rng);
    if (!d.terms().contains(key)) d.insert(key, random_complex(rng));
  }
  return d;
}

/// The 2x2 Pauli matrices written out by hand.
inline Eigen::Matrix2cd letter_matrix(char letter) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

/// Kronecker product of the letters, leftmost letter as the outer factor.
inline Eigen::MatrixXcd kron_oracle(const std::string& text) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (char ch : text) out = kron(out, letter_matrix(ch));
  return out;
}

/// (1/2^n) Tr(P A) with P from the Kronecker oracle.
inline Complex trace_oracle(const std::string& text, const Eigen::MatrixXcd& a) {
  return (kron_oracle(text) * a).trace() / static_cast<double>(a.rows());
}

/// Every Pauli string of length n in lexicographic order.
inline std::vector<std::string> all_strings(unsigned n) {
  std::vector<std::string> out{""};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char ch : std::string("IXYZ")) next.push_back(s + ch);
    }
    out = std::move(next);
  }
  return out;
}

/// Sum of coefficient * Kronecker oracle.
inline Eigen::MatrixXcd assemble(const Decomposition& d) {
  const Eigen::Index dim = Eigen::Index{1} << d.qubits();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, value] : d) out += value * kron_oracle(key.str());
  return out;
}

/// Largest |a_P - b_P| over the union of keys.
inline double max_coefficient_gap(const Decomposition& a, const Decomposition& b) {
  double gap = 0.0;
  for (const auto& [key, value] : a) gap = std::max(gap, std::abs(value - b.coefficient(key)));
  for (const auto& [key, value] : b) gap = std::max(gap, std::abs(value - a.coefficient(key)));
  return gap;
}

inline Decomposition make_decomposition(unsigned n, std::initializer_list<std::pair<const char*, Complex>> terms) {
  Decomposition d(n);
  for (const auto& [key, value] : terms) d.insert(PauliString(key), value, -1.0);
  return d;
}

}  // namespace pauli_tree::testing
