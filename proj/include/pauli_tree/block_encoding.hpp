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

#include "pauli_tree/decomposition.hpp"
#include "pauli_tree/matrix_source.hpp"
#include "pauli_tree/pauli.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace pauli_tree {

/// Coefficients with |imag| above this are treated as genuinely complex.
inline constexpr double kRealCoefficientTolerance = 1e-12;

/// Ancilla state preparation: the first column is the amplitude vector.
struct PrepGate {
  Eigen::MatrixXcd matrix;
};

/// Applies sign * pauli to the data register when the ancilla register holds
/// `pattern` (ancilla qubit 0 is the most significant bit, the top wire).
struct ControlledPauliGate {
  std::uint64_t pattern = 0;
  PauliString pauli;
  int sign = 1;
};

/// Conjugate transpose of the circuit's PrepGate.
struct UnprepGate {};

using Gate = std::variant<PrepGate, ControlledPauliGate, UnprepGate>;

struct Circuit {
  unsigned n_data = 0;
  unsigned n_ancilla = 0;
  double lambda = 0.0;  // subnormalization: sum of |coefficient|
  std::vector<Gate> gates;

  const PrepGate& prep() const {
    for (const auto& gate : gates) {
      if (const auto* p = std::get_if<PrepGate>(&gate)) return *p;
    }
    throw std::invalid_argument("circuit has no prep gate");
  }

  std::size_t controlled_pauli_count() const {
    std::size_t count = 0;
    for (const auto& gate : gates) count += std::holds_alternative<ControlledPauliGate>(gate);
    return count;
  }
};

/// Renders a control pattern as n_ancilla bits, top wire first.
inline std::string pattern_bits(std::uint64_t pattern, unsigned n_ancilla) {
  std::string bits(n_ancilla, '0');
  for (unsigned q = 0; q < n_ancilla; ++q) {
    if ((pattern >> (n_ancilla - 1 - q)) & 1u) bits[q] = '1';
  }
  return bits;
}

/// Householder reflection I - 2 u u^T / (u^T u), u = e0 - v, which maps e0 to
/// the normalized amplitude vector v.
inline Eigen::MatrixXcd prep_unitary(std::span<const double> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw std::invalid_argument("amplitude count must be a power of two");
  }
  double norm2 = 0.0;
  for (double a : amplitudes) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("amplitudes must be finite and non-negative");
    norm2 += a * a;
  }
  if (norm2 == 0.0) throw std::invalid_argument("amplitudes are all zero");
  const auto dim = static_cast<Eigen::Index>(amplitudes.size());
  Eigen::VectorXd v(dim);
  const double norm = std::sqrt(norm2);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = amplitudes[static_cast<std::size_t>(i)] / norm;

  Eigen::VectorXd u = -v;
  u(0) += 1.0;
  const double uu = u.squaredNorm();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(dim, dim);
  if (uu > 0.0) h -= (2.0 / uu) * u * u.transpose();
  // Pin the first column to v exactly; the reflection reproduces it only to rounding.
  h.col(0) = v;
  h.row(0) = v.transpose();
  return h.cast<Complex>();
}

/// LCU circuit: Prep on ceil(log2 T) ancillas, one controlled Pauli per term
/// (canonical key order gives the control patterns), then Unprep.
inline Circuit build_lcu_circuit(const Decomposition& dec) {
  if (dec.empty()) throw std::invalid_argument("cannot block-encode an empty decomposition");
  std::vector<double> magnitudes;
  magnitudes.reserve(dec.size());
  for (const auto& [key, value] : dec) {
    if (std::abs(value.imag()) > kRealCoefficientTolerance || value.real() == 0.0) {
      throw std::invalid_argument("coefficient of " + key.str() +
                                  " is not real; apply hermitian_augment before block-encoding");
    }
    magnitudes.push_back(std::abs(value.real()));
  }
  Circuit circuit;
  circuit.n_data = dec.qubits();
  circuit.n_ancilla = static_cast<unsigned>(std::bit_width(dec.size() - 1));
  for (double a : magnitudes) circuit.lambda += a;

  std::vector<double> amplitudes(std::size_t{1} << circuit.n_ancilla, 0.0);
  for (std::size_t i = 0; i < magnitudes.size(); ++i) amplitudes[i] = std::sqrt(magnitudes[i]);
  circuit.gates.emplace_back(PrepGate{prep_unitary(amplitudes)});
  std::uint64_t pattern = 0;
  for (const auto& [key, value] : dec) {
    circuit.gates.emplace_back(ControlledPauliGate{pattern++, key, value.real() > 0 ? 1 : -1});
  }
  circuit.gates.emplace_back(UnprepGate{});
  return circuit;
}

namespace detail {

inline void check_circuit(const Circuit& circuit, unsigned max_qubits) {
  const unsigned total = circuit.n_data + circuit.n_ancilla;
  if (total > max_qubits) {
    throw std::length_error("refusing to simulate " + std::to_string(total) + " qubits (ceiling " +
                            std::to_string(max_qubits) + ")");
  }
  const auto ancilla_dim = Eigen::Index{1} << circuit.n_ancilla;
  std::vector<bool> used(static_cast<std::size_t>(ancilla_dim), false);
  for (const auto& gate : circuit.gates) {
    if (const auto* p = std::get_if<PrepGate>(&gate)) {
      if (p->matrix.rows() != ancilla_dim || p->matrix.cols() != ancilla_dim) {
        throw std::invalid_argument("prep matrix does not match the ancilla register");
      }
    } else if (const auto* c = std::get_if<ControlledPauliGate>(&gate)) {
      if (c->pauli.size() != circuit.n_data) throw std::invalid_argument("controlled Pauli has the wrong width");
      if (c->pattern >= static_cast<std::uint64_t>(ancilla_dim)) {
        throw std::invalid_argument("control pattern outside the ancilla register");
      }
      if (used[c->pattern]) throw std::invalid_argument("control patterns must be distinct");
      used[c->pattern] = true;
      if (c->sign != 1 && c->sign != -1) throw std::invalid_argument("controlled Pauli sign must be +1 or -1");
    }
  }
}

/// Left-multiplies the ancilla block of every column by `g`.
inline void apply_ancilla(Eigen::MatrixXcd& u, const Eigen::MatrixXcd& g, unsigned n_data) {
  const auto data_dim = Eigen::Index{1} << n_data;
  const auto ancilla_dim = g.rows();
  Eigen::VectorXcd slice(ancilla_dim);
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (Eigen::Index d = 0; d < data_dim; ++d) {
      for (Eigen::Index a = 0; a < ancilla_dim; ++a) slice(a) = u(a * data_dim + d, col);
      const Eigen::VectorXcd mixed = g * slice;
      for (Eigen::Index a = 0; a < ancilla_dim; ++a) u(a * data_dim + d, col) = mixed(a);
    }
  }
}

}  // namespace detail

/// Dense unitary of the circuit, ancilla register as the more significant
/// factor (index = ancilla * 2^n_data + data).
inline Eigen::MatrixXcd simulate(const Circuit& circuit, unsigned max_qubits = kDenseMaxQubits) {
  detail::check_circuit(circuit, max_qubits);
  const auto data_dim = Eigen::Index{1} << circuit.n_data;
  const auto dim = data_dim << circuit.n_ancilla;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd* prep = nullptr;
  for (const auto& gate : circuit.gates) {
    if (const auto* p = std::get_if<PrepGate>(&gate)) {
      prep = &p->matrix;
      detail::apply_ancilla(u, p->matrix, circuit.n_data);
    } else if (const auto* c = std::get_if<ControlledPauliGate>(&gate)) {
      const auto op = compose(c->pauli);
      const auto offset = static_cast<Eigen::Index>(c->pattern) * data_dim;
      Eigen::MatrixXcd block = u.middleRows(offset, data_dim);
      for (Eigen::Index r = 0; r < data_dim; ++r) {
        const auto [src_row, value] = op.entry(static_cast<std::size_t>(r));
        const Complex factor = c->sign > 0 ? value : -value;
        u.row(offset + r) = factor * block.row(static_cast<Eigen::Index>(src_row));
      }
    } else {
      if (!prep) throw std::invalid_argument("unprep gate before any prep gate");
      detail::apply_ancilla(u, prep->adjoint(), circuit.n_data);
    }
  }
  return u;
}

/// Largest singular value; exactly 0 for an exactly zero matrix.
inline double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

struct BlockEncodingReport {
  double lambda = 0.0;
  double residual = 0.0;           // || A - lambda * block ||_2
  double unitarity_defect = 0.0;   // || U* U - I ||_F
  unsigned n_ancilla = 0;
  std::size_t controlled_paulis = 0;
  std::size_t total_gates = 0;
};

template <MatrixSource S>
BlockEncodingReport verify_block_encoding(const Circuit& circuit, const S& src,
                                          unsigned max_qubits = kDenseMaxQubits) {
  if (src.qubits() != circuit.n_data) {
    throw std::invalid_argument("matrix has " + std::to_string(src.qubits()) + " qubits, circuit encodes " +
                                std::to_string(circuit.n_data));
  }
  const Eigen::MatrixXcd u = simulate(circuit, max_qubits);
  const auto data_dim = Eigen::Index{1} << circuit.n_data;
  const Eigen::MatrixXcd a = to_dense(src, max_qubits);
  const Eigen::MatrixXcd block = u.topLeftCorner(data_dim, data_dim);

  BlockEncodingReport report;
  report.lambda = circuit.lambda;
  report.residual = spectral_norm(a - circuit.lambda * block);
  report.unitarity_defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm();
  report.n_ancilla = circuit.n_ancilla;
  report.controlled_paulis = circuit.controlled_pauli_count();
  report.total_gates = circuit.gates.size();
  return report;
}

}  // namespace pauli_tree
