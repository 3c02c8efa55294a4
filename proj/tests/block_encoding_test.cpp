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


#include "pauli_tree/algebra.hpp"
#include "pauli_tree/block_encoding.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace pauli_tree;
using namespace pauli_tree::testing;

namespace {

const Complex kI{0.0, 1.0};

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm();
}

Eigen::MatrixXcd top_left_block(const Circuit& c) {
  const auto d = Eigen::Index{1} << c.n_data;
  return simulate(c).topLeftCorner(d, d);
}

}  // namespace

TEST(block_encoding, bare_pauli) {
  const auto c = build_lcu_circuit(make_decomposition(1, {{"X", 1.0}}));
  EXPECT_EQ(c.n_ancilla, 0u);
  EXPECT_EQ(c.lambda, 1.0);
  EXPECT_EQ(c.controlled_pauli_count(), 1u);
  EXPECT_EQ(simulate(c), kron_oracle("X"));
  EXPECT_EQ(verify_block_encoding(c, DenseMatrix(kron_oracle("X"))).residual, 0.0);
}

TEST(block_encoding, any_single_pauli_has_zero_residual) {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_pauli(1 + trial % 4, rng);
    const double sign = trial % 2 ? -1.0 : 1.0;
    const auto c = build_lcu_circuit(make_decomposition(p.size(), {{p.str().c_str(), sign}}));
    EXPECT_EQ(verify_block_encoding(c, DenseMatrix(sign * kron_oracle(p.str()))).residual, 0.0) << p.str();
  }
}

TEST(block_encoding, two_terms) {
  const auto c = build_lcu_circuit(make_decomposition(1, {{"X", 0.5}, {"Z", 0.5}}));
  EXPECT_EQ(c.n_ancilla, 1u);
  EXPECT_EQ(c.lambda, 1.0);
  const auto& prep = c.prep().matrix;
  EXPECT_NEAR(prep(0, 0).real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(prep(1, 0).real(), std::sqrt(0.5), 1e-15);
  const Eigen::MatrixXcd expected = (kron_oracle("X") + kron_oracle("Z")) / 2.0;
  EXPECT_LE((top_left_block(c) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(block_encoding, cnot) {
  const auto c = build_lcu_circuit(make_decomposition(2, {{"II", 0.5}, {"IX", 0.5}, {"ZI", 0.5}, {"ZX", -0.5}}));
  EXPECT_EQ(c.n_ancilla, 2u);
  EXPECT_EQ(c.lambda, 2.0);
  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  EXPECT_LE((top_left_block(c) - cnot / 2.0).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(block_encoding, random_hermitian_pipeline) {
  Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned n = 1 + trial % 3;
    const DenseMatrix a(random_hermitian(n, rng));
    const auto report = verify_block_encoding(build_lcu_circuit(decompose(a)), a);
    EXPECT_LE(report.residual, 1e-10);
    EXPECT_LE(report.unitarity_defect, 1e-12);
  }
}

TEST(block_encoding, non_hermitian_through_augmentation) {
  Rng rng(69);
  for (unsigned n = 1; n <= 2; ++n) {
    const Eigen::MatrixXcd a = random_dense(n, rng);
    const auto augmented = hermitian_augment(decompose(DenseMatrix(a)));
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(2 * a.rows(), 2 * a.cols());
    target.topRightCorner(a.rows(), a.cols()) = a.adjoint();
    target.bottomLeftCorner(a.rows(), a.cols()) = a;
    const auto report = verify_block_encoding(build_lcu_circuit(augmented), DenseMatrix(target));
    EXPECT_EQ(report.n_ancilla, static_cast<unsigned>(std::bit_width(augmented.size() - 1)));
    EXPECT_LE(report.residual, 1e-10);
    EXPECT_LE(report.unitarity_defect, 1e-12);
  }
}

TEST(block_encoding, unused_ancilla_branches_carry_no_gate) {
  const auto d = make_decomposition(1, {{"I", 0.25}, {"X", -0.5}, {"Z", 1.0}});
  const auto c = build_lcu_circuit(d);
  EXPECT_EQ(c.n_ancilla, 2u);
  EXPECT_EQ(c.controlled_pauli_count(), 3u);
  EXPECT_EQ(c.prep().matrix(3, 0), Complex{});
  EXPECT_LE(verify_block_encoding(c, DenseMatrix(reconstruct(d))).residual, 1e-10);
}

TEST(block_encoding, rejects_unusable_decompositions) {
  EXPECT_THROW(build_lcu_circuit(Decomposition(2)), std::invalid_argument);
  EXPECT_THROW(build_lcu_circuit(make_decomposition(1, {{"X", kI}})), std::invalid_argument);
  EXPECT_THROW(build_lcu_circuit(make_decomposition(1, {{"X", 1.0}, {"Y", 1e-9 * kI}})), std::invalid_argument);
}

TEST(prep_unitary, examples) {
  const std::vector<double> e0{1.0, 0.0};
  EXPECT_EQ(prep_unitary(e0), Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));

  const std::vector<double> even{std::sqrt(0.5), std::sqrt(0.5)};
  const auto h = prep_unitary(even);
  EXPECT_EQ(h(0, 0), Complex(std::sqrt(0.5)));
  EXPECT_EQ(h(1, 0), Complex(std::sqrt(0.5)));
  EXPECT_LE(unitarity_defect(h), 1e-15);

  Rng rng(71);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> v(8);
    double norm2 = 0.0;
    for (auto& x : v) norm2 += (x = u(rng)) * x;
    const auto p = prep_unitary(v);
    EXPECT_LE(unitarity_defect(p), 1e-12);
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(p(i, 0).real(), v[i] / std::sqrt(norm2), 1e-15);
  }

  EXPECT_THROW(prep_unitary(std::vector<double>{1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(prep_unitary(std::vector<double>{1.0, -1.0}), std::invalid_argument);
  EXPECT_THROW(prep_unitary(std::vector<double>{0.0, 0.0}), std::invalid_argument);
}

TEST(simulate, examples) {
  Circuit empty{2, 1, 1.0, {}};
  EXPECT_EQ(simulate(empty), Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(8, 8)));

  Circuit controlled{1, 1, 1.0, {ControlledPauliGate{1, PauliString("X"), 1}}};
  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  EXPECT_EQ(simulate(controlled), cnot);

  const std::vector<double> amplitudes{0.3, 0.5, 0.1, 0.8};
  Circuit round_trip{1, 2, 1.0, {PrepGate{prep_unitary(amplitudes)}, UnprepGate{}}};
  EXPECT_LE((simulate(round_trip) - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(simulate, rejects_malformed_circuits) {
  Circuit duplicate{1, 1, 1.0, {ControlledPauliGate{1, PauliString("X"), 1}, ControlledPauliGate{1, PauliString("Z"), 1}}};
  EXPECT_THROW(simulate(duplicate), std::invalid_argument);
  Circuit wide{1, 1, 1.0, {ControlledPauliGate{2, PauliString("X"), 1}}};
  EXPECT_THROW(simulate(wide), std::invalid_argument);
  Circuit unprep_first{1, 1, 1.0, {UnprepGate{}}};
  EXPECT_THROW(simulate(unprep_first), std::invalid_argument);
  Circuit large{12, 2, 1.0, {}};
  EXPECT_THROW(simulate(large), std::length_error);
}

TEST(block_encoding, pattern_bits_put_ancilla_zero_first) {
  EXPECT_EQ(pattern_bits(1, 2), "01");
  EXPECT_EQ(pattern_bits(2, 2), "10");
  EXPECT_EQ(pattern_bits(0, 0), "");
}

TEST(spectral_norm, values) {
  EXPECT_EQ(spectral_norm(Eigen::MatrixXcd::Zero(4, 4)), 0.0);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = -5.0;
  EXPECT_NEAR(spectral_norm(d), 5.0, 1e-14);
}
