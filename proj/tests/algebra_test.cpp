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

#include "support.hpp"

#include <gtest/gtest.h>

using namespace pauli_tree;
using namespace pauli_tree::testing;

namespace {

const Complex kI{0.0, 1.0};

Decomposition decompose_dense(const Eigen::MatrixXcd& a) { return decompose_general(DenseMatrix(a)); }

Eigen::MatrixXcd block_diag(const std::vector<Eigen::MatrixXcd>& blocks, std::size_t count) {
  const auto d = blocks.front().rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * static_cast<Eigen::Index>(count), d * static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < blocks.size(); ++i) out.block(d * i, d * i, d, d) = blocks[i];
  return out;
}

}  // namespace

TEST(direct_sum, examples) {
  EXPECT_EQ(direct_sum(make_decomposition(1, {{"I", 1.0}}), make_decomposition(1, {{"Z", 1.0}})),
            make_decomposition(2, {{"II", 0.5}, {"IZ", 0.5}, {"ZI", 0.5}, {"ZZ", -0.5}}));
  EXPECT_EQ(direct_sum(make_decomposition(1, {{"X", 1.0}}), Decomposition(1)),
            make_decomposition(2, {{"IX", 0.5}, {"ZX", 0.5}}));
  const auto a = make_decomposition(2, {{"XY", 0.25}, {"ZI", -2.0}});
  EXPECT_EQ(direct_sum(a, a), make_decomposition(3, {{"IXY", 0.25}, {"IZI", -2.0}}));
  EXPECT_THROW(direct_sum(Decomposition(1), Decomposition(2)), std::invalid_argument);
}

TEST(block_diagonal, examples) {
  const auto a = make_decomposition(2, {{"XY", 0.25}, {"ZI", -2.0}});
  EXPECT_EQ(block_diagonal({a}), a);
  const auto id = make_decomposition(1, {{"I", 1.0}});
  EXPECT_EQ(block_diagonal({id, id, id, id}), make_decomposition(3, {{"III", 1.0}}));
  Eigen::MatrixXcd zx = Eigen::MatrixXcd::Zero(4, 4);
  zx.topLeftCorner(2, 2) = kron_oracle("Z");
  zx.bottomRightCorner(2, 2) = kron_oracle("X");
  EXPECT_EQ(block_diagonal({make_decomposition(1, {{"Z", 1.0}}), make_decomposition(1, {{"X", 1.0}})}),
            decompose_dense(zx));
  EXPECT_THROW(block_diagonal({}), std::invalid_argument);
}

TEST(linear_combination, examples) {
  EXPECT_TRUE(linear_combination(1.0, make_decomposition(1, {{"X", 1.0}}), make_decomposition(1, {{"X", -1.0}}))
                  .empty());
  EXPECT_EQ(linear_combination(2.0, make_decomposition(1, {{"I", 1.0}}), make_decomposition(1, {{"Z", 3.0}})),
            make_decomposition(1, {{"I", 2.0}, {"Z", 3.0}}));
}

TEST(product, examples) {
  EXPECT_EQ(product(make_decomposition(1, {{"X", 1.0}}), make_decomposition(1, {{"Y", 1.0}})),
            make_decomposition(1, {{"Z", kI}}));
  const auto b = make_decomposition(2, {{"XY", 0.25 + kI}, {"ZI", -2.0}});
  EXPECT_EQ(product(make_decomposition(2, {{"II", 1.0}}), b), b);
}

TEST(hermitian_augment, examples) {
  EXPECT_EQ(hermitian_augment(make_decomposition(1, {{"X", kI}})), make_decomposition(2, {{"YX", 1.0}}));
  EXPECT_EQ(hermitian_augment(make_decomposition(1, {{"Z", 1.0}})), make_decomposition(2, {{"XZ", 1.0}}));
  EXPECT_EQ(hermitian_augment(make_decomposition(1, {{"I", 1.0 + 2.0 * kI}})),
            make_decomposition(2, {{"XI", 1.0}, {"YI", 2.0}}));
}

TEST(algebra, matches_decomposition_of_assembled_matrix) {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 1 + trial % 3;
    const Eigen::MatrixXcd a = random_dense(n, rng);
    const Eigen::MatrixXcd b = random_dense(n, rng);
    const auto da = decompose_dense(a);
    const auto db = decompose_dense(b);
    const Complex mu = random_complex(rng);

    EXPECT_LE(max_coefficient_gap(direct_sum(da, db), decompose_dense(block_diag({a, b}, 2))), 1e-12);
    EXPECT_LE(max_coefficient_gap(linear_combination(mu, da, db), decompose_dense(mu * a + b)), 1e-12);
    EXPECT_LE(max_coefficient_gap(product(da, db), decompose_dense(a * b)), 1e-12);

    Eigen::MatrixXcd augmented = Eigen::MatrixXcd::Zero(2 * a.rows(), 2 * a.cols());
    augmented.topRightCorner(a.rows(), a.cols()) = a.adjoint();
    augmented.bottomLeftCorner(a.rows(), a.cols()) = a;
    const auto aug = hermitian_augment(da);
    EXPECT_LE(max_coefficient_gap(aug, decompose_dense(augmented)), 1e-12);
    EXPECT_LE(aug.size(), 2 * da.size());
    for (const auto& [key, value] : aug) EXPECT_EQ(value.imag(), 0.0) << key.str();

    const std::size_t count = 1 + rng() % 5;
    std::vector<Eigen::MatrixXcd> blocks;
    std::vector<Decomposition> decs;
    for (std::size_t i = 0; i < count; ++i) {
      blocks.push_back(random_dense(n, rng));
      decs.push_back(decompose_dense(blocks.back()));
    }
    EXPECT_LE(max_coefficient_gap(block_diagonal(decs), decompose_dense(block_diag(blocks, std::bit_ceil(count)))),
              1e-12);
  }
}

TEST(tensor_product, matches_kronecker) {
  Rng rng(59);
  const auto a = random_decomposition(2, 5, rng);
  const auto b = random_decomposition(1, 3, rng);
  EXPECT_LE((assemble(tensor_product(a, b)) - kron(assemble(a), assemble(b))).cwiseAbs().maxCoeff(), 1e-14);
}
