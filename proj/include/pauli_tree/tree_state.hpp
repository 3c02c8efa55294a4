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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pauli_tree {

/// Working arrays of one Pauli-tree walk.
///
/// Level l of the tree fixes the letter on qubit l and rewrites the segment
/// [2^l, 2^(l+1)) of the arrays from the segment [0, 2^l). Sibling updates are
/// differential against the previously applied sibling, so the usual chain
/// I -> X -> Y -> Z touches 2, 1, 1 and 1 arrays of 2^l elements.
///
/// k[0] starts at 0 rather than at the X-mask of the final path. The X-mask is
/// tracked as a scalar instead, and the true column of row j is
/// k[j] + x_mask (mod 2^32), which equals the composed operator's column.
///
/// With implicit columns (diagonal and anti-diagonal walks) k is never
/// allocated: the column of row j is j ^ x_mask, and only m is updated.
class TreeState {
 public:
  enum class Columns : std::uint8_t { Tracked, Implicit };

  explicit TreeState(unsigned n, Columns columns = Columns::Tracked)
      : n_(n), columns_mode_(columns) {
    check_qubit_count(n_);
    const std::size_t dim = std::size_t{1} << n_;
    if (columns_mode_ == Columns::Tracked) k_.assign(dim, 0);
    m_.assign(dim, 0);
    reset();
  }

  /// Fresh root state: k[0] = 0, m[0] = 1, no letters applied.
  void reset() noexcept {
    if (!k_.empty()) k_[0] = 0;
    m_[0] = 1;
    x_mask_ = 0;
    n_y_ = 0;
    op_count_ += 2;
  }

  unsigned qubits() const noexcept { return n_; }
  Columns columns_mode() const noexcept { return columns_mode_; }
  std::span<const std::uint32_t> k() const noexcept { return k_; }
  std::span<const std::int8_t> m() const noexcept { return m_; }
  std::uint32_t x_mask() const noexcept { return x_mask_; }
  unsigned n_y() const noexcept { return n_y_; }
  std::uint64_t op_count() const noexcept { return op_count_; }

  /// (-i)^(n_y mod 4).
  Phase phase() const noexcept { return Phase::i_pow(-static_cast<int>(n_y_ % 4)); }

  std::uint32_t column(std::size_t row) const noexcept {
    return columns_mode_ == Columns::Tracked ? k_[row] + x_mask_
                                             : static_cast<std::uint32_t>(row) ^ x_mask_;
  }

  /// Applies `letter` at `level`. `previous` is the sibling applied last at
  /// this level, or nullopt when the segment is derived from [0, 2^l).
  void update(PauliLetter letter, unsigned level, std::optional<PauliLetter> previous) {
    const std::size_t half = std::size_t{1} << level;
    const auto shift = static_cast<std::uint32_t>(half);
    const bool off_diagonal = diagonality(letter) == 1;
    const bool tracked = columns_mode_ == Columns::Tracked;

    if (!previous) {
      // Copy the top segment into the bottom one, shifted by +-2^l.
      const std::int8_t zeta = static_cast<std::int8_t>(sign_factor(letter));
      if (tracked) {
        for (std::size_t j = 0; j < half; ++j) k_[j + half] = off_diagonal ? k_[j] - shift : k_[j] + shift;
        op_count_ += half;
      }
      for (std::size_t j = 0; j < half; ++j) m_[j + half] = static_cast<std::int8_t>(zeta * m_[j]);
      op_count_ += half;
    } else {
      const bool was_off_diagonal = diagonality(*previous) == 1;
      if (tracked && was_off_diagonal != off_diagonal) {
        // X/Y sit 2^(l+1) to the left of I/Z in the bottom segment.
        const std::uint32_t delta = off_diagonal ? 0u - 2 * shift : 2 * shift;
        for (std::size_t j = half; j < 2 * half; ++j) k_[j] += delta;
        op_count_ += half;
      }
      if (sign_factor(letter) != sign_factor(*previous)) {
        for (std::size_t j = half; j < 2 * half; ++j) m_[j] = static_cast<std::int8_t>(-m_[j]);
        op_count_ += half;
      }
      leave(level, *previous);
    }
    if (off_diagonal) x_mask_ |= shift;
    if (letter == PauliLetter::Y) ++n_y_;
  }

  /// Undoes the scalar bookkeeping (x-mask, Y count) of the last sibling
  /// applied at `level`. Array segments need no restoration.
  void leave(unsigned level, PauliLetter last) noexcept {
    if (diagonality(last) == 1) x_mask_ &= ~(std::uint32_t{1} << level);
    if (last == PauliLetter::Y) --n_y_;
  }

  /// The operator the state currently represents, with true columns.
  SparsePauliOperator snapshot() const {
    const std::size_t dim = m_.size();
    std::vector<std::uint32_t> columns(dim);
    for (std::size_t j = 0; j < dim; ++j) columns[j] = column(j);
    return SparsePauliOperator(n_, std::move(columns), m_, n_y_);
  }

 private:
  unsigned n_;
  Columns columns_mode_;
  std::vector<std::uint32_t> k_;
  std::vector<std::int8_t> m_;
  std::uint32_t x_mask_ = 0;
  unsigned n_y_ = 0;
  std::uint64_t op_count_ = 0;
};

}  // namespace pauli_tree
