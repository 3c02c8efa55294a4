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
#include "pauli_tree/structure.hpp"
#include "pauli_tree/tree_state.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pauli_tree {

/// Largest qubit count accepted by the brute-force trace oracle.
inline constexpr unsigned kNaiveMaxQubits = 10;

/// (1/2^n) (-i)^(n_y mod 4) sum_j m[j] A(column(j), j), summed in ascending
/// j. The phase and the power-of-two scale are applied exactly.
template <MatrixSource S>
Complex compute_coefficient(const TreeState& state, const S& src) {
  const std::size_t dim = std::size_t{1} << state.qubits();
  const auto m = state.m();
  double re = 0.0;
  double im = 0.0;
  if (state.columns_mode() == TreeState::Columns::Tracked) {
    const auto k = state.k();
    const std::uint32_t x = state.x_mask();
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex a = src.entry(static_cast<std::uint32_t>(k[j] + x), j);
      if (m[j] > 0) {
        re += a.real();
        im += a.imag();
      } else {
        re -= a.real();
        im -= a.imag();
      }
    }
  } else {
    const std::uint64_t x = state.x_mask();
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex a = src.entry(j ^ x, j);
      if (m[j] > 0) {
        re += a.real();
        im += a.imag();
      } else {
        re -= a.real();
        im -= a.imag();
      }
    }
  }
  const Complex rotated = state.phase().rotate({re, im});
  const int scale = -static_cast<int>(state.qubits());
  return {std::ldexp(rotated.real(), scale), std::ldexp(rotated.imag(), scale)};
}

/// Counters of one walk.
struct WalkStats {
  std::uint64_t op_count = 0;
  std::uint64_t leaves = 0;
};

inline TreeState::Columns columns_for(const StructureClass& structure) {
  switch (structure.kind()) {
    case StructureClass::Kind::Diagonal:
    case StructureClass::Kind::AntiDiagonal: return TreeState::Columns::Implicit;
    default: return TreeState::Columns::Tracked;
  }
}

/// Depth-first walk of the (pruned) Pauli tree. The root's children fix
/// qubit 0, i.e. the last character of the text form. Children are visited
/// in the order I, X, Y, Z; children whose prefix cannot complete to an
/// allowed string are skipped.
///
/// The visitor is called at every leaf as
///   visitor(std::string_view path, const TreeState& state, Complex coeff)
/// with `path` in text order.
template <MatrixSource S>
class TreeWalker {
 public:
  TreeWalker(const S& src, StructureClass structure)
      : src_(src),
        structure_(structure),
        n_(validated_qubits(src.qubits(), structure)),
        state_(n_, columns_for(structure)),
        path_(n_, 'I') {}

  const TreeState& state() const noexcept { return state_; }
  std::uint64_t leaves() const noexcept { return leaves_; }

  /// Resets the arrays and applies the root-order prefix; returns false if
  /// the prefix is outside the allowed support.
  bool seed(std::span<const PauliLetter> prefix) {
    if (prefix.size() > n_) throw std::invalid_argument("seed prefix longer than the tree depth");
    state_.reset();
    std::uint64_t x = 0;
    for (unsigned level = 0; level < prefix.size(); ++level) {
      const auto letter = prefix[level];
      x |= std::uint64_t{diagonality(letter)} << level;
      if (!structure_.prefix_feasible(n_, level + 1, x)) return false;
      state_.update(letter, level, std::nullopt);
      path_[n_ - 1 - level] = to_char(letter);
    }
    return true;
  }

  /// Explores every leaf below the current state, whose first `level` letters
  /// are already applied.
  template <class Visitor>
  void explore(unsigned level, Visitor& visitor) {
    if (level == n_) {
      ++leaves_;
      visitor(std::string_view(path_), state_, compute_coefficient(state_, src_));
      return;
    }
    const std::uint64_t x = state_.x_mask();
    const bool diagonal_ok = structure_.prefix_feasible(n_, level + 1, x);
    const bool off_diagonal_ok = structure_.prefix_feasible(n_, level + 1, x | (std::uint64_t{1} << level));
    std::optional<PauliLetter> previous;
    for (const auto letter : kAllLetters) {
      if (!(diagonality(letter) == 1 ? off_diagonal_ok : diagonal_ok)) continue;
      state_.update(letter, level, previous);
      path_[n_ - 1 - level] = to_char(letter);
      explore(level + 1, visitor);
      previous = letter;
    }
    if (previous) state_.leave(level, *previous);
  }

 private:
  static unsigned validated_qubits(unsigned n, const StructureClass& structure) {
    check_qubit_count(n);
    structure.check_compatible(n);
    return n;
  }

  const S& src_;
  StructureClass structure_;
  unsigned n_;
  TreeState state_;
  std::string path_;
  std::uint64_t leaves_ = 0;
};

/// Walks the whole (pruned) tree, calling the visitor at every leaf.
template <MatrixSource S, class Visitor>
WalkStats walk_tree(const S& src, StructureClass structure, Visitor&& visitor) {
  TreeWalker<S> walker(src, structure);
  walker.explore(0, visitor);
  return {walker.state().op_count(), walker.leaves()};
}

template <MatrixSource S>
Decomposition decompose_structured(const S& src, StructureClass structure,
                                   double prune_tolerance = kDefaultPruneTolerance,
                                   WalkStats* stats = nullptr) {
  Decomposition out(src.qubits());
  auto collect = [&](std::string_view path, const TreeState&, Complex coeff) {
    if (keep_coefficient(coeff, prune_tolerance)) out.insert(PauliString(path), coeff, prune_tolerance);
  };
  const auto walk = walk_tree(src, structure, collect);
  if (stats) *stats = walk;
  return out;
}

/// Full tree walk over all 4^n strings.
template <MatrixSource S>
Decomposition decompose_general(const S& src, double prune_tolerance = kDefaultPruneTolerance,
                                WalkStats* stats = nullptr) {
  return decompose_structured(src, StructureClass::general(), prune_tolerance, stats);
}

/// Decomposes using the source's own structure hint.
template <MatrixSource S>
Decomposition decompose(const S& src, double prune_tolerance = kDefaultPruneTolerance) {
  return decompose_structured(src, src.structure(), prune_tolerance);
}

/// Coefficient-by-coefficient baseline: composes every string independently
/// and evaluates its row-sparse trace against A. Used as the test oracle.
template <MatrixSource S>
Decomposition decompose_naive(const S& src, double prune_tolerance = kDefaultPruneTolerance) {
  const unsigned n = src.qubits();
  check_qubit_count(n, kNaiveMaxQubits);
  const std::size_t dim = std::size_t{1} << n;
  Decomposition out(n);
  std::vector<PauliLetter> letters(n);
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t index = 0; index < count; ++index) {
    // Text position 0 is the most significant base-4 digit: lexicographic order.
    for (unsigned pos = 0; pos < n; ++pos) {
      letters[pos] = static_cast<PauliLetter>((index >> (2 * (n - 1 - pos))) & 3u);
    }
    const PauliString key(letters);
    const auto op = compose(key);
    Complex trace{};
    for (std::size_t j = 0; j < dim; ++j) {
      const auto [col, value] = op.entry(j);
      trace += value * src.entry(col, j);
    }
    out.insert(key, trace / static_cast<double>(dim), prune_tolerance);
  }
  return out;
}

/// Exact elementary-operation count of a walk, obtained by summing the
/// sibling-group costs over the pruned tree. Every node of a given X-mask
/// at level l has the same children, and 2^l nodes share each mask.
inline std::uint64_t pruned_tree_op_count(unsigned n, StructureClass structure) {
  check_qubit_count(n, 24);
  structure.check_compatible(n);
  const bool tracked = columns_for(structure) == TreeState::Columns::Tracked;
  std::uint64_t total = 2;
  for (unsigned level = 0; level < n; ++level) {
    const std::uint64_t half = std::uint64_t{1} << level;
    for (std::uint64_t x = 0; x < half; ++x) {
      if (!structure.prefix_feasible(n, level, x)) continue;
      const bool lo = structure.prefix_feasible(n, level + 1, x);
      const bool hi = structure.prefix_feasible(n, level + 1, x | half);
      std::uint64_t group = 0;
      if (lo && hi) {
        group = tracked ? 5 * half : 2 * half;
      } else if (lo || hi) {
        group = tracked ? 3 * half : 2 * half;
      }
      total += half * group;
    }
  }
  return total;
}

/// Predicted op_count of a walk. General: 2 + 5 (8^n - 1) / 7. Diagonal and
/// anti-diagonal: 2 + 2 (4^n - 1) / 3. Tridiagonal: 2 + sum_l (5 + 3 l) 4^l.
/// Band(s): the exact pruned-tree sum.
inline std::uint64_t predicted_op_count(unsigned n, StructureClass structure) {
  check_qubit_count(n);
  switch (structure.kind()) {
    case StructureClass::Kind::General:
      if (n > 20) throw std::overflow_error("op count does not fit in 64 bits");
      return 2 + 5 * ((std::uint64_t{1} << (3 * n)) - 1) / 7;
    case StructureClass::Kind::Diagonal:
    case StructureClass::Kind::AntiDiagonal:
      return 2 + 2 * ((std::uint64_t{1} << (2 * n)) - 1) / 3;
    case StructureClass::Kind::Band:
      break;
  }
  if (structure.is_tridiagonal()) {
    std::uint64_t total = 2;
    for (unsigned level = 0; level < n; ++level) total += (5 + 3 * std::uint64_t{level}) << (2 * level);
    return total;
  }
  return pruned_tree_op_count(n, structure);
}

}  // namespace pauli_tree
