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

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pauli_tree {

/// Sparsity class of a matrix. Every Pauli string is characterized by its
/// X-mask x (bit l set iff qubit l carries X or Y): its nonzeros sit exactly
/// on the entries (j ^ x, j). The classes below are therefore sets of
/// admissible masks.
class StructureClass {
 public:
  enum class Kind : std::uint8_t { General, Diagonal, AntiDiagonal, Band };

  constexpr StructureClass() = default;

  static constexpr StructureClass general() noexcept { return {Kind::General, 0}; }
  static constexpr StructureClass diagonal() noexcept { return {Kind::Diagonal, 0}; }
  static constexpr StructureClass anti_diagonal() noexcept { return {Kind::AntiDiagonal, 0}; }
  static constexpr StructureClass tridiagonal() noexcept { return {Kind::Band, 1}; }
  static StructureClass band(std::uint64_t half_width) {
    if (half_width == 0) throw std::invalid_argument("band half-width must be at least 1");
    return {Kind::Band, half_width};
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint64_t half_width() const noexcept { return half_width_; }
  constexpr bool is_tridiagonal() const noexcept { return kind_ == Kind::Band && half_width_ == 1; }

  constexpr bool operator==(const StructureClass&) const = default;

  std::string str() const {
    switch (kind_) {
      case Kind::General: return "general";
      case Kind::Diagonal: return "diagonal";
      case Kind::AntiDiagonal: return "antidiagonal";
      case Kind::Band: break;
    }
    return half_width_ == 1 ? "tridiagonal" : "band=" + std::to_string(half_width_);
  }

  static StructureClass parse(std::string_view text) {
    if (text == "general") return general();
    if (text == "diagonal") return diagonal();
    if (text == "antidiagonal" || text == "anti-diagonal") return anti_diagonal();
    if (text == "tridiagonal") return tridiagonal();
    if (text.starts_with("band=")) {
      const auto digits = text.substr(5);
      std::uint64_t s = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
      if (ec == std::errc() && ptr == digits.data() + digits.size() && s > 0) return band(s);
    }
    throw std::invalid_argument("unknown structure '" + std::string(text) + "'");
  }

  /// Throws when the class cannot describe a 2^n x 2^n matrix.
  void check_compatible(unsigned n) const {
    if (kind_ == Kind::Band && n < 64 && (std::uint64_t{1} << n) <= half_width_) {
      throw std::invalid_argument("band half-width " + std::to_string(half_width_) +
                                  " does not fit a matrix of dimension 2^" + std::to_string(n));
    }
  }

  /// Whether the mask of a complete n-qubit string can carry a nonzero
  /// coefficient. For a band of half-width s the smallest |i - j| over the
  /// entries (j ^ x, j) is 2^(h+1) - x with h the top bit of x.
  bool mask_allowed(unsigned n, std::uint64_t x) const noexcept {
    switch (kind_) {
      case Kind::General: return true;
      case Kind::Diagonal: return x == 0;
      case Kind::AntiDiagonal: return x == low_ones(n);
      case Kind::Band: break;
    }
    if (x == 0) return true;
    const unsigned h = static_cast<unsigned>(std::bit_width(x)) - 1;
    return (std::uint64_t{2} << h) - x <= half_width_;
  }

  /// Whether a root-order prefix of `length` letters (qubits 0..length-1)
  /// with mask x can still be completed to an allowed n-qubit string.
  bool prefix_feasible(unsigned n, unsigned length, std::uint64_t x) const noexcept {
    switch (kind_) {
      case Kind::General: return true;
      case Kind::Diagonal: return x == 0;
      case Kind::AntiDiagonal: return x == low_ones(length);
      case Kind::Band: break;
    }
    if (mask_allowed(n, x)) return true;
    // Best completion sets every bit from `length` up to some top bit.
    return length < n && (std::uint64_t{1} << length) - x <= half_width_;
  }

 private:
  constexpr StructureClass(Kind kind, std::uint64_t s) : kind_(kind), half_width_(s) {}

  static constexpr std::uint64_t low_ones(unsigned count) noexcept {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  }

  Kind kind_ = Kind::General;
  std::uint64_t half_width_ = 0;
};

/// Membership of a Pauli string in the support allowed by a structure class.
inline bool allowed_support(const StructureClass& structure, const PauliString& s) {
  return structure.mask_allowed(static_cast<unsigned>(s.size()), s.x_mask());
}

/// Number of n-qubit strings in the allowed support (2^n per admissible mask).
inline std::uint64_t support_size(const StructureClass& structure, unsigned n) {
  check_qubit_count(n);
  std::uint64_t masks = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  switch (structure.kind()) {
    case StructureClass::Kind::General: masks = total; break;
    case StructureClass::Kind::Diagonal:
    case StructureClass::Kind::AntiDiagonal: masks = 1; break;
    case StructureClass::Kind::Band:
      // 1 for x = 0 plus min(2^h, s) masks for each top bit h.
      masks = 1;
      for (unsigned h = 0; h < n; ++h) masks += std::min(std::uint64_t{1} << h, structure.half_width());
      break;
  }
  return masks << n;
}

/// Upper bound (s n - c(s)) 2^n on the number of terms of a band matrix of
/// half-width s, with c(s) = s (floor(log2 s) + 1) - 2^(floor(log2 s) + 1).
inline std::int64_t band_term_bound(unsigned n, std::uint64_t s) {
  const auto floor_log2 = static_cast<std::int64_t>(std::bit_width(s)) - 1;
  const auto ss = static_cast<std::int64_t>(s);
  const std::int64_t c = ss * (floor_log2 + 1) - (std::int64_t{1} << (floor_log2 + 1));
  return (ss * static_cast<std::int64_t>(n) - c) * (std::int64_t{1} << n);
}

}  // namespace pauli_tree
