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

// Benchmark harness over function-backed matrices, so no dense storage is
// needed at any n.

#include "pauli_tree/decomposer.hpp"
#include "pauli_tree/matrix_source.hpp"
#include "pauli_tree/parallel.hpp"
#include "pauli_tree/structure.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pauli_tree {

/// Whether (row, col) may be nonzero in a matrix of the given class.
inline bool structure_contains(const StructureClass& structure, unsigned n, std::uint64_t row, std::uint64_t col) {
  switch (structure.kind()) {
    case StructureClass::Kind::General: return true;
    case StructureClass::Kind::Diagonal: return row == col;
    case StructureClass::Kind::AntiDiagonal: return row + col == (std::uint64_t{1} << n) - 1;
    case StructureClass::Kind::Band: break;
  }
  return (row > col ? row - col : col - row) <= structure.half_width();
}

/// Entry generator for synthetic matrices: a splitmix64 hash of the position
/// mapped to [-1, 1) in both parts, zero outside the structure.
struct HashedEntries {
  unsigned n = 1;
  StructureClass structure = StructureClass::general();
  std::uint64_t seed = 0;

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static double unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-52 - 1.0;
  }

  Complex operator()(std::uint64_t row, std::uint64_t col) const noexcept {
    if (!structure_contains(structure, n, row, col)) return {};
    const std::uint64_t h = mix(seed ^ mix((row << 32) ^ col));
    return {unit(h), unit(mix(h))};
  }
};

inline FunctionMatrix<HashedEntries> synthetic_matrix(unsigned n, StructureClass structure, std::uint64_t seed = 1) {
  return FunctionMatrix<HashedEntries>(n, HashedEntries{n, structure, seed}, structure);
}

struct BenchRow {
  unsigned n = 0;
  std::string structure;
  unsigned threads = 1;
  unsigned cut_level = 0;
  double wall_time_seconds = 0.0;
  std::uint64_t op_count = 0;
  std::uint64_t term_count = 0;
  double throughput = 0.0;  // leaves per second
};

/// One timed decomposition. With one thread the sequential walk runs, so
/// op_count is the instrumented count of the plain walk.
inline BenchRow run_bench(unsigned n, StructureClass structure, unsigned threads,
                          std::optional<unsigned> cut_level = std::nullopt) {
  const auto src = synthetic_matrix(n, structure);
  BenchRow row;
  row.n = n;
  row.structure = structure.str();
  row.threads = threads;
  std::uint64_t leaves = 0;
  const auto start = std::chrono::steady_clock::now();
  if (threads == 1 && !cut_level) {
    WalkStats stats;
    row.term_count = decompose_structured(src, structure, kDefaultPruneTolerance, &stats).size();
    row.op_count = stats.op_count;
    leaves = stats.leaves;
  } else {
    ParallelStats stats;
    row.term_count = decompose_parallel(src, structure, threads, cut_level, kDefaultPruneTolerance, &stats).size();
    row.op_count = stats.op_count;
    row.cut_level = stats.cut_level;
    leaves = stats.leaves;
  }
  row.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  row.throughput = row.wall_time_seconds > 0 ? static_cast<double>(leaves) / row.wall_time_seconds : 0.0;
  return row;
}

inline void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "n,structure,threads,cut_level,wall_time_seconds,op_count,term_count,throughput\n";
  char buffer[64];
  for (const auto& row : rows) {
    out << row.n << ',' << row.structure << ',' << row.threads << ',' << row.cut_level << ',';
    std::snprintf(buffer, sizeof buffer, "%.6e", row.wall_time_seconds);
    out << buffer << ',' << row.op_count << ',' << row.term_count << ',';
    std::snprintf(buffer, sizeof buffer, "%.6e", row.throughput);
    out << buffer << '\n';
  }
}

}  // namespace pauli_tree
