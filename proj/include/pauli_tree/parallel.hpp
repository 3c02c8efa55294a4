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

#include "pauli_tree/decomposer.hpp"
#include "pauli_tree/decomposition.hpp"
#include "pauli_tree/matrix_source.hpp"
#include "pauli_tree/structure.hpp"
#include "pauli_tree/tree_state.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace pauli_tree {

/// Deepest cut level accepted; 4^10 subtrees is already far more than any
/// thread pool needs.
inline constexpr unsigned kMaxCutLevel = 10;

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Pauli tree cut at `cut_level` into independent subtrees. Seeds are
/// root-order prefixes (seed[0] fixes qubit 0), enumerated lexicographically
/// with I < X < Y < Z; prefixes outside the allowed support are dropped.
struct ForestPlan {
  unsigned n = 0;
  unsigned cut_level = 0;
  unsigned workers = 1;
  std::uint64_t subtree_count = 1;  // 4^cut_level before pruning
  std::vector<std::vector<PauliLetter>> seeds;
};

/// min(n, ceil(log4(8 W))): at least eight subtrees per worker.
inline unsigned default_cut_level(unsigned n, unsigned workers) {
  const std::uint64_t target = 8 * std::uint64_t{std::max(workers, 1u)};
  unsigned c = 0;
  while ((std::uint64_t{1} << (2 * c)) < target) ++c;
  return std::min({n, c, kMaxCutLevel});
}

inline ForestPlan plan_forest(unsigned n, StructureClass structure, unsigned workers, unsigned cut_level) {
  check_qubit_count(n);
  structure.check_compatible(n);
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  if (cut_level > n || cut_level > kMaxCutLevel) {
    throw std::invalid_argument("cut level " + std::to_string(cut_level) + " outside [0, " +
                                std::to_string(std::min(n, kMaxCutLevel)) + "]");
  }
  ForestPlan plan{n, cut_level, workers, std::uint64_t{1} << (2 * cut_level), {}};
  std::vector<PauliLetter> prefix(cut_level);
  for (std::uint64_t index = 0; index < plan.subtree_count; ++index) {
    std::uint64_t x = 0;
    bool feasible = true;
    for (unsigned level = 0; level < cut_level; ++level) {
      prefix[level] = static_cast<PauliLetter>((index >> (2 * (cut_level - 1 - level))) & 3u);
      x |= std::uint64_t{diagonality(prefix[level])} << level;
      feasible = feasible && structure.prefix_feasible(n, level + 1, x);
    }
    if (feasible) plan.seeds.push_back(prefix);
  }
  return plan;
}

/// State the sequential walk holds on reaching the node of `prefix`.
inline TreeState seed_subtree(std::span<const PauliLetter> prefix, unsigned n) {
  if (prefix.size() > n) throw std::invalid_argument("seed prefix longer than the tree depth");
  TreeState state(n);
  for (unsigned level = 0; level < prefix.size(); ++level) state.update(prefix[level], level, std::nullopt);
  return state;
}

struct ParallelStats {
  std::uint64_t tasks_planned = 0;  // seeds left after support pruning
  std::uint64_t tasks_processed = 0;
  std::uint64_t leaves = 0;
  std::uint64_t op_count = 0;  // summed over workers, seeding included
  unsigned cut_level = 0;
};

/// Decomposes the forest on `workers` threads. Each coefficient is computed
/// entirely inside one subtree walk, so the result is bit-identical to the
/// sequential walk for any worker count and cut level.
template <MatrixSource S>
Decomposition decompose_parallel(const S& src, StructureClass structure, unsigned workers,
                                 std::optional<unsigned> cut_level = std::nullopt,
                                 double prune_tolerance = kDefaultPruneTolerance,
                                 ParallelStats* stats = nullptr) {
  const unsigned n = src.qubits();
  const auto plan = plan_forest(n, structure, workers, cut_level.value_or(default_cut_level(n, workers)));

  struct WorkerResult {
    std::vector<std::pair<PauliString, Complex>> terms;
    std::uint64_t tasks = 0;
    std::uint64_t leaves = 0;
    std::uint64_t op_count = 0;
    std::exception_ptr error;
  };
  std::vector<WorkerResult> results(workers);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto work = [&](WorkerResult& result) {
    try {
      TreeWalker<S> walker(src, structure);
      auto collect = [&](std::string_view path, const TreeState&, Complex coeff) {
        if (keep_coefficient(coeff, prune_tolerance)) result.terms.emplace_back(PauliString(path), coeff);
      };
      for (std::size_t task = next++; task < plan.seeds.size() && !failed; task = next++) {
        walker.seed(plan.seeds[task]);
        walker.explore(plan.cut_level, collect);
        ++result.tasks;
      }
      result.leaves = walker.leaves();
      result.op_count = walker.state().op_count();
    } catch (...) {
      result.error = std::current_exception();
      failed = true;
    }
  };

  if (workers == 1) {
    work(results[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (auto& result : results) pool.emplace_back(work, std::ref(result));
  }

  ParallelStats totals{plan.seeds.size(), 0, 0, 0, plan.cut_level};
  std::vector<std::pair<PauliString, Complex>> merged;
  for (auto& result : results) {
    if (result.error) {
      try {
        std::rethrow_exception(result.error);
      } catch (const std::exception& e) {
        throw DecompositionError(std::string("worker failed: ") + e.what());
      } catch (...) {
        throw DecompositionError("worker failed with a non-standard exception");
      }
    }
    totals.tasks_processed += result.tasks;
    totals.leaves += result.leaves;
    totals.op_count += result.op_count;
    std::move(result.terms.begin(), result.terms.end(), std::back_inserter(merged));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Decomposition out(n);
  for (auto& [key, value] : merged) out.insert(std::move(key), value, prune_tolerance);
  if (stats) *stats = totals;
  return out;
}

}  // namespace pauli_tree
