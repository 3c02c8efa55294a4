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

// The pauli-tree command line. Exit codes: 0 success, 1 validation failure
// (bad input file, failed check), 2 usage error.

#include "pauli_tree/algebra.hpp"
#include "pauli_tree/bench.hpp"
#include "pauli_tree/block_encoding.hpp"
#include "pauli_tree/decomposer.hpp"
#include "pauli_tree/decomposition.hpp"
#include "pauli_tree/io.hpp"
#include "pauli_tree/parallel.hpp"
#include "pauli_tree/structure.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pauli_tree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string sci(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", value);
  return buffer;
}

inline StructureClass parse_structure_flag(const std::string& text) {
  try {
    return StructureClass::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--n-range must look like A..B, got '" + text + "'");
  unsigned lo = 0;
  unsigned hi = 0;
  try {
    std::size_t used = 0;
    lo = static_cast<unsigned>(std::stoul(text.substr(0, dots), &used));
    if (used != dots) throw std::invalid_argument("");
    const auto rest = text.substr(dots + 2);
    hi = static_cast<unsigned>(std::stoul(rest, &used));
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("--n-range must look like A..B, got '" + text + "'");
  }
  if (lo == 0 || lo > hi) throw UsageError("--n-range needs 1 <= A <= B");
  return {lo, hi};
}

inline PaddedMatrix load_matrix(const std::string& path, std::ostream& err) {
  auto m = read_matrix(path);
  if (m.padded) {
    err << "warning: " << path << " is " << m.original_rows << "x" << m.original_cols << ", zero-padded to "
        << m.matrix.values().rows() << "x" << m.matrix.values().cols() << '\n';
  }
  return m;
}

}  // namespace detail

/// Runs the CLI; `out` receives reports, `err` diagnostics.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Pauli decomposition of 2^n x 2^n matrices by tree walk", "pauli-tree"};
  app.require_subcommand(1);
  std::function<void()> action;

  // decompose
  std::string input;
  std::string output;
  std::string structure_text = "auto";
  unsigned threads = 1;
  std::optional<unsigned> cut_level;
  double prune_tol = kDefaultPruneTolerance;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a matrix file into Pauli strings");
  decompose_cmd->add_option("matrix", input, "Matrix Market (.mtx) or dense CSV (.csv) file")->required();
  decompose_cmd->add_option("-o,--output", output, "Decomposition file to write")->required();
  decompose_cmd->add_option("--structure", structure_text,
                            "auto|general|diagonal|antidiagonal|tridiagonal|band=S");
  decompose_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  decompose_cmd->add_option("--cut-level", cut_level, "Forest cut level (parallel executor)");
  decompose_cmd->add_option("--prune-tol", prune_tol, "Drop terms with magnitude <= this")
      ->check(CLI::NonNegativeNumber);
  decompose_cmd->callback([&] {
    action = [&] {
      const auto structure_flag =
          structure_text == "auto" ? std::nullopt : std::optional(detail::parse_structure_flag(structure_text));
      auto padded = detail::load_matrix(input, err);
      const DenseMatrix& src = padded.matrix;
      const auto structure = structure_flag.value_or(autodetect_structure(src));
      Decomposition d(src.qubits());
      if (threads > 1 || cut_level) {
        d = decompose_parallel(src, structure, threads, cut_level, prune_tol);
      } else {
        d = decompose_structured(src, structure, prune_tol);
      }
      write_decomposition(d, std::filesystem::path(output));
      out << "structure " << structure.str() << ", n=" << d.qubits() << ", " << d.size() << " terms\n";
    };
  });

  // compose
  unsigned max_qubits = kDenseMaxQubits;
  auto* compose_cmd = app.add_subcommand("compose", "Rebuild the dense matrix from a decomposition");
  compose_cmd->add_option("decomposition", input, "Decomposition file")->required();
  compose_cmd->add_option("-o,--output", output, "Matrix file to write (.mtx or .csv)")->required();
  compose_cmd->add_option("--max-qubits", max_qubits, "Dense size ceiling");
  compose_cmd->callback([&] {
    action = [&] {
      write_matrix(reconstruct(read_decomposition(std::filesystem::path(input)), max_qubits), output);
    };
  });

  // verify
  std::string matrix_path;
  double tolerance = 1e-10;
  auto* verify_cmd = app.add_subcommand("verify", "Compare a decomposition against a matrix file");
  verify_cmd->add_option("decomposition", input, "Decomposition file")->required();
  verify_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  verify_cmd->add_option("--tol", tolerance, "Largest accepted entrywise residual")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-qubits", max_qubits, "Dense size ceiling");
  verify_cmd->callback([&] {
    action = [&] {
      const auto d = read_decomposition(std::filesystem::path(input));
      const auto padded = detail::load_matrix(matrix_path, err);
      const auto& a = padded.matrix.values();
      if (padded.matrix.qubits() != d.qubits()) {
        throw std::invalid_argument("decomposition has n=" + std::to_string(d.qubits()) + ", matrix has n=" +
                                    std::to_string(padded.matrix.qubits()));
      }
      const double residual = (reconstruct(d, max_qubits) - a).cwiseAbs().maxCoeff();
      out << "max residual " << detail::sci(residual) << '\n';
      if (!(residual <= tolerance)) {
        throw std::runtime_error("residual " + detail::sci(residual) + " exceeds tolerance " + detail::sci(tolerance));
      }
    };
  });

  // algebra
  std::vector<std::string> inputs;
  std::string mu_text = "1";
  auto add_algebra = [&](const char* name, const char* description, int count,
                         std::function<Decomposition(std::vector<Decomposition>&)> op) {
    auto* cmd = app.add_subcommand(name, description);
    auto* files = cmd->add_option("decompositions", inputs, "Decomposition files")->required();
    if (count > 0) files->expected(count);
    cmd->add_option("-o,--output", output, "Decomposition file to write")->required();
    cmd->add_option("--prune-tol", prune_tol, "Drop terms with magnitude <= this")->check(CLI::NonNegativeNumber);
    return std::pair{cmd, op};
  };
  std::vector<std::pair<CLI::App*, std::function<Decomposition(std::vector<Decomposition>&)>>> algebra{
      add_algebra("sum", "mu A + B", 2,
                  [&](auto& v) { return linear_combination(parse_complex(mu_text), v[0], v[1], prune_tol); }),
      add_algebra("mul", "A B", 2, [&](auto& v) { return product(v[0], v[1], prune_tol); }),
      add_algebra("dirsum", "A (+) B", 2, [&](auto& v) { return direct_sum(v[0], v[1], prune_tol); }),
      add_algebra("blockdiag", "diag(A_1, ..., A_N)", -1, [&](auto& v) { return block_diagonal(v, prune_tol); }),
      add_algebra("augment", "[[0, A*], [A, 0]]", 1, [&](auto& v) { return hermitian_augment(v[0], prune_tol); }),
  };
  algebra[0].first->add_option("--mu", mu_text, "Scalar: re, re+imj or imj");
  for (auto& [cmd, op] : algebra) {
    cmd->callback([&, op = op] {
      action = [&, op] {
        std::vector<Decomposition> operands;
        for (const auto& path : inputs) operands.push_back(read_decomposition(std::filesystem::path(path)));
        const auto result = op(operands);
        write_decomposition(result, std::filesystem::path(output));
        out << "n=" << result.qubits() << ", " << result.size() << " terms\n";
      };
    });
  }

  // block-encode
  bool verify = false;
  auto* block_cmd = app.add_subcommand("block-encode", "Build an LCU block-encoding circuit");
  block_cmd->add_option("input", input, "Decomposition file or matrix file")->required();
  block_cmd->add_option("-o,--output", output, "Circuit JSON to write")->required();
  block_cmd->add_flag("--verify", verify, "Simulate the circuit and check the encoded block");
  block_cmd->add_option("--tol", tolerance, "Largest accepted spectral-norm residual")->check(CLI::NonNegativeNumber);
  block_cmd->add_option("--max-qubits", max_qubits, "Simulation size ceiling (data + ancilla)");
  block_cmd->callback([&] {
    action = [&] {
      std::optional<DenseMatrix> matrix;
      Decomposition d(1);
      if (is_decomposition_file(input)) {
        d = read_decomposition(std::filesystem::path(input));
      } else {
        matrix = detail::load_matrix(input, err).matrix;
        d = decompose_structured(*matrix, autodetect_structure(*matrix));
      }
      const auto circuit = build_lcu_circuit(d);
      {
        std::ofstream file(output);
        if (!file) throw std::runtime_error("cannot write " + output);
        file << circuit_to_json(circuit).dump(2) << '\n';
      }
      out << "lambda " << detail::sci(circuit.lambda) << ", " << circuit.n_ancilla << " ancillas, "
          << circuit.controlled_pauli_count() << " controlled Paulis\n";
      if (!verify) return;
      const auto target = matrix ? *matrix : DenseMatrix(reconstruct(d, max_qubits));
      const auto report = verify_block_encoding(circuit, target, max_qubits);
      out << "residual " << detail::sci(report.residual) << ", unitarity defect "
          << detail::sci(report.unitarity_defect) << '\n';
      if (!(report.residual <= tolerance)) {
        throw std::runtime_error("residual " + detail::sci(report.residual) + " exceeds tolerance " +
                                 detail::sci(tolerance));
      }
    };
  });

  // bench
  std::string range_text;
  std::vector<std::string> structure_list{"general"};
  std::vector<unsigned> thread_list{1};
  auto* bench_cmd = app.add_subcommand("bench", "Time decompositions of synthetic matrices");
  bench_cmd->add_option("--n-range", range_text, "Qubit range A..B")->required();
  bench_cmd->add_option("--structures", structure_list, "Structure classes")->delimiter(',');
  bench_cmd->add_option("--threads", thread_list, "Thread counts")->delimiter(',')->check(CLI::Range(1u, 1024u));
  bench_cmd->add_option("--cut-level", cut_level, "Forest cut level");
  bench_cmd->add_option("-o,--output", output, "CSV report")->required();
  bench_cmd->callback([&] {
    action = [&] {
      const auto [lo, hi] = detail::parse_range(range_text);
      std::vector<StructureClass> classes;
      for (const auto& s : structure_list) classes.push_back(detail::parse_structure_flag(s));
      std::vector<BenchRow> rows;
      for (const auto& structure : classes) {
        for (unsigned n = lo; n <= hi; ++n) {
          for (unsigned w : thread_list) {
            rows.push_back(run_bench(n, structure, w, cut_level));
            const auto& row = rows.back();
            err << "n=" << n << ' ' << row.structure << " threads=" << w << ": "
                << detail::sci(row.wall_time_seconds) << " s\n";
          }
        }
      }
      std::ofstream file(output);
      if (!file) throw std::runtime_error("cannot write " + output);
      write_bench_csv(rows, file);
      out << rows.size() << " rows written to " << output << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace pauli_tree::cli
