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

// File formats: Matrix Market and dense CSV matrices, the decomposition
// text file, and circuit JSON. Format details are documented in
// docs/formats.md.

#include "pauli_tree/block_encoding.hpp"
#include "pauli_tree/decomposition.hpp"
#include "pauli_tree/matrix_source.hpp"
#include "pauli_tree/pauli.hpp"
#include "pauli_tree/structure.hpp"

#include <nlohmann/json.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pauli_tree {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MatrixFormat { MatrixMarket, DenseCsv };

inline MatrixFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".csv") return MatrixFormat::DenseCsv;
  return MatrixFormat::MatrixMarket;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

inline double require_double(std::string_view s, const std::string& where) {
  const auto v = parse_double(s);
  if (!v) throw ParseError(where + ": cannot parse number '" + std::string(s) + "'");
  return *v;
}

inline std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace detail

/// Parses a complex cell: "re", "re+imj", "re-imj", "imj" (i also accepted).
inline Complex parse_complex(std::string_view text) {
  auto s = detail::trim(text);
  if (s.empty()) throw ParseError("empty complex value");
  if (s.back() != 'j' && s.back() != 'i') return {detail::require_double(s, "complex value"), 0.0};
  s.remove_suffix(1);
  // The split is the last sign that is not the leading one nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_text = split == std::string_view::npos ? s : s.substr(split);
  if (imag_text == "+" || imag_text == "-" || imag_text.empty()) imag_text = std::string_view(imag_text == "-" ? "-1" : "1");
  const double im = detail::require_double(imag_text, "complex value");
  const double re = split == std::string_view::npos ? 0.0 : detail::require_double(s.substr(0, split), "complex value");
  return {re, im};
}

inline std::string format_complex(Complex z) {
  std::string out = detail::format_double(z.real());
  const auto im = detail::format_double(z.imag());
  out += (im.front() == '-' ? "" : "+") + im + "j";
  return out;
}

/// A matrix as read from a file, zero-padded to a power-of-two square.
using MatrixReadResult = PaddedMatrix;

/// Matrix Market: array and coordinate layouts; real, integer, complex and
/// pattern fields; general, symmetric, skew-symmetric and hermitian symmetry.
inline MatrixReadResult parse_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("Matrix Market: empty input");
  auto banner = detail::split_whitespace(line);
  std::vector<std::string> fields;
  for (auto token : banner) {
    std::string t(token);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    fields.push_back(t);
  }
  if (fields.size() != 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix") {
    throw ParseError("Matrix Market: bad banner line '" + line + "'");
  }
  const std::string& layout = fields[2];
  const std::string& field = fields[3];
  const std::string& symmetry = fields[4];
  if (layout != "array" && layout != "coordinate") throw ParseError("Matrix Market: unknown layout " + layout);
  if (field != "real" && field != "integer" && field != "complex" && field != "double" && field != "pattern") {
    throw ParseError("Matrix Market: unsupported field " + field);
  }
  if (field == "pattern" && layout == "array") throw ParseError("Matrix Market: pattern field needs coordinate layout");
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" && symmetry != "hermitian") {
    throw ParseError("Matrix Market: unsupported symmetry " + symmetry);
  }
  const bool is_complex = field == "complex";

  // Skip comments and blank lines up to the size line.
  std::vector<std::string_view> size_tokens;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    size_tokens = detail::split_whitespace(line);
    if (!size_tokens.empty()) break;
  }
  const std::size_t expected_sizes = layout == "array" ? 2 : 3;
  if (size_tokens.size() != expected_sizes) throw ParseError("Matrix Market: bad size line '" + line + "'");
  std::vector<long long> sizes;
  for (auto t : size_tokens) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || v < 0) {
      throw ParseError("Matrix Market: bad size value '" + std::string(t) + "'");
    }
    sizes.push_back(v);
  }
  const long long rows = sizes[0];
  const long long cols = sizes[1];
  if (rows == 0 || cols == 0) throw ParseError("Matrix Market: matrix has dimension 0");
  if (rows > (1 << 15) || cols > (1 << 15)) throw ParseError("Matrix Market: matrix too large for dense storage");
  if (symmetry != "general" && rows != cols) throw ParseError("Matrix Market: symmetric matrix must be square");

  Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(rows, cols);
  auto place = [&](long long r, long long c, Complex v) {
    values(r, c) = v;
    if (r == c) return;
    if (symmetry == "symmetric") values(c, r) = v;
    if (symmetry == "skew-symmetric") values(c, r) = -v;
    if (symmetry == "hermitian") values(c, r) = std::conj(v);
  };

  // Remaining data tokens, whitespace-separated, comments skipped.
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '%') continue;
    for (auto t : detail::split_whitespace(line)) tokens.emplace_back(t);
  }
  std::size_t pos = 0;
  auto next_number = [&](const char* what) {
    if (pos >= tokens.size()) throw ParseError(std::string("Matrix Market: missing ") + what);
    return detail::require_double(tokens[pos++], "Matrix Market");
  };
  auto next_value = [&]() -> Complex {
    if (field == "pattern") return {1.0, 0.0};
    const double re = next_number("value");
    return {re, is_complex ? next_number("imaginary part") : 0.0};
  };

  if (layout == "array") {
    // Column-major; symmetric variants list only the lower triangle.
    for (long long c = 0; c < cols; ++c) {
      const long long first = symmetry == "general" ? 0 : (symmetry == "skew-symmetric" ? c + 1 : c);
      for (long long r = first; r < rows; ++r) place(r, c, next_value());
    }
  } else {
    const long long nnz = sizes[2];
    for (long long e = 0; e < nnz; ++e) {
      const double r = next_number("row index");
      const double c = next_number("column index");
      if (r < 1 || c < 1 || r > static_cast<double>(rows) || c > static_cast<double>(cols) ||
          r != std::floor(r) || c != std::floor(c)) {
        throw ParseError("Matrix Market: entry index out of range");
      }
      place(static_cast<long long>(r) - 1, static_cast<long long>(c) - 1, next_value());
    }
  }
  if (pos != tokens.size()) throw ParseError("Matrix Market: trailing data after the last entry");
  return pad_to_power_of_two(values);
}

/// Dense CSV: one row per line, comma-separated complex cells.
inline MatrixReadResult parse_dense_csv(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<Complex> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = trimmed.find(',', start);
      const auto cell = trimmed.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      try {
        row.push_back(parse_complex(cell));
      } catch (const ParseError& e) {
        throw ParseError("CSV line " + std::to_string(line_number) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("CSV line " + std::to_string(line_number) + ": expected " +
                       std::to_string(rows.front().size()) + " cells, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("CSV: matrix has dimension 0");
  Eigen::MatrixXcd values(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return pad_to_power_of_two(values);
}

inline MatrixReadResult read_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return format == MatrixFormat::DenseCsv ? parse_dense_csv(in) : parse_matrix_market(in);
}

inline MatrixReadResult read_matrix(const std::filesystem::path& path) {
  return read_matrix(path, format_from_path(path));
}

/// Writes a Matrix Market array file with complex field.
inline void write_matrix_market(const Eigen::MatrixXcd& values, std::ostream& out) {
  out << "%%MatrixMarket matrix array complex general\n";
  out << values.rows() << ' ' << values.cols() << '\n';
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
      out << detail::format_double(values(r, c).real()) << ' ' << detail::format_double(values(r, c).imag()) << '\n';
    }
  }
}

inline void write_dense_csv(const Eigen::MatrixXcd& values, std::ostream& out) {
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      if (c) out << ',';
      out << format_complex(values(r, c));
    }
    out << '\n';
  }
}

inline void write_matrix(const Eigen::MatrixXcd& values, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (format_from_path(path) == MatrixFormat::DenseCsv) {
    write_dense_csv(values, out);
  } else {
    write_matrix_market(values, out);
  }
}

/// Tightest class among Diagonal, AntiDiagonal, Band(s) (smallest s, only
/// when it prunes anything), else General. Full scan of every entry.
template <MatrixSource S>
StructureClass autodetect_structure(const S& src) {
  static_assert(kScannable<S>, "function-backed matrices need an explicit structure");
  const unsigned n = src.qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  bool diagonal = true;
  bool anti_diagonal = true;
  std::uint64_t width = 0;
  for (std::uint64_t c = 0; c < dim; ++c) {
    for (std::uint64_t r = 0; r < dim; ++r) {
      if (src.entry(r, c) == Complex{}) continue;
      if (r != c) diagonal = false;
      if (r + c != dim - 1) anti_diagonal = false;
      width = std::max(width, r > c ? r - c : c - r);
    }
  }
  if (diagonal) return StructureClass::diagonal();
  if (anti_diagonal) return StructureClass::anti_diagonal();
  const auto band = StructureClass::band(width);
  if (width < dim && support_size(band, n) < support_size(StructureClass::general(), n)) return band;
  return StructureClass::general();
}

// ---------------------------------------------------------------------------
// Decomposition text file

inline constexpr std::string_view kDecompositionHeader = "# pauli-decomposition n=";

inline void write_decomposition(const Decomposition& d, std::ostream& out) {
  out << kDecompositionHeader << d.qubits() << '\n';
  for (const auto& [key, value] : d) {
    out << key.str() << ' ' << detail::format_double(value.real()) << ' ' << detail::format_double(value.imag())
        << '\n';
  }
}

inline std::string render_decomposition(const Decomposition& d) {
  std::ostringstream out;
  write_decomposition(d, out);
  return out.str();
}

/// Parses the decomposition file. Terms are read verbatim (no pruning).
inline Decomposition read_decomposition(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(kDecompositionHeader)) {
    throw ParseError("decomposition file must start with '" + std::string(kDecompositionHeader) + "<n>'");
  }
  const auto n_text = detail::trim(std::string_view(line).substr(kDecompositionHeader.size()));
  unsigned n = 0;
  const auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
  if (ec != std::errc() || ptr != n_text.data() + n_text.size() || n == 0 || n > kMaxQubits) {
    throw ParseError("decomposition header has a bad qubit count '" + std::string(n_text) + "'");
  }
  Decomposition d(n);
  std::size_t line_number = 1;
  std::optional<PauliString> last;
  while (std::getline(in, line)) {
    ++line_number;
    const auto where = "decomposition line " + std::to_string(line_number);
    if (detail::trim(line).empty()) continue;
    const auto tokens = detail::split_whitespace(line);
    if (tokens.size() != 3) throw ParseError(where + ": expected '<pauli> <re> <im>'");
    PauliString key;
    try {
      key = PauliString(tokens[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (key.size() != n) throw ParseError(where + ": term " + key.str() + " is not " + std::to_string(n) + " letters");
    if (d.terms().contains(key)) throw ParseError(where + ": duplicate term " + key.str());
    if (last && !(*last < key)) throw ParseError(where + ": terms are not in ascending order");
    const Complex value{detail::require_double(tokens[1], where), detail::require_double(tokens[2], where)};
    d.insert(key, value, -1.0);
    last = key;
  }
  return d;
}

inline Decomposition parse_decomposition(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_decomposition(in);
}

inline void write_decomposition(const Decomposition& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_decomposition(d, out);
}

inline Decomposition read_decomposition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_decomposition(in);
}

/// Whether a file starts with the decomposition header.
inline bool is_decomposition_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  return in && std::getline(in, line) && line.starts_with(kDecompositionHeader);
}

// ---------------------------------------------------------------------------
// Circuit JSON

inline constexpr std::string_view kCircuitFormat = "lcu-circuit";
inline constexpr int kCircuitFormatVersion = 1;

inline nlohmann::ordered_json circuit_to_json(const Circuit& circuit) {
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (const auto& gate : circuit.gates) {
    if (const auto* p = std::get_if<PrepGate>(&gate)) {
      nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
      for (Eigen::Index r = 0; r < p->matrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < p->matrix.cols(); ++c) {
          matrix.push_back({p->matrix(r, c).real(), p->matrix(r, c).imag()});
        }
      }
      gates.push_back({{"type", "prep"}, {"dim", p->matrix.rows()}, {"matrix", std::move(matrix)}});
    } else if (const auto* c = std::get_if<ControlledPauliGate>(&gate)) {
      gates.push_back({{"type", "controlled_pauli"},
                       {"pattern", pattern_bits(c->pattern, circuit.n_ancilla)},
                       {"pauli", c->pauli.str()},
                       {"sign", c->sign}});
    } else {
      gates.push_back({{"type", "unprep"}});
    }
  }
  return {{"format", kCircuitFormat},
          {"version", kCircuitFormatVersion},
          {"n_data", circuit.n_data},
          {"n_ancilla", circuit.n_ancilla},
          {"lambda", circuit.lambda},
          {"gates", std::move(gates)}};
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kCircuitFormat || j.at("version").get<int>() != kCircuitFormatVersion) {
      throw ParseError("circuit JSON: unsupported format or version");
    }
    Circuit circuit;
    circuit.n_data = j.at("n_data").get<unsigned>();
    circuit.n_ancilla = j.at("n_ancilla").get<unsigned>();
    circuit.lambda = j.at("lambda").get<double>();
    for (const auto& g : j.at("gates")) {
      const auto type = g.at("type").get<std::string>();
      if (type == "prep") {
        const auto dim = g.at("dim").get<Eigen::Index>();
        const auto& entries = g.at("matrix");
        if (dim <= 0 || entries.size() != static_cast<std::size_t>(dim * dim)) {
          throw ParseError("circuit JSON: prep matrix size mismatch");
        }
        Eigen::MatrixXcd m(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
          for (Eigen::Index c = 0; c < dim; ++c) {
            const auto& e = entries.at(static_cast<std::size_t>(r * dim + c));
            m(r, c) = {e.at(0).get<double>(), e.at(1).get<double>()};
          }
        }
        circuit.gates.emplace_back(PrepGate{std::move(m)});
      } else if (type == "controlled_pauli") {
        const auto bits = g.at("pattern").get<std::string>();
        if (bits.size() != circuit.n_ancilla) throw ParseError("circuit JSON: pattern width mismatch");
        std::uint64_t pattern = 0;
        for (char b : bits) {
          if (b != '0' && b != '1') throw ParseError("circuit JSON: pattern must be binary");
          pattern = (pattern << 1) | static_cast<std::uint64_t>(b == '1');
        }
        circuit.gates.emplace_back(ControlledPauliGate{pattern, PauliString(g.at("pauli").get<std::string>()),
                                                       g.at("sign").get<int>()});
      } else if (type == "unprep") {
        circuit.gates.emplace_back(UnprepGate{});
      } else {
        throw ParseError("circuit JSON: unknown gate type " + type);
      }
    }
    return circuit;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace pauli_tree
