#include "tomita/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace tomita {

using nlohmann::json;

namespace {

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x))
    throw ParseError(std::string(what) + " must be finite");
  return x;
}

Complex complex_entry(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("matrix entry must be a [re, im] pair");
  return {finite_number(j[0], "re"), finite_number(j[1], "im")};
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

MatrixElement matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw ParseError("matrix file needs fields 'n' and 'entries'");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw ParseError("'n' must be a positive integer");
  const int n = j["n"].get<int>();
  const json& rows = j["entries"];
  if (!rows.is_array() || int(rows.size()) != n)
    throw ParseError("'entries' must hold n rows");
  MatrixElement A(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || int(rows[i].size()) != n)
      throw ParseError("row " + std::to_string(i) + " must hold n entries");
    for (int jj = 0; jj < n; ++jj) A(i, jj) = complex_entry(rows[i][jj]);
  }
  return A;
}

json matrix_to_json(const MatrixElement& A) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      row.push_back({A(i, j).real(), A(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return json{{"n", A.rows()}, {"entries", std::move(rows)}};
}

}  // namespace

MatrixElement read_matrix_json(std::istream& in) {
  return matrix_from_json(parse_stream(in));
}

Complex parse_complex_cell(const std::string& cell) {
  std::string s;
  for (char c : cell)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty complex cell");

  const char* p = s.c_str();
  char* end = nullptr;
  const double first = std::strtod(p, &end);
  if (end == p) throw ParseError("cannot parse complex cell '" + cell + "'");

  if (*end == '\0') return {first, 0.0};
  if (*end == 'j' && *(end + 1) == '\0') return {0.0, first};

  const char* q = end;
  char* end2 = nullptr;
  const double second = std::strtod(q, &end2);
  if (end2 == q || *end2 != 'j' || *(end2 + 1) != '\0')
    throw ParseError("cannot parse complex cell '" + cell + "'");
  if (!std::isfinite(first) || !std::isfinite(second))
    throw ParseError("complex cell must be finite");
  return {first, second};
}

std::string format_complex_cell(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real();
  if (z.imag() >= 0.0 || std::isnan(z.imag())) os << '+';
  os << z.imag() << 'j';
  return os.str();
}

MatrixElement read_matrix_csv(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Complex> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(parse_complex_cell(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV matrix");
  const size_t n = rows.size();
  MatrixElement A(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ParseError("CSV matrix must be square; row " + std::to_string(i) +
                       " has " + std::to_string(rows[i].size()) + " cells");
    for (size_t j = 0; j < n; ++j) A(i, j) = rows[i][j];
  }
  return A;
}

MatrixElement read_matrix_file(const std::string& path) {
  auto in = open_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return read_matrix_csv(in);
  return read_matrix_json(in);
}

void write_matrix_json(std::ostream& out, const MatrixElement& A) {
  out << matrix_to_json(A).dump(2) << '\n';
}

void write_matrix_csv(std::ostream& out, const MatrixElement& A) {
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (j) out << ',';
      out << format_complex_cell(A(i, j));
    }
    out << '\n';
  }
}

BlockVector read_block_vector_json(std::istream& in) {
  const json j = parse_stream(in);
  if (!j.is_object() || !j.contains("n") || !j.contains("N") ||
      !j.contains("blocks"))
    throw ParseError("block vector file needs fields 'n', 'N', 'blocks'");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1 ||
      !j["N"].is_number_integer() || j["N"].get<int>() < 1)
    throw ParseError("'n' and 'N' must be positive integers");
  const int n = j["n"].get<int>();
  const int N = j["N"].get<int>();
  const json& blocks = j["blocks"];
  if (!blocks.is_array() || int(blocks.size()) != N)
    throw ParseError("'blocks' must hold N rows");

  BlockVector u;
  u.n = n;
  u.N = N;
  u.blocks.reserve(size_t(N) * size_t(N));
  for (int i = 0; i < N; ++i) {
    if (!blocks[i].is_array() || int(blocks[i].size()) != N)
      throw ParseError("block row " + std::to_string(i) + " must hold N blocks");
    for (int k = 0; k < N; ++k) {
      const json& entry = blocks[i][k];
      if (!entry.is_array() || int(entry.size()) != n)
        throw ParseError("each block must be an n x n entries array");
      MatrixElement B(n, n);
      for (int r = 0; r < n; ++r) {
        if (!entry[r].is_array() || int(entry[r].size()) != n)
          throw ParseError("each block must be an n x n entries array");
        for (int c = 0; c < n; ++c) B(r, c) = complex_entry(entry[r][c]);
      }
      u.blocks.push_back(std::move(B));
    }
  }
  return u;
}

BlockVector read_block_vector_file(const std::string& path) {
  auto in = open_file(path);
  return read_block_vector_json(in);
}

void write_block_vector_json(std::ostream& out, const BlockVector& u) {
  json rows = json::array();
  for (int i = 0; i < u.N; ++i) {
    json row = json::array();
    for (int k = 0; k < u.N; ++k)
      row.push_back(matrix_to_json(u.block(i, k))["entries"]);
    rows.push_back(std::move(row));
  }
  out << json{{"n", u.n}, {"N", u.N}, {"blocks", std::move(rows)}}.dump(2)
      << '\n';
}

namespace {

SpectralData spectral_from_json(const json& j) {
  if (!j.is_object() || !j.contains("factor_type") || !j.contains("head"))
    throw ParseError("spectrum file needs fields 'factor_type' and 'head'");
  if (!j["factor_type"].is_string())
    throw ParseError("'factor_type' must be a string");
  const FactorType type = factor_type_from_string(j["factor_type"]);

  std::vector<std::pair<double, double>> head;
  if (!j["head"].is_array()) throw ParseError("'head' must be an array");
  for (const json& e : j["head"]) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("head entries must be [mu, m] pairs");
    head.emplace_back(finite_number(e[0], "mu"), finite_number(e[1], "m"));
  }

  std::optional<GeometricTail> tail;
  if (j.contains("tail") && !j["tail"].is_null()) {
    const json& t = j["tail"];
    if (!t.is_object() || !t.contains("ratio") || !t.contains("mult") ||
        !t.contains("start"))
      throw ParseError("'tail' needs fields 'ratio', 'mult', 'start'");
    tail = GeometricTail{finite_number(t["start"], "start"),
                         finite_number(t["ratio"], "ratio"),
                         finite_number(t["mult"], "mult")};
  }

  return SpectralData::make(type, std::move(head), tail);
}

json spectral_to_json(const SpectralData& s) {
  json head = json::array();
  for (const auto& [mu, m] : s.head()) head.push_back({mu, m});
  json tail;
  if (s.has_tail())
    tail = json{{"ratio", s.tail()->ratio},
                {"mult", s.tail()->mult},
                {"start", s.tail()->start}};
  return json{{"factor_type", to_string(s.factor_type())},
              {"head", std::move(head)},
              {"tail", std::move(tail)}};
}

}  // namespace

SpectralData read_spectral_data_json(std::istream& in) {
  return spectral_from_json(parse_stream(in));
}

SpectralData read_spectral_data_file(const std::string& path) {
  auto in = open_file(path);
  return read_spectral_data_json(in);
}

void write_spectral_data_json(std::ostream& out, const SpectralData& s) {
  out << spectral_to_json(s).dump(2) << '\n';
}

std::string spectral_data_to_json_line(const SpectralData& s) {
  return spectral_to_json(s).dump();
}

ClassificationTarget read_target_json(std::istream& in) {
  const json j = parse_stream(in);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("target file needs a string field 'kind'");
  const std::string kind = j["kind"];
  if (kind == "lattice") {
    if (!j.contains("base")) throw ParseError("lattice target needs 'base'");
    const double base = finite_number(j["base"], "base");
    if (!(base > 1.0)) throw ParseError("lattice base must be > 1");
    return RatioLattice{base};
  }
  if (kind == "spectrum") {
    if (!j.contains("entries") || !j["entries"].is_array())
      throw ParseError("spectrum target needs an 'entries' array");
    DeltaSpectrum ds;
    for (const json& e : j["entries"]) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("target entries must be [lambda, n] pairs");
      const double lambda = finite_number(e[0], "lambda");
      if (!(lambda > 0.0)) throw ParseError("lambda must be positive");
      double n;
      if (e[1].is_string() && e[1] == "inf")
        n = std::numeric_limits<double>::infinity();
      else
        n = finite_number(e[1], "n");
      ds.entries.emplace_back(lambda, n);
    }
    std::sort(ds.entries.begin(), ds.entries.end());
    return ds;
  }
  throw ParseError("target 'kind' must be 'lattice' or 'spectrum'");
}

ClassificationTarget read_target_file(const std::string& path) {
  auto in = open_file(path);
  return read_target_json(in);
}

}  // namespace tomita
