#pragma once

#include <iosfwd>
#include <string>

#include "tomita/block_factor.hpp"
#include "tomita/linalg.hpp"
#include "tomita/spectral.hpp"

namespace tomita {

// File formats. Matrices: JSON {"n": int, "entries": [[[re, im], ...], ...]}
// row-major, or CSV with "re+imj" cells. Block vectors: JSON
// {"n": int, "N": int, "blocks": [[entries, ...], ...]}. Spectral data:
// JSON {"factor_type": str, "head": [[mu, m], ...], "tail": {...} | null}.
// Targets: JSON {"kind": "lattice", "base": b} or
// {"kind": "spectrum", "entries": [[lambda, n | "inf"], ...]}.
// All parse failures throw ParseError; non-finite values are rejected.

MatrixElement read_matrix_json(std::istream& in);
MatrixElement read_matrix_csv(std::istream& in);
// dispatches on the .csv / .json extension
MatrixElement read_matrix_file(const std::string& path);
void write_matrix_json(std::ostream& out, const MatrixElement& A);
void write_matrix_csv(std::ostream& out, const MatrixElement& A);

BlockVector read_block_vector_json(std::istream& in);
BlockVector read_block_vector_file(const std::string& path);
void write_block_vector_json(std::ostream& out, const BlockVector& u);

SpectralData read_spectral_data_json(std::istream& in);
SpectralData read_spectral_data_file(const std::string& path);
void write_spectral_data_json(std::ostream& out, const SpectralData& s);
std::string spectral_data_to_json_line(const SpectralData& s);

ClassificationTarget read_target_json(std::istream& in);
ClassificationTarget read_target_file(const std::string& path);

Complex parse_complex_cell(const std::string& cell);
std::string format_complex_cell(Complex z);

}  // namespace tomita
