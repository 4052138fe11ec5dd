#ifndef DRZ_TEXTIO_HPP
#define DRZ_TEXTIO_HPP

#include <array>
#include <iosfwd>
#include <string>

#include "drz/antitri.hpp"
#include "drz/matrix.hpp"

namespace drz {

/// Text format: line 1 "rows cols", then rows lines of whitespace-separated
/// rational entries. A JSON object {"rows":r,"cols":c,"entries":[[...]]} is
/// accepted interchangeably (entries as strings or integers).
Matrix parse_matrix(const std::string& text);
Matrix parse_matrix_file(const std::string& path);

std::string matrix_to_text(const Matrix& m);
std::string matrix_to_json(const Matrix& m);

/// Three matrices in the text format, separated by blank lines, order A, B, C.
AntiTriangularBlocks parse_blocks(const std::string& text);
AntiTriangularBlocks parse_blocks_file(const std::string& path);

std::string read_file(const std::string& path);

/// Short stable digest of an input (shape + FNV-1a of the canonical text).
std::string digest(const Matrix& m);

}  // namespace drz

#endif
