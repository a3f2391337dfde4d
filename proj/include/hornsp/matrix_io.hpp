#ifndef HORNSP_MATRIX_IO_HPP_
#define HORNSP_MATRIX_IO_HPP_

#include <istream>
#include <string>
#include <string_view>

#include "hornsp/core.hpp"

namespace hornsp {

// Text format: first line holds `dim`, followed by `dim` rows of `dim`
// whitespace-separated entries. Complex entries are written `a+bi` / `a-bi`.
// Values are printed with 17 significant digits, so printing then parsing is
// lossless.

/// Parses one entry token: `1.5`, `-2e-3`, `1+2i`, `0.5-1e-3i`, `3i`, `-i`.
Complex parse_entry(std::string_view token);

ComplexMatrix parse_complex_matrix(std::istream& in);
/// As parse_complex_matrix, but rejects entries with a non-zero imaginary part.
RealMatrix parse_real_matrix(std::istream& in);

std::string format_entry(double value);
std::string format_entry(Complex value);
std::string format_matrix(const RealMatrix& m);
std::string format_matrix(const ComplexMatrix& m);

}  // namespace hornsp

#endif  // HORNSP_MATRIX_IO_HPP_
