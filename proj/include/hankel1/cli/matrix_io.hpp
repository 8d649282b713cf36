#ifndef HANKEL1_CLI_MATRIX_IO_HPP
#define HANKEL1_CLI_MATRIX_IO_HPP

#include <string>
#include <string_view>

#include "hankel1/common.hpp"

namespace hankel1::cli
{

/// Parses `a`, `a+bi`, `a-bi`, `bi` or `i`; whitespace inside is ignored.
Complex parse_complex(std::string_view token);

///
/// Parses a matrix: one row per line (or per `;`), entries separated by
/// commas, lines starting with `#` ignored. Throws ParseError for ragged,
/// empty or malformed input.
///
CMatrix parse_matrix(std::string_view text);

/// Reads a matrix file; `-` reads standard input.
CMatrix read_matrix(const std::string& path);

/// CSV with round-trip precision; purely real matrices omit imaginary parts.
std::string format_matrix(const CMatrix& a);

/// Fixed six-decimal display of a complex number.
std::string format_complex(Complex z, int digits = 6);

}  // namespace hankel1::cli

#endif  // HANKEL1_CLI_MATRIX_IO_HPP
