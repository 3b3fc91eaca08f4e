#ifndef UCINV_MATRIX_IO_HPP
#define UCINV_MATRIX_IO_HPP

#include "ucinv/matrix.hpp"

#include <iosfwd>
#include <string>

namespace ucinv {

/// Shortest decimal form that round-trips a binary64 value.
std::string format_double(double value);

/// Comma-separated values, one matrix row per line.
void write_matrix_csv(std::ostream& out, const Matrix& a);
void write_matrix_csv_file(const std::string& path, const Matrix& a);

/// Parses the CSV matrix format. Throws std::invalid_argument on ragged
/// rows, empty input, or unparsable numbers.
Matrix read_matrix_csv(std::istream& in);
Matrix read_matrix_csv_file(const std::string& path);

}  // namespace ucinv

#endif
