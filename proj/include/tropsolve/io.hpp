#pragma once

// Plain-text matrix and vector files.
//
// Lines starting with `#` are comments and blank lines are skipped. A matrix
// file holds one row per line with whitespace-separated scalar tokens. A
// vector file holds either one scalar per line or all scalars on one line.
// Printing emits canonical tokens, so parse(print(x)) == x.

#include <filesystem>
#include <string>
#include <string_view>

#include "tropsolve/matrix.hpp"

namespace tropsolve {

Matrix parse_matrix(std::string_view text);
Vector parse_vector(std::string_view text);

std::string format_matrix(const Matrix& a);
std::string format_vector(const Vector& v);

std::string read_text_file(const std::filesystem::path& path);
Matrix load_matrix(const std::filesystem::path& path);
Vector load_vector(const std::filesystem::path& path);

}  // namespace tropsolve
