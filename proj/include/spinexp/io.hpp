#pragma once

#include <string>

#include "spinexp/core.hpp"

namespace spinexp {

/// Thrown on malformed matrix documents: bad JSON, missing keys, shape
/// mismatches, non-finite entries, unreadable files.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk matrix document:
///   { "rows": r, "cols": c, "field": "real" | "complex", "data": [[..]] }
/// Real entries are plain numbers, complex entries [re, im] pairs.
struct MatrixFile {
  int rows = 0;
  int cols = 0;
  bool complex_field = false;
  cmat data;  // imaginary part all zero when field == "real"
};

MatrixFile parse_matrix(const std::string& text);
MatrixFile read_matrix(const std::string& path);

/// Serialization with 17 significant digits so reads reproduce writes bit
/// for bit.
std::string format_g17(double v);
std::string matrix_json(const rmat& m);
std::string matrix_json(const cmat& m);
void write_matrix(const std::string& path, const rmat& m);
void write_matrix(const std::string& path, const cmat& m);

}  // namespace spinexp
