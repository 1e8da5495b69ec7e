#pragma once

#include <string>

#include "projdist/complex_matrix.hpp"

namespace projdist {

// Matrix file format: {"dim": n, "matrix": [[[re, im], ...], ...]} with n rows
// of n entries. Readers throw ParseError with a position diagnostic for
// anything malformed; writers emit full-precision decimals so a round trip is
// exact in double precision.
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

// The serialized body (exposed for the CLI's JSON report and for tests).
std::string matrix_to_json(const ComplexMatrix& m);

} // namespace projdist
