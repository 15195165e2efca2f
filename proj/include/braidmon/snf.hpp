#pragma once

#include <vector>

namespace braidmon {

using IntMat = std::vector<std::vector<long long>>;

struct SmithResult {
  IntMat U; // unimodular, rows x rows
  IntMat D; // diagonal, d_i | d_{i+1}, non-negative
  IntMat V; // unimodular, cols x cols
};

/// Smith normal form U*M*V = D over the integers. All arithmetic is
/// checked 64-bit; throws std::overflow_error if an entry leaves the range.
SmithResult smith_normal_form(const IntMat& M);

IntMat mat_mul(const IntMat& A, const IntMat& B);
long long mat_det(const IntMat& A); // square matrices up to 4x4

} // namespace braidmon
