#include "braidmon/snf.hpp"

#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace braidmon {

namespace {

long long checked_ll(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("integer matrix arithmetic overflow");
  return (long long)v;
}

void row_op(IntMat& M, IntMat& U, int r1, int r2, long long q) {
  // row r2 -= q * row r1, mirrored in U
  for (size_t j = 0; j < M[0].size(); ++j)
    M[r2][j] = checked_ll((__int128)M[r2][j] - (__int128)q * M[r1][j]);
  for (size_t j = 0; j < U[0].size(); ++j)
    U[r2][j] = checked_ll((__int128)U[r2][j] - (__int128)q * U[r1][j]);
}

void col_op(IntMat& M, IntMat& V, int c1, int c2, long long q) {
  for (size_t i = 0; i < M.size(); ++i)
    M[i][c2] = checked_ll((__int128)M[i][c2] - (__int128)q * M[i][c1]);
  for (size_t i = 0; i < V.size(); ++i)
    V[i][c2] = checked_ll((__int128)V[i][c2] - (__int128)q * V[i][c1]);
}

void swap_rows(IntMat& M, IntMat& U, int r1, int r2) {
  std::swap(M[r1], M[r2]);
  std::swap(U[r1], U[r2]);
}

void swap_cols(IntMat& M, IntMat& V, int c1, int c2) {
  for (auto& row : M) std::swap(row[c1], row[c2]);
  for (auto& row : V) std::swap(row[c1], row[c2]);
}

void negate_row(IntMat& M, IntMat& U, int r) {
  for (auto& x : M[r]) x = -x;
  for (auto& x : U[r]) x = -x;
}

IntMat identity(size_t n) {
  IntMat I(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

} // namespace

SmithResult smith_normal_form(const IntMat& M0) {
  if (M0.empty() || M0[0].empty())
    throw std::invalid_argument("smith_normal_form: empty matrix");
  size_t rows = M0.size(), cols = M0[0].size();
  IntMat M = M0, U = identity(rows), V = identity(cols);

  size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the remaining block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (M[i][j] != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    swap_rows(M, U, (int)t, (int)pi);
    swap_cols(M, V, (int)t, (int)pj);

    // clear row and column t by Euclidean reduction
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (M[i][t] == 0) continue;
        long long q = M[i][t] / M[t][t];
        row_op(M, U, (int)t, (int)i, q);
        if (M[i][t] != 0) { swap_rows(M, U, (int)t, (int)i); dirty = true; }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (M[t][j] == 0) continue;
        long long q = M[t][j] / M[t][t];
        col_op(M, V, (int)t, (int)j, q);
        if (M[t][j] != 0) { swap_cols(M, V, (int)t, (int)j); dirty = true; }
      }
    }

    // divisibility: pivot must divide the rest of the block
    bool restart = false;
    for (size_t i = t + 1; i < rows && !restart; ++i)
      for (size_t j = t + 1; j < cols && !restart; ++j)
        if (M[i][j] % M[t][t] != 0) {
          // add row i to row t, then redo the elimination at t
          for (size_t jj = 0; jj < cols; ++jj)
            M[t][jj] = checked_ll((__int128)M[t][jj] + M[i][jj]);
          for (size_t jj = 0; jj < rows; ++jj)
            U[t][jj] = checked_ll((__int128)U[t][jj] + U[i][jj]);
          restart = true;
        }
    if (restart) continue;

    if (M[t][t] < 0) negate_row(M, U, (int)t);
    ++t;
  }

  return SmithResult{U, M, V};
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  size_t n = A.size(), m = B[0].size(), k = B.size();
  IntMat C(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      __int128 acc = 0;
      for (size_t l = 0; l < k; ++l) acc += (__int128)A[i][l] * B[l][j];
      C[i][j] = checked_ll(acc);
    }
  return C;
}

long long mat_det(const IntMat& A) {
  size_t n = A.size();
  if (n == 1) return A[0][0];
  if (n == 2)
    return checked_ll((__int128)A[0][0] * A[1][1] - (__int128)A[0][1] * A[1][0]);
  long long det = 0;
  for (size_t j = 0; j < n; ++j) {
    IntMat minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(A[i][jj]);
      minor.push_back(row);
    }
    __int128 term = (__int128)A[0][j] * mat_det(minor);
    det = checked_ll((__int128)det + (j % 2 == 0 ? term : -term));
  }
  return det;
}

} // namespace braidmon
