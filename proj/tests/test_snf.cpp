#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidmon/snf.hpp"

using namespace braidmon;

namespace {

void check_snf(const IntMat& M) {
  SmithResult r = smith_normal_form(M);
  // U M V = D exactly
  CHECK(mat_mul(mat_mul(r.U, M), r.V) == r.D);
  CHECK(std::abs(mat_det(r.U)) == 1);
  CHECK(std::abs(mat_det(r.V)) == 1);
  // diagonal with divisibility
  for (size_t i = 0; i < r.D.size(); ++i)
    for (size_t j = 0; j < r.D[i].size(); ++j)
      if (i != j) CHECK(r.D[i][j] == 0);
  size_t k = std::min(r.D.size(), r.D[0].size());
  for (size_t i = 0; i + 1 < k; ++i) {
    CHECK(r.D[i][i] >= 0);
    if (r.D[i + 1][i + 1] != 0) {
      if (r.D[i][i] != 0) CHECK(r.D[i + 1][i + 1] % r.D[i][i] == 0);
      else CHECK(r.D[i][i] == 0); // zero cannot precede nonzero
    }
  }
}

} // namespace

TEST_CASE("snf normal forms") {
  SmithResult r = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(r.D[0][0] == 1);
  CHECK(r.D[1][1] == 6);
  check_snf({{2, 0}, {0, 3}});

  r = smith_normal_form({{1, 0}, {0, 1}});
  CHECK(r.D[0][0] == 1);
  CHECK(r.D[1][1] == 1);

  r = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(r.D[0][0] == 0);
  CHECK(r.D[1][1] == 0);
}

TEST_CASE("snf on random integer matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> v(-9, 9);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    IntMat M(rows, std::vector<long long>(cols));
    for (auto& row : M)
      for (auto& x : row) x = v(rng);
    check_snf(M);
  }
}
