#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidmon/reducible.hpp"

using namespace braidmon;

namespace {

SupportSet pts(std::vector<std::vector<long long>> v) {
  SupportSet s;
  s.points = std::move(v);
  return s;
}

} // namespace

TEST_CASE("normalize_pair basics") {
  ReduciblePair P = normalize_pair(pts({{0, 0}, {1, 0}, {0, 1}}),
                                   pts({{0, 0}, {0, 1}}));
  CHECK(!P.routed_twolines);
  CHECK(P.n == 1);
  CHECK(P.h == 1);
  CHECK(P.N == 1);

  P = normalize_pair(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}}),
                     pts({{0, 0}, {0, 2}}));
  CHECK(P.n == 2);
  CHECK(P.h == 2);
  CHECK(P.N == 4);

  // both collinear: routed to the two-lines case
  CHECK(normalize_pair(pts({{0, 0}, {1, 0}}), pts({{0, 0}, {0, 1}}))
            .routed_twolines);

  // A2 on a skew line gets straightened
  P = normalize_pair(pts({{0, 0}, {1, 0}, {0, 1}}), pts({{0, 0}, {1, 1}}));
  CHECK(!P.routed_twolines);
  CHECK(P.h == 1);

  // roles swap when the first support is the collinear one
  P = normalize_pair(pts({{0, 0}, {0, 2}}), pts({{0, 0}, {2, 0}, {4, 1}}));
  CHECK(!P.routed_twolines);
  CHECK(P.n == 4);
  CHECK(P.h == 2);

  // neither support on a line is rejected
  CHECK_THROWS_AS(normalize_pair(pts({{0, 0}, {1, 0}, {0, 1}}),
                                 pts({{0, 0}, {1, 0}, {0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("pair invariants") {
  // |S| = 4 on the doubled square
  ReduciblePair P = normalize_pair(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}}),
                                   pts({{0, 0}, {0, 2}}));
  PairInvariants inv = pair_invariants(P);
  CHECK(inv.s_order == 4);

  // unit triangle: irreducible, S trivial
  P = normalize_pair(pts({{0, 0}, {1, 0}, {0, 1}}), pts({{0, 0}, {0, 1}}));
  inv = pair_invariants(P);
  CHECK(inv.s_order == 1);
  CHECK(inv.s_factors.empty());

  // sharp pair with singleton slices: kappa = gcd(0, 0, 3) = 3
  P = normalize_pair(pts({{0, 0}, {1, 1}, {2, 3}}), pts({{0, 0}, {0, 3}}));
  inv = pair_invariants(P);
  CHECK(inv.sharp);
  CHECK(inv.kappa == 3);
}

TEST_CASE("trivial-S pair: kernel is the full product of fiber groups") {
  // A1 = {(0,0),(1,0),(2,1)} spans Z^2 with A2 = {(0,0),(0,2)}
  ReduciblePair P = normalize_pair(pts({{0, 0}, {1, 0}, {2, 1}}),
                                   pts({{0, 0}, {0, 2}}));
  PairInvariants inv = pair_invariants(P);
  REQUIRE(inv.s_order == 1);
  REQUIRE(inv.sharp);
  SolvedPair sp = instantiate_pair(P, 11);
  PermGroup K = predicted_kernel(sp);
  CHECK(K.order() == 4); // S_2 x S_2 over the two fibers
  PermGroup Kb = kernel_bruteforce(sp);
  CHECK(Kb.order() == 4);
  CHECK(K.equals(Kb));
}

TEST_CASE("sharp pair with S' = Z/2: diagonal translations only") {
  // A1 = {(0,0),(2,0),(4,1)}, A2 = {(0,0),(0,2)}: S = Z/2 inside C* x 1
  ReduciblePair P = normalize_pair(pts({{0, 0}, {2, 0}, {4, 1}}),
                                   pts({{0, 0}, {0, 2}}));
  PairInvariants inv = pair_invariants(P);
  REQUIRE(inv.s_order == 2);
  REQUIRE(inv.sprime_order == 2);
  REQUIRE(inv.sharp);
  CHECK(P.N == 8);
  SolvedPair sp = instantiate_pair(P, 13);
  PermGroup K = predicted_kernel(sp);
  // per fiber (Z/2) wr S_2 of order 8, sums constrained equal: 8*8/2
  CHECK(K.order() == 32);
  PermGroup Kb = kernel_bruteforce(sp);
  CHECK(Kb.order() == 32);
  CHECK(K.equals(Kb));
}

TEST_CASE("non-sharp pair with kappa = 2") {
  // A1 = {(0,0),(2,0),(2,2)}: upper slice has two points, kappa = 2
  ReduciblePair P = normalize_pair(pts({{0, 0}, {2, 0}, {2, 2}}),
                                   pts({{0, 0}, {0, 2}}));
  PairInvariants inv = pair_invariants(P);
  REQUIRE(!inv.sharp);
  REQUIRE(inv.kappa == 2);
  REQUIRE(inv.sprime_order == 2);
  CHECK(P.N == 4);
  SolvedPair sp = instantiate_pair(P, 17);
  PermGroup K = predicted_kernel(sp);
  // one S'-orbit per fiber; translations equal along the kappa-orbit
  CHECK(K.order() == 2);
  PermGroup Kb = kernel_bruteforce(sp);
  CHECK(K.equals(Kb));
}

TEST_CASE("numeric certification of three reducible pairs") {
  struct Case {
    std::vector<std::vector<long long>> a1, a2;
    unsigned long long seed;
  };
  for (const Case& c : {Case{{{0, 0}, {1, 0}, {2, 1}}, {{0, 0}, {0, 2}}, 5},
                        Case{{{0, 0}, {2, 0}, {4, 1}}, {{0, 0}, {0, 2}}, 7},
                        Case{{{0, 0}, {2, 0}, {2, 2}}, {{0, 0}, {0, 2}}, 9}}) {
    ReduciblePair P = normalize_pair(pts(c.a1), pts(c.a2));
    SolvedPair sp = instantiate_pair(P, c.seed);
    ReducibleReport rep = numeric_check_reducible(sp, c.seed);
    CHECK_MESSAGE(rep.kernel_match, "kernel mismatch");
    CHECK_MESSAGE(rep.group_match, "group mismatch: numeric ",
                  rep.numeric_order, " vs predicted ", rep.predicted_order);
    CHECK(rep.verified);
    CHECK(rep.predicted_order == rep.ga2_order * rep.kernel_order);
  }
}

TEST_CASE("three fibers over a full S_3 base group") {
  ReduciblePair P = normalize_pair(pts({{0, 0}, {1, 0}, {2, 1}}),
                                   pts({{0, 0}, {0, 1}, {0, 3}}));
  CHECK(P.h == 3);
  SolvedPair sp = instantiate_pair(P, 4);
  ReducibleReport rep = numeric_check_reducible(sp, 4);
  CHECK(rep.ga2_order == 6);
  CHECK(rep.kernel_order == 8);
  CHECK(rep.numeric_order == 48);
  CHECK(rep.verified);
}

TEST_CASE("predicted generators preserve the S-orbit partition") {
  ReduciblePair P = normalize_pair(pts({{0, 0}, {2, 0}, {4, 1}}),
                                   pts({{0, 0}, {0, 2}}));
  SolvedPair sp = instantiate_pair(P, 13);
  int N = (int)P.N;

  // S-orbits of the labels from the extracted action
  std::vector<int> orbit(N, -1);
  int norb = 0;
  for (int p = 0; p < N; ++p) {
    if (orbit[p] >= 0) continue;
    std::vector<int> stack{p};
    orbit[p] = norb;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : sp.s_action)
        if (orbit[g(x)] < 0) {
          orbit[g(x)] = norb;
          stack.push_back(g(x));
        }
    }
    ++norb;
  }

  PermGroup G = predicted_galois_reducible(sp);
  for (const auto& g : G.generators()) {
    std::vector<int> img(norb, -1);
    for (int p = 0; p < N; ++p) {
      int o = orbit[p], oi = orbit[g(p)];
      if (img[o] < 0) img[o] = oi;
      CHECK(img[o] == oi);
    }
  }
}

TEST_CASE("two-lines pairs") {
  // unit directions: one solution, trivial group
  TwoLinesPair t = normalize_twolines(pts({{0, 0}, {1, 0}}), pts({{0, 0}, {0, 1}}));
  CHECK(t.N == 1);
  TwoLinesReport rep = numeric_check_twolines(t, 3);
  CHECK(rep.numeric_order == 1);
  CHECK(rep.group_match);

  // parallel supports have no solutions
  CHECK_THROWS_AS(normalize_twolines(pts({{0, 0}, {1, 0}}), pts({{0, 0}, {2, 0}})),
                  std::invalid_argument);

  // skew pair with S = Z/2: directions (1,-1) and (1,1)
  TwoLinesPair t2 =
      normalize_twolines(pts({{0, 0}, {2, -2}}), pts({{0, 0}, {2, 2}}));
  CHECK(t2.n1 == 2);
  CHECK(t2.n2 == 2);
  CHECK(t2.nu == 2);
  CHECK(t2.N == 8);
  TwoLinesReport rep2 = numeric_check_twolines(t2, 21);
  CHECK_MESSAGE(rep2.group_match, "numeric ", rep2.numeric_order,
                " predicted ", rep2.predicted_order);
  CHECK(rep2.kernel_pairing != 0);
}
