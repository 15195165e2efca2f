#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidmon/perm_group.hpp"

using namespace braidmon;

namespace {

Perm cycle(int n, std::vector<int> pts) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Perm(img);
}

// independent oracle: exhaustive enumeration of the ind-constrained
// d-equivariant permutations
std::vector<Perm> wreath_enumeration(long long N, long long d, long long g) {
  WreathGround w{N, d};
  return filter_sn((int)N, [&](const Perm& p) {
    if (!is_d_equivariant(p, w)) return false;
    long long iv = ind_sigma(p, w);
    return g % d == 0 ? iv == 0 : iv % g == 0;
  });
}

} // namespace

TEST_CASE("bsgs on small symmetric groups") {
  PermGroup s3 = PermGroup::from_generators({cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
  CHECK(s3.order() == 6);

  PermGroup trivial = PermGroup::from_generators({}, 3);
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(Perm::identity(3)));
  CHECK(!trivial.contains(cycle(3, {0, 1})));

  PermGroup s4 = PermGroup::from_generators({cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  CHECK(s4.order() == 24);

  // A_4 misses the transpositions
  PermGroup a4 = PermGroup::from_generators(
      {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  CHECK(a4.order() == 12);
  CHECK(!a4.contains(cycle(4, {0, 1})));

  CHECK(PermGroup::from_generators({cycle(4, {0, 1, 2, 3})})
            .equals(PermGroup::from_generators({cycle(4, {0, 3, 2, 1})})));

  CHECK_THROWS_AS(PermGroup::from_generators({cycle(3, {0, 1}), cycle(4, {0, 1})}),
                  std::invalid_argument);
}

TEST_CASE("bsgs matches enumeration for (Z/2) wr S_2") {
  auto gens = wreath_subgroup_generators(4, 2, 1);
  PermGroup G = PermGroup::from_generators(gens, 4);
  CHECK(G.order() == 8);
  auto all = wreath_enumeration(4, 2, 1);
  CHECK(all.size() == 8);
  for (const auto& p : all) CHECK(G.contains(p));
}

TEST_CASE("ind_sigma basics") {
  WreathGround w{4, 2};
  CHECK(ind_sigma(Perm::identity(4), w) == 0);

  // +1 phase on exactly one block
  Perm one_block(std::vector<int>{1, 0, 2, 3});
  CHECK(ind_sigma(one_block, w) == 1);

  CHECK(ind_sigma(w.phase_rotation(), w) == (4 / 2) % 2);

  // non-equivariant permutation rejected
  Perm bad(std::vector<int>{1, 2, 3, 0});
  CHECK(!is_d_equivariant(bad, w));
  CHECK_THROWS_AS(ind_sigma(bad, w), std::invalid_argument);
}

TEST_CASE("ind_sigma is a homomorphism") {
  WreathGround w{6, 3};
  auto gens = wreath_subgroup_generators(6, 3, 1);
  std::mt19937_64 rng(5);
  auto rand_elt = [&] {
    Perm p = Perm::identity(6);
    for (int k = 0; k < 6; ++k) p = p.then(gens[rng() % gens.size()]);
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Perm a = rand_elt(), b = rand_elt();
    CHECK(ind_sigma(a.then(b), w) ==
          (ind_sigma(a, w) + ind_sigma(b, w)) % 3);
  }
}

TEST_CASE("wreath subgroup order law for all d | N <= 12") {
  for (long long N = 1; N <= 12; ++N)
    for (long long d = 1; d <= N; ++d) {
      if (N % d != 0) continue;
      for (long long g = 1; g <= d; ++g) {
        if (d % g != 0) continue;
        auto gens = wreath_subgroup_generators(N, d, g);
        PermGroup G = PermGroup::from_generators(gens, (int)N);
        CHECK(G.order() == wreath_subgroup_order(N, d, g));
      }
    }
}

TEST_CASE("wreath subgroup equals enumeration for N <= 8") {
  for (long long N = 2; N <= 8; ++N)
    for (long long d = 1; d <= N; ++d) {
      if (N % d != 0) continue;
      for (long long g = 1; g <= d; ++g) {
        if (d % g != 0) continue;
        PermGroup G = PermGroup::from_generators(
            wreath_subgroup_generators(N, d, g), (int)N);
        auto all = wreath_enumeration(N, d, g);
        CHECK(G.order() == all.size());
        for (const auto& p : all) CHECK(G.contains(p));
      }
    }
}
