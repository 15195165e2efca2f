#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "braidmon/perm_group.hpp"
#include "braidmon/rational.hpp"
#include "braidmon/roots.hpp"
#include "braidmon/snf.hpp"
#include "braidmon/support.hpp"

namespace braidmon {

/// Reducible pair in the normalized coordinates: A2 on the t-axis with
/// 0 and h attained, A1 in the right half plane with x-projection
/// hitting 0 and n.
struct ReduciblePair {
  SupportSet A1, A2;
  long long n = 0, h = 0, N = 0; // N = n*h
  IntMat applied_map;            // unimodular change of monomial lattice
  bool routed_twolines = false;  // both supports collinear
};

ReduciblePair normalize_pair(const SupportSet& a1, const SupportSet& a2);

/// Torsion point of (C*)^2 written as (x, t) in (Q/Z)^2.
struct TorsionPoint {
  Rat x, t;
  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.x == b.x && a.t == b.t;
  }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    return a.x < b.x || (a.x == b.x && a.t < b.t);
  }
};

struct PairInvariants {
  std::vector<long long> s_factors;      // invariant factors != 1
  std::vector<TorsionPoint> s_elements;  // whole group S
  std::vector<TorsionPoint> s_prime;     // S cap (C* x {1}), cyclic
  long long s_order = 1;
  long long sprime_order = 1;
  long long kappa = 1;
  bool kappa_from_singleton = false; // a singleton slice contributed gcd 0
  bool sharp = false;
};

PairInvariants pair_invariants(const ReduciblePair& p);

/// The pair with seeded generic coefficients, its solved solution set and
/// the exact combinatorial structure extracted from it. Ground set label
/// = fiber * n + index-within-fiber.
struct SolvedPair {
  ReduciblePair pair;
  PairInvariants inv;
  std::vector<cdouble> p_coeffs, q_coeffs;       // per support point
  std::vector<cdouble> t_roots;                  // h fibers by argument
  std::vector<std::vector<cdouble>> x_roots;     // per fiber, n roots
  std::vector<Perm> s_action;                    // per element of S
  Perm sprime_generator_action;                  // canonical generator of S'
  std::vector<std::vector<int>> fiber_orbits;    // per fiber: orbit reps
  std::vector<int> orbit_of, phase_of;           // per label
  std::vector<std::vector<int>> fiber_kappa_orbits; // fibers grouped by mu_kappa

  int label(int fiber, int idx) const { return fiber * (int)pair.n + idx; }
  cdouble point_x(int lbl) const { return x_roots[lbl / pair.n][lbl % pair.n]; }
};

SolvedPair instantiate_pair(const ReduciblePair& p, unsigned long long seed);

/// Predicted kernel: fiber-wise wreaths over the S'-orbits with the
/// per-fiber total translations confined to J (all fibers equal when the
/// pair is sharp, equal along mu_kappa orbits otherwise).
PermGroup predicted_kernel(const SolvedPair& sp);

/// Literal enumeration of { sigma fiber-preserving, S-orbit-partition
/// preserving, per-fiber products of orbit ratios forming a tuple in J }.
/// Requires N <= 10.
PermGroup kernel_bruteforce(const SolvedPair& sp);

struct ReducibleReport {
  unsigned long long predicted_order = 0;
  unsigned long long numeric_order = 0;
  unsigned long long kernel_order = 0;
  unsigned long long kernel_bruteforce_order = 0;
  unsigned long long ga2_order = 0;
  bool kernel_match = false;
  bool group_match = false;
  bool verified = false;
};

/// Galois group predicted by the exact sequence: tracked section lifts of
/// the q-coefficient monodromy over the combinatorial kernel.
PermGroup predicted_galois_reducible(const SolvedPair& sp);

/// Full numeric certification: structured coefficient loops plus random
/// saturation, compared against the prediction and the kernel oracle
/// (the oracle runs when N <= enumerate_bound).
ReducibleReport numeric_check_reducible(const SolvedPair& sp,
                                        unsigned long long seed,
                                        long long enumerate_bound = 10);

/// --- two one-dimensional supports ---

struct TwoLinesPair {
  SupportSet A1, A2;
  std::vector<long long> dir1, dir2; // primitive directions
  long long n1 = 0, n2 = 0, nu = 0;  // lengths and intersection number
  long long N = 0;                   // n1*n2*nu
};

TwoLinesPair normalize_twolines(const SupportSet& a1, const SupportSet& a2);

struct TwoLinesReport {
  unsigned long long numeric_order = 0;
  unsigned long long predicted_order = 0;
  int kernel_pairing = 0; // 1: rows in n1*S; 2: rows in n2*S; 3: both agree
  bool group_match = false;
};

PermGroup predicted_galois_twolines(const TwoLinesPair& p,
                                    unsigned long long seed,
                                    int pairing /* 1 or 2 */);

TwoLinesReport numeric_check_twolines(const TwoLinesPair& p,
                                      unsigned long long seed);

} // namespace braidmon
