#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "braidmon/braid.hpp"
#include "braidmon/rational.hpp"
#include "braidmon/support.hpp"

namespace braidmon {

/// Normal form 1 + t^a x^m + t^b x^n with 0 < m < n, gcd(m,n) = 1 and
/// delta = n*a - m*b > 0.
struct TrinomialModel {
  long long m = 0, n = 0, a = 0, b = 0;

  long long delta() const { return n * a - m * b; }
  long long gcd_nb() const;
  void validate() const;

  /// Common modulus of the nonzero bifurcation points:
  /// rho^delta = n^n / (m^m (n-m)^(n-m)).
  double rho() const;

  /// Arguments of the delta nonzero bifurcation points, in turns:
  /// (n/2 + j)/delta, j = 0..delta-1.
  std::vector<Rat> bifurcation_args() const;
  std::vector<std::complex<double>> bifurcation_points() const;
};

struct BifurcationSet {
  double rho = 0;
  std::vector<std::complex<double>> nonzero; // equidistributed on |t|=rho
  bool contains_origin = true;               // 0 always belongs to the set
};

BifurcationSet bifurcation_set(const TrinomialModel& t);

/// Record of the lattice moves taken to reach the type-(1) normal form.
struct LatticeTransform {
  std::vector<long long> translation; // subtracted before anything else
  long long x_division = 1;           // x-exponents divided by d
  bool t_inverted = false;            // t -> 1/t applied
};

struct Type1Result {
  bool is_type2 = false; // vertical line through two points
  TrinomialModel model;
  LatticeTransform transform;
};

/// Classify a 3-point planar support per the trinomial normal forms.
Type1Result to_type1(const SupportSet& s);

struct CoamoebaData {
  std::vector<std::pair<Rat, Rat>> singular_vertices; // (theta, nu) in turns
  long long d_geodesic_count = 0;                     // gcd(n, b)
};

/// The delta solutions of n*theta + b*nu = 0, m*theta + a*nu = pi on the
/// torus, exact over rational turns. nu-coordinates are pairwise distinct.
CoamoebaData singular_vertices(const TrinomialModel& t);

struct TrinomialPrediction {
  Rat nu0;                      // base argument, turns
  Rat theta_cut;                // x-argument cut, turns
  std::vector<Rat> loop_args;   // args of B_1..B_delta, ccw from nu0
  AnnularBraidWord l0;          // tau^b
  std::vector<int> k_of_j;      // k(j), 1-based labels, j = 1..delta
  std::map<int, int> fiber_histogram;
};

/// Default base argument (2n-1)/(4*delta): midpoint of an inner railway
/// edge, never the nu-coordinate of a singular vertex.
Rat default_base_arg(const TrinomialModel& t);

/// Predicted braid image of every railway loop: l_0 -> tau^b and
/// l_j -> b_{k(j)} with k(j) the label of the D-parallelogram holding the
/// singular vertex enclosed by l_j.
TrinomialPrediction predicted_monodromy(const TrinomialModel& t, const Rat& nu0);

std::map<int, int> fiber_data(const TrinomialModel& t, const Rat& nu0);

} // namespace braidmon
