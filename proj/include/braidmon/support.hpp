#pragma once

#include <optional>
#include <string>
#include <vector>

namespace braidmon {

/// Finite set of exponent vectors in Z^{k+1}. Coordinate 0 is the
/// x-exponent, coordinate j+1 the exponent of the parameter t_j.
struct SupportSet {
  std::vector<std::vector<long long>> points;

  int dim() const { return points.empty() ? 0 : (int)points[0].size(); }
  int num_params() const { return dim() - 1; } // k
  size_t size() const { return points.size(); }

  void validate() const; // non-empty, equal dims, distinct points
  bool contains_origin() const;
  bool collinear() const; // all points on one affine line
};

struct SupportInvariants {
  long long N = 0;       // horizontal width
  long long d = 0;       // horizontal index
  bool sharp = false;
  long long theta = 0;   // border index
  long long g = 0;       // gcd(d, theta), with gcd(d,0) = d
  bool on_line = false;
  std::vector<long long> extremal_exponent; // a, only when sharp
};

/// Translate so that the lexicographic minimum point sits at the origin.
SupportSet normalize(const SupportSet& s);

/// The invariants of a normalized support. Throws on zero horizontal
/// width (all points share one x-exponent): such a polynomial has no
/// roots in (C*)^k and none of the theory applies.
SupportInvariants invariants(const SupportSet& s);

struct Specialization {
  std::vector<long long> weights; // n_1..n_k
  SupportSet image;               // in Z^2
};

/// Monomial substitution t_j = t^{n_j} reducing k >= 2 parameters to one,
/// preserving (N, d, theta). Deterministic search: increasing sup-norm
/// box, lexicographic within the box.
Specialization monomial_specialization(const SupportSet& s);

long long gcd_ll(long long a, long long b);
long long gcd_vec(const std::vector<long long>& v); // gcd(0,..,0) = 0

} // namespace braidmon
