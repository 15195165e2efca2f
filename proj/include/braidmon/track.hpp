#pragma once

#include <complex>
#include <vector>

#include "braidmon/braid.hpp"
#include "braidmon/loops.hpp"
#include "braidmon/perm.hpp"
#include "braidmon/perm_group.hpp"
#include "braidmon/roots.hpp"
#include "braidmon/support.hpp"

namespace braidmon {

/// Bivariate Laurent polynomial sum c * x^i t^e with i >= 0. The x-degree
/// span and a nonzero constant-in-x band are the caller's responsibility.
struct ParamPoly {
  struct Term {
    long long xexp = 0;
    long long texp = 0;
    cdouble coeff = 1.0;
  };
  std::vector<Term> terms;

  long long xdeg() const;
  std::vector<cdouble> coeffs_at(cdouble t) const;

  static ParamPoly from_support(const SupportSet& s,
                                const std::vector<cdouble>& coeffs);
};

struct TrackOptions {
  double cut_turns = 0.0;    // x-argument cut (turns)
  bool clockwise = true;     // loop traversal direction (global orientation)
  int crossing_sign = 1;     // +-1, global crossing-sign convention
  double max_arg_step_turns = 0.0; // 0 = auto: 1/(16 N)
  double sep_floor = 1e-9;
  double close_tol = 1e-5;
  double root_tol = 1e-13;
  unsigned long long seed = 12345;
  bool parallel = true;      // track loops concurrently
};

struct TrackedBraid {
  AnnularBraidWord word;
  Perm endpoint_perm;        // start slot -> end slot
  long long product_winding = 0; // of prod of strand values around 0
  double min_separation = 0;
  long long steps = 0;
};

/// Continuation of all roots of phi(., t) along the loop with braid-word
/// extraction: interior argument collisions emit b-letters (sign by the
/// smaller-modulus-over rule), cut passages emit tau letters.
TrackedBraid track_loop(const ParamPoly& phi, const LoopSpec& loop,
                        const TrackOptions& opts);

/// Track a batch, optionally in parallel; results merged by loop index.
std::vector<TrackedBraid> track_all(const ParamPoly& phi,
                                    const std::vector<LoopSpec>& loops,
                                    const TrackOptions& opts);

PermGroup monodromy_group(const ParamPoly& phi,
                          const std::vector<LoopSpec>& loops,
                          const TrackOptions& opts);

/// Midpoint of the largest argument gap of the base-point roots (turns).
double auto_cut(const std::vector<cdouble>& base_roots);

} // namespace braidmon
