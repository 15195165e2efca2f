#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidmon/braid.hpp"
#include "braidmon/perm_group.hpp"
#include "braidmon/support.hpp"
#include "braidmon/track.hpp"
#include "braidmon/trinomial.hpp"

namespace braidmon {

struct Prediction {
  SupportInvariants inv;
  std::vector<AnnularBraidWord> braid_generators;
  PermGroup galois_group;
  unsigned long long order_formula = 0;
};

/// Predicted braid monodromy generators and Galois group of a normalized
/// support: the embedded Ker(ind) generators together with one element of
/// ind-value theta, and the d-equivariant wreath subgroup cut out by
/// <g>. Line supports give the cyclic braid group <tau^theta>.
Prediction predict(const SupportSet& s);

struct CompareReport {
  bool group_match = false;
  bool ind_ok = false;       // every word has ind in theta*Z
  bool words_match = true;   // trinomial per-loop checks, when available
  bool verdict = false;
  unsigned long long numeric_order = 0;
  unsigned long long predicted_order = 0;
};

CompareReport compare(const Prediction& pred, const PermGroup& numeric,
                      const std::vector<AnnularBraidWord>& words);

struct VerifyOptions {
  double eps = 0;            // inner radius; 0 = rho/100
  double outer = 0;          // outer radius; 0 = rho*100
  double tol = 0;            // tracking residual target; 0 = default
  unsigned long long seed = 1;
  bool clockwise = true;     // loop orientation (calibrated default)
  int crossing_sign = 1;
  bool parallel = true;
};

struct VerifyReport {
  SupportInvariants inv;
  std::vector<long long> specialization_weights; // when k >= 2
  bool is_trinomial_type1 = false;
  std::optional<TrinomialModel> model;
  size_t loop_count = 0;
  std::vector<std::string> words;
  std::vector<std::string> predicted_words;
  std::vector<bool> word_matches;
  unsigned long long group_order = 0;
  unsigned long long predicted_order = 0;
  bool match = false;
  double rho = 0;
};

/// End-to-end certification: normalize, reduce to one parameter if
/// needed, predict, track the railway loops, extract words, compare.
VerifyReport verify_support(const SupportSet& s, const VerifyOptions& opts);

/// Numeric monodromy certification of a type-(1) trinomial model
/// phi = 1 + t^a x^(m dd) + t^b x^(n dd) (dd = 1 certifies the normal
/// form itself). Used by verify_support and the acceptance suite.
VerifyReport verify_trinomial(const TrinomialModel& t, long long dd,
                              const VerifyOptions& opts);

/// Relabel slot-indexed numeric permutations into block-major wreath
/// labels using the numeric rotation structure of the base roots.
Perm slot_to_block_relabel(const std::vector<cdouble>& base_roots_by_slot,
                           long long d);

/// Zeros of c_0(t) c_N(t) Disc_x(phi(., t)) inside |t| <= rmax, located
/// by boundary-winding subdivision and polished by secant iteration.
std::vector<cdouble> find_bifurcation_points(const ParamPoly& phi,
                                             double rmax = 0.0);

} // namespace braidmon
