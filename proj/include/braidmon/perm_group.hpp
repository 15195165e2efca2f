#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "braidmon/perm.hpp"

namespace braidmon {

/// Permutation group with a base and strong generating set, built by a
/// deterministic Schreier-Sims. Immutable after construction.
class PermGroup {
public:
  /// Trivial group on n points.
  explicit PermGroup(int degree = 0);

  static PermGroup from_generators(const std::vector<Perm>& gens,
                                   int degree = -1);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  unsigned long long order() const;
  bool contains(const Perm& p) const;
  bool equals(const PermGroup& other) const;
  bool is_subgroup_of(const PermGroup& other) const;

  const std::vector<int>& base() const { return base_; }

private:
  void build();
  void recompute_orbit(size_t i);
  std::pair<Perm, size_t> strip(const Perm& g, size_t from) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<std::vector<Perm>> strong_;  // strong_[i] fixes base_[0..i-1]
  std::vector<std::vector<int>> orbit_;
  std::vector<std::vector<std::optional<Perm>>> transversal_;
};

/// Block/phase ground set for the d-equivariant subgroup of S_N: point
/// p = block*d + phase, the phase rotation adds 1 mod d in every block.
struct WreathGround {
  long long N = 0;
  long long d = 1;

  long long blocks() const { return N / d; }
  Perm phase_rotation() const;
  int point(long long block, long long phase) const {
    return (int)(block * d + ((phase % d) + d) % d);
  }
};

/// Is sigma in S_{N,d}, i.e. does it commute with the phase rotation?
bool is_d_equivariant(const Perm& sigma, const WreathGround& w);

/// Sum over blocks of the phase shifts, in Z/d. Throws "not d-equivariant"
/// if sigma is outside S_{N,d}.
long long ind_sigma(const Perm& sigma, const WreathGround& w);

/// Generators of { sigma in S_{N,d} : ind_sigma(sigma) in <g> }, the
/// wreath-type subgroup whose order is d^(N/d-1) * (d/g) * (N/d)!.
std::vector<Perm> wreath_subgroup_generators(long long N, long long d, long long g);

unsigned long long wreath_subgroup_order(long long N, long long d, long long g);

/// Visit every permutation of S_n in lexicographic rank order and keep
/// those satisfying pred. Shards over threads; result order is canonical.
std::vector<Perm> filter_sn(int n, const std::function<bool(const Perm&)>& pred,
                            bool parallel = true);

} // namespace braidmon
