#pragma once

#include <string>
#include <vector>

#include "braidmon/perm.hpp"

namespace braidmon {

/// One letter of a word in the braid group of the annulus on N strands:
/// gen 0 is the rotation tau, gen j in 1..N the crossing b_j of the
/// cyclically adjacent argument slots (j-1, j mod N). sign is +-1.
struct BraidLetter {
  int gen = 0;
  int sign = 1;

  friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

/// Freely reduced word over {b_1..b_N, tau}. Words are equal as group
/// elements iff they induce the same automorphism of the free group on
/// x_1..x_N, z (the Artin-style action of the punctured-annulus braids).
class AnnularBraidWord {
public:
  AnnularBraidWord() = default;
  explicit AnnularBraidWord(int strands) : strands_(strands) {}

  static AnnularBraidWord tau(int n, int exponent = 1);
  static AnnularBraidWord b(int n, int j, int exponent = 1);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void push(BraidLetter l);            // with free reduction
  AnnularBraidWord inverse() const;
  friend AnnularBraidWord compose(const AnnularBraidWord& u,
                                  const AnnularBraidWord& v);

  /// pi_N: b_j -> transposition of slots (j-1, j mod N); tau -> +1 shift.
  Perm permutation() const;

  /// Exponent sum of tau. Well-defined on equality classes.
  long long ind() const;

  std::string str() const;

private:
  int strands_ = 0;
  std::vector<BraidLetter> letters_;
};

/// Word problem via the faithful free-group action.
bool braid_equal(const AnnularBraidWord& u, const AnnularBraidWord& v);

/// The embedding B*_{N/d} -> B*_N pulling configurations back under
/// x -> x^d: tau -> tau, b_j -> b_j b_{j+N/d} ... (d commuting factors).
AnnularBraidWord f_embed(const AnnularBraidWord& u, long long d);

/// Image of the free generator (1..N for x_i, N+1 for z) under the word,
/// as a reduced free word with letters +-index. Exposed for tests.
std::vector<int> free_image(const AnnularBraidWord& w, int generator);

} // namespace braidmon
