#pragma once

#include <string>
#include <vector>

namespace braidmon {

/// Permutation of {0..n-1} stored as an image table.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }
  explicit Perm(std::vector<int> images);

  static Perm identity(int n) { return Perm(n); }

  int degree() const { return (int)img_.size(); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  /// a.then(b): apply a first, then b.
  Perm then(const Perm& b) const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.img_ < b.img_;
  }

  std::string cycle_string() const;

private:
  std::vector<int> img_;
};

} // namespace braidmon
