#include "braidmon/perm.hpp"

#include <stdexcept>

namespace braidmon {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= (int)img_.size() || seen[v])
      throw std::invalid_argument("Perm: not a bijection");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

Perm Perm::then(const Perm& b) const {
  if (degree() != b.degree())
    throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int> c(img_.size());
  for (int i = 0; i < degree(); ++i) c[i] = b.img_[img_[i]];
  Perm p;
  p.img_ = std::move(c);
  return p;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = img_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

} // namespace braidmon
