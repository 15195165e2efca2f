#include "braidmon/support.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace braidmon {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { long long t = a % b; a = b; b = t; }
  return a;
}

long long gcd_vec(const std::vector<long long>& v) {
  long long g = 0;
  for (long long x : v) g = gcd_ll(g, x);
  return g;
}

void SupportSet::validate() const {
  if (points.empty()) throw std::invalid_argument("empty support");
  size_t d = points[0].size();
  if (d < 2) throw std::invalid_argument("support points need dimension >= 2");
  std::set<std::vector<long long>> seen;
  for (const auto& p : points) {
    if (p.size() != d)
      throw std::invalid_argument("support points of mixed dimension");
    if (!seen.insert(p).second)
      throw std::invalid_argument("duplicate support point");
  }
}

bool SupportSet::contains_origin() const {
  std::vector<long long> origin(dim(), 0);
  return std::find(points.begin(), points.end(), origin) != points.end();
}

bool SupportSet::collinear() const {
  if (points.size() <= 2) return true;
  const auto& p0 = points[0];
  std::vector<long long> dir;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<long long> v(dim());
    for (int j = 0; j < dim(); ++j) v[j] = points[i][j] - p0[j];
    if (dir.empty()) { dir = v; continue; }
    // v must be parallel to dir: all 2x2 minors vanish
    for (int a = 0; a < dim(); ++a)
      for (int b = a + 1; b < dim(); ++b) {
        __int128 m = (__int128)dir[a] * v[b] - (__int128)dir[b] * v[a];
        if (m != 0) return false;
      }
  }
  return true;
}

SupportSet normalize(const SupportSet& s) {
  s.validate();
  auto base = *std::min_element(s.points.begin(), s.points.end());
  SupportSet out;
  out.points.reserve(s.points.size());
  for (const auto& p : s.points) {
    std::vector<long long> q(p.size());
    for (size_t j = 0; j < p.size(); ++j) q[j] = p[j] - base[j];
    out.points.push_back(std::move(q));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

SupportInvariants invariants(const SupportSet& s) {
  s.validate();
  if (!s.contains_origin())
    throw std::invalid_argument("invariants: support not normalized");

  long long xmin = s.points[0][0], xmax = s.points[0][0];
  for (const auto& p : s.points) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
  }
  if (xmin != 0)
    throw std::invalid_argument("invariants: support not normalized");

  SupportInvariants inv;
  inv.N = xmax - xmin;
  if (inv.N == 0)
    throw std::invalid_argument("degenerate support: zero horizontal width");

  long long d = 0;
  for (const auto& p : s.points) d = gcd_ll(d, p[0] - xmin);
  inv.d = d;

  // extreme x-slices
  std::vector<const std::vector<long long>*> lo, hi;
  for (const auto& p : s.points) {
    if (p[0] == xmin) lo.push_back(&p);
    if (p[0] == xmax) hi.push_back(&p);
  }
  inv.sharp = lo.size() == 1 && hi.size() == 1;
  inv.on_line = s.collinear();

  if (inv.sharp) {
    // c_q / c_{q+N} = c * t^a with a = (low t-part) - (high t-part)
    std::vector<long long> a(s.dim() - 1);
    for (int j = 1; j < s.dim(); ++j) a[j - 1] = (*lo[0])[j] - (*hi[0])[j];
    inv.extremal_exponent = a;
    inv.theta = gcd_vec(a);
  } else {
    inv.theta = 1;
  }
  inv.g = inv.theta == 0 ? inv.d : gcd_ll(inv.d, inv.theta);
  return inv;
}

namespace {

// Is the induced map (i, v) -> (i, v.w) injective on s?
bool weights_injective(const SupportSet& s, const std::vector<long long>& w) {
  std::set<std::pair<long long, __int128>> seen;
  for (const auto& p : s.points) {
    __int128 dot = 0;
    for (size_t j = 1; j < p.size(); ++j) dot += (__int128)p[j] * w[j - 1];
    if (!seen.insert({p[0], dot}).second) return false;
  }
  return true;
}

SupportSet apply_weights(const SupportSet& s, const std::vector<long long>& w) {
  SupportSet out;
  std::set<std::vector<long long>> pts;
  for (const auto& p : s.points) {
    __int128 dot = 0;
    for (size_t j = 1; j < p.size(); ++j) dot += (__int128)p[j] * w[j - 1];
    if (dot > INT64_MAX || dot < INT64_MIN)
      throw std::overflow_error("monomial_specialization: overflow");
    pts.insert({p[0], (long long)dot});
  }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

// enumerate integer vectors of sup-norm exactly r in lexicographic order
bool next_in_box(std::vector<long long>& v, long long r) {
  for (int i = (int)v.size() - 1; i >= 0; --i) {
    if (v[i] < r) {
      ++v[i];
      for (size_t j = i + 1; j < v.size(); ++j) v[j] = -r;
      return true;
    }
  }
  return false;
}

} // namespace

Specialization monomial_specialization(const SupportSet& s) {
  s.validate();
  int k = s.num_params();
  if (k < 2) throw std::invalid_argument("already bivariate");
  if (s.collinear()) throw std::invalid_argument("degenerate support");
  SupportInvariants inv = invariants(s);

  for (long long r = 1; r <= 64; ++r) {
    std::vector<long long> w(k, -r);
    do {
      bool onbox = false;
      for (long long x : w) if (x == r || x == -r) { onbox = true; break; }
      if (!onbox) continue; // interior handled at smaller radius

      if (inv.sharp && inv.theta != 0) {
        __int128 dot = 0;
        for (int j = 0; j < k; ++j)
          dot += (__int128)inv.extremal_exponent[j] * w[j];
        if (dot != inv.theta) continue;
      }
      if (!weights_injective(s, w)) continue;
      SupportSet img = apply_weights(s, w);
      if (img.collinear()) continue;
      SupportInvariants inv2 = invariants(normalize(img));
      if (inv2.N != inv.N || inv2.d != inv.d || inv2.theta != inv.theta)
        continue;
      return Specialization{w, normalize(img)};
    } while (next_in_box(w, r));
  }
  throw std::runtime_error("monomial_specialization: no weights found");
}

} // namespace braidmon
