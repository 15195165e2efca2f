#include "braidmon/roots.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace braidmon {

cdouble poly_eval(const std::vector<cdouble>& coeffs, cdouble x) {
  cdouble acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

double poly_residual(const std::vector<cdouble>& coeffs, cdouble x) {
  cdouble v = poly_eval(coeffs, x);
  double scale = 0.0, ax = std::abs(x), p = 1.0;
  for (const auto& c : coeffs) {
    scale += std::abs(c) * p;
    p *= ax;
  }
  if (scale == 0.0) return std::abs(v);
  return std::abs(v) / scale;
}

namespace {

// p and p' at x in one pass
std::pair<cdouble, cdouble> eval_with_deriv(const std::vector<cdouble>& c,
                                            cdouble x) {
  cdouble p = 0.0, dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp};
}

bool sweep(const std::vector<cdouble>& coeffs, std::vector<cdouble>& z,
           double tol, bool parallel) {
  int n = (int)z.size();
  std::vector<cdouble> delta(n, 0.0);
  std::vector<char> done(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && n >= 32)
#endif
  for (int i = 0; i < n; ++i) {
    if (poly_residual(coeffs, z[i]) < tol) {
      done[i] = 1;
      continue;
    }
    auto [p, dp] = eval_with_deriv(coeffs, z[i]);
    cdouble newton = dp == cdouble(0.0) ? cdouble(0.0) : p / dp;
    cdouble rep = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      cdouble d = z[i] - z[j];
      if (std::abs(d) < 1e-300) d = cdouble(1e-300, 0);
      rep += 1.0 / d;
    }
    cdouble denom = 1.0 - newton * rep;
    delta[i] = std::abs(denom) < 1e-300 ? newton : newton / denom;
  }
  bool all_done = true;
  for (int i = 0; i < n; ++i) {
    if (!done[i]) {
      z[i] -= delta[i];
      all_done = false;
    }
  }
  return all_done;
}

} // namespace

std::vector<cdouble> aberth_roots(const std::vector<cdouble>& coeffs,
                                  const AberthOptions& opts) {
  if (coeffs.size() < 2) throw std::invalid_argument("aberth: degree >= 1 required");
  int n = (int)coeffs.size() - 1;
  if (std::abs(coeffs[n]) == 0.0)
    throw std::invalid_argument("aberth: zero leading coefficient");
  if (std::abs(coeffs[0]) == 0.0)
    throw std::invalid_argument("aberth: zero constant coefficient");

  // perturbed circle of radius |c_0/c_n|^(1/n)
  double r = std::pow(std::abs(coeffs[0]) / std::abs(coeffs[n]), 1.0 / n);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  std::vector<cdouble> z(n);
  double phase0 = 0.618;
  for (int i = 0; i < n; ++i) {
    double ang = 2.0 * std::numbers::pi * (i + phase0 + jitter(rng)) / n;
    z[i] = std::polar(r * (1.0 + 0.1 * jitter(rng)), ang);
  }
  return aberth_refine(coeffs, std::move(z), opts);
}

std::vector<cdouble> aberth_refine(const std::vector<cdouble>& coeffs,
                                   std::vector<cdouble> z,
                                   const AberthOptions& opts) {
  for (int it = 0; it < opts.max_iters; ++it)
    if (sweep(coeffs, z, opts.tol, opts.parallel)) return z;
  // accept near-misses (double roots pin the backward error at ~tol^2 scale)
  for (const auto& x : z)
    if (poly_residual(coeffs, x) > opts.tol * 1e3)
      throw std::runtime_error("aberth: no convergence");
  return z;
}

} // namespace braidmon
