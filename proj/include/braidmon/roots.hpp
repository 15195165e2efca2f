#pragma once

#include <complex>
#include <vector>

namespace braidmon {

using cdouble = std::complex<double>;

struct AberthOptions {
  double tol = 1e-13;       // relative backward-error target per root
  int max_iters = 400;
  unsigned long long seed = 12345; // initial-circle perturbation
  bool parallel = false;    // OpenMP update sweep
};

/// All roots of c_0 + c_1 x + ... + c_n x^n by simultaneous
/// Aberth-Ehrlich iteration from a perturbed-circle start. Requires
/// c_0 != 0 and c_n != 0 (the roots the theory tracks live in C*).
/// Throws on non-convergence.
std::vector<cdouble> aberth_roots(const std::vector<cdouble>& coeffs,
                                  const AberthOptions& opts = {});

/// Warm-started refinement: polish the given approximations against the
/// new coefficients (Aberth sweeps). Used by the path tracker.
std::vector<cdouble> aberth_refine(const std::vector<cdouble>& coeffs,
                                   std::vector<cdouble> guess,
                                   const AberthOptions& opts = {});

cdouble poly_eval(const std::vector<cdouble>& coeffs, cdouble x);

/// Backward-error style residual |p(x)| / sum |c_j||x|^j.
double poly_residual(const std::vector<cdouble>& coeffs, cdouble x);

} // namespace braidmon
