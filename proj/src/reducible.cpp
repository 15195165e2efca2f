#include "braidmon/reducible.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "braidmon/galois.hpp"

namespace braidmon {

namespace {
constexpr double tau_rad = 2.0 * std::numbers::pi;

std::vector<long long> primitive_direction(const SupportSet& s) {
  // s normalized, collinear, contains origin
  std::vector<long long> dir;
  for (const auto& p : s.points) {
    bool zero = true;
    for (long long c : p) zero &= c == 0;
    if (!zero) { dir = p; break; }
  }
  if (dir.empty()) throw std::invalid_argument("degenerate one-point support");
  long long g = gcd_vec(dir);
  for (auto& c : dir) c /= g;
  // orient: first nonzero coordinate positive
  for (long long c : dir) {
    if (c > 0) break;
    if (c < 0) {
      for (auto& x : dir) x = -x;
      break;
    }
  }
  return dir;
}

// coefficient positions of collinear points along the primitive direction
std::vector<long long> line_coordinates(const SupportSet& s,
                                        const std::vector<long long>& dir) {
  int piv = 0;
  while (dir[piv] == 0) ++piv;
  std::vector<long long> ks;
  for (const auto& p : s.points) {
    long long k = p[piv] / dir[piv];
    for (size_t j = 0; j < p.size(); ++j)
      if (p[j] != k * dir[j])
        throw std::invalid_argument("support not on the expected line");
    ks.push_back(k);
  }
  return ks;
}

IntMat unimodular_to_vertical(const std::vector<long long>& u2) {
  // U with det 1 and U*u2 = (0,1)
  long long p = u2[0], q = u2[1];
  // extended euclid: p*s - q*r = 1
  long long old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long quo = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - quo * t);
  }
  // old_r = gcd = 1 (u2 primitive), old_s*p + old_t*q = 1
  long long ss = old_s, tt = old_t;
  // rows: (q, -p) and (ss, tt): det = q*tt + p*ss = 1
  return IntMat{{q, -p}, {ss, tt}};
}

SupportSet apply_map(const SupportSet& s, const IntMat& U) {
  SupportSet out;
  for (const auto& p : s.points)
    out.points.push_back({U[0][0] * p[0] + U[0][1] * p[1],
                          U[1][0] * p[0] + U[1][1] * p[1]});
  return out;
}

long long slice_gcd(const SupportSet& a1, long long x) {
  std::vector<long long> ts;
  for (const auto& p : a1.points)
    if (p[0] == x) ts.push_back(p[1]);
  if (ts.size() <= 1) return 0; // singleton convention
  long long g = 0;
  for (size_t i = 1; i < ts.size(); ++i) g = gcd_ll(g, ts[i] - ts[0]);
  return g;
}

} // namespace

ReduciblePair normalize_pair(const SupportSet& a1in, const SupportSet& a2in) {
  SupportSet a1 = normalize(a1in), a2 = normalize(a2in);
  ReduciblePair P;
  if (a1.collinear() && a2.collinear()) {
    P.routed_twolines = true;
    P.A1 = a1;
    P.A2 = a2;
    return P;
  }
  if (a1.collinear() && !a2.collinear())
    return normalize_pair(a2in, a1in); // swap roles
  if (!a2.collinear())
    throw std::invalid_argument("normalize_pair: A2 must lie on a line");

  auto u2 = primitive_direction(a2);
  IntMat U = unimodular_to_vertical(u2);
  SupportSet b1 = apply_map(a1, U), b2 = apply_map(a2, U);
  // flip t if A2 points downward
  long long tmax = 0, tmin = 0;
  for (const auto& p : b2.points) {
    tmax = std::max(tmax, p[1]);
    tmin = std::min(tmin, p[1]);
  }
  if (tmax + tmin < 0) {
    IntMat T{{1, 0}, {0, -1}};
    b1 = apply_map(b1, T);
    b2 = apply_map(b2, T);
    U = mat_mul(T, U);
  }
  b1 = normalize(b1);
  b2 = normalize(b2);

  P.A1 = b1;
  P.A2 = b2;
  P.applied_map = U;
  for (const auto& p : b1.points) P.n = std::max(P.n, p[0]);
  for (const auto& p : b2.points) P.h = std::max(P.h, p[1]);
  if (P.n == 0) throw std::invalid_argument("normalize_pair: A1 on the A2 line");
  P.N = P.n * P.h;
  return P;
}

PairInvariants pair_invariants(const ReduciblePair& P) {
  PairInvariants inv;
  IntMat rows;
  for (const auto& p : P.A1.points)
    if (p[0] != 0 || p[1] != 0) rows.push_back(p);
  for (const auto& p : P.A2.points)
    if (p[0] != 0 || p[1] != 0) rows.push_back(p);
  SmithResult snf = smith_normal_form(rows);
  long long d1 = snf.D.size() > 0 && snf.D[0].size() > 0 ? snf.D[0][0] : 0;
  long long d2 = snf.D.size() > 1 && snf.D[1].size() > 1 ? snf.D[1][1] : 0;
  if (d1 <= 0 || d2 <= 0)
    throw std::invalid_argument("pair_invariants: lattice not of full rank");
  if (d1 != 1) inv.s_factors.push_back(d1);
  if (d2 != 1) inv.s_factors.push_back(d2);
  inv.s_order = d1 * d2;

  const IntMat& V = snf.V; // solutions w = V * (k1/d1, k2/d2)
  std::set<TorsionPoint> elems;
  for (long long k1 = 0; k1 < d1; ++k1)
    for (long long k2 = 0; k2 < d2; ++k2) {
      Rat y1(k1, d1), y2(k2, d2);
      Rat wx = (Rat(V[0][0]) * y1 + Rat(V[0][1]) * y2).mod1();
      Rat wt = (Rat(V[1][0]) * y1 + Rat(V[1][1]) * y2).mod1();
      elems.insert({wx, wt});
    }
  if ((long long)elems.size() != inv.s_order)
    throw std::logic_error("pair_invariants: S enumeration mismatch");
  inv.s_elements.assign(elems.begin(), elems.end());
  for (const auto& e : inv.s_elements)
    if (e.t == Rat(0)) inv.s_prime.push_back(e);
  inv.sprime_order = (long long)inv.s_prime.size();

  long long glo = slice_gcd(P.A1, 0);
  long long ghi = slice_gcd(P.A1, P.n);
  long long g2 = 0;
  for (const auto& p : P.A2.points) g2 = gcd_ll(g2, p[1]);
  inv.kappa = gcd_ll(gcd_ll(glo, ghi), g2);
  inv.kappa_from_singleton = glo == 0 || ghi == 0;
  if (inv.kappa == 0) inv.kappa = 1;

  long long lo_count = 0, hi_count = 0;
  for (const auto& p : P.A1.points) {
    if (p[0] == 0) ++lo_count;
    if (p[0] == P.n) ++hi_count;
  }
  inv.sharp = lo_count == 1 && hi_count == 1;
  return inv;
}

namespace {

std::vector<cdouble> unit_coeffs(size_t count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 1.0);
  std::vector<cdouble> out;
  for (size_t i = 0; i < count; ++i)
    out.push_back(std::polar(1.0, tau_rad * ang(rng)));
  return out;
}

// univariate coefficients of q over its t-exponents
std::vector<cdouble> q_poly(const ReduciblePair& P,
                            const std::vector<cdouble>& qc) {
  std::vector<cdouble> c((size_t)P.h + 1, 0.0);
  for (size_t i = 0; i < P.A2.points.size(); ++i)
    c[(size_t)P.A2.points[i][1]] += qc[i];
  return c;
}

std::vector<cdouble> p_coeffs_at(const ReduciblePair& P,
                                 const std::vector<cdouble>& pc, cdouble t) {
  std::vector<cdouble> c((size_t)P.n + 1, 0.0);
  for (size_t i = 0; i < P.A1.points.size(); ++i) {
    long long e = P.A1.points[i][1];
    cdouble tv = 1.0;
    if (e >= 0)
      for (long long k = 0; k < e; ++k) tv *= t;
    else
      for (long long k = 0; k < -e; ++k) tv /= t;
    c[(size_t)P.A1.points[i][0]] += pc[i] * tv;
  }
  return c;
}

int nearest_index(const std::vector<cdouble>& pts, cdouble target,
                  double tol_rel) {
  double best = 1e300;
  int bi = -1;
  for (size_t i = 0; i < pts.size(); ++i) {
    double d = std::abs(pts[i] - target);
    if (d < best) { best = d; bi = (int)i; }
  }
  if (bi < 0 || best > tol_rel * (1.0 + std::abs(target)))
    throw std::runtime_error("nearest_index: no close match");
  return bi;
}

struct ArgLess {
  bool operator()(const cdouble& a, const cdouble& b) const {
    double aa = std::arg(a), ab = std::arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  }
};

} // namespace

SolvedPair instantiate_pair(const ReduciblePair& P, unsigned long long seed) {
  if (P.routed_twolines)
    throw std::invalid_argument("instantiate_pair: two-lines pair");
  SolvedPair sp;
  sp.pair = P;
  sp.inv = pair_invariants(P);

  std::mt19937_64 rng(seed);
  sp.p_coeffs = unit_coeffs(P.A1.points.size(), rng);
  sp.q_coeffs = unit_coeffs(P.A2.points.size(), rng);

  auto qp = q_poly(P, sp.q_coeffs);
  AberthOptions ao;
  ao.seed = seed + 101;
  sp.t_roots = aberth_roots(qp, ao);
  std::sort(sp.t_roots.begin(), sp.t_roots.end(), ArgLess{});

  for (const auto& t : sp.t_roots) {
    auto pc = p_coeffs_at(P, sp.p_coeffs, t);
    auto roots = aberth_roots(pc, ao);
    std::sort(roots.begin(), roots.end(), ArgLess{});
    sp.x_roots.push_back(roots);
  }

  int N = (int)P.N, n = (int)P.n, h = (int)P.h;

  // S-action on labels
  for (const auto& e : sp.inv.s_elements) {
    cdouble xi = std::polar(1.0, tau_rad * e.x.to_double());
    cdouble ze = std::polar(1.0, tau_rad * e.t.to_double());
    std::vector<int> img(N);
    for (int s = 0; s < h; ++s) {
      int s2 = nearest_index(sp.t_roots, sp.t_roots[s] * ze, 1e-6);
      for (int i = 0; i < n; ++i) {
        int i2 =
            nearest_index(sp.x_roots[s2], sp.x_roots[s][i] * xi, 1e-6);
        img[sp.label(s, i)] = sp.label(s2, i2);
      }
    }
    sp.s_action.push_back(Perm(img));
  }

  // canonical S' generator (1/c', 0)
  long long cp = sp.inv.sprime_order;
  sp.sprime_generator_action = Perm::identity(N);
  if (cp > 1) {
    TorsionPoint gen{Rat(1, cp), Rat(0)};
    bool found = false;
    for (size_t i = 0; i < sp.inv.s_elements.size(); ++i)
      if (sp.inv.s_elements[i] == gen) {
        sp.sprime_generator_action = sp.s_action[i];
        found = true;
      }
    if (!found)
      throw std::logic_error("instantiate_pair: canonical S' generator missing");
  }

  // S'-orbit structure per fiber
  sp.orbit_of.assign(N, -1);
  sp.phase_of.assign(N, 0);
  sp.fiber_orbits.resize(h);
  for (int s = 0; s < h; ++s) {
    for (int i = 0; i < n; ++i) {
      int lbl = sp.label(s, i);
      if (sp.orbit_of[lbl] >= 0) continue;
      int oid = (int)sp.fiber_orbits[s].size();
      sp.fiber_orbits[s].push_back(lbl);
      int x = lbl, phase = 0;
      while (sp.orbit_of[x] < 0) {
        sp.orbit_of[x] = oid;
        sp.phase_of[x] = phase++;
        x = sp.sprime_generator_action(x);
      }
      if (x != lbl || phase != (int)cp)
        throw std::logic_error("instantiate_pair: S'-orbit of wrong size");
    }
  }

  // mu_kappa orbits of fibers
  long long kap = sp.inv.kappa;
  std::vector<int> fker(h);
  if (kap > 1) {
    cdouble zk = std::polar(1.0, tau_rad / (double)kap);
    for (int s = 0; s < h; ++s)
      fker[s] = nearest_index(sp.t_roots, sp.t_roots[s] * zk, 1e-6);
  } else {
    std::iota(fker.begin(), fker.end(), 0);
  }
  std::vector<char> seen(h, 0);
  for (int s = 0; s < h; ++s) {
    if (seen[s]) continue;
    std::vector<int> orb;
    int x = s;
    while (!seen[x]) {
      seen[x] = 1;
      orb.push_back(x);
      x = fker[x];
    }
    sp.fiber_kappa_orbits.push_back(orb);
  }
  return sp;
}

namespace {

// members of orbit o in fiber s ordered by phase
std::vector<int> orbit_members(const SolvedPair& sp, int s, int o) {
  long long cp = sp.inv.sprime_order;
  std::vector<int> mem(cp);
  int rep = sp.fiber_orbits[s][o];
  int x = rep;
  for (long long ph = 0; ph < cp; ++ph) {
    mem[ph] = x;
    x = sp.sprime_generator_action(x);
  }
  return mem;
}

Perm shift_orbit(const SolvedPair& sp, Perm base, int s, int o, int amount) {
  // apply S'-generator^amount to orbit o of fiber s, on top of base
  long long cp = sp.inv.sprime_order;
  auto mem = orbit_members(sp, s, o);
  std::vector<int> img = base.images();
  for (long long ph = 0; ph < cp; ++ph)
    img[mem[ph]] = mem[(ph + amount % cp + cp) % cp];
  return Perm(img);
}

} // namespace

PermGroup predicted_kernel(const SolvedPair& sp) {
  int N = (int)sp.pair.N, h = (int)sp.pair.h;
  long long cp = sp.inv.sprime_order;
  std::vector<Perm> gens;

  // (a) adjacent orbit swaps, phase coherent
  for (int s = 0; s < h; ++s) {
    int orbits = (int)sp.fiber_orbits[s].size();
    for (int o = 0; o + 1 < orbits; ++o) {
      auto ma = orbit_members(sp, s, o), mb = orbit_members(sp, s, o + 1);
      std::vector<int> img(N);
      std::iota(img.begin(), img.end(), 0);
      for (long long ph = 0; ph < cp; ++ph) {
        img[ma[ph]] = mb[ph];
        img[mb[ph]] = ma[ph];
      }
      gens.push_back(Perm(img));
    }
  }

  if (cp > 1) {
    // (b) paired phases inside one fiber
    for (int s = 0; s < h; ++s)
      if (sp.fiber_orbits[s].size() >= 2) {
        Perm g = shift_orbit(sp, Perm::identity(N), s, 0, 1);
        g = shift_orbit(sp, g, s, 1, -1);
        gens.push_back(g);
      }
    // (c) J-patterns: total translation +1 on each fiber of a kappa-orbit
    // (all fibers at once when the pair is sharp)
    if (sp.inv.sharp) {
      Perm g = Perm::identity(N);
      for (int s = 0; s < h; ++s) g = shift_orbit(sp, g, s, 0, 1);
      gens.push_back(g);
    } else {
      for (const auto& orb : sp.fiber_kappa_orbits) {
        Perm g = Perm::identity(N);
        for (int s : orb) g = shift_orbit(sp, g, s, 0, 1);
        gens.push_back(g);
      }
    }
  }
  return PermGroup::from_generators(gens, N);
}

PermGroup kernel_bruteforce(const SolvedPair& sp) {
  int N = (int)sp.pair.N, n = (int)sp.pair.n, h = (int)sp.pair.h;
  if (N > 10) throw std::invalid_argument("kernel_bruteforce: N too large");
  long long cp = sp.inv.sprime_order;

  // S-orbit partition of labels
  std::vector<int> sorbit(N, -1);
  int norb = 0;
  for (int p = 0; p < N; ++p) {
    if (sorbit[p] >= 0) continue;
    std::vector<int> stack{p};
    sorbit[p] = norb;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : sp.s_action) {
        int y = g(x);
        if (sorbit[y] < 0) {
          sorbit[y] = norb;
          stack.push_back(y);
        }
      }
    }
    ++norb;
  }

  // S' torsion values for product matching
  std::vector<cdouble> sprime_vals;
  for (long long k = 0; k < cp; ++k)
    sprime_vals.push_back(std::polar(1.0, tau_rad * (double)k / (double)cp));

  // kappa-orbit id per fiber
  std::vector<int> korb(h, 0);
  for (size_t i = 0; i < sp.fiber_kappa_orbits.size(); ++i)
    for (int s : sp.fiber_kappa_orbits[i]) korb[s] = (int)i;

  auto pred = [&](const Perm& sigma) {
    // fiber-preserving
    for (int p = 0; p < N; ++p)
      if (sigma(p) / n != p / n) return false;
    // S-orbit partition preserved
    std::vector<int> orbimg(norb, -1);
    for (int p = 0; p < N; ++p) {
      int o = sorbit[p], oi = sorbit[sigma(p)];
      if (orbimg[o] < 0) orbimg[o] = oi;
      else if (orbimg[o] != oi) return false;
    }
    // ratio constancy per S'-orbit; per-fiber product in J
    std::vector<int> fiber_total(h, 0);
    for (int s = 0; s < h; ++s) {
      cdouble prod = 1.0;
      for (size_t o = 0; o < sp.fiber_orbits[s].size(); ++o) {
        auto mem = orbit_members(sp, s, (int)o);
        cdouble ratio =
            sp.point_x(sigma(mem[0])) / sp.point_x(mem[0]);
        for (size_t ph = 1; ph < mem.size(); ++ph) {
          cdouble r2 = sp.point_x(sigma(mem[ph])) / sp.point_x(mem[ph]);
          if (std::abs(r2 - ratio) > 1e-6 * (1.0 + std::abs(ratio)))
            return false;
        }
        prod *= ratio;
      }
      int match = -1;
      for (long long k = 0; k < cp; ++k)
        if (std::abs(prod - sprime_vals[(size_t)k]) < 1e-5) match = (int)k;
      if (match < 0) return false;
      fiber_total[s] = match;
    }
    if (sp.inv.sharp) {
      for (int s = 1; s < h; ++s)
        if (fiber_total[s] != fiber_total[0]) return false;
    } else {
      for (const auto& orb : sp.fiber_kappa_orbits)
        for (size_t i = 1; i < orb.size(); ++i)
          if (fiber_total[orb[i]] != fiber_total[orb[0]]) return false;
    }
    return true;
  };

  auto elems = filter_sn(N, pred, true);
  return PermGroup::from_generators(elems, N);
}

// ---------------------------------------------------------------------
// coefficient-path tracking of the full system
// ---------------------------------------------------------------------

namespace {

using CoeffPath =
    std::function<void(double, std::vector<cdouble>&, std::vector<cdouble>&)>;

bool newton_all(const std::vector<cdouble>& coeffs, std::vector<cdouble>& z,
                double tol) {
  for (auto& x : z) {
    bool ok = false;
    for (int it = 0; it < 14; ++it) {
      cdouble p = 0.0, dp = 0.0;
      for (auto cit = coeffs.rbegin(); cit != coeffs.rend(); ++cit) {
        dp = dp * x + p;
        p = p * x + *cit;
      }
      if (poly_residual(coeffs, x) < tol) { ok = true; break; }
      if (std::abs(dp) < 1e-300) break;
      x -= p / dp;
    }
    if (!ok && poly_residual(coeffs, x) > tol * 100) return false;
  }
  return true;
}

double min_sep(const std::vector<cdouble>& z) {
  double m = 1e300;
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      m = std::min(m, std::abs(z[i] - z[j]));
  return m;
}

/// Track the solution set of (p, q) along a closed coefficient path.
/// Returns the endpoint permutation of labels, or nullopt on failure.
std::optional<Perm> track_pair_loop(const SolvedPair& sp, const CoeffPath& path) {
  const ReduciblePair& P = sp.pair;
  int n = (int)P.n, h = (int)P.h, N = (int)P.N;

  std::vector<cdouble> pc = sp.p_coeffs, qc = sp.q_coeffs;
  path(0.0, pc, qc);
  // paths must start at the base coefficients
  std::vector<cdouble> tz = sp.t_roots;
  std::vector<std::vector<cdouble>> xz = sp.x_roots;

  double s = 0.0, hstep = 1.0 / 96.0;
  const double hmin = 1e-11;
  long long guard = 2'000'000;

  while (s < 1.0) {
    double step = std::min(hstep, 1.0 - s);
    std::vector<cdouble> pc2 = sp.p_coeffs, qc2 = sp.q_coeffs;
    path(s + step, pc2, qc2);

    std::vector<cdouble> tz2 = tz;
    auto qp = q_poly(P, qc2);
    bool ok = newton_all(qp, tz2, 1e-12);
    double tsep_old = min_sep(tz);
    if (ok)
      for (int i = 0; i < h && ok; ++i)
        if (std::abs(tz2[i] - tz[i]) > 0.4 * tsep_old) ok = false;
    if (ok && h > 1 && min_sep(tz2) < 1e-9) ok = false;
    if (ok)
      for (int i = 0; i < h && ok; ++i)
        if (std::abs(tz2[i]) < 1e-9) ok = false;

    std::vector<std::vector<cdouble>> xz2 = xz;
    if (ok) {
      for (int fs = 0; fs < h && ok; ++fs) {
        auto pcf = p_coeffs_at(P, pc2, tz2[fs]);
        if (!newton_all(pcf, xz2[fs], 1e-11)) { ok = false; break; }
        double sep_old = min_sep(xz[fs]);
        for (int i = 0; i < n && ok; ++i)
          if (std::abs(xz2[fs][i] - xz[fs][i]) > 0.4 * sep_old) ok = false;
        if (ok && n > 1 && min_sep(xz2[fs]) < 1e-9) ok = false;
        if (ok)
          for (int i = 0; i < n && ok; ++i)
            if (std::abs(xz2[fs][i]) < 1e-12) ok = false;
      }
    }

    if (ok) {
      tz = std::move(tz2);
      xz = std::move(xz2);
      s += step;
      hstep = std::min(hstep * 1.5, 1.0 / 48.0);
    } else {
      hstep = step / 2.0;
      if (hstep < hmin) return std::nullopt;
    }
    if (--guard <= 0) return std::nullopt;
  }

  // closure: match final configuration back to the base labels
  std::vector<int> img(N, -1);
  std::vector<char> used(N, 0);
  for (int fs = 0; fs < h; ++fs) {
    int fs2;
    try {
      fs2 = nearest_index(sp.t_roots, tz[fs], 1e-4);
    } catch (...) {
      return std::nullopt;
    }
    for (int i = 0; i < n; ++i) {
      int j;
      try {
        j = nearest_index(sp.x_roots[fs2], xz[fs][i], 1e-4);
      } catch (...) {
        return std::nullopt;
      }
      int to = sp.label(fs2, j);
      if (used[to]) return std::nullopt;
      used[to] = 1;
      img[sp.label(fs, i)] = to;
    }
  }
  return Perm(img);
}

// circle of radius r around center in one designated coefficient
CoeffPath one_coeff_circle(bool in_q, size_t idx, cdouble center, double r,
                           const SolvedPair& sp) {
  cdouble base = in_q ? sp.q_coeffs[idx] : sp.p_coeffs[idx];
  // travel: base -> circle around center -> base, along the ray through base
  return [=](double s, std::vector<cdouble>& pc, std::vector<cdouble>& qc) {
    cdouble dir = base - center;
    double rr = std::abs(dir);
    cdouble val;
    if (rr < 1e-12) {
      val = center + r * std::polar(1.0, tau_rad * s);
    } else {
      cdouble u = dir / rr;
      // approach the circle, go around, come back
      double tin = 0.15, tout = 0.85;
      if (s < tin) {
        double a = s / tin;
        val = center + u * (rr + a * (r - rr));
      } else if (s < tout) {
        double a = (s - tin) / (tout - tin);
        val = center + u * r * std::polar(1.0, tau_rad * a);
      } else {
        double a = (s - tout) / (1.0 - tout);
        val = center + u * (r + a * (rr - r));
      }
    }
    if (in_q) qc[idx] = val;
    else pc[idx] = val;
  };
}

std::vector<cdouble> derivative(const std::vector<cdouble>& c) {
  std::vector<cdouble> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * (double)i);
  return d;
}

} // namespace

PermGroup predicted_galois_reducible(const SolvedPair& sp) {
  const ReduciblePair& P = sp.pair;
  int N = (int)P.N;
  if (N == 1) return PermGroup(1);

  PermGroup K = predicted_kernel(sp);

  // G_{A2} of the universal univariate polynomial supported at A_t,
  // via the doubled support (Remark-2.5 style)
  SupportSet doubled;
  for (const auto& p : P.A2.points) {
    doubled.points.push_back({p[1], 0});
    doubled.points.push_back({p[1], 1});
  }
  Prediction ga2 = predict(normalize(doubled));
  unsigned long long ga2_order = ga2.order_formula;

  // section lifts: q-pencil loops (constant coefficient of q varies)
  size_t const_idx = SIZE_MAX;
  for (size_t i = 0; i < P.A2.points.size(); ++i)
    if (P.A2.points[i][1] == 0) const_idx = i;
  if (const_idx == SIZE_MAX)
    throw std::logic_error("predicted_galois_reducible: no constant in q");

  // bifurcation values in the shifted-constant coordinate: critical
  // values of q give c0 - v, and the vanishing constant gives a root of
  // q at t = 0
  auto qp = q_poly(P, sp.q_coeffs);
  std::vector<cdouble> centers;
  {
    auto dq = derivative(qp);
    size_t lead = 0;
    while (lead < dq.size() && std::abs(dq[lead]) < 1e-14) ++lead;
    std::vector<cdouble> red(dq.begin() + lead, dq.end());
    if (red.size() >= 2)
      for (auto& tc : aberth_roots(red))
        centers.push_back(qp[0] - poly_eval(qp, tc));
    centers.push_back(cdouble(0.0));
  }

  std::vector<Perm> lifts;
  auto try_center = [&](cdouble c) {
    double dmin = 1e300;
    for (const auto& o : centers)
      if (std::abs(o - c) > 1e-12) dmin = std::min(dmin, std::abs(o - c));
    dmin = std::min(dmin, std::abs(sp.q_coeffs[const_idx] - c));
    double r = 0.35 * std::min(dmin, 1e300);
    if (!(r > 1e-9)) r = 0.05;
    for (int attempt = 0; attempt < 4; ++attempt) {
      auto perm = track_pair_loop(
          sp, one_coeff_circle(true, const_idx, c, r, sp));
      if (perm) { lifts.push_back(*perm); return; }
      r *= 0.5;
    }
  };
  for (const auto& c : centers) try_center(c);

  // saturate the fiber image up to |G_{A2}|
  auto fiber_image = [&](const std::vector<Perm>& gens) {
    std::vector<Perm> fgens;
    for (const auto& g : gens) {
      std::vector<int> fi((size_t)P.h);
      for (int s = 0; s < (int)P.h; ++s) fi[(size_t)s] = g(sp.label(s, 0)) / (int)P.n;
      fgens.push_back(Perm(fi));
    }
    return PermGroup::from_generators(fgens, (int)P.h);
  };
  std::mt19937_64 rng(0xBADA55);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int extra = 0;
  while (fiber_image(lifts).order() < ga2_order && extra < 40) {
    cdouble c = sp.q_coeffs[const_idx] +
                std::polar(1.5 * u(rng) + 0.2, tau_rad * u(rng));
    try_center(c);
    ++extra;
  }
  if (fiber_image(lifts).order() != ga2_order)
    throw std::runtime_error(
        "predicted_galois_reducible: could not realize G_{A2} lifts");

  std::vector<Perm> gens = lifts;
  for (const auto& g : K.generators()) gens.push_back(g);
  PermGroup G = PermGroup::from_generators(gens, N);
  if (G.order() != ga2_order * K.order())
    throw std::runtime_error(
        "predicted_galois_reducible: order mismatch against |G_A2|*|K|");
  return G;
}

ReducibleReport numeric_check_reducible(const SolvedPair& sp,
                                        unsigned long long seed,
                                        long long enumerate_bound) {
  const ReduciblePair& P = sp.pair;
  int N = (int)P.N, n = (int)P.n, h = (int)P.h;
  ReducibleReport rep;

  PermGroup predicted = predicted_galois_reducible(sp);
  PermGroup K = predicted_kernel(sp);
  rep.predicted_order = predicted.order();
  rep.kernel_order = K.order();
  if (N <= std::min(enumerate_bound, (long long)10)) {
    PermGroup Kb = kernel_bruteforce(sp);
    rep.kernel_bruteforce_order = Kb.order();
    rep.kernel_match = K.equals(Kb);
  } else {
    rep.kernel_bruteforce_order = 0;
    rep.kernel_match = true; // not checked at this size
  }

  SupportSet doubled;
  for (const auto& p : P.A2.points) {
    doubled.points.push_back({p[1], 0});
    doubled.points.push_back({p[1], 1});
  }
  rep.ga2_order = predict(normalize(doubled)).order_formula;

  std::vector<Perm> gens;
  auto add = [&](std::optional<Perm> p) {
    if (p && !p->is_identity()) gens.push_back(*p);
  };

  // (L1) q-pencil loops around critical values and the root-at-zero value
  {
    size_t ci = SIZE_MAX;
    for (size_t i = 0; i < P.A2.points.size(); ++i)
      if (P.A2.points[i][1] == 0) ci = i;
    auto qp = q_poly(P, sp.q_coeffs);
    std::vector<cdouble> centers;
    auto dq = derivative(qp);
    size_t lead = 0;
    while (lead < dq.size() && std::abs(dq[lead]) < 1e-14) ++lead;
    std::vector<cdouble> red(dq.begin() + lead, dq.end());
    if (red.size() >= 2)
      for (auto& tc : aberth_roots(red))
        centers.push_back(qp[0] - poly_eval(qp, tc));
    centers.push_back(qp[0] - poly_eval(qp, cdouble(0.0)));
    for (auto& c : centers) {
      double dmin = 1e300;
      for (auto& o : centers)
        if (std::abs(o - c) > 1e-12) dmin = std::min(dmin, std::abs(o - c));
      double r = std::min(0.35 * dmin, 0.5);
      if (!(r > 1e-9)) r = 0.05;
      for (int att = 0; att < 4; ++att) {
        auto p = track_pair_loop(sp, one_coeff_circle(true, ci, c, r, sp));
        if (p) { add(p); break; }
        r *= 0.5;
      }
    }
  }

  // (L2) p constant-coefficient loops: x-critical values per fiber and
  // the x-root-through-zero values
  {
    size_t ci = SIZE_MAX;
    for (size_t i = 0; i < P.A1.points.size(); ++i)
      if (P.A1.points[i][0] == 0 && P.A1.points[i][1] == 0) ci = i;
    std::vector<cdouble> centers;
    for (int s = 0; s < h; ++s) {
      auto pcf = p_coeffs_at(P, sp.p_coeffs, sp.t_roots[s]);
      auto dp = derivative(pcf);
      size_t lead = 0;
      while (lead < dp.size() && std::abs(dp[lead]) < 1e-14) ++lead;
      std::vector<cdouble> red(dp.begin() + lead, dp.end());
      if (red.size() >= 2)
        for (auto& xc : aberth_roots(red))
          centers.push_back(pcf[0] - poly_eval(pcf, xc));
      centers.push_back(pcf[0] - poly_eval(pcf, cdouble(0.0)));
    }
    // dedupe near-coincident centers (the kappa-symmetry makes them merge)
    std::vector<cdouble> uniq;
    for (auto& c : centers) {
      bool dup = false;
      for (auto& u2 : uniq) dup |= std::abs(u2 - c) < 1e-8;
      if (!dup) uniq.push_back(c);
    }
    for (auto& c : uniq) {
      double dmin = 1e300;
      for (auto& o : uniq)
        if (std::abs(o - c) > 1e-12) dmin = std::min(dmin, std::abs(o - c));
      double r = std::min(0.35 * dmin, 0.5);
      if (!(r > 1e-9)) r = 0.05;
      for (int att = 0; att < 4; ++att) {
        auto p = track_pair_loop(sp, one_coeff_circle(false, ci, c, r, sp));
        if (p) { add(p); break; }
        r *= 0.5;
      }
    }
  }

  // (L3) top-coefficient loops when the upper slice is multi-term
  {
    std::vector<size_t> top_idx;
    for (size_t i = 0; i < P.A1.points.size(); ++i)
      if (P.A1.points[i][0] == P.n) top_idx.push_back(i);
    if (top_idx.size() >= 2) {
      size_t vi = top_idx[0];
      long long jstar = P.A1.points[vi][1];
      std::vector<cdouble> centers;
      for (int s = 0; s < h; ++s) {
        // value of the varied coefficient killing c_n(t_s)
        cdouble cn = 0.0;
        for (size_t i : top_idx) {
          cdouble tv = 1.0;
          long long e = P.A1.points[i][1];
          for (long long k = 0; k < std::abs(e); ++k)
            tv = e > 0 ? tv * sp.t_roots[s] : tv / sp.t_roots[s];
          cn += sp.p_coeffs[i] * tv;
        }
        cdouble tj = 1.0;
        for (long long k = 0; k < std::abs(jstar); ++k)
          tj = jstar > 0 ? tj * sp.t_roots[s] : tj / sp.t_roots[s];
        centers.push_back(sp.p_coeffs[vi] - cn / tj);
      }
      std::vector<cdouble> uniq;
      for (auto& c : centers) {
        bool dup = false;
        for (auto& u2 : uniq) dup |= std::abs(u2 - c) < 1e-8;
        if (!dup) uniq.push_back(c);
      }
      for (auto& c : uniq) {
        double dmin = 1e300;
        for (auto& o : uniq)
          if (std::abs(o - c) > 1e-12) dmin = std::min(dmin, std::abs(o - c));
        double r = std::min(0.3 * dmin, 0.3);
        if (!(r > 1e-9)) r = 0.05;
        for (int att = 0; att < 4; ++att) {
          auto p = track_pair_loop(sp, one_coeff_circle(false, vi, c, r, sp));
          if (p) { add(p); break; }
          r *= 0.5;
        }
      }
    }
  }

  // random joint loops until the group stabilizes
  std::mt19937_64 rng(seed + 77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> pick_q(0, 1);
  PermGroup G = PermGroup::from_generators(gens, N);
  int stable = 0;
  for (int batch = 0; batch < 24 && stable < 3; ++batch) {
    unsigned long long before = G.order();
    for (int k = 0; k < 3; ++k) {
      bool in_q = pick_q(rng) == 1;
      size_t idx = in_q ? (size_t)(u(rng) * sp.q_coeffs.size())
                        : (size_t)(u(rng) * sp.p_coeffs.size());
      idx = std::min(idx, (in_q ? sp.q_coeffs.size() : sp.p_coeffs.size()) - 1);
      cdouble base = in_q ? sp.q_coeffs[idx] : sp.p_coeffs[idx];
      cdouble c = base + std::polar(0.2 + 1.6 * u(rng), tau_rad * u(rng));
      double r = std::abs(base - c) * (0.3 + 0.6 * u(rng));
      add(track_pair_loop(sp, one_coeff_circle(in_q, idx, c, r, sp)));
    }
    G = PermGroup::from_generators(gens, N);
    stable = G.order() == before ? stable + 1 : 0;
  }

  rep.numeric_order = G.order();
  rep.group_match = G.equals(predicted);
  rep.verified = rep.group_match && rep.kernel_match;
  return rep;
}

// ---------------------------------------------------------------------
// two one-dimensional supports
// ---------------------------------------------------------------------

TwoLinesPair normalize_twolines(const SupportSet& a1in, const SupportSet& a2in) {
  SupportSet a1 = normalize(a1in), a2 = normalize(a2in);
  if (!a1.collinear() || !a2.collinear())
    throw std::invalid_argument("normalize_twolines: both supports must be lines");
  TwoLinesPair P;
  P.A1 = a1;
  P.A2 = a2;
  P.dir1 = primitive_direction(a1);
  P.dir2 = primitive_direction(a2);
  long long det = P.dir1[0] * P.dir2[1] - P.dir1[1] * P.dir2[0];
  if (det == 0)
    throw std::invalid_argument("no solutions generically: parallel supports");
  P.nu = det > 0 ? det : -det;
  auto k1 = line_coordinates(a1, P.dir1);
  auto k2 = line_coordinates(a2, P.dir2);
  P.n1 = *std::max_element(k1.begin(), k1.end());
  P.n2 = *std::max_element(k2.begin(), k2.end());
  if (P.n1 <= 0 || P.n2 <= 0)
    throw std::invalid_argument("normalize_twolines: degenerate support");
  P.N = P.n1 * P.n2 * P.nu;
  return P;
}

namespace {

struct TwoLinesModel {
  TwoLinesPair P;
  std::vector<cdouble> c1, c2;           // univariate coefficients
  std::vector<cdouble> roots1, roots2;   // base roots (sorted by arg)
  IntMat Us, Ds;                         // SNF data of [dir1; dir2]
  long long nu = 0;
  std::vector<std::pair<long long, long long>> cosets; // reps of Z^2/UZ^2

  int coset_id(long long k1, long long k2) const {
    long long a = Us[0][0] * k1 + Us[0][1] * k2;
    long long b = Us[1][0] * k1 + Us[1][1] * k2;
    long long d1 = Ds[0][0], d2 = Ds[1][1];
    a = ((a % d1) + d1) % d1;
    b = ((b % d2) + d2) % d2;
    return (int)(a * d2 + b);
  }
  int label(int i, int j, int c) const {
    return (i * (int)P.n2 + j) * (int)nu + c;
  }
};

std::vector<cdouble> univariate_from_line(const SupportSet& s,
                                          const std::vector<long long>& dir,
                                          const std::vector<cdouble>& coeffs,
                                          long long deg) {
  auto ks = line_coordinates(s, dir);
  std::vector<cdouble> c((size_t)deg + 1, 0.0);
  for (size_t i = 0; i < ks.size(); ++i) c[(size_t)ks[i]] += coeffs[i];
  return c;
}

TwoLinesModel make_twolines_model(const TwoLinesPair& P,
                                  unsigned long long seed) {
  TwoLinesModel M;
  M.P = P;
  M.nu = P.nu;
  std::mt19937_64 rng(seed);
  M.c1 = unit_coeffs(P.A1.points.size(), rng);
  M.c2 = unit_coeffs(P.A2.points.size(), rng);
  auto u1 = univariate_from_line(P.A1, P.dir1, M.c1, P.n1);
  auto u2 = univariate_from_line(P.A2, P.dir2, M.c2, P.n2);
  M.roots1 = aberth_roots(u1);
  M.roots2 = aberth_roots(u2);
  std::sort(M.roots1.begin(), M.roots1.end(), ArgLess{});
  std::sort(M.roots2.begin(), M.roots2.end(), ArgLess{});

  IntMat U{{P.dir1[0], P.dir1[1]}, {P.dir2[0], P.dir2[1]}};
  SmithResult snf = smith_normal_form(U);
  M.Us = snf.U;
  M.Ds = snf.D;
  return M;
}

struct Braid1D {
  Perm sigma;
  std::vector<long long> windings;
};

/// Track roots of a univariate coefficient family around a closed loop;
/// returns the root permutation and the per-strand winding numbers.
std::optional<Braid1D> track_univariate_loop(
    const std::vector<cdouble>& base_roots,
    const std::function<std::vector<cdouble>(double)>& coeffs_at) {
  int n = (int)base_roots.size();
  std::vector<cdouble> z = base_roots;
  std::vector<double> wind(n, 0.0);
  double s = 0.0, h = 1.0 / 96.0;
  const double hmin = 1e-11;
  long long guard = 1'000'000;
  while (s < 1.0) {
    double step = std::min(h, 1.0 - s);
    auto c = coeffs_at(s + step);
    std::vector<cdouble> z2 = z;
    bool ok = newton_all(c, z2, 1e-12);
    double sep = min_sep(z);
    if (ok)
      for (int i = 0; i < n && ok; ++i) {
        if (std::abs(z2[i] - z[i]) > 0.4 * sep) ok = false;
        if (std::abs(z2[i]) < 1e-10) ok = false;
      }
    if (ok && n > 1 && min_sep(z2) < 1e-9) ok = false;
    if (ok) {
      for (int i = 0; i < n; ++i)
        wind[i] += std::arg(z2[i] / z[i]) / tau_rad;
      z = std::move(z2);
      s += step;
      h = std::min(h * 1.5, 1.0 / 48.0);
    } else {
      h = step / 2.0;
      if (h < hmin) return std::nullopt;
    }
    if (--guard <= 0) return std::nullopt;
  }
  Braid1D out;
  std::vector<int> img(n, -1);
  std::vector<long long> w(n, 0);
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    int j;
    try {
      j = nearest_index(base_roots, z[i], 1e-4);
    } catch (...) {
      return std::nullopt;
    }
    if (used[j]) return std::nullopt;
    used[j] = 1;
    img[i] = j;
    // continuous arg gain of strand i is wind[i]; the principal-arg gap
    // between its endpoints leaves an integral winding number
    double wj =
        wind[i] - (std::arg(base_roots[j]) - std::arg(base_roots[i])) / tau_rad;
    w[i] = std::llround(wj);
    if (std::abs(wj - (double)w[i]) > 0.05) return std::nullopt;
  }
  out.sigma = Perm(img);
  out.windings = w;
  return out;
}

Perm twolines_label_perm(const TwoLinesModel& M, const Braid1D& b1,
                         const Braid1D& b2) {
  // solution labels (i, j, coset k of (k1,k2)); after the loop, strand
  // (i,j,k) sits over (sigma1(i), sigma2(j)) with k shifted by the
  // winding vector (m1_i, m2_j)
  int n1 = (int)M.P.n1, n2 = (int)M.P.n2, nu = (int)M.nu;
  // enumerate coset reps once
  std::vector<std::pair<long long, long long>> reps((size_t)nu, {-1, -1});
  for (long long k1 = 0; k1 < 2 * nu + 2 && true; ++k1)
    for (long long k2 = 0; k2 < 2 * nu + 2; ++k2) {
      int id = M.coset_id(k1, k2);
      if (reps[(size_t)id].first < 0) reps[(size_t)id] = {k1, k2};
    }
  std::vector<int> img((size_t)(n1 * n2 * nu));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int c = 0; c < nu; ++c) {
        auto [k1, k2] = reps[(size_t)c];
        int c2 = M.coset_id(k1 + b1.windings[(size_t)i],
                            k2 + b2.windings[(size_t)j]);
        img[(size_t)M.label(i, j, c)] =
            M.label(b1.sigma(i), b2.sigma(j), c2);
      }
  return Perm(img);
}

std::vector<Perm> twolines_lift_perms(const TwoLinesModel& M, bool side1) {
  const SupportSet& A = side1 ? M.P.A1 : M.P.A2;
  const auto& dir = side1 ? M.P.dir1 : M.P.dir2;
  const auto& coeffs = side1 ? M.c1 : M.c2;
  long long deg = side1 ? M.P.n1 : M.P.n2;
  const auto& base = side1 ? M.roots1 : M.roots2;

  auto ks = line_coordinates(A, dir);
  size_t ci = SIZE_MAX;
  for (size_t i = 0; i < ks.size(); ++i)
    if (ks[i] == 0) ci = i;
  if (ci == SIZE_MAX)
    throw std::logic_error("twolines: no constant coefficient");

  auto upoly = univariate_from_line(A, dir, coeffs, deg);
  std::vector<cdouble> centers;
  auto du = derivative(upoly);
  size_t lead = 0;
  while (lead < du.size() && std::abs(du[lead]) < 1e-14) ++lead;
  std::vector<cdouble> red(du.begin() + lead, du.end());
  if (red.size() >= 2)
    for (auto& xc : aberth_roots(red))
      centers.push_back(upoly[0] - poly_eval(upoly, xc));
  centers.push_back(upoly[0] - poly_eval(upoly, cdouble(0.0)));

  std::vector<Braid1D> braids;
  for (auto& c : centers) {
    double dmin = 1e300;
    for (auto& o : centers)
      if (std::abs(o - c) > 1e-12) dmin = std::min(dmin, std::abs(o - c));
    double r = std::min(0.35 * dmin, 0.5);
    if (!(r > 1e-9)) r = 0.05;
    cdouble base_c = coeffs[ci];
    for (int att = 0; att < 4; ++att) {
      auto path = [&, c, r](double s) {
        auto cc = coeffs;
        // reuse the one-coefficient circle shape
        cdouble dirv = base_c - c;
        double rr = std::abs(dirv);
        cdouble val;
        if (rr < 1e-12) {
          val = c + r * std::polar(1.0, tau_rad * s);
        } else {
          cdouble uu = dirv / rr;
          double tin = 0.15, tout = 0.85;
          if (s < tin) val = c + uu * (rr + (s / tin) * (r - rr));
          else if (s < tout)
            val = c + uu * r *
                      std::polar(1.0, tau_rad * ((s - tin) / (tout - tin)));
          else
            val = c + uu * (r + ((s - tout) / (1.0 - tout)) * (rr - r));
        }
        cc[ci] = val;
        return univariate_from_line(A, dir, cc, deg);
      };
      auto b = track_univariate_loop(base, path);
      if (b) { braids.push_back(*b); break; }
      r *= 0.5;
    }
  }
  std::vector<Perm> out;
  Braid1D trivial{Perm::identity((int)(side1 ? M.P.n2 : M.P.n1)),
                  std::vector<long long>((size_t)(side1 ? M.P.n2 : M.P.n1), 0)};
  for (auto& b : braids)
    out.push_back(side1 ? twolines_label_perm(M, b, trivial)
                        : twolines_label_perm(M, trivial, b));
  return out;
}

std::vector<Perm> twolines_kernel_tuples(const TwoLinesModel& M, int pairing) {
  // translation tuples m in (Z/nu)^(n1 x n2) with row sums in rmod*Z and
  // column sums in cmod*Z inside Z/nu
  int n1 = (int)M.P.n1, n2 = (int)M.P.n2, nu = (int)M.nu;
  long long rmod = pairing == 1 ? M.P.n1 : M.P.n2;
  long long cmod = pairing == 1 ? M.P.n2 : M.P.n1;

  // S = Z^2/UZ^2 need not be cyclic; tuples assign one group element per
  // block (i,j) and the row/column conditions constrain the group sums
  long long d1 = M.Ds[0][0], d2 = M.Ds[1][1];
  auto add_ids = [&](int a, int b2) {
    long long a1 = a / d2, a2 = a % d2;
    long long b1q = b2 / d2, b2q = b2 % d2;
    long long r1 = (a1 + b1q) % d1, r2 = (a2 + b2q) % d2;
    return (int)(r1 * d2 + r2);
  };
  auto mul_id = [&](int a, long long times) {
    long long a1 = a / d2, a2 = a % d2;
    long long r1 = ((a1 * times) % d1 + d1) % d1;
    long long r2 = ((a2 * times) % d2 + d2) % d2;
    return (int)(r1 * d2 + r2);
  };
  auto in_subgroup = [&](int a, long long mmod) {
    // is a in mmod * (Z^2/UZ^2)?
    for (int x = 0; x < nu; ++x)
      if (mul_id(x, mmod) == a) return true;
    return false;
  };

  long long total = 1;
  for (int k = 0; k < n1 * n2; ++k) {
    total *= nu;
    if (total > 4'000'000)
      throw std::runtime_error("twolines kernel enumeration too large");
  }

  std::vector<Perm> out;
  std::vector<int> tup((size_t)(n1 * n2), 0);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int k = 0; k < n1 * n2; ++k) {
      tup[(size_t)k] = (int)(c % nu);
      c /= nu;
    }
    bool ok = true;
    for (int i = 0; i < n1 && ok; ++i) {
      int sum = 0;
      for (int j = 0; j < n2; ++j) sum = add_ids(sum, tup[(size_t)(i * n2 + j)]);
      ok = in_subgroup(sum, rmod);
    }
    for (int j = 0; j < n2 && ok; ++j) {
      int sum = 0;
      for (int i = 0; i < n1; ++i) sum = add_ids(sum, tup[(size_t)(i * n2 + j)]);
      ok = in_subgroup(sum, cmod);
    }
    if (!ok) continue;
    std::vector<int> img((size_t)M.P.N);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        for (int cc = 0; cc < nu; ++cc)
          img[(size_t)M.label(i, j, cc)] =
              M.label(i, j, add_ids(cc, tup[(size_t)(i * n2 + j)]));
    out.push_back(Perm(img));
  }
  return out;
}

} // namespace

PermGroup predicted_galois_twolines(const TwoLinesPair& P,
                                    unsigned long long seed, int pairing) {
  TwoLinesModel M = make_twolines_model(P, seed);
  std::vector<Perm> gens = twolines_lift_perms(M, true);
  auto g2 = twolines_lift_perms(M, false);
  gens.insert(gens.end(), g2.begin(), g2.end());
  auto K = twolines_kernel_tuples(M, pairing);
  gens.insert(gens.end(), K.begin(), K.end());
  return PermGroup::from_generators(gens, (int)P.N);
}

TwoLinesReport numeric_check_twolines(const TwoLinesPair& P,
                                      unsigned long long seed) {
  TwoLinesReport rep;
  TwoLinesModel M = make_twolines_model(P, seed);

  std::vector<Perm> gens = twolines_lift_perms(M, true);
  auto g2 = twolines_lift_perms(M, false);
  gens.insert(gens.end(), g2.begin(), g2.end());
  PermGroup NG = PermGroup::from_generators(gens, (int)P.N);
  rep.numeric_order = NG.order();

  // translation kernel of the numeric group
  auto K1 = twolines_kernel_tuples(M, 1);
  auto K2 = twolines_kernel_tuples(M, 2);
  auto all_in = [&](const std::vector<Perm>& K) {
    for (const auto& g : K)
      if (!NG.contains(g)) return false;
    return true;
  };
  bool in1 = all_in(K1), in2 = all_in(K2);
  PermGroup G1 = predicted_galois_twolines(P, seed, 1);
  PermGroup G2 = predicted_galois_twolines(P, seed, 2);
  bool m1 = in1 && NG.equals(G1);
  bool m2 = in2 && NG.equals(G2);
  if (m1 && m2) rep.kernel_pairing = 3;
  else if (m1) rep.kernel_pairing = 1;
  else if (m2) rep.kernel_pairing = 2;
  rep.predicted_order = m1 ? G1.order() : (m2 ? G2.order() : G1.order());
  rep.group_match = m1 || m2;
  return rep;
}

} // namespace braidmon
