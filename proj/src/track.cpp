#include "braidmon/track.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidmon {

namespace {
constexpr double tau_rad = 2.0 * std::numbers::pi;

cdouble ipow(cdouble t, long long e) {
  if (e == 0) return 1.0;
  cdouble base = e > 0 ? t : 1.0 / t;
  long long k = e > 0 ? e : -e;
  cdouble acc = 1.0;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}
} // namespace

long long ParamPoly::xdeg() const {
  long long d = 0;
  for (const auto& t : terms) d = std::max(d, t.xexp);
  return d;
}

std::vector<cdouble> ParamPoly::coeffs_at(cdouble t) const {
  std::vector<cdouble> c((size_t)xdeg() + 1, cdouble(0.0));
  for (const auto& term : terms) c[(size_t)term.xexp] += term.coeff * ipow(t, term.texp);
  return c;
}

ParamPoly ParamPoly::from_support(const SupportSet& s,
                                  const std::vector<cdouble>& coeffs) {
  if (s.dim() != 2)
    throw std::invalid_argument("ParamPoly: need a planar support");
  if (coeffs.size() != s.size())
    throw std::invalid_argument("ParamPoly: coefficient count mismatch");
  ParamPoly p;
  for (size_t i = 0; i < s.points.size(); ++i) {
    if (s.points[i][0] < 0)
      throw std::invalid_argument("ParamPoly: negative x-exponent");
    p.terms.push_back({s.points[i][0], s.points[i][1], coeffs[i]});
  }
  return p;
}

double auto_cut(const std::vector<cdouble>& base_roots) {
  std::vector<double> args;
  for (const auto& z : base_roots)
    args.push_back(std::arg(z) / tau_rad); // in (-1/2, 1/2]
  std::sort(args.begin(), args.end());
  size_t n = args.size();
  double best_gap = -1, best_mid = 0;
  for (size_t i = 0; i < n; ++i) {
    double next = i + 1 < n ? args[i + 1] : args[0] + 1.0;
    double gap = next - args[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_mid = args[i] + gap / 2.0;
    }
  }
  return best_mid;
}

namespace {

struct Tracker {
  const ParamPoly& phi;
  const TrackOptions& opts;
  int n = 0;
  double cut = 0;

  std::vector<cdouble> z;       // position per strand
  std::vector<double> pos;      // continuous arg (turns) minus cut, per strand
  std::vector<int> strand_at;   // slot -> strand
  std::vector<int> slot_of;     // strand -> slot
  std::vector<BraidLetter> events; // time order
  double min_sep = 1e300;
  double wind_acc = 0;             // continuous arg change of prod of strands
  long long steps = 0;

  Tracker(const ParamPoly& p, const TrackOptions& o) : phi(p), opts(o) {}

  double pair_separation() const {
    double m = 1e300;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        m = std::min(m, std::abs(z[i] - z[j]));
    return m;
  }

  // Newton-correct every strand against the new coefficients; a strand
  // that fails to converge makes the caller retry with a smaller step
  bool correct(const std::vector<cdouble>& coeffs, std::vector<cdouble>& w) const {
    for (auto& x : w) {
      bool ok = false;
      for (int it = 0; it < 12; ++it) {
        cdouble p = 0.0, dp = 0.0;
        for (auto cit = coeffs.rbegin(); cit != coeffs.rend(); ++cit) {
          dp = dp * x + p;
          p = p * x + *cit;
        }
        if (poly_residual(coeffs, x) < opts.root_tol) { ok = true; break; }
        if (std::abs(dp) < 1e-300) break;
        x -= p / dp;
      }
      if (!ok && poly_residual(coeffs, x) > opts.root_tol * 10) return false;
    }
    return true;
  }

  void init(cdouble t0) {
    auto coeffs = phi.coeffs_at(t0);
    AberthOptions ao;
    ao.seed = opts.seed;
    ao.tol = opts.root_tol;
    auto roots = aberth_roots(coeffs, ao);
    n = (int)roots.size();
    cut = opts.cut_turns;

    // order by argument inside the cut window [cut, cut+1)
    std::vector<std::pair<double, cdouble>> order;
    for (const auto& r : roots) {
      double a = std::arg(r) / tau_rad;
      double p = a - cut;
      p -= std::floor(p); // into [0,1)
      order.push_back({p, r});
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    z.resize(n);
    pos.resize(n);
    strand_at.resize(n);
    slot_of.resize(n);
    for (int i = 0; i < n; ++i) {
      z[i] = order[i].second;
      pos[i] = order[i].first;
      strand_at[i] = i;
      slot_of[i] = i;
    }
  }

  // attempt one step to parameter t_next; returns false to request bisection
  bool try_step(cdouble t_next) {
    auto coeffs = phi.coeffs_at(t_next);
    std::vector<cdouble> w = z;
    if (!correct(coeffs, w)) return false;

    double max_step_turns =
        opts.max_arg_step_turns > 0 ? opts.max_arg_step_turns : 1.0 / (16.0 * n);

    // argument increments and guards
    std::vector<double> npos(n);
    double sep_before = pair_separation();
    double dwind = 0;
    for (int i = 0; i < n; ++i) {
      cdouble ratio = w[i] / z[i];
      double da = std::arg(ratio) / tau_rad;
      if (std::abs(da) > max_step_turns) return false;
      if (std::abs(w[i] - z[i]) > 0.45 * sep_before) return false;
      npos[i] = pos[i] + da;
      dwind += da;
    }
    double sep_after = 1e300;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        sep_after = std::min(sep_after, std::abs(w[i] - w[j]));
    if (sep_after < opts.sep_floor) return false;

    // collect events
    struct Ev { int kind; int a; int b; }; // kind 0 = crossing(slot a,a+1), 1 = ccw cut, 2 = cw cut
    std::vector<Ev> evs;
    for (int p = 0; p + 1 < n; ++p) {
      int u = strand_at[p], v = strand_at[p + 1];
      if (npos[u] > npos[v]) evs.push_back({0, p, 0});
    }
    for (int i = 0; i < n; ++i) {
      if (npos[i] >= 1.0) evs.push_back({1, i, 0});
      if (npos[i] < 0.0) evs.push_back({2, i, 0});
    }

    if (evs.size() > 1) {
      // allow simultaneous crossings at pairwise disjoint slot pairs
      // (exactly what the x -> x^d symmetry produces)
      bool all_crossings = true;
      for (const auto& e : evs) all_crossings &= e.kind == 0;
      if (!all_crossings) return false;
      for (size_t i = 0; i < evs.size(); ++i)
        for (size_t j = i + 1; j < evs.size(); ++j)
          if (std::abs(evs[i].a - evs[j].a) < 2) return false;
    }

    // apply events
    for (const auto& e : evs) {
      if (e.kind == 0) {
        int p = e.a;
        int u = strand_at[p], v = strand_at[p + 1];
        int raw = std::abs(w[u]) < std::abs(w[v]) ? 1 : -1;
        events.push_back({p + 1, raw * opts.crossing_sign});
        std::swap(strand_at[p], strand_at[p + 1]);
        slot_of[u] = p + 1;
        slot_of[v] = p;
      } else if (e.kind == 1) {
        int i = e.a;
        if (slot_of[i] != n - 1) return false; // must be the top slot
        events.push_back({0, 1});
        npos[i] -= 1.0;
        for (int s = n - 1; s > 0; --s) strand_at[s] = strand_at[s - 1];
        strand_at[0] = i;
        for (int s = 0; s < n; ++s) slot_of[strand_at[s]] = s;
      } else {
        int i = e.a;
        if (slot_of[i] != 0) return false;
        events.push_back({0, -1});
        npos[i] += 1.0;
        for (int s = 0; s + 1 < n; ++s) strand_at[s] = strand_at[s + 1];
        strand_at[n - 1] = i;
        for (int s = 0; s < n; ++s) slot_of[strand_at[s]] = s;
      }
    }

    // slot order must agree with the positions
    for (int p = 0; p + 1 < n; ++p)
      if (npos[strand_at[p]] > npos[strand_at[p + 1]]) {
        // missed or misordered event; retry with a smaller step
        return false;
      }

    z = std::move(w);
    pos = std::move(npos);
    min_sep = std::min(min_sep, sep_after);
    wind_acc += dwind;
    ++steps;
    return true;
  }

  void undo_failed_events(std::vector<int> saved_strand_at,
                          std::vector<int> saved_slot_of,
                          size_t saved_events) {
    strand_at = std::move(saved_strand_at);
    slot_of = std::move(saved_slot_of);
    events.resize(saved_events);
  }
};

} // namespace

TrackedBraid track_loop(const ParamPoly& phi, const LoopSpec& loop,
                        const TrackOptions& opts) {
  LoopSpec path = opts.clockwise ? reversed(loop) : loop;

  Tracker tr(phi, opts);
  tr.init(path.at(0.0));
  int n = tr.n;

  std::vector<cdouble> start_z = tr.z;

  double s = 0.0;
  double h = 1.0 / (64.0 * path.pieces.size());
  const double h_min = 1e-13;
  const double h_max = 1.0 / (16.0 * path.pieces.size());
  long long hard_cap = 4'000'000;

  while (s < 1.0) {
    double step = std::min(h, 1.0 - s);
    auto saved_sa = tr.strand_at;
    auto saved_so = tr.slot_of;
    size_t saved_ev = tr.events.size();
    if (tr.try_step(path.at(s + step))) {
      s += step;
      h = std::min(h * 1.4, h_max);
    } else {
      tr.undo_failed_events(saved_sa, saved_so, saved_ev);
      h = step / 2.0;
      if (h < h_min)
        throw std::runtime_error("tracking failure: refine");
    }
    if (--hard_cap <= 0)
      throw std::runtime_error("tracking failure: step budget exhausted");
  }

  // loop closure: strand ending at slot p must sit on the start root of slot p
  for (int i = 0; i < n; ++i) {
    int p = tr.slot_of[i];
    if (std::abs(tr.z[i] - start_z[p]) > opts.close_tol *
            (1.0 + std::abs(start_z[p])))
      throw std::runtime_error("tracking failure: loop does not close");
  }

  TrackedBraid out;
  out.endpoint_perm = Perm(tr.slot_of);
  // word letters in reverse time order, so that word.permutation()
  // reproduces the endpoint matching
  AnnularBraidWord w(n);
  for (auto it = tr.events.rbegin(); it != tr.events.rend(); ++it) w.push(*it);
  out.word = w;
  out.min_separation = tr.min_sep;
  out.steps = tr.steps;

  long long wi = std::llround(tr.wind_acc);
  if (std::abs(tr.wind_acc - (double)wi) > 0.01)
    throw std::runtime_error("tracking failure: non-integral product winding");
  out.product_winding = wi;
  return out;
}

std::vector<TrackedBraid> track_all(const ParamPoly& phi,
                                    const std::vector<LoopSpec>& loops,
                                    const TrackOptions& opts) {
  std::vector<TrackedBraid> out(loops.size());
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel && loops.size() > 1)
#endif
  for (long long i = 0; i < (long long)loops.size(); ++i) {
    try {
      out[i] = track_loop(phi, loops[i], opts);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

PermGroup monodromy_group(const ParamPoly& phi,
                          const std::vector<LoopSpec>& loops,
                          const TrackOptions& opts) {
  auto tracked = track_all(phi, loops, opts);
  std::vector<Perm> gens;
  for (const auto& t : tracked) gens.push_back(t.endpoint_perm);
  int deg = gens.empty() ? 0 : gens[0].degree();
  return PermGroup::from_generators(gens, deg);
}

} // namespace braidmon
