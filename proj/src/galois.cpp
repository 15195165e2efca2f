#include "braidmon/galois.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace braidmon {

namespace {
constexpr double tau_rad = 2.0 * std::numbers::pi;
}

Prediction predict(const SupportSet& s0) {
  SupportSet s = normalize(s0);
  SupportInvariants inv = invariants(s);
  Prediction pred;
  pred.inv = inv;
  int N = (int)inv.N;

  if (inv.on_line) {
    // image of the braid map is <tau^theta>; its permutation shadow is
    // the cyclic group generated by the theta-slot shift
    pred.braid_generators.push_back(AnnularBraidWord::tau(N, (int)inv.theta));
    Perm shift = pred.braid_generators[0].permutation();
    pred.galois_group = PermGroup::from_generators({shift}, N);
    pred.order_formula = pred.galois_group.order();
    return pred;
  }

  long long nd = inv.N / inv.d;
  if (nd >= 2)
    for (long long j = 1; j <= nd; ++j)
      pred.braid_generators.push_back(
          f_embed(AnnularBraidWord::b((int)nd, (int)j), inv.d));
  if (inv.theta != 0)
    pred.braid_generators.push_back(
        f_embed(AnnularBraidWord::tau((int)nd, (int)inv.theta), inv.d));

  pred.galois_group = PermGroup::from_generators(
      wreath_subgroup_generators(inv.N, inv.d, inv.g), N);
  pred.order_formula = wreath_subgroup_order(inv.N, inv.d, inv.g);
  return pred;
}

CompareReport compare(const Prediction& pred, const PermGroup& numeric,
                      const std::vector<AnnularBraidWord>& words) {
  if (pred.galois_group.degree() != numeric.degree())
    throw std::invalid_argument("compare: ground set size mismatch");
  CompareReport rep;
  rep.numeric_order = numeric.order();
  rep.predicted_order = pred.galois_group.order();
  rep.group_match = pred.galois_group.equals(numeric);
  rep.ind_ok = true;
  for (const auto& w : words) {
    long long iv = w.ind();
    bool ok = pred.inv.theta == 0 ? iv == 0 : iv % pred.inv.theta == 0;
    rep.ind_ok = rep.ind_ok && ok;
  }
  rep.verdict = rep.group_match && rep.ind_ok && rep.words_match;
  return rep;
}

Perm slot_to_block_relabel(const std::vector<cdouble>& base, long long d) {
  int N = (int)base.size();
  if (d <= 1) return Perm::identity(N);
  if (N % d != 0) throw std::invalid_argument("relabel: d must divide N");
  cdouble zeta = std::polar(1.0, tau_rad / (double)d);

  // numeric rotation permutation: slot -> slot of zeta * root
  std::vector<int> rot(N, -1);
  for (int i = 0; i < N; ++i) {
    cdouble target = base[i] * zeta;
    double bestd = 1e300;
    int best = -1;
    for (int j = 0; j < N; ++j) {
      double dd = std::abs(base[j] - target);
      if (dd < bestd) { bestd = dd; best = j; }
    }
    if (bestd > 1e-6 * (1.0 + std::abs(target)))
      throw std::runtime_error("relabel: base roots not d-symmetric");
    rot[i] = best;
  }
  Perm r(rot);

  // orbits of r are the blocks; phase counts applications of r from the
  // smallest slot in the orbit
  std::vector<int> newlabel(N, -1);
  std::vector<char> seen(N, 0);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < N; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int x = i;
    while (!seen[x]) {
      seen[x] = 1;
      orb.push_back(x);
      x = r(x);
    }
    if ((long long)orb.size() != d)
      throw std::runtime_error("relabel: rotation orbit of wrong size");
    orbits.push_back(orb);
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (size_t beta = 0; beta < orbits.size(); ++beta)
    for (size_t phase = 0; phase < orbits[beta].size(); ++phase)
      newlabel[orbits[beta][phase]] = (int)(beta * d + phase);
  return Perm(newlabel);
}

namespace {

// words and permutations for a railway run on a polynomial
struct RailwayRun {
  std::vector<TrackedBraid> tracked;
  std::vector<cdouble> base_roots; // slot order
  double cut = 0;
};

RailwayRun run_railway(const ParamPoly& phi, const std::vector<LoopSpec>& loops,
                       double cut, const VerifyOptions& vopts) {
  TrackOptions topts;
  topts.cut_turns = cut;
  topts.clockwise = vopts.clockwise;
  topts.crossing_sign = vopts.crossing_sign;
  topts.seed = vopts.seed;
  topts.parallel = vopts.parallel;
  if (vopts.tol > 0) topts.root_tol = vopts.tol;

  RailwayRun run;
  run.cut = cut;
  run.tracked = track_all(phi, loops, topts);

  // base roots in slot order (tracker init on l_0's base)
  auto coeffs = phi.coeffs_at(loops[0].base());
  AberthOptions ao;
  ao.seed = vopts.seed;
  auto roots = aberth_roots(coeffs, ao);
  std::vector<std::pair<double, cdouble>> order;
  for (auto& r : roots) {
    double p = std::arg(r) / tau_rad - cut;
    p -= std::floor(p);
    order.push_back({p, r});
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [p, r] : order) run.base_roots.push_back(r);
  return run;
}

} // namespace

VerifyReport verify_trinomial(const TrinomialModel& model, long long dd,
                              const VerifyOptions& opts) {
  model.validate();
  if (dd < 1) throw std::invalid_argument("verify_trinomial: dd >= 1");

  VerifyReport rep;
  rep.is_trinomial_type1 = true;
  rep.model = model;

  long long N = model.n * dd;
  Rat nu0 = default_base_arg(model);
  TrinomialPrediction tp = predicted_monodromy(model, nu0);
  double rho = model.rho();
  rep.rho = rho;
  double eps = opts.eps > 0 ? opts.eps : rho / 100.0;
  double outer = opts.outer > 0 ? opts.outer : rho * 100.0;

  auto loops = railway_graph(tp.loop_args, rho, eps, outer, nu0);
  rep.loop_count = loops.size();

  // tracked polynomial: 1 + t^a x^(m dd) + t^b x^(n dd)
  ParamPoly phi;
  phi.terms = {{0, 0, 1.0}, {model.m * dd, model.a, 1.0},
               {model.n * dd, model.b, 1.0}};

  // shared x-argument cut: half a slot below the first D-crossing
  Rat cut_exact =
      ((Rat(1, 2) - Rat(model.b) * nu0) / Rat(N) - Rat(1, 2 * N)).mod1();
  RailwayRun run = run_railway(phi, loops, cut_exact.to_double(), opts);

  // invariants of the tracked support
  SupportSet sup;
  sup.points = {{0, 0}, {model.m * dd, model.a}, {model.n * dd, model.b}};
  Prediction pred = predict(normalize(sup));
  rep.inv = pred.inv;
  rep.predicted_order = pred.order_formula;

  // expected words: l_0 -> f(tau^b), l_j -> f(b_k(j))
  std::vector<AnnularBraidWord> expected;
  expected.push_back(f_embed(AnnularBraidWord::tau((int)model.n, (int)model.b), dd));
  for (int k : tp.k_of_j)
    expected.push_back(f_embed(AnnularBraidWord::b((int)model.n, k), dd));

  std::vector<Perm> gens;
  bool words_ok = true;
  for (size_t i = 0; i < run.tracked.size(); ++i) {
    const auto& tb = run.tracked[i];
    rep.words.push_back(tb.word.str());
    rep.predicted_words.push_back(expected[i].str());
    bool m = braid_equal(tb.word, expected[i]);
    rep.word_matches.push_back(m);
    words_ok = words_ok && m;
    if (!(tb.word.permutation() == tb.endpoint_perm))
      throw std::runtime_error("word/permutation soundness violated");
    if (tb.word.ind() != tb.product_winding)
      throw std::runtime_error("ind/winding soundness violated");
    gens.push_back(tb.endpoint_perm);
  }

  PermGroup numeric = PermGroup::from_generators(gens, (int)N);
  // relabel slots into block-major wreath coordinates when d > 1
  Perm R = slot_to_block_relabel(run.base_roots, pred.inv.d);
  std::vector<Perm> relabeled;
  for (const auto& g : gens)
    relabeled.push_back(R.inverse().then(g).then(R));
  PermGroup numeric_blocks = PermGroup::from_generators(relabeled, (int)N);

  CompareReport cr = compare(pred, numeric_blocks,
                             [&] {
                               std::vector<AnnularBraidWord> ws;
                               for (auto& t : run.tracked) ws.push_back(t.word);
                               return ws;
                             }());
  rep.group_order = cr.numeric_order;
  rep.match = cr.group_match && cr.ind_ok && words_ok;
  return rep;
}

namespace {

// c0(t) * cN(t) * prod (x_i - x_j)^2: analytic in t on C*, vanishing
// exactly on the bifurcation set
cdouble bif_indicator(const ParamPoly& phi, cdouble t) {
  auto c = phi.coeffs_at(t);
  cdouble scale = c[0] * c.back();
  if (std::abs(scale) < 1e-250) return scale;
  std::vector<cdouble> roots;
  try {
    roots = aberth_roots(c);
  } catch (...) {
    return cdouble(0.0);
  }
  cdouble prod = scale;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      prod *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  return prod;
}

// winding of G along the rectangle boundary; refines sampling until the
// phase increments are trustworthy
long long rect_winding(const ParamPoly& phi, cdouble lo, cdouble hi) {
  std::vector<cdouble> corners = {lo, cdouble(hi.real(), lo.imag()), hi,
                                  cdouble(lo.real(), hi.imag()), lo};
  double total = 0;
  for (int side = 0; side < 4; ++side) {
    cdouble a = corners[side], b = corners[side + 1];
    int K = 24;
    for (int refine = 0; refine < 8; ++refine) {
      double acc = 0;
      bool ok = true;
      cdouble prev = bif_indicator(phi, a);
      for (int k = 1; k <= K && ok; ++k) {
        cdouble cur = bif_indicator(phi, a + (b - a) * ((double)k / K));
        if (std::abs(cur) < 1e-250 || std::abs(prev) < 1e-250) ok = false;
        double da = std::arg(cur / prev);
        if (std::abs(da) > 1.8) ok = false; // too coarse
        acc += da;
        prev = cur;
      }
      if (ok) {
        total += acc;
        break;
      }
      K *= 3;
      if (refine == 7) throw std::runtime_error("bifurcation search: winding failed");
    }
  }
  return std::llround(total / tau_rad);
}

void subdivide(const ParamPoly& phi, cdouble lo, cdouble hi,
               std::vector<cdouble>& found, int depth) {
  long long w = rect_winding(phi, lo, hi);
  if (w <= 0) return;
  cdouble span = hi - lo;
  if (std::max(span.real(), span.imag()) < 1e-5 || depth > 44) {
    cdouble guess = (lo + hi) / 2.0;
    // secant polish
    cdouble t0 = guess, t1 = guess * (1.0 + 1e-4) + cdouble(1e-7, 1e-7);
    for (int it = 0; it < 80; ++it) {
      cdouble f0 = bif_indicator(phi, t0), f1 = bif_indicator(phi, t1);
      if (std::abs(f1 - f0) < 1e-280) break;
      cdouble t2 = t1 - f1 * (t1 - t0) / (f1 - f0);
      t0 = t1;
      t1 = t2;
      if (std::abs(t1 - t0) < 1e-12 * (1.0 + std::abs(t1))) break;
    }
    found.push_back(t1);
    return;
  }
  // split the longer side, with a slight offset against boundary hits
  if (span.real() >= span.imag()) {
    double mid = lo.real() + span.real() * 0.5071;
    subdivide(phi, lo, cdouble(mid, hi.imag()), found, depth + 1);
    subdivide(phi, cdouble(mid, lo.imag()), hi, found, depth + 1);
  } else {
    double mid = lo.imag() + span.imag() * 0.5071;
    subdivide(phi, lo, cdouble(hi.real(), mid), found, depth + 1);
    subdivide(phi, cdouble(lo.real(), mid), hi, found, depth + 1);
  }
}

} // namespace

std::vector<cdouble> find_bifurcation_points(const ParamPoly& phi, double rmax) {
  // the indicator is analytic on C* but may have a pole at the origin
  // (Laurent coefficients); count zeros through annuli so the pole
  // cancels, then subdivide boxes that exclude the origin
  auto circle_winding = [&](double r) {
    for (double jitter : {1.0, 1.013, 0.987, 1.029}) {
      double rr = r * jitter;
      int K = 64;
      for (int refine = 0; refine < 9; ++refine) {
        double acc = 0;
        bool ok = true;
        cdouble prev = bif_indicator(phi, std::polar(rr, 0.0));
        if (std::abs(prev) < 1e-250) ok = false;
        for (int k = 1; k <= K && ok; ++k) {
          cdouble cur =
              bif_indicator(phi, std::polar(rr, tau_rad * k / (double)K));
          if (std::abs(cur) < 1e-250) { ok = false; break; }
          double da = std::arg(cur / prev);
          if (std::abs(da) > 1.8) { ok = false; break; }
          acc += da;
          prev = cur;
        }
        if (ok) return (long long)std::llround(acc / tau_rad);
        K *= 3;
      }
    }
    throw std::runtime_error("bifurcation search: circle winding failed");
  };

  double r_hi = rmax > 0 ? rmax : 2.0;
  if (rmax <= 0)
    for (int grow = 0; grow < 12; ++grow) {
      if (circle_winding(3.0 * r_hi) == circle_winding(r_hi)) break;
      r_hi *= 3.0;
    }
  double r_lo = std::min(0.25, r_hi / 16.0);
  for (int shrink = 0; shrink < 12; ++shrink) {
    if (circle_winding(r_lo) == circle_winding(r_lo / 3.0)) break;
    r_lo /= 3.0;
  }
  long long expected = circle_winding(r_hi) - circle_winding(r_lo);
  if (expected <= 0) return {};

  // four rectangles covering the annulus, keeping clear of the origin
  double h = 0.4 * r_lo, R = 1.1 * r_hi;
  std::vector<std::pair<cdouble, cdouble>> boxes = {
      {cdouble(-R, -R), cdouble(-h, R)},   // left strip
      {cdouble(h, -R), cdouble(R, R)},     // right strip
      {cdouble(-h, h), cdouble(h, R)},     // top middle
      {cdouble(-h, -R), cdouble(h, -h)}};  // bottom middle
  std::vector<cdouble> found;
  for (auto& [lo, hi] : boxes)
    subdivide(phi, lo + cdouble(0.00137, 0.00119), hi + cdouble(0.00173, 0.00151),
              found, 0);

  std::vector<cdouble> uniq;
  for (auto& z : found) {
    if (std::abs(z) < 1e-8) continue;
    bool dup = false;
    for (auto& u : uniq) dup |= std::abs(u - z) < 1e-6 * (1.0 + std::abs(z));
    if (!dup) uniq.push_back(z);
  }
  // zeros carry multiplicities (an x -> x^d symmetry collides root pairs
  // simultaneously), so validate the total multiplicity count
  long long mult_total = 0;
  for (auto& z : uniq) {
    double clear = std::abs(z);
    for (auto& u : uniq)
      if (std::abs(u - z) > 1e-9) clear = std::min(clear, std::abs(u - z));
    double rr = 0.25 * clear;
    mult_total += rect_winding(phi, z - cdouble(rr, rr), z + cdouble(rr, rr));
  }
  if (mult_total != expected)
    throw std::runtime_error("bifurcation search: located multiplicity " +
                             std::to_string(mult_total) + " of " +
                             std::to_string(expected));
  std::sort(uniq.begin(), uniq.end(), [](const cdouble& a, const cdouble& b) {
    double aa = std::arg(a), ab = std::arg(b);
    return aa != ab ? aa < ab : std::abs(a) < std::abs(b);
  });
  return uniq;
}

namespace {

VerifyReport verify_general(const SupportSet& s, const Prediction& pred,
                            const VerifyOptions& opts) {
  VerifyReport rep;
  rep.inv = pred.inv;
  rep.predicted_order = pred.order_formula;
  int N = (int)pred.inv.N;

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> ang(0.0, 1.0);
  std::vector<cdouble> coeffs;
  for (size_t i = 0; i < s.size(); ++i)
    coeffs.push_back(std::polar(1.0, tau_rad * ang(rng)));
  ParamPoly phi = ParamPoly::from_support(s, coeffs);

  auto bif = find_bifurcation_points(phi);
  if (bif.empty())
    throw std::runtime_error("verify: no bifurcation points located");
  rep.loop_count = bif.size() + 1;

  double maxr = 0, minr = 1e300;
  for (auto& b : bif) {
    maxr = std::max(maxr, std::abs(b));
    minr = std::min(minr, std::abs(b));
  }

  for (int attempt = 0; attempt < 3; ++attempt) {
    double base_arg = 0.1234 + 0.21 * attempt;
    cdouble base = std::polar(1.7 * maxr, tau_rad * base_arg);

    // all loops share the base point: one roundabout of the origin and a
    // petal per bifurcation point
    std::vector<LoopSpec> loops;
    {
      LoopSpec zero;
      cdouble rim = std::polar(0.31 * minr, tau_rad * base_arg);
      zero.pieces.push_back(PathPiece::segment(base, rim));
      zero.pieces.push_back(circle_loop(0.31 * minr, base_arg).pieces[0]);
      zero.pieces.push_back(PathPiece::segment(rim, base));
      loops.push_back(zero);
    }
    for (auto& b : bif) {
      double clear = std::abs(b);
      for (auto& o : bif)
        if (std::abs(o - b) > 1e-9) clear = std::min(clear, std::abs(o - b));
      loops.push_back(petal_loop(base, b, 0.31 * clear));
    }

    TrackOptions topts;
    topts.clockwise = opts.clockwise;
    topts.crossing_sign = opts.crossing_sign;
    topts.seed = opts.seed;
    topts.parallel = opts.parallel;
    if (opts.tol > 0) topts.root_tol = opts.tol;
    auto base_roots = aberth_roots(phi.coeffs_at(base));
    topts.cut_turns = auto_cut(base_roots);

    try {
      auto tracked = track_all(phi, loops, topts);
      bool ind_ok = true;
      std::vector<Perm> gens;
      for (auto& tb : tracked) {
        if (!(tb.word.permutation() == tb.endpoint_perm))
          throw std::runtime_error("word/permutation soundness violated");
        if (tb.word.ind() != tb.product_winding)
          throw std::runtime_error("ind/winding soundness violated");
        long long iv = tb.word.ind();
        ind_ok &= pred.inv.theta == 0 ? iv == 0 : iv % pred.inv.theta == 0;
        rep.words.push_back(tb.word.str());
        gens.push_back(tb.endpoint_perm);
      }

      PermGroup numeric = PermGroup::from_generators(gens, N);
      std::vector<cdouble> slots;
      {
        std::vector<std::pair<double, cdouble>> order;
        for (auto& r : base_roots) {
          double p = std::arg(r) / tau_rad - topts.cut_turns;
          p -= std::floor(p);
          order.push_back({p, r});
        }
        std::sort(order.begin(), order.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [p, r] : order) slots.push_back(r);
      }
      Perm R = slot_to_block_relabel(slots, pred.inv.d);
      std::vector<Perm> relabeled;
      for (const auto& g : gens)
        relabeled.push_back(R.inverse().then(g).then(R));
      PermGroup numeric_blocks = PermGroup::from_generators(relabeled, N);

      rep.group_order = numeric.order();
      rep.match = ind_ok && numeric_blocks.equals(pred.galois_group);
      return rep;
    } catch (const std::exception&) {
      if (attempt == 2) throw;
    }
  }
  throw std::runtime_error("verify: tracking failed on all base choices");
}

} // namespace

VerifyReport verify_support(const SupportSet& s0, const VerifyOptions& opts) {
  SupportSet s = normalize(s0);
  SupportInvariants inv0 = invariants(s);
  VerifyReport rep;

  if (s.num_params() >= 2 && !inv0.on_line) {
    Specialization spec = monomial_specialization(s);
    rep = verify_support(spec.image, opts);
    rep.specialization_weights = spec.weights;
    return rep;
  }

  Prediction pred = predict(s);
  rep.inv = pred.inv;
  rep.predicted_order = pred.order_formula;

  if (inv0.on_line) {
    // the bifurcation set is a union of coordinate hyperplanes; one loop
    // around it suffices. Substitute t_j = t first (the support stays on
    // a line; the tracked braid is compared against the flattened theta).
    SupportSet flat;
    for (const auto& p : s.points) {
      long long e = 0;
      for (int j = 1; j < s.dim(); ++j) e += p[j];
      flat.points.push_back({p[0], e});
    }
    SupportSet fl = normalize(flat);
    Prediction pl = predict(fl);
    std::vector<cdouble> coeffs(s.size(), 1.0);
    ParamPoly phi = ParamPoly::from_support(fl, coeffs);

    TrackOptions topts;
    topts.clockwise = opts.clockwise;
    topts.crossing_sign = opts.crossing_sign;
    topts.seed = opts.seed;
    auto base_coeffs = phi.coeffs_at(cdouble(1.0, 0.37));
    auto roots = aberth_roots(base_coeffs);
    topts.cut_turns = auto_cut(roots);

    LoopSpec l0 = circle_loop(1.0, std::arg(cdouble(1.0, 0.37)) / tau_rad);
    auto tracked = track_loop(phi, l0, topts);
    rep.loop_count = 1;
    rep.words.push_back(tracked.word.str());
    AnnularBraidWord tpos = AnnularBraidWord::tau((int)pl.inv.N, (int)pl.inv.theta);
    rep.predicted_words.push_back(tpos.str());
    bool wm = braid_equal(tracked.word, tpos) ||
              braid_equal(tracked.word, tpos.inverse());
    rep.word_matches.push_back(wm);
    PermGroup numeric =
        PermGroup::from_generators({tracked.endpoint_perm}, (int)pl.inv.N);
    rep.group_order = numeric.order();
    rep.match = wm && numeric.equals(pl.galois_group);
    return rep;
  }

  if (s.size() == 3) {
    Type1Result t1 = to_type1(s);
    if (!t1.is_type2)
      return verify_trinomial(t1.model, t1.transform.x_division, opts);
    // type (2): N = 1, bifurcation points are the roots of c_0(t)
    ParamPoly phi;
    std::vector<cdouble> coeffs(s.size(), 1.0);
    phi = ParamPoly::from_support(s, coeffs);
    auto c0poly = [&] {
      // constant-in-x coefficient as a univariate polynomial in t
      long long emax = 0;
      for (auto& t : phi.terms)
        if (t.xexp == 0) emax = std::max(emax, t.texp);
      std::vector<cdouble> c((size_t)emax + 1, 0.0);
      for (auto& t : phi.terms)
        if (t.xexp == 0) c[(size_t)t.texp] += t.coeff;
      return c;
    }();
    // strip t^min factor and find the nonzero roots
    size_t lead = 0;
    while (lead < c0poly.size() && std::abs(c0poly[lead]) == 0.0) ++lead;
    std::vector<cdouble> red(c0poly.begin() + lead, c0poly.end());
    std::vector<cdouble> bif =
        red.size() >= 2 ? aberth_roots(red) : std::vector<cdouble>{};
    rep.loop_count = bif.size() + 1;
    TrackOptions topts;
    topts.clockwise = opts.clockwise;
    topts.crossing_sign = opts.crossing_sign;
    topts.seed = opts.seed;
    topts.cut_turns = 0.123;
    std::vector<Perm> gens;
    bool ind_ok = true;
    double rmin = 1e300;
    for (auto& b : bif) rmin = std::min(rmin, std::abs(b));
    LoopSpec l0 = circle_loop(bif.empty() ? 1.0 : rmin / 3.0, 0.071);
    std::vector<LoopSpec> loops{l0};
    for (auto& b : bif)
      loops.push_back(small_circle(b, 0.25 * std::abs(b), 0.071));
    ParamPoly phi2 = phi;
    auto tracked = track_all(phi2, loops, topts);
    for (auto& tb : tracked) {
      rep.words.push_back(tb.word.str());
      gens.push_back(tb.endpoint_perm);
      ind_ok = ind_ok && (pred.inv.theta == 0 ? tb.word.ind() == 0
                                              : tb.word.ind() % pred.inv.theta == 0);
    }
    PermGroup numeric = PermGroup::from_generators(gens, 1);
    rep.group_order = numeric.order();
    rep.match = ind_ok && numeric.equals(pred.galois_group);
    return rep;
  }

  return verify_general(s, pred, opts);
}

} // namespace braidmon
