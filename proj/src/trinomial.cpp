#include "braidmon/trinomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace braidmon {

long long TrinomialModel::gcd_nb() const { return gcd_ll(n, b); }

void TrinomialModel::validate() const {
  if (!(0 < m && m < n)) throw std::invalid_argument("trinomial: need 0 < m < n");
  if (gcd_ll(m, n) != 1) throw std::invalid_argument("trinomial: need gcd(m,n) = 1");
  if (delta() <= 0) throw std::invalid_argument("trinomial: need n*a - m*b > 0");
}

double TrinomialModel::rho() const {
  // log rho = (n log n - m log m - (n-m) log(n-m)) / delta
  double lm = m * std::log((double)m);
  double ln = n * std::log((double)n);
  double lnm = (n - m) * std::log((double)(n - m));
  return std::exp((ln - lm - lnm) / (double)delta());
}

std::vector<Rat> TrinomialModel::bifurcation_args() const {
  std::vector<Rat> args;
  long long dl = delta();
  for (long long j = 0; j < dl; ++j)
    args.push_back(Rat(n + 2 * j, 2 * dl).mod1());
  return args;
}

std::vector<std::complex<double>> TrinomialModel::bifurcation_points() const {
  double r = rho();
  std::vector<std::complex<double>> pts;
  for (const Rat& a : bifurcation_args()) {
    double ang = 2.0 * std::numbers::pi * a.to_double();
    pts.push_back(std::polar(r, ang));
  }
  return pts;
}

BifurcationSet bifurcation_set(const TrinomialModel& t) {
  BifurcationSet b;
  b.rho = t.rho();
  b.nonzero = t.bifurcation_points();
  return b;
}

Type1Result to_type1(const SupportSet& s0) {
  SupportSet s = normalize(s0);
  if (s.size() != 3) throw std::invalid_argument("to_type1: need 3 points");
  if (s.collinear()) throw std::invalid_argument("line support");
  if (s.dim() != 2) throw std::invalid_argument("to_type1: need planar support");

  Type1Result res;
  auto base = *std::min_element(s0.points.begin(), s0.points.end());
  res.transform.translation = base;

  // type (2): a vertical line holds two points
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (s.points[i][0] == s.points[j][0]) {
        res.is_type2 = true;
        return res;
      }

  // after normalize the lex-min point is the origin and x-coords are
  // 0 < m < n
  auto pts = s.points; // sorted by normalize
  long long m = pts[1][0], a = pts[1][1];
  long long n = pts[2][0], b = pts[2][1];

  long long d = gcd_ll(m, n);
  if (d > 1) { m /= d; n /= d; }
  res.transform.x_division = d;

  if (n * a - m * b < 0) {
    a = -a;
    b = -b;
    res.transform.t_inverted = true;
  }
  // n*a - m*b = 0 would make the support collinear, excluded above

  res.model = TrinomialModel{m, n, a, b};
  res.model.validate();
  return res;
}

CoamoebaData singular_vertices(const TrinomialModel& t) {
  t.validate();
  long long dl = t.delta();
  // particular solution (-b/(2 delta), n/(2 delta)); kernel spanned by
  // (b, -n)/delta and (-a, m)/delta
  std::set<std::pair<Rat, Rat>> verts;
  Rat p0(-t.b, 2 * dl), q0(t.n, 2 * dl);
  for (long long i = 0; i < dl; ++i)
    for (long long j = 0; j < dl; ++j) {
      Rat th = (p0 + Rat(t.b * i - t.a * j, dl)).mod1();
      Rat nu = (q0 + Rat(-t.n * i + t.m * j, dl)).mod1();
      verts.insert({th, nu});
    }
  if ((long long)verts.size() != dl)
    throw std::logic_error("singular_vertices: wrong count");

  CoamoebaData data;
  data.d_geodesic_count = t.gcd_nb();
  data.singular_vertices.assign(verts.begin(), verts.end());

  // both congruences must hold exactly, and nu-coordinates be distinct
  std::set<Rat> nus;
  for (auto& [th, nu] : data.singular_vertices) {
    Rat e1 = (Rat(t.n) * th + Rat(t.b) * nu).mod1();
    Rat e2 = (Rat(t.m) * th + Rat(t.a) * nu - Rat(1, 2)).mod1();
    if (e1 != Rat(0) || e2 != Rat(0))
      throw std::logic_error("singular_vertices: congruence violated");
    if (!nus.insert(nu).second)
      throw std::logic_error("singular_vertices: repeated nu-coordinate");
  }
  return data;
}

Rat default_base_arg(const TrinomialModel& t) {
  return Rat(2 * t.n - 1, 4 * t.delta()).mod1();
}

TrinomialPrediction predicted_monodromy(const TrinomialModel& t, const Rat& nu0) {
  t.validate();
  long long dl = t.delta(), n = t.n, b = t.b;
  CoamoebaData co = singular_vertices(t);
  for (auto& [th, nu] : co.singular_vertices)
    if (nu == nu0.mod1()) throw std::invalid_argument("degenerate base argument");

  TrinomialPrediction pred;
  pred.nu0 = nu0.mod1();

  // D-geodesic crossings of the section {nu = nu0}: slots l = 0..n-1 at
  // c_l = (1/2 - b*nu0 + l)/n; x-cut half a spacing below c_0
  Rat c0 = (Rat(1, 2) - Rat(b) * pred.nu0) / Rat(n);
  pred.theta_cut = (c0 - Rat(1, 2 * n)).mod1();

  // bifurcation points ordered ccw starting from nu0
  std::vector<std::pair<Rat, Rat>> order; // (offset from nu0, arg)
  for (const Rat& arg : t.bifurcation_args())
    order.push_back({(arg - pred.nu0).mod1(), arg});
  std::sort(order.begin(), order.end());
  for (auto& [off, arg] : order) {
    if (off == Rat(0)) throw std::invalid_argument("degenerate base argument");
    pred.loop_args.push_back(arg);
  }

  pred.l0 = AnnularBraidWord::tau((int)n, (int)b);

  for (const Rat& varg : pred.loop_args) {
    // the vertex enclosed by this loop is the one with nu = loop arg
    const std::pair<Rat, Rat>* vert = nullptr;
    for (auto& v : co.singular_vertices)
      if (v.second == varg) { vert = &v; break; }
    if (!vert) throw std::logic_error("no vertex at bifurcation argument");

    Rat lift = pred.nu0 + (vert->second - pred.nu0).mod1(); // in (nu0, nu0+1)
    // left-neighbouring D-segment at the vertex height; segments sit at
    // c_l - (b/n)(lift - nu0), spaced 1/n
    Rat seg0 = c0 - Rat(b, n) * (lift - pred.nu0);
    Rat x = (vert->first - seg0).mod1() * Rat(n);
    if (x.den == 1)
      throw std::logic_error("vertex on a D-geodesic");
    long long lstar = x.floor();
    // the left-neighbouring segment is labelled by its crossing on the
    // section side; the tracking engine fixes this orientation choice
    long long label = (lstar % n) + 1;
    pred.k_of_j.push_back((int)label);
  }

  for (int k : pred.k_of_j) pred.fiber_histogram[k]++;
  if ((long long)pred.k_of_j.size() != dl)
    throw std::logic_error("predicted_monodromy: wrong loop count");
  return pred;
}

std::map<int, int> fiber_data(const TrinomialModel& t, const Rat& nu0) {
  return predicted_monodromy(t, nu0).fiber_histogram;
}

} // namespace braidmon
