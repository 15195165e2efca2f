#include "braidmon/loops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace braidmon {

namespace {
constexpr double tau_rad = 2.0 * std::numbers::pi;
}

PathPiece PathPiece::segment(std::complex<double> from,
                             std::complex<double> to) {
  PathPiece p;
  p.kind = Segment;
  p.cx = from.real();
  p.cy = from.imag();
  p.a0 = to.real();
  p.a1 = to.imag();
  return p;
}

std::complex<double> PathPiece::at(double s) const {
  if (kind == Arc) {
    double ang = a0 + s * (a1 - a0);
    return std::complex<double>(cx, cy) + std::polar(r, tau_rad * ang);
  }
  if (kind == Segment) {
    std::complex<double> from(cx, cy), to(a0, a1);
    return from + s * (to - from);
  }
  double rr = r + s * (r2 - r);
  return std::polar(rr, tau_rad * a0);
}

std::complex<double> LoopSpec::at(double s) const {
  if (pieces.empty()) throw std::logic_error("empty loop");
  double x = s * pieces.size();
  int idx = std::min((int)x, (int)pieces.size() - 1);
  return pieces[idx].at(x - idx);
}

LoopSpec reversed(const LoopSpec& loop) {
  LoopSpec out;
  out.enclosed_index = loop.enclosed_index;
  for (auto it = loop.pieces.rbegin(); it != loop.pieces.rend(); ++it) {
    PathPiece p = *it;
    if (p.kind == PathPiece::Arc) std::swap(p.a0, p.a1);
    else if (p.kind == PathPiece::Segment) {
      std::swap(p.cx, p.a0);
      std::swap(p.cy, p.a1);
    } else std::swap(p.r, p.r2);
    out.pieces.push_back(p);
  }
  return out;
}

LoopSpec circle_loop(double r, double nu0_turns) {
  LoopSpec l;
  PathPiece p;
  p.kind = PathPiece::Arc;
  p.r = r;
  p.a0 = nu0_turns;
  p.a1 = nu0_turns + 1.0;
  l.pieces.push_back(p);
  l.enclosed_index = -1;
  return l;
}

LoopSpec small_circle(std::complex<double> center, double r,
                      double base_angle_turns) {
  LoopSpec l;
  PathPiece p;
  p.kind = PathPiece::Arc;
  p.cx = center.real();
  p.cy = center.imag();
  p.r = r;
  p.a0 = base_angle_turns;
  p.a1 = base_angle_turns + 1.0;
  l.pieces.push_back(p);
  l.enclosed_index = -1;
  return l;
}

LoopSpec petal_loop(std::complex<double> base, std::complex<double> center,
                    double r) {
  std::complex<double> dir = base - center;
  double dist = std::abs(dir);
  std::complex<double> rim = center + dir / dist * r;
  double rim_angle = std::arg(dir) / tau_rad;
  LoopSpec l;
  l.pieces.push_back(PathPiece::segment(base, rim));
  PathPiece circle;
  circle.kind = PathPiece::Arc;
  circle.cx = center.real();
  circle.cy = center.imag();
  circle.r = r;
  circle.a0 = rim_angle;
  circle.a1 = rim_angle + 1.0;
  l.pieces.push_back(circle);
  l.pieces.push_back(PathPiece::segment(rim, base));
  return l;
}

std::vector<LoopSpec> railway_graph(const std::vector<Rat>& bif_args_sorted,
                                    double rho, double eps, double outer,
                                    const Rat& nu0) {
  if (!(eps < rho)) throw std::invalid_argument("railway: need eps < rho");
  if (!(outer > rho)) throw std::invalid_argument("railway: need outer > rho");
  size_t delta = bif_args_sorted.size();
  if (delta == 0) throw std::invalid_argument("railway: no bifurcation points");

  double v0 = nu0.to_double();
  double quarter = 1.0 / (4.0 * (double)delta);

  std::vector<LoopSpec> loops;
  loops.push_back(circle_loop(eps, v0)); // l_0

  for (size_t j = 0; j < delta; ++j) {
    // lift the j-th argument into (v0, v0+1)
    double bj = (bif_args_sorted[j] - nu0).mod1().to_double() + v0;
    double foot_before = bj - 3.0 * quarter;
    double foot_after = bj + quarter;
    LoopSpec l;
    l.enclosed_index = (int)j;
    PathPiece inner1{PathPiece::Arc, 0, 0, eps, 0, v0, foot_before};
    PathPiece out1{PathPiece::Radial, 0, 0, eps, outer, foot_before, 0};
    PathPiece outer_arc{PathPiece::Arc, 0, 0, outer, 0, foot_before, foot_after};
    PathPiece in1{PathPiece::Radial, 0, 0, outer, eps, foot_after, 0};
    PathPiece inner2{PathPiece::Arc, 0, 0, eps, 0, foot_after, v0};
    l.pieces = {inner1, out1, outer_arc, in1, inner2};
    loops.push_back(l);
  }
  return loops;
}

} // namespace braidmon
