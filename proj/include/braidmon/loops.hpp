#pragma once

#include <complex>
#include <vector>

#include "braidmon/rational.hpp"

namespace braidmon {

/// Piecewise path in the parameter plane: circle arcs (optionally around
/// a center), radial segments and straight segments. Angles in turns.
struct PathPiece {
  enum Kind { Arc, Radial, Segment } kind = Arc;
  double cx = 0, cy = 0;     // arc center / segment start
  double r = 0, r2 = 0;      // radius / radial from-to
  double a0 = 0, a1 = 0;     // arc sweep; radial angle; segment end (a0,a1)

  static PathPiece segment(std::complex<double> from, std::complex<double> to);
  std::complex<double> at(double s) const; // s in [0,1]
};

struct LoopSpec {
  std::vector<PathPiece> pieces;
  int enclosed_index = -1; // which bifurcation point, -1 = origin only

  std::complex<double> base() const { return pieces.front().at(0.0); }
  std::complex<double> at(double global_s) const; // uniform over pieces
};

/// The railway-track generators l_0..l_delta: l_0 is the inner circle,
/// l_j hugs the sector of the j-th bifurcation point (ordered ccw from
/// the base argument nu0). Feet sit a quarter-spacing past each point so
/// the base argument never collides with a singular-vertex argument.
/// Throws unless eps < rho < outer.
std::vector<LoopSpec> railway_graph(const std::vector<Rat>& bif_args_sorted,
                                    double rho, double eps, double outer,
                                    const Rat& nu0);

/// Reverse traversal direction.
LoopSpec reversed(const LoopSpec& loop);

/// Plain circle |t| = r based at angle nu0 (turns), one full ccw turn.
LoopSpec circle_loop(double r, double nu0_turns);

/// Circle of radius r around an arbitrary center, ccw.
LoopSpec small_circle(std::complex<double> center, double r,
                      double base_angle_turns = 0.0);

/// Petal based at `base`: straight to the rim of a circle around
/// `center`, once around it ccw, straight back.
LoopSpec petal_loop(std::complex<double> base, std::complex<double> center,
                    double r);

} // namespace braidmon
