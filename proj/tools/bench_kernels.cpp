// Timing comparison of the serial reference kernels against their
// OpenMP counterparts: simultaneous root finding, batched loop tracking
// and the S_n enumeration filter.

#include <chrono>
#include <cstdio>
#include <random>

#include "braidmon/perm_group.hpp"
#include "braidmon/roots.hpp"
#include "braidmon/track.hpp"
#include "braidmon/trinomial.hpp"

using namespace braidmon;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return seconds(t0, t1);
}

} // namespace

int main() {
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "omp[s]", "speedup");

  { // Aberth on dense random polynomials
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cdouble> coeffs(301);
    for (auto& c : coeffs) c = cdouble(u(rng), u(rng));
    coeffs.front() += 2.0;
    coeffs.back() += 2.0;

    AberthOptions s, p;
    s.parallel = false;
    p.parallel = true;
    double ts = timed([&] {
      for (int rep = 0; rep < 10; ++rep) aberth_roots(coeffs, s);
    });
    double tp = timed([&] {
      for (int rep = 0; rep < 10; ++rep) aberth_roots(coeffs, p);
    });
    std::printf("%-34s %10.3f %10.3f %8.2f\n", "aberth deg-300 x10", ts, tp,
                ts / tp);
  }

  { // batched railway tracking
    TrinomialModel m{2, 5, 4, 2};
    Rat nu0 = default_base_arg(m);
    TrinomialPrediction pred = predicted_monodromy(m, nu0);
    double rho = m.rho();
    auto loops = railway_graph(pred.loop_args, rho, rho / 100, rho * 100, nu0);
    ParamPoly phi;
    phi.terms = {{0, 0, 1.0}, {m.m, m.a, 1.0}, {m.n, m.b, 1.0}};
    TrackOptions topts;
    topts.cut_turns =
        ((Rat(1, 2) - Rat(m.b) * nu0) / Rat(m.n) - Rat(1, 2 * m.n)).to_double();

    TrackOptions ser = topts, par = topts;
    ser.parallel = false;
    par.parallel = true;
    double ts = timed([&] { track_all(phi, loops, ser); });
    double tp = timed([&] { track_all(phi, loops, par); });
    std::printf("%-34s %10.3f %10.3f %8.2f\n", "railway 17 loops (2,5,4,2)", ts,
                tp, ts / tp);
  }

  { // permutation enumeration filter
    WreathGround w{8, 2};
    auto pred = [&](const Perm& p) { return is_d_equivariant(p, w); };
    double ts = timed([&] { filter_sn(8, pred, false); });
    double tp = timed([&] { filter_sn(8, pred, true); });
    std::printf("%-34s %10.3f %10.3f %8.2f\n", "filter S_8 d-equivariant", ts,
                tp, ts / tp);
  }
  return 0;
}
