#include <complex>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidmon/galois.hpp"
#include "braidmon/json_io.hpp"
#include "braidmon/reducible.hpp"
#include "braidmon/support.hpp"
#include "braidmon/trinomial.hpp"

using nlohmann::json;
using namespace braidmon;

namespace {

json invariants_json(const SupportInvariants& inv) {
  json j;
  j["N"] = inv.N;
  j["d"] = inv.d;
  j["theta"] = inv.theta;
  j["g"] = inv.g;
  j["sharp"] = inv.sharp;
  j["on_line"] = inv.on_line;
  if (inv.sharp) j["extremal_exponent"] = inv.extremal_exponent;
  return j;
}

int cmd_invariants(const std::string& path) {
  SupportSet s = normalize(load_support(path));
  json j = invariants_json(invariants(s));
  j["support"] = json::parse(support_to_json(s));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_predict(const std::string& path) {
  SupportSet s = normalize(load_support(path));
  Prediction pred = predict(s);
  json j = invariants_json(pred.inv);
  j["galois_order"] = pred.order_formula;
  json gens = json::array();
  for (const auto& w : pred.braid_generators)
    gens.push_back(word_to_json_list(w));
  j["braid_generators"] = gens;
  if (pred.inv.on_line && !pred.braid_generators.empty())
    j["braid"] = pred.braid_generators[0].str(); // cyclic image <tau^theta>
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_trinomial(const std::string& path) {
  SupportSet s = normalize(load_support(path));
  Type1Result t1 = to_type1(s);
  json j;
  if (t1.is_type2) {
    j["type"] = 2;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const TrinomialModel& m = t1.model;
  j["type"] = 1;
  j["m"] = m.m;
  j["n"] = m.n;
  j["a"] = m.a;
  j["b"] = m.b;
  j["delta"] = m.delta();
  BifurcationSet bset = bifurcation_set(m);
  j["rho"] = bset.rho;
  json bif = json::array();
  bif.push_back({0.0, 0.0});
  for (auto& p : bset.nonzero) bif.push_back({p.real(), p.imag()});
  j["bifurcation_set"] = bif;
  j["x_division"] = t1.transform.x_division;
  j["t_inverted"] = t1.transform.t_inverted;

  CoamoebaData co = singular_vertices(m);
  json verts = json::array();
  for (auto& [th, nu] : co.singular_vertices)
    verts.push_back({th.str(), nu.str()});
  j["vertices"] = verts;
  j["d_geodesics"] = co.d_geodesic_count;

  Rat nu0 = default_base_arg(m);
  TrinomialPrediction pred = predicted_monodromy(m, nu0);
  json loops;
  loops["l0"] = pred.l0.str();
  for (size_t i = 0; i < pred.k_of_j.size(); ++i)
    loops["l" + std::to_string(i + 1)] =
        AnnularBraidWord::b((int)m.n, pred.k_of_j[i]).str();
  j["loops"] = loops;
  json hist;
  for (auto& [k, c] : pred.fiber_histogram) hist[std::to_string(k)] = c;
  j["fiber_histogram"] = hist;
  j["base_arg"] = nu0.str();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_specialize(const std::string& path) {
  SupportSet s = normalize(load_support(path));
  Specialization sp = monomial_specialization(s);
  json j;
  j["weights"] = sp.weights;
  j["image"] = json::parse(support_to_json(sp.image));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, unsigned long long seed, double eps,
               double outer, double tol) {
  SupportSet s = normalize(load_support(path));
  VerifyOptions opts;
  opts.seed = seed;
  opts.eps = eps;
  opts.outer = outer;
  opts.tol = tol;
  VerifyReport rep = verify_support(s, opts);
  json j = invariants_json(rep.inv);
  j["loops"] = rep.loop_count;
  j["words"] = rep.words;
  j["predicted_words"] = rep.predicted_words;
  j["group_order"] = rep.group_order;
  j["predicted_order"] = rep.predicted_order;
  j["match"] = rep.match;
  if (rep.rho > 0) j["rho"] = rep.rho;
  if (!rep.specialization_weights.empty())
    j["specialization_weights"] = rep.specialization_weights;
  std::cout << j.dump(2) << "\n";
  return rep.match ? 0 : 3;
}

int cmd_reducible(const std::string& a1path, const std::string& a2path,
                  bool do_verify, unsigned long long seed,
                  long long enum_bound) {
  SupportSet a1 = load_support(a1path), a2 = load_support(a2path);
  ReduciblePair P = normalize_pair(a1, a2);
  json j;
  if (P.routed_twolines) {
    TwoLinesPair tl = normalize_twolines(a1, a2);
    j["two_lines"] = true;
    j["n1"] = tl.n1;
    j["n2"] = tl.n2;
    j["nu"] = tl.nu;
    j["N"] = tl.N;
    if (do_verify) {
      TwoLinesReport rep = numeric_check_twolines(tl, seed);
      j["galois_order"] = rep.numeric_order;
      j["predicted_order"] = rep.predicted_order;
      j["kernel_pairing"] = rep.kernel_pairing;
      j["verified"] = rep.group_match;
      std::cout << j.dump(2) << "\n";
      return rep.group_match ? 0 : 3;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  PairInvariants inv = pair_invariants(P);
  j["two_lines"] = false;
  j["n"] = P.n;
  j["h"] = P.h;
  j["N"] = P.N;
  j["S"] = inv.s_factors;
  j["S_order"] = inv.s_order;
  j["S_prime_order"] = inv.sprime_order;
  j["kappa"] = inv.kappa;
  j["kappa_from_singleton"] = inv.kappa_from_singleton;
  j["sharp"] = inv.sharp;
  if (do_verify) {
    SolvedPair sp = instantiate_pair(P, seed);
    ReducibleReport rep = numeric_check_reducible(sp, seed, enum_bound);
    j["galois_order"] = rep.numeric_order;
    j["predicted_order"] = rep.predicted_order;
    j["kernel_order"] = rep.kernel_order;
    j["kernel_bruteforce_order"] = rep.kernel_bruteforce_order;
    j["ga2_order"] = rep.ga2_order;
    j["verified"] = rep.verified;
    std::cout << j.dump(2) << "\n";
    return rep.verified ? 0 : 3;
  }
  SolvedPair sp = instantiate_pair(P, seed);
  PermGroup G = predicted_galois_reducible(sp);
  j["galois_order"] = G.order();
  std::cout << j.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid monodromy and Galois groups of parametric polynomials"};
  app.require_subcommand(1);

  std::string support, a1path, a2path;
  unsigned long long seed = 1;
  double eps = 0, outer = 0, tol = 0;
  long long enum_bound = 10;
  bool do_verify = false;

  auto* inv = app.add_subcommand("invariants", "support-set invariants");
  inv->add_option("--support", support)->required();

  auto* pre = app.add_subcommand("predict", "predicted braid and Galois groups");
  pre->add_option("--support", support)->required();

  auto* tri = app.add_subcommand("trinomial", "trinomial normal form and coamoeba data");
  tri->add_option("--support", support)->required();

  auto* spec = app.add_subcommand("specialize", "reduce parameters to one");
  spec->add_option("--support", support)->required();

  auto* ver = app.add_subcommand("verify", "certify predictions by root tracking");
  ver->add_option("--support", support)->required();
  ver->add_option("--seed", seed);
  ver->add_option("--eps", eps);
  ver->add_option("--outer", outer);
  ver->add_option("--tol", tol);

  auto* red = app.add_subcommand("reducible", "reducible pairs");
  red->add_option("--a1", a1path)->required();
  red->add_option("--a2", a2path)->required();
  red->add_flag("--verify", do_verify);
  red->add_option("--seed", seed);
  red->add_option("--enumerate-bound", enum_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return cmd_invariants(support);
    if (pre->parsed()) return cmd_predict(support);
    if (tri->parsed()) return cmd_trinomial(support);
    if (spec->parsed()) return cmd_specialize(support);
    if (ver->parsed()) return cmd_verify(support, seed, eps, outer, tol);
    if (red->parsed()) return cmd_reducible(a1path, a2path, do_verify, seed, enum_bound);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
