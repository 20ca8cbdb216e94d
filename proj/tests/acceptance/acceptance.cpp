// Runs the ten acceptance checks and prints one PASS/FAIL line per check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "generators.hpp"
#include "gl2q/bialgebra/classify.hpp"
#include "gl2q/contraction/contraction.hpp"
#include "gl2q/poissonlie/poisson.hpp"
#include "gl2q/quantum/hopf.hpp"
#include "gl2q/quantum/rmatrix.hpp"
#include "gl2q/spinchain/chain.hpp"
#include "oracles.hpp"

using namespace gl2q;
using testing::Column;
using testing::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

constexpr std::array<Column, 4> kColumns{Column::I_plus_standard, Column::I_plus_nonstandard, Column::II_standard,
                                         Column::II_nonstandard};

std::vector<sym::MultiPoly> jacobi_set() {
  return {sym::MultiPoly::parse("a+*b - b+*a"), sym::MultiPoly::parse("a+*b- + a-*b+"),
          sym::MultiPoly::parse("a-*b + b-*a")};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome constraint_recovery() {
  const auto found = bialg::cojacobi_constraints(bialg::generic_cocommutator());
  return {sym::same_up_to_scalars(found, jacobi_set()), std::to_string(found.size()) + " constraints"};
}

Outcome mcybe_matching() {
  std::vector<sym::MultiPoly> mapped;
  for (const auto& p : bialg::mcybe_conditions(lie::LieAlgebra::gl2(), bialg::c_coordinate_r())) {
    mapped.push_back(bialg::c_to_params(p));
  }
  return {sym::same_up_to_scalars(mapped, jacobi_set()), std::to_string(mapped.size()) + " conditions"};
}

Outcome family_regression() {
  Rng rng(3);
  int bad = 0, total = 0;
  for (Column col : kColumns) {
    for (int k = 0; k < 20; ++k, ++total) {
      const auto pt = testing::random_point(rng, col);
      const auto oracle = testing::gl2_family_bialgebra(col, pt);
      const auto r = bialg::r_at(pt);
      const bool ok = bialg::coboundary_delta(lie::LieAlgebra::gl2(), r) == oracle.delta &&
                      bialg::schouten(lie::LieAlgebra::gl2(), r) ==
                          lie::Tensor::from_wedge(3, {{{0, 1, 2}, sym::MultiPoly(pt.discriminant())}});
      bad += ok ? 0 : 1;
    }
  }
  return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " points"};
}

Outcome poisson_layer() {
  Outcome out;
  const auto table = poisson::sklyanin_table(bialg::generic_r());
  int coords = 0;
  const std::map<std::string, int> idx{{"t3", 0}, {"t+", 1}, {"t-", 2}, {"t", 3}};
  for (const auto& [key, expected] : testing::coordinate_brackets()) {
    const auto c = key.find(',');
    coords += table.bracket[idx.at(key.substr(0, c))][idx.at(key.substr(c + 1))] == expected;
  }
  const auto entries = poisson::entry_brackets(table);
  int quad = 0;
  for (const auto& [key, expected] : testing::quadratic_brackets()) {
    quad += entries.bracket[key[0] - 'A'][key[2] - 'A'] == expected;
  }
  Rng rng(4);
  int jacobi_ok = 0, kup_ok = 0;
  const int n = 24;
  for (int k = 0; k < n; ++k) {
    const bialg::ParamPoint pt = k % 2 == 0 ? testing::random_point(rng, kColumns[(k / 2) % 4])
                                            : bialg::ParamPoint(rng.rational(), rng.rational(), rng.rational(),
                                                                rng.rational(), rng.rational(), rng.rational());
    const bool valid = std::holds_alternative<bialg::FamilyTag>(bialg::classify(pt));
    jacobi_ok += poisson::poisson_jacobi(poisson::sklyanin_table(bialg::r_at(pt))).vanishes() == valid;
    bialg::ParamPoint tied = pt;
    if (k % 3 == 0) tied.set(sym::Sym::b_minus, pt.a_minus());
    const bool embeddable = std::holds_alternative<poisson::KupershmidtParams>(poisson::kupershmidt_map(tied));
    kup_ok += embeddable == (tied.a_minus() == tied.b_minus());
  }
  out.pass = coords == 6 && quad == 6 && jacobi_ok == n && kup_ok == n;
  out.detail = "coords " + std::to_string(coords) + "/6, entries " + std::to_string(quad) +
               "/6 identically, jacobi " + std::to_string(jacobi_ok) + "/" + std::to_string(n) + ", kupershmidt " +
               std::to_string(kup_ok) + "/" + std::to_string(n);
  return out;
}

Outcome contraction() {
  using contract::ContractionFamily;
  const std::array<std::pair<ContractionFamily, std::vector<int>>, 4> expected{{
      {ContractionFamily::I_plus_standard, {1, 3, 1, 2}},
      {ContractionFamily::I_plus_nonstandard, {1, 1, 2}},
      {ContractionFamily::II_standard, {2, 2}},
      {ContractionFamily::II_nonstandard, {2, 3, 3}},
  }};
  const auto& h = lie::LieAlgebra::h4();
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& [family, exps] = expected[i];
    const auto scheme = contract::scheme_for(family);
    const auto c = contract::contract(family);
    const auto oracle = testing::oscillator_bialgebra(kColumns[i]);
    const bool here = contract::minimal_exponents(contract::ContractedObject::r_matrix, scheme).minimal == exps &&
                      contract::minimal_exponents(contract::ContractedObject::cocommutator, scheme).minimal == exps &&
                      c.r && *c.r == oracle.r && c.delta == oracle.delta &&
                      bialg::cocycle_check(c.delta).holds && bialg::coboundary_delta(h, *c.r) == c.delta;
    ok = ok && here;
    detail += std::string(contract::family_name(family)) + (here ? " ok" : " FAILED");
    if (i + 1 < expected.size()) detail += ", ";
  }
  return {ok, detail};
}

Outcome quantum_ybe() {
  Rng rng(6);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    worst = std::max(worst, quantum::qybe_check(quantum::build_R_Ia(rng.real(-1, 1), rng.real(-1, 1))));
    const double bp = rng.real(-1, 1), b = rng.real(-1, 1);
    worst = std::max(worst, quantum::qybe_check(quantum::build_R_II_matrix(bp, b)));
    worst = std::max(worst, quantum::qybe_check(quantum::build_R_II_exp(bp, b)));
  }
  const double quasi = quantum::triangularity_check(quantum::build_R_Ia(1.0, std::log(2.0))).norm;
  double tri = 0.0;
  for (int k = 0; k < 10; ++k) {
    tri = std::max(tri, quantum::triangularity_check(quantum::build_R_II_matrix(rng.real(-1, 1), rng.real(-1, 1))).norm);
  }
  return {worst < 1e-12 && quasi > 1e-3 && tri < 1e-12,
          "qybe " + sci(worst) + ", |R12R21-1| Ia " + sci(quasi) + ", II " + sci(tri)};
}

Outcome intertwining() {
  Rng rng(7);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double ap = rng.real(-1, 1), a = rng.nonzero_real();
    const auto ia = quantum::quantization_Ia(ap, a);
    worst = std::max(worst, quantum::intertwine_check(quantum::build_R_Ia(ap, a),
                                                      quantum::coproduct_eval(ia.coproduct, quantum::default_rep(ia))));
    const double bp = rng.real(-1, 1), b = rng.real(-1, 1);
    const auto tw = quantum::quantization_twisted(bp, b);
    worst = std::max(worst, quantum::intertwine_check(quantum::build_R_II_matrix(bp, b),
                                                      quantum::coproduct_eval(tw.coproduct, quantum::default_rep(tw))));
  }
  return {worst < 1e-12, "max residual " + sci(worst)};
}

Outcome hopf_consistency() {
  Rng rng(8);
  double hom = 0.0, coassoc = 0.0;
  for (int k = 0; k < 5; ++k) {
    const std::array<quantum::Quantization, 4> qs{
        quantum::quantization_Ia(rng.real(-1, 1), rng.nonzero_real()),
        quantum::quantization_jordanian(rng.nonzero_real(), rng.real(-1, 1)),
        quantum::quantization_xxz(rng.nonzero_real(), rng.real(-1, 1)),
        quantum::quantization_twisted(rng.real(-1, 1), rng.real(-1, 1))};
    for (const auto& q : qs) {
      const auto rep = quantum::default_rep(q);
      hom = std::max(hom, quantum::homomorphism_check(q.coproduct, rep, q.relations));
      coassoc = std::max(coassoc, quantum::coassociativity_rep3(q.coproduct, rep));
    }
    coassoc = std::max(coassoc, quantum::coassociativity_primitive_scalar(qs[1].coproduct, 20, k + 1));
    coassoc = std::max(coassoc, quantum::coassociativity_primitive_scalar(qs[3].coproduct, 20, k + 1));
  }
  return {hom < 1e-10 && coassoc < 1e-10, "homomorphism " + sci(hom) + ", coassociativity " + sci(coassoc)};
}

Outcome casimir_centrality() {
  Rng rng(9);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const auto xxz = quantum::quantization_xxz(rng.nonzero_real(), rng.real(-1, 1));
    const auto ia = quantum::quantization_Ia(rng.real(-1, 1), rng.nonzero_real());
    for (const auto* q : {&xxz, &ia}) {
      const auto c = quantum::casimir_check(*q, quantum::default_rep(*q));
      worst = std::max({worst, c.centrality_residual, c.scalar_residual});
    }
  }
  return {worst < 1e-12, "max residual " + sci(worst)};
}

Outcome spin_chains() {
  const auto block = chain::spectrum(chain::two_site_block(0.0, 0.0));
  const std::array<double, 4> expected{0, 8, 8, 8};
  double spec_err = 0.0;
  for (int i = 0; i < 4; ++i) spec_err = std::max(spec_err, std::abs(block.eigenvalues[i] - expected[i]));
  Rng rng(10);
  double open = 0.0;
  for (int bonds = 1; bonds <= 5; ++bonds) {
    for (int k = 0; k < 10; ++k) {
      chain::ChainSpec s;
      s.bonds = bonds;
      s.b = rng.real(-1, 1);
      s.b_plus = rng.real(-1, 1);
      s.deformation = chain::Deformation::deformed;
      open = std::max(open, chain::invariance_check(chain::chain_hamiltonian(s)).max());
    }
  }
  chain::ChainSpec periodic;
  periodic.bonds = 3;
  periodic.b = 1.0;
  periodic.boundary = chain::Boundary::periodic;
  const double wrap = chain::invariance_check(chain::chain_hamiltonian(periodic)).max();

  chain::ChainSpec large;
  large.bonds = chain::kMaxSites - 1;
  large.b = 0.7;
  large.b_plus = 0.4;
  large.deformation = chain::Deformation::deformed;
  const double big = chain::invariance_check(chain::chain_hamiltonian(large)).max();
  return {spec_err < 1e-12 && open < 1e-10 && wrap > 1e-3 && big < 1e-10,
          "block spectrum err " + sci(spec_err) + ", open N<=5 " + sci(open) + ", periodic " + sci(wrap) +
              ", 12 sites " + sci(big)};
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 10> checks{{
      {"constraint recovery", constraint_recovery},
      {"mCYBE / Jacobi matching", mcybe_matching},
      {"gl(2) bialgebra family regression", family_regression},
      {"Poisson-Lie layer", poisson_layer},
      {"contraction to h4", contraction},
      {"quantum Yang-Baxter", quantum_ybe},
      {"intertwining", intertwining},
      {"Hopf consistency", hopf_consistency},
      {"Casimir centrality", casimir_centrality},
      {"spin chains", spin_chains},
  }};
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu. %-34s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, checks[i].first, o.detail.c_str(),
                secs);
  }
  std::printf("%d/%zu passed\n", static_cast<int>(checks.size()) - failed, checks.size());
  return failed == 0 ? 0 : 1;
}
