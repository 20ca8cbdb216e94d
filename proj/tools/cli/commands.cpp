#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "gl2q/bialgebra/classify.hpp"
#include "gl2q/bialgebra/cocommutator.hpp"
#include "gl2q/bialgebra/rmatrix.hpp"
#include "gl2q/contraction/contraction.hpp"
#include "gl2q/poissonlie/poisson.hpp"
#include "gl2q/quantum/rmatrix.hpp"
#include "gl2q/spinchain/chain.hpp"

namespace gl2q::cli {

namespace {

using bialg::ParamPoint;
using lie::LieAlgebra;
using lie::Tensor;
using sym::MultiPoly;
using sym::Rational;

struct Options {
  std::vector<std::string> assignments;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string out;

  std::string algebra = "gl2";
  std::string r_json;
  bool check_jacobi = false;

  std::string family;
  bool beta_plus = false;
  std::string normalize;

  std::string which;
  std::string quantization;
  std::string method = "rep3";
  int samples = 20;
  double a = 0.0, a_plus = 0.0, b = 0.0, b_plus = 0.0, b_minus = 0.0, lambda = 1.0;

  int bonds = 1;
  std::string boundary = "open";
  std::string chain_file;
};

// ---- classical helpers ----

ParamPoint parse_point(const std::vector<std::string>& assignments) {
  ParamPoint pt;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got '" + a + "'");
    const auto s = sym::parse_symbol(a.substr(0, eq));
    if (!s) throw std::invalid_argument("unknown parameter '" + a.substr(0, eq) + "'");
    pt.set(*s, Rational::parse(a.substr(eq + 1)));
  }
  return pt;
}

Json point_json(const ParamPoint& pt) {
  Json j = Json::object();
  for (auto s : {sym::Sym::a_plus, sym::Sym::a_minus, sym::Sym::b_plus, sym::Sym::b_minus, sym::Sym::a, sym::Sym::b}) {
    j[std::string(sym::symbol_name(s))] = pt.get(s).to_string();
  }
  return j;
}

std::string tensor_text(const LieAlgebra& alg, const Tensor& t) {
  if (t.is_zero()) return "0";
  return t.is_antisymmetric() ? t.to_wedge_string(alg) : t.to_string(alg);
}

Json cocommutator_json(const bialg::Cocommutator& d) {
  Json j = Json::object();
  const auto& alg = d.lie_algebra();
  for (int i = 0; i < lie::kDim; ++i) j[std::string(alg.basis_label(i))] = tensor_text(alg, d.image[i]);
  return j;
}

Json polys_json(const std::vector<MultiPoly>& polys) {
  Json j = Json::array();
  for (const auto& p : polys) j.push_back(p.to_string());
  return j;
}

Tensor parse_r_json(const std::string& path, const LieAlgebra& alg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  const Json j = Json::parse(in);
  const Json& terms = j.contains("terms") ? j.at("terms") : j;
  Tensor r(2);
  for (const auto& [key, value] : terms.items()) {
    const auto wedge_at = key.find('^');
    const auto tensor_at = key.find("(x)");
    const bool is_wedge = wedge_at != std::string::npos;
    if (!is_wedge && tensor_at == std::string::npos) throw std::invalid_argument("bad r-matrix key '" + key + "'");
    const std::string lhs = key.substr(0, is_wedge ? wedge_at : tensor_at);
    const std::string rhs = key.substr(is_wedge ? wedge_at + 1 : tensor_at + 3);
    const int x = alg.require_index(lhs);
    const int y = alg.require_index(rhs);
    const MultiPoly c = value.is_string() ? MultiPoly::parse(value.get<std::string>())
                                          : MultiPoly(Rational(static_cast<long>(value.get<long>())));
    if (is_wedge) {
      r += c * lie::wedge(x, y);
    } else {
      r += c * tensor(Tensor::generator(x), Tensor::generator(y));
    }
  }
  return r;
}

// ---- quantum helpers ----

Json images_json(const std::array<std::string, 4>& labels, const quantum::GeneratorImages& images) {
  Json j = Json::object();
  for (std::size_t i = 0; i < 4; ++i) j[labels[i]] = dense_to_json(images[i]);
  return j;
}

quantum::Quantization quantization_from(const Options& o) {
  const auto kind = quantum::parse_quantization(o.quantization);
  if (!kind) throw std::invalid_argument("unknown quantization '" + o.quantization + "'");
  switch (*kind) {
    case quantum::QuantizationKind::undeformed:
      return quantum::undeformed_quantization();
    case quantum::QuantizationKind::standard_Ia:
      return quantum::quantization_Ia(o.a_plus, o.a);
    case quantum::QuantizationKind::jordanian:
      return quantum::quantization_jordanian(o.a_plus, o.b_plus);
    case quantum::QuantizationKind::twisted_xxz:
      return quantum::quantization_xxz(o.a, o.b);
    case quantum::QuantizationKind::twisted_xxx:
      return quantum::quantization_twisted(o.b_plus, o.b);
  }
  throw std::logic_error("quantization_from");
}

Json quantum_inputs(const Options& o) {
  return Json{{"a", o.a}, {"a+", o.a_plus}, {"b", o.b}, {"b+", o.b_plus}, {"b-", o.b_minus}, {"lambda", o.lambda}};
}

double tolerance(const Options& o, double fallback) { return o.tol.value_or(fallback); }

void verdict(Json& report, bool pass, double tol) {
  report["verdict"]["pass"] = pass;
  report["verdict"]["tolerance"] = tol;
}

// ---- commands ----

Json cmd_algebra_show(const Options& o) {
  const auto name = o.algebra == "h4" ? lie::AlgebraName::h4 : lie::AlgebraName::gl2;
  if (o.algebra != "gl2" && o.algebra != "h4") throw std::invalid_argument("unknown algebra '" + o.algebra + "'");
  const auto& alg = LieAlgebra::get(name);
  Json r = make_report("algebra show");
  r["inputs"]["algebra"] = o.algebra;
  Json basis = Json::array();
  for (const auto& l : alg.basis()) basis.push_back(l);
  r["outputs"]["basis"] = basis;
  Json brackets = Json::object();
  for (int i = 0; i < lie::kDim; ++i) {
    for (int j = i + 1; j < lie::kDim; ++j) {
      const Tensor b = lie::bracket(alg, i, j);
      if (b.is_zero()) continue;
      brackets["[" + std::string(alg.basis_label(i)) + "," + std::string(alg.basis_label(j)) + "]"] = b.to_string(alg);
    }
  }
  r["outputs"]["brackets"] = brackets;
  if (name == lie::AlgebraName::gl2) {
    std::string casimir;
    for (const auto& t : lie::CasimirSpec::gl2_quadratic().terms) {
      if (!casimir.empty()) casimir += " + ";
      casimir += t.coefficient.to_string() + "*";
      for (std::size_t k = 0; k < t.word.size(); ++k) casimir += (k ? " " : "") + std::string(alg.basis_label(t.word[k]));
    }
    r["outputs"]["casimir"] = casimir;
  }
  const bool jacobi = alg.satisfies_jacobi();
  r["outputs"]["jacobi"] = jacobi;
  set_verdict(r, jacobi);
  return r;
}

Json cmd_classify(const Options& o) {
  const ParamPoint pt = parse_point(o.assignments);
  Json r = make_report("classify");
  r["inputs"]["point"] = point_json(pt);
  const auto result = bialg::classify(pt);
  if (const auto* tag = std::get_if<bialg::FamilyTag>(&result)) {
    r["outputs"]["family"] = std::string(bialg::family_name(tag->family));
    r["outputs"]["type"] = tag->type_name();
    r["outputs"]["discriminant"] = tag->discriminant.to_string();
    r["outputs"]["equivalent_to_I+"] = tag->equivalent_to_I_plus;
    r["outputs"]["r"] = tensor_text(LieAlgebra::gl2(), bialg::r_at(pt));
    r["outputs"]["delta"] = cocommutator_json(bialg::cocommutator_at(pt));
    set_verdict(r, true);
  } else {
    Json violated = Json::object();
    for (const auto& [name, value] : std::get<bialg::NotABialgebra>(result).violated) violated[name] = value.to_string();
    r["outputs"]["not_a_bialgebra"] = violated;
    set_verdict(r, false);
  }
  return r;
}

Json cmd_schouten(const Options& o) {
  const auto& alg = LieAlgebra::gl2();
  Json r = make_report("schouten");
  Tensor rm(2);
  if (!o.r_json.empty()) {
    rm = parse_r_json(o.r_json, alg);
    r["inputs"]["r_json"] = o.r_json;
  } else if (!o.assignments.empty()) {
    const auto pt = parse_point(o.assignments);
    rm = bialg::r_at(pt);
    r["inputs"]["point"] = point_json(pt);
  } else {
    rm = bialg::generic_r();
    r["inputs"]["r"] = "generic";
  }
  r["inputs"]["r_text"] = tensor_text(alg, rm);
  const Tensor s = bialg::schouten(alg, rm);
  const auto conditions = bialg::mcybe_conditions(alg, rm);
  r["outputs"]["schouten"] = tensor_text(alg, s);
  r["outputs"]["cybe"] = s.is_zero();
  r["outputs"]["mcybe_conditions"] = polys_json(conditions);
  if (o.check_jacobi) {
    std::vector<MultiPoly> mapped;
    for (const auto& c : bialg::mcybe_conditions(alg, bialg::c_coordinate_r())) mapped.push_back(bialg::c_to_params(c));
    const bool match = sym::same_up_to_scalars(sym::dedupe_up_to_scalars(mapped), bialg::jacobi_constraint_polys());
    r["outputs"]["mcybe_conditions_from_c"] = polys_json(mapped);
    r["outputs"]["jacobi_constraints"] = polys_json(bialg::jacobi_constraint_polys());
    r["outputs"]["matches_jacobi"] = match;
    set_verdict(r, match);
  } else {
    set_verdict(r, conditions.empty());
  }
  return r;
}

Json cmd_cocycle(const Options& o) {
  Json r = make_report("cocycle-check");
  bialg::Cocommutator d;
  const bool generic = o.assignments.empty();
  if (generic) {
    d = bialg::generic_cocommutator();
    r["inputs"]["delta"] = "generic";
  } else {
    const auto pt = parse_point(o.assignments);
    d = bialg::cocommutator_at(pt);
    r["inputs"]["point"] = point_json(pt);
  }
  const auto report = bialg::cocycle_check(d);
  const auto constraints = bialg::cojacobi_constraints(d);
  r["outputs"]["delta"] = cocommutator_json(d);
  r["outputs"]["cocycle"] = report.holds;
  r["outputs"]["cojacobi_constraints"] = polys_json(constraints);
  bool pass = report.holds;
  if (generic) {
    const bool match = sym::same_up_to_scalars(constraints, bialg::jacobi_constraint_polys());
    r["outputs"]["matches_jacobi"] = match;
    pass = pass && match;
  } else {
    pass = pass && constraints.empty();
  }
  set_verdict(r, pass);
  return r;
}

Json table_json(const poisson::PoissonTable& t) {
  Json j = Json::object();
  for (int i = 0; i < poisson::kCoords; ++i) {
    for (int k = i + 1; k < poisson::kCoords; ++k) {
      j["{" + std::string(poisson::PoissonTable::label(t.chart, i)) + "," +
        std::string(poisson::PoissonTable::label(t.chart, k)) + "}"] = t.bracket[i][k].to_string();
    }
  }
  return j;
}

Json cmd_poisson(const std::string& sub, const Options& o) {
  Json r = make_report("poisson " + sub);
  std::optional<ParamPoint> pt;
  if (!o.assignments.empty()) {
    pt = parse_point(o.assignments);
    r["inputs"]["point"] = point_json(*pt);
  } else {
    r["inputs"]["r"] = "generic";
  }
  if (sub == "kupershmidt") {
    if (!pt) throw std::invalid_argument("poisson kupershmidt needs a parameter point");
    const auto k = poisson::kupershmidt_map(*pt);
    if (const auto* p = std::get_if<poisson::KupershmidtParams>(&k)) {
      r["outputs"]["kupershmidt"] = Json{{"r", p->r.to_string()}, {"s", p->s.to_string()}, {"u", p->u.to_string()},
                                         {"v", p->v.to_string()}, {"w", p->w.to_string()}};
      set_verdict(r, true);
    } else {
      const auto& ne = std::get<poisson::NotEmbeddable>(k);
      r["outputs"]["not_embeddable"] = Json{{"a-", ne.a_minus.to_string()}, {"b-", ne.b_minus.to_string()}};
      set_verdict(r, false);
    }
    return r;
  }
  const Tensor rm = pt ? bialg::r_at(*pt) : bialg::generic_r();
  const auto table = poisson::sklyanin_table(rm);
  if (sub == "table") {
    r["outputs"]["brackets"] = table_json(table);
    set_verdict(r, table.is_antisymmetric());
  } else if (sub == "jacobi") {
    const auto jac = poisson::poisson_jacobi(table);
    Json sums = Json::object();
    for (const auto& [triple, value] : jac.cyclic_sums) {
      std::string key;
      for (int i : triple) key += (key.empty() ? "" : ",") + std::string(poisson::PoissonTable::label(table.chart, i));
      sums[key] = value.to_string();
    }
    r["outputs"]["cyclic_sums"] = sums;
    r["outputs"]["obstructions"] = polys_json(jac.obstructions);
    r["outputs"]["vanishes"] = jac.vanishes();
    set_verdict(r, jac.vanishes());
  } else if (sub == "entries") {
    const auto entries = poisson::entry_brackets(table);
    r["outputs"]["brackets"] = table_json(entries);
    set_verdict(r, entries.is_antisymmetric());
  } else {
    throw std::invalid_argument("unknown poisson subcommand '" + sub + "'");
  }
  return r;
}

Json cmd_contract(const Options& o) {
  const auto family = contract::parse_family(o.family);
  if (!family) throw std::invalid_argument("unknown family '" + o.family + "'");
  Json r = make_report("contract");
  r["inputs"]["family"] = o.family;
  r["inputs"]["beta_plus"] = o.beta_plus;
  auto c = contract::contract(*family, o.beta_plus);
  if (!o.normalize.empty()) {
    r["inputs"]["normalize"] = o.normalize;
    if (o.normalize == "remove-beta-plus") {
      c = contract::oscillator_normalize(c, contract::Normalization::remove_beta_plus);
    } else if (o.normalize == "standard-II") {
      c = contract::oscillator_normalize(c, contract::Normalization::standard_II);
    } else {
      throw std::invalid_argument("unknown normalization '" + o.normalize + "'");
    }
  }
  const auto& h4 = LieAlgebra::h4();
  Json exponents = Json::object();
  for (std::size_t i = 0; i < c.ledger.exponent_names.size(); ++i) exponents[c.ledger.exponent_names[i]] = c.exponents[i];
  r["outputs"]["exponents"] = exponents;
  r["outputs"]["r_minimal"] = c.ledger.r_minimal;
  r["outputs"]["delta_minimal"] = c.ledger.delta_minimal;
  r["outputs"]["coboundary"] = c.ledger.coboundary();
  r["outputs"]["r"] = c.r ? Json(tensor_text(h4, *c.r)) : Json(nullptr);
  r["outputs"]["delta"] = cocommutator_json(c.delta);
  const bool cocycle = bialg::cocycle_check(c.delta).holds;
  bool consistent = true;
  if (c.r) consistent = bialg::coboundary_delta(h4, *c.r) == c.delta;
  r["outputs"]["cocycle"] = cocycle;
  r["outputs"]["delta_is_coboundary_of_r"] = consistent;
  set_verdict(r, cocycle && consistent && c.ledger.coboundary());
  return r;
}

Json cmd_quantum_rep(const Options& o) {
  Json r = make_report("quantum rep");
  r["inputs"] = quantum_inputs(o);
  r["inputs"]["which"] = o.which;
  quantum::Representation rep;
  std::vector<quantum::Relation> relations;
  if (o.which == "fundamental") {
    rep = quantum::fundamental_rep();
    relations = quantum::undeformed_quantization().relations;
  } else if (o.which == "Ia") {
    rep = quantum::deformed_rep_Ia(o.a_plus, o.a);
    relations = quantum::quantization_Ia(o.a_plus, o.a).relations;
  } else if (o.which == "xxz") {
    rep = quantum::deformed_rep_xxz(o.a, o.b);
    relations = quantum::quantization_xxz(o.a, o.b).relations;
  } else if (o.which == "jordanian") {
    rep = quantum::deformed_rep_jordanian(o.a_plus, o.b_plus, o.lambda);
    relations = quantum::quantization_jordanian(o.a_plus, o.b_plus).relations;
  } else {
    throw std::invalid_argument("unknown representation '" + o.which + "'");
  }
  const double tol = tolerance(o, 1e-12);
  r["outputs"]["generators"] = images_json(rep.labels, rep.binding.generators);
  const double res = quantum::relations_residual(relations, rep.binding);
  r["residuals"]["relations"] = res;
  verdict(r, res < tol, tol);
  return r;
}

Json cmd_quantum_ybe(const Options& o) {
  const auto kind = quantum::parse_r_kind(o.which);
  if (!kind) throw std::invalid_argument("unknown R-matrix '" + o.which + "'");
  if (*kind == quantum::RKind::Ia && o.a == 0.0) throw std::invalid_argument("quantum ybe --which Ia needs a != 0");
  const auto rm = quantum::build_R(*kind, {{"a+", o.a_plus}, {"a", o.a}, {"b+", o.b_plus}, {"b", o.b}});
  const double tol = tolerance(o, 1e-12);
  Json r = make_report("quantum ybe");
  r["inputs"] = quantum_inputs(o);
  r["inputs"]["which"] = quantum::r_kind_name(*kind);
  r["outputs"]["R"] = dense_to_json(rm.matrix);
  if (rm.q) r["outputs"]["q"] = *rm.q;
  if (rm.h) r["outputs"]["h"] = *rm.h;
  if (rm.p) r["outputs"]["p"] = *rm.p;
  const auto tri = quantum::triangularity_check(rm, tol);
  r["outputs"]["triangular"] = tri.triangular;
  r["residuals"]["R12R21_minus_1"] = tri.norm;
  const double ybe = quantum::qybe_check(rm);
  r["residuals"]["qybe"] = ybe;
  bool pass = ybe < tol;
  if (*kind != quantum::RKind::Ia) {
    const double agree =
        quantum::max_abs(quantum::build_R_II_exp(o.b_plus, o.b).matrix - quantum::build_R_II_matrix(o.b_plus, o.b).matrix);
    r["residuals"]["exp_vs_matrix"] = agree;
    pass = pass && agree < tol;
  }
  verdict(r, pass, tol);
  return r;
}

Json cmd_quantum_intertwine(const Options& o) {
  const double tol = tolerance(o, 1e-12);
  Json r = make_report("quantum intertwine");
  r["inputs"] = quantum_inputs(o);
  quantum::QuantumRMatrix rm;
  quantum::GeneratorImages delta;
  std::array<std::string, 4> labels{"J3", "J+", "J-", "I"};
  if (o.which == "Ia") {
    rm = quantum::build_R_Ia(o.a_plus, o.a);
    const auto q = quantum::quantization_Ia(o.a_plus, o.a);
    delta = quantum::coproduct_eval(q.coproduct, quantum::deformed_rep_Ia(o.a_plus, o.a));
    labels = q.coproduct.labels;
  } else if (o.which == "II" || o.which == "II-matrix" || o.which == "II-exp") {
    rm = o.which == "II-exp" ? quantum::build_R_II_exp(o.b_plus, o.b) : quantum::build_R_II_matrix(o.b_plus, o.b);
    delta = quantum::coproduct_eval(quantum::quantization_twisted(o.b_plus, o.b).coproduct, quantum::fundamental_rep());
  } else {
    throw std::invalid_argument("unknown R-matrix '" + o.which + "'");
  }
  r["inputs"]["which"] = o.which;
  const quantum::CMatrix inv = rm.matrix.inverse();
  const quantum::CMatrix p = quantum::flip(2);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double res = quantum::max_abs(rm.matrix * delta[i] * inv - p * delta[i] * p);
    r["residuals"][labels[i]] = res;
    worst = std::max(worst, res);
  }
  r["residuals"]["max"] = worst;
  verdict(r, worst < tol, tol);
  return r;
}

Json cmd_quantum_coassoc(const Options& o) {
  const double tol = tolerance(o, 1e-10);
  Json r = make_report("quantum coassoc");
  r["inputs"] = quantum_inputs(o);
  r["inputs"]["quantization"] = o.quantization;
  r["inputs"]["method"] = o.method;
  r["inputs"]["seed"] = o.seed;
  quantum::CoproductRule rule;
  quantum::Representation rep;
  if (o.quantization == "lm") {
    rule = quantum::lm_rule(o.b_plus, o.b_minus, o.b);
    rep = quantum::fundamental_rep();
  } else {
    const auto q = quantization_from(o);
    rule = q.coproduct;
    if (o.method == "rep3") rep = quantum::default_rep(q);
  }
  double res = 0.0;
  if (o.method == "rep3") {
    res = quantum::coassociativity_rep3(rule, rep);
  } else if (o.method == "primitive-scalar") {
    r["inputs"]["samples"] = o.samples;
    res = quantum::coassociativity_primitive_scalar(rule, o.samples, o.seed);
  } else {
    throw std::invalid_argument("unknown method '" + o.method + "'");
  }
  r["residuals"]["coassociativity"] = res;
  verdict(r, res < tol, tol);
  return r;
}

Json cmd_quantum_hom(const Options& o) {
  const double tol = tolerance(o, 1e-10);
  Json r = make_report("quantum hom");
  r["inputs"] = quantum_inputs(o);
  r["inputs"]["quantization"] = o.quantization;
  double res = 0.0;
  if (o.quantization == "lm") {
    const auto rep = quantum::fundamental_rep();
    res = quantum::homomorphism_check(quantum::lm_rule(o.b_plus, o.b_minus, o.b), rep,
                                      quantum::undeformed_quantization().relations);
  } else {
    const auto q = quantization_from(o);
    const auto rep = quantum::default_rep(q);
    r["residuals"]["relations_in_rep"] = quantum::relations_residual(q.relations, rep.binding);
    res = quantum::homomorphism_check(q.coproduct, rep, q.relations);
  }
  r["residuals"]["homomorphism"] = res;
  verdict(r, res < tol, tol);
  return r;
}

Json cmd_quantum_casimir(const Options& o) {
  const double tol = tolerance(o, 1e-12);
  const auto q = quantization_from(o);
  const auto rep = quantum::default_rep(q);
  const auto c = quantum::casimir_check(q, rep);
  Json r = make_report("quantum casimir");
  r["inputs"] = quantum_inputs(o);
  r["inputs"]["quantization"] = o.quantization;
  r["outputs"]["casimir"] = dense_to_json(c.value);
  r["outputs"]["scalar"] = {c.scalar.real(), c.scalar.imag()};
  r["residuals"]["scalar"] = c.scalar_residual;
  r["residuals"]["centrality"] = c.centrality_residual;
  verdict(r, c.scalar_residual < tol && c.centrality_residual < tol, tol);
  return r;
}

Json chain_spec_json(const chain::ChainSpec& s) {
  return Json{{"bonds", s.bonds},
              {"sites", s.sites()},
              {"deformation", s.deformation == chain::Deformation::twisted ? "twisted" : "deformed"},
              {"boundary", chain::boundary_name(s.boundary)},
              {"b", s.b},
              {"b+", s.b_plus}};
}

chain::ChainHamiltonian chain_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  const Json j = Json::parse(in);
  if (j.value("command", "") != "chain build") throw std::invalid_argument(path + " is not a chain build report");
  const auto& spec = j.at("inputs").at("spec");
  chain::ChainHamiltonian h;
  h.spec.bonds = spec.at("bonds").get<int>();
  h.spec.deformation = spec.at("deformation").get<std::string>() == "twisted" ? chain::Deformation::twisted
                                                                               : chain::Deformation::deformed;
  const auto boundary = chain::parse_boundary(spec.at("boundary").get<std::string>());
  if (!boundary) throw std::invalid_argument("bad boundary in " + path);
  h.spec.boundary = *boundary;
  h.spec.b = spec.at("b").get<double>();
  h.spec.b_plus = spec.at("b+").get<double>();
  h.matrix = matrix_from_json(j.at("outputs").at("hamiltonian"));
  h.hermitian = j.at("outputs").at("hermitian").get<bool>();
  if (h.matrix.rows() != (Eigen::Index(1) << h.spec.sites())) throw std::invalid_argument("matrix size does not match spec");
  return h;
}

Json cmd_chain_build(const Options& o) {
  chain::ChainSpec spec;
  spec.bonds = o.bonds;
  spec.b = o.b;
  spec.b_plus = o.b_plus;
  spec.deformation = o.b_plus == 0.0 ? chain::Deformation::twisted : chain::Deformation::deformed;
  const auto boundary = chain::parse_boundary(o.boundary);
  if (!boundary) throw std::invalid_argument("unknown boundary '" + o.boundary + "'");
  spec.boundary = *boundary;
  const auto h = chain::chain_hamiltonian(spec);
  Json r = make_report("chain build");
  r["inputs"]["spec"] = chain_spec_json(spec);
  r["outputs"]["dim"] = h.dim();
  r["outputs"]["hermitian"] = h.hermitian;
  r["outputs"]["hamiltonian"] = sparse_to_json(h.matrix);
  return r;
}

Json cmd_chain_spectrum(const Options& o) {
  const auto h = chain_from_file(o.chain_file);
  const auto s = chain::spectrum(h);
  Json r = make_report("chain spectrum");
  r["inputs"]["file"] = o.chain_file;
  r["inputs"]["spec"] = chain_spec_json(h.spec);
  Json values = Json::array();
  for (const auto& z : s.eigenvalues) values.push_back({z.real(), z.imag()});
  r["outputs"]["eigenvalues"] = values;
  r["outputs"]["is_real"] = s.is_real;
  r["outputs"]["hermitian_solver"] = s.hermitian_solver;
  return r;
}

Json cmd_chain_invariance(const Options& o) {
  const double tol = tolerance(o, 1e-10);
  const auto h = chain_from_file(o.chain_file);
  const auto rep = chain::invariance_check(h);
  Json r = make_report("chain invariance");
  r["inputs"]["file"] = o.chain_file;
  r["inputs"]["spec"] = chain_spec_json(h.spec);
  const char* labels[] = {"J3", "J+", "J-", "I"};
  for (std::size_t i = 0; i < 4; ++i) r["residuals"][labels[i]] = rep.residual[i];
  r["residuals"]["max"] = rep.max();
  verdict(r, rep.max() < tol, tol);
  return r;
}

void add_quantum_params(CLI::App* app, Options& o) {
  app->add_option("--a", o.a, "parameter a");
  app->add_option("--aplus", o.a_plus, "parameter a+");
  app->add_option("--b", o.b, "parameter b");
  app->add_option("--bplus", o.b_plus, "parameter b+");
  app->add_option("--bminus", o.b_minus, "parameter b- (lm coproduct only)");
  app->add_option("--lambda", o.lambda, "scalar value of I in the Jordanian representation");
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  Options o;
  std::function<Json()> action;

  CLI::App app{"gl(2) Lie bialgebras, contractions and quantum deformations", "gl2q"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol, "tolerance override for numerical verdicts");
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--out", o.out, "write the JSON report here instead of stdout");

  auto* algebra = app.add_subcommand("algebra", "structure constants");
  algebra->require_subcommand(1);
  auto* show = algebra->add_subcommand("show", "print basis, brackets and Casimir");
  show->add_option("--algebra", o.algebra, "gl2 or h4");
  show->callback([&] { action = [&] { return cmd_algebra_show(o); }; });

  auto* classify = app.add_subcommand("classify", "classify a bialgebra point, e.g. a+=1 a-=0 b+=2 b-=0 a=1 b=2");
  classify->add_option("assignments", o.assignments)->required();
  classify->callback([&] { action = [&] { return cmd_classify(o); }; });

  auto* schouten = app.add_subcommand("schouten", "Schouten bracket and mCYBE conditions");
  schouten->add_option("--r-json", o.r_json, "r-matrix as {\"J3^J+\": \"1/2\", ...}");
  schouten->add_flag("--check-jacobi", o.check_jacobi, "compare the mCYBE conditions with the Jacobi constraints");
  schouten->add_option("assignments", o.assignments);
  schouten->callback([&] { action = [&] { return cmd_schouten(o); }; });

  auto* cocycle = app.add_subcommand("cocycle-check", "cocycle and co-Jacobi conditions");
  cocycle->add_option("assignments", o.assignments);
  cocycle->callback([&] { action = [&] { return cmd_cocycle(o); }; });

  auto* poisson = app.add_subcommand("poisson", "Sklyanin brackets on GL(2)");
  poisson->require_subcommand(1);
  for (const char* sub : {"table", "jacobi", "entries", "kupershmidt"}) {
    auto* s = poisson->add_subcommand(sub);
    s->add_option("assignments", o.assignments);
    const std::string name = sub;
    s->callback([&, name] { action = [&, name] { return cmd_poisson(name, o); }; });
  }

  auto* contract = app.add_subcommand("contract", "contraction to h4");
  contract->add_option("--family", o.family, "I+-standard, I+-nonstandard, II-standard, II-nonstandard")->required();
  contract->add_flag("--beta-plus", o.beta_plus, "keep the beta+ term of the I+ schemes");
  contract->add_option("--normalize", o.normalize, "remove-beta-plus or standard-II");
  contract->callback([&] { action = [&] { return cmd_contract(o); }; });

  auto* quantum = app.add_subcommand("quantum", "quantum algebras in representation");
  quantum->require_subcommand(1);
  auto* rep = quantum->add_subcommand("rep", "representation matrices and relation residual");
  rep->add_option("--which", o.which, "fundamental, Ia, xxz, jordanian")->required();
  add_quantum_params(rep, o);
  rep->callback([&] { action = [&] { return cmd_quantum_rep(o); }; });
  auto* ybe = quantum->add_subcommand("ybe", "quantum Yang-Baxter equation");
  ybe->add_option("--which", o.which, "Ia, II-exp, II-matrix")->required();
  add_quantum_params(ybe, o);
  ybe->callback([&] { action = [&] { return cmd_quantum_ybe(o); }; });
  auto* inter = quantum->add_subcommand("intertwine", "R Delta R^-1 against the flipped coproduct");
  inter->add_option("--which", o.which, "Ia, II, II-exp")->required();
  add_quantum_params(inter, o);
  inter->callback([&] { action = [&] { return cmd_quantum_intertwine(o); }; });
  auto* coassoc = quantum->add_subcommand("coassoc", "coassociativity of a coproduct");
  coassoc->add_option("--quantization", o.quantization, "undeformed, Ia, jordanian, xxz, twisted, lm")->required();
  coassoc->add_option("--method", o.method, "rep3 or primitive-scalar");
  coassoc->add_option("--samples", o.samples, "sample points for primitive-scalar");
  add_quantum_params(coassoc, o);
  coassoc->callback([&] { action = [&] { return cmd_quantum_coassoc(o); }; });
  auto* hom = quantum->add_subcommand("hom", "coproduct as an algebra homomorphism");
  hom->add_option("--quantization", o.quantization, "undeformed, Ia, jordanian, xxz, twisted, lm")->required();
  add_quantum_params(hom, o);
  hom->callback([&] { action = [&] { return cmd_quantum_hom(o); }; });
  auto* casimir = quantum->add_subcommand("casimir", "deformed Casimir in representation");
  casimir->add_option("--quantization", o.quantization, "undeformed, Ia, jordanian, xxz, twisted")->required();
  add_quantum_params(casimir, o);
  casimir->callback([&] { action = [&] { return cmd_quantum_casimir(o); }; });

  auto* chain_cmd = app.add_subcommand("chain", "deformed spin chains");
  chain_cmd->require_subcommand(1);
  auto* build = chain_cmd->add_subcommand("build", "assemble the Hamiltonian");
  build->add_option("--bonds", o.bonds, "number of bonds N (N+1 sites)")->check(CLI::Range(1, chain::kMaxSites - 1));
  build->add_option("--b", o.b, "twist parameter b");
  build->add_option("--bplus", o.b_plus, "deformation parameter b+");
  build->add_option("--boundary", o.boundary, "open or periodic");
  build->callback([&] { action = [&] { return cmd_chain_build(o); }; });
  auto* spec_cmd = chain_cmd->add_subcommand("spectrum", "eigenvalues of a built Hamiltonian");
  spec_cmd->add_option("file", o.chain_file, "report written by chain build")->required();
  spec_cmd->callback([&] { action = [&] { return cmd_chain_spectrum(o); }; });
  auto* inv = chain_cmd->add_subcommand("invariance", "commutators with the iterated coproduct");
  inv->add_option("file", o.chain_file, "report written by chain build")->required();
  inv->callback([&] { action = [&] { return cmd_chain_invariance(o); }; });

  std::vector<const char*> argv{"gl2q"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.exit_code = kPass;
    result.message = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsage;
    result.message = std::string(e.what()) + "\n" + app.help();
    return result;
  }
  result.output = o.out;
  if (!action) {
    result.message = app.help();
    return result;
  }
  try {
    result.report = action();
    result.exit_code = verdict_of(result.report) ? kPass : kVerificationFailed;
  } catch (const std::exception& e) {
    result.report = nullptr;
    result.exit_code = kUsage;
    result.message = std::string("error: ") + e.what();
  }
  return result;
}

}  // namespace gl2q::cli
