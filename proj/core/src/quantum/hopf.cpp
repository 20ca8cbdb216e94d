#include "gl2q/quantum/hopf.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace gl2q::quantum {

namespace {

Expr g(int i) { return Expr::generator(i); }
const Expr kOne = Expr::identity();

CoproductTerm term(Complex c, Expr left, Expr right) { return {c, std::move(left), std::move(right)}; }

std::vector<CoproductTerm> primitive_image(int i) { return {term(1.0, kOne, g(i)), term(1.0, g(i), kOne)}; }

std::vector<Relation> central_I(int first_generator_index = 0) {
  std::vector<Relation> out;
  const char* names[] = {"[I,X0]", "[I,J+]", "[I,J-]"};
  for (int i = first_generator_index; i < 3; ++i) out.push_back({names[i], commutator(g(3), g(i)), Expr::constant(0.0)});
  return out;
}

std::vector<Relation> undeformed_relations() {
  std::vector<Relation> out = {
      {"[J3,J+]", commutator(g(0), g(1)), 2.0 * g(1)},
      {"[J3,J-]", commutator(g(0), g(2)), -2.0 * g(2)},
      {"[J+,J-]", commutator(g(1), g(2)), g(0)},
  };
  for (auto& r : central_I()) out.push_back(r);
  return out;
}

Expr undeformed_casimir() { return g(0) * g(0) + 2.0 * anticommutator(g(1), g(2)); }

}  // namespace

std::string quantization_name(QuantizationKind kind) {
  switch (kind) {
    case QuantizationKind::undeformed:
      return "undeformed";
    case QuantizationKind::standard_Ia:
      return "Ia";
    case QuantizationKind::jordanian:
      return "jordanian";
    case QuantizationKind::twisted_xxz:
      return "xxz";
    case QuantizationKind::twisted_xxx:
      return "twisted";
  }
  return "?";
}

std::optional<QuantizationKind> parse_quantization(const std::string& name) {
  for (auto k : {QuantizationKind::undeformed, QuantizationKind::standard_Ia, QuantizationKind::jordanian,
                 QuantizationKind::twisted_xxz, QuantizationKind::twisted_xxx}) {
    if (quantization_name(k) == name) return k;
  }
  if (name == "II") return QuantizationKind::twisted_xxx;
  return std::nullopt;
}

Quantization undeformed_quantization() {
  Quantization q;
  q.coproduct.name = "undeformed";
  for (int i = 0; i < 4; ++i) {
    q.coproduct.images[i] = primitive_image(i);
    q.coproduct.primitive[i] = true;
  }
  q.relations = undeformed_relations();
  q.casimir = undeformed_casimir();
  return q;
}

Quantization quantization_Ia(double a_plus, double a) {
  if (a == 0.0) throw std::domain_error("quantization_Ia: a = 0");
  Quantization q;
  q.kind = QuantizationKind::standard_Ia;
  q.params = {{"a+", a_plus}, {"a", a}};
  auto& rule = q.coproduct;
  rule.name = "Ia";
  rule.labels = {"J3'", "J+", "J-", "I"};
  const Expr up = exp((a / 2.0) * g(0));
  const Expr down = exp((-a / 2.0) * g(0));
  rule.images[0] = primitive_image(0);
  rule.images[1] = {term(1.0, up, g(1)), term(1.0, g(1), down)};
  rule.images[2] = {term(1.0, up, g(2)), term(1.0, g(2), down)};
  rule.images[3] = primitive_image(3);
  rule.primitive = {true, false, false, true};

  const double ratio = a_plus / a;
  const Expr s = sinh_over(a / 2.0, g(0));
  q.relations = {
      {"[J3',J+]", commutator(g(0), g(1)), 2.0 * g(1)},
      {"[J3',J-]", commutator(g(0), g(2)), -2.0 * g(2) - ratio * s - (ratio * ratio) * g(1)},
      {"[J+,J-]", commutator(g(1), g(2)),
       sinh_over(a, g(0)) + (ratio * std::expm1(a) / (2.0 * a)) * (down * g(1) + g(1) * up)},
  };
  for (auto& r : central_I()) q.relations.push_back(r);
  q.casimir = (2.0 / (a * std::tanh(a))) * (cosh_of(a, g(0)) - kOne) + ratio * anticommutator(s, g(1)) +
              (ratio * ratio) * g(1) * g(1) + 2.0 * anticommutator(g(1), g(2));
  return q;
}

Quantization quantization_jordanian(double a_plus, double b_plus) {
  if (a_plus == 0.0) throw std::domain_error("quantization_jordanian: a+ = 0");
  Quantization q;
  q.kind = QuantizationKind::jordanian;
  q.params = {{"a+", a_plus}, {"b+", b_plus}};
  auto& rule = q.coproduct;
  rule.name = "jordanian";
  const Expr e = exp(a_plus * g(1));
  const Expr shifted = g(0) - (b_plus / a_plus) * g(3);
  // (E - 1)/a+ written without the division
  const Expr e_minus_one = g(1) * phi1(a_plus * g(1));
  rule.images[0] = {term(1.0, kOne, g(0)), term(1.0, g(0), e), term(-b_plus, g(3), e_minus_one)};
  rule.images[1] = primitive_image(1);
  rule.images[2] = {term(1.0, kOne, g(2)), term(1.0, g(2), e), term(-b_plus / 2.0, shifted, g(3) * e)};
  rule.images[3] = primitive_image(3);
  rule.primitive = {false, true, false, true};

  q.relations = {
      {"[J3,J+]", commutator(g(0), g(1)), 2.0 * e_minus_one},
      {"[J3,J-]", commutator(g(0), g(2)), -2.0 * g(2) + (a_plus / 2.0) * shifted * shifted},
      {"[J+,J-]", commutator(g(1), g(2)), g(0) + b_plus * g(3) * e_minus_one},
  };
  for (auto& r : central_I()) q.relations.push_back(r);
  const Expr e_inv = exp(-a_plus * g(1));
  const Expr one_minus_e_inv = g(1) * phi1(-a_plus * g(1));  // (1 - e^{-a+ J+})/a+
  q.casimir = shifted * e_inv * shifted + (2.0 * b_plus / a_plus) * g(0) * g(3) + 2.0 * one_minus_e_inv * g(2) +
              2.0 * g(2) * one_minus_e_inv + 2.0 * (e_inv - kOne);
  return q;
}

Quantization quantization_xxz(double a, double b) {
  Quantization q;
  q.kind = QuantizationKind::twisted_xxz;
  q.params = {{"a", a}, {"b", b}};
  auto& rule = q.coproduct;
  rule.name = "xxz";
  const Expr plus_arg = (a / 2.0) * g(0) - (b / 2.0) * g(3);
  const Expr minus_arg = (a / 2.0) * g(0) + (b / 2.0) * g(3);
  rule.images[0] = primitive_image(0);
  rule.images[1] = {term(1.0, exp(plus_arg), g(1)), term(1.0, g(1), exp(-plus_arg))};
  rule.images[2] = {term(1.0, exp(minus_arg), g(2)), term(1.0, g(2), exp(-minus_arg))};
  rule.images[3] = primitive_image(3);
  rule.primitive = {true, false, false, true};

  q.relations = {
      {"[J3,J+]", commutator(g(0), g(1)), 2.0 * g(1)},
      {"[J3,J-]", commutator(g(0), g(2)), -2.0 * g(2)},
      {"[J+,J-]", commutator(g(1), g(2)), sinh_over(a, g(0))},
  };
  for (auto& r : central_I()) q.relations.push_back(r);
  const Expr s = sinh_over(a / 2.0, g(0));
  const double ratio = a == 0.0 ? 1.0 : std::sinh(a) / a;
  q.casimir = std::cosh(a) * s * s + (2.0 * ratio) * anticommutator(g(1), g(2));
  return q;
}

Quantization quantization_twisted(double b_plus, double b) {
  Quantization q;
  q.kind = QuantizationKind::twisted_xxx;
  q.params = {{"b+", b_plus}, {"b", b}};
  auto& rule = q.coproduct;
  rule.name = "twisted";
  const Expr bi = b * g(3);
  // (e^{bI}-1)/b, (e^{-bI}-1)/(2b) and (1-cosh bI)/(2b^2) as entire functions of I
  const Expr up_over = g(3) * phi1(bi);
  const Expr down_over = -0.5 * (g(3) * phi1(-bi));
  const Expr cosh_over = -0.25 * (g(3) * g(3) * (phi2(bi) + phi2(-bi)));
  rule.images[0] = {term(1.0, kOne, g(0)), term(1.0, g(0), kOne), term(b_plus, g(1), up_over)};
  rule.images[1] = {term(1.0, kOne, g(1)), term(1.0, g(1), exp(bi))};
  rule.images[2] = {term(1.0, kOne, g(2)), term(1.0, g(2), exp(-bi)), term(b_plus, g(0), down_over),
                    term(b_plus * b_plus, g(1), cosh_over)};
  rule.images[3] = primitive_image(3);
  rule.primitive = {false, false, false, true};
  q.relations = undeformed_relations();
  q.casimir = undeformed_casimir();
  return q;
}

CoproductRule lm_rule(double b_plus, double b_minus, double b) {
  CoproductRule rule;
  rule.name = "lm";
  auto e_entry = [=](int i, int j) {
    return [=](Complex lambda) {
      Eigen::Matrix3cd m;
      m << 0.0, b_plus * lambda, b_minus * lambda, -b_minus * lambda / 2.0, b * lambda, 0.0, -b_plus * lambda / 2.0,
          0.0, -b * lambda;
      const Eigen::Matrix3cd e = m.exp();
      return e(i, j);
    };
  };
  for (int i = 0; i < 3; ++i) {
    rule.images[i].push_back(term(1.0, kOne, g(i)));
    for (int j = 0; j < 3; ++j) {
      rule.images[i].push_back(
          term(1.0, g(j), central(g(3), e_entry(i, j), "E" + std::to_string(i + 1) + std::to_string(j + 1))));
    }
  }
  rule.images[3] = primitive_image(3);
  rule.primitive = {false, false, false, true};
  return rule;
}

Representation default_rep(const Quantization& q) {
  auto param = [&](const char* name) { return q.params.at(name); };
  switch (q.kind) {
    case QuantizationKind::undeformed:
    case QuantizationKind::twisted_xxx:
      return fundamental_rep();
    case QuantizationKind::standard_Ia:
      return deformed_rep_Ia(param("a+"), param("a"));
    case QuantizationKind::jordanian:
      return deformed_rep_jordanian(param("a+"), param("b+"));
    case QuantizationKind::twisted_xxz:
      return deformed_rep_xxz(param("a"), param("b"));
  }
  throw std::logic_error("default_rep");
}

GeneratorImages coproduct_eval(const CoproductRule& rule, const DenseBinding& left, const DenseBinding& right) {
  GeneratorImages out;
  const Eigen::Index dim = left.dim() * right.dim();
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = CMatrix::Zero(dim, dim);
    for (const auto& t : rule.images[i]) out[i] += t.coefficient * kron(evaluate(t.left, left), evaluate(t.right, right));
  }
  return out;
}

GeneratorImages coproduct_eval(const CoproductRule& rule, const Representation& rep) {
  return coproduct_eval(rule, rep.binding, rep.binding);
}

GeneratorImages lm_coproduct(double b_plus, double b_minus, double b, const Representation& rep) {
  if (!as_scalar(rep[3], 1e-14)) throw std::domain_error("lm_coproduct: D(I) is not a multiple of the identity");
  return coproduct_eval(lm_rule(b_plus, b_minus, b), rep);
}

double relations_residual(const std::vector<Relation>& relations, const DenseBinding& binding) {
  double worst = 0.0;
  for (const auto& r : relations) worst = std::max(worst, max_abs(evaluate(r.lhs, binding) - evaluate(r.rhs, binding)));
  return worst;
}

double homomorphism_check(const CoproductRule& rule, const Representation& rep, const std::vector<Relation>& relations) {
  DenseBinding images{coproduct_eval(rule, rep)};
  return relations_residual(relations, images);
}

double coassociativity_rep3(const CoproductRule& rule, const Representation& rep) {
  DenseBinding delta{coproduct_eval(rule, rep)};
  const auto left = coproduct_eval(rule, delta, rep.binding);
  const auto right = coproduct_eval(rule, rep.binding, delta);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, max_abs(left[i] - right[i]));
  return worst;
}

namespace {

// Element of the triple tensor product in the normal form
// sum (L1 f1) (x) (L2 f2) (x) (L3 f3), with L non-primitive generators (or 1)
// standing left of functions f of the primitive generators. The functions are
// evaluated at sampled scalars, so only the label triple stays symbolic; the
// mask records which slots' primitive samples a coefficient depends on.
using Labels = std::array<int, 3>;
struct SlotTerm {
  Complex coefficient;
  unsigned mask = 0;
};
using SlotValue = std::map<Labels, SlotTerm>;
using SlotBinding = std::array<SlotValue, 4>;

constexpr Labels kNoLabels{-1, -1, -1};

void accumulate(SlotValue& v, const Labels& l, Complex c, unsigned mask) {
  auto [it, inserted] = v.try_emplace(l, SlotTerm{c, mask});
  if (!inserted) {
    it->second.coefficient += c;
    it->second.mask |= mask;
  }
}

SlotTerm require_scalar(const SlotValue& v, const char* what) {
  SlotTerm out{0.0, 0};
  for (const auto& [labels, t] : v) {
    if (labels == kNoLabels) {
      out = t;
    } else if (std::abs(t.coefficient) > 1e-13) {
      throw std::domain_error(std::string("primitive-scalar method: ") + what + " of an expression with non-primitive generators");
    }
  }
  return out;
}

SlotValue multiply(const SlotValue& x, const SlotValue& y) {
  SlotValue out;
  for (const auto& [lx, tx] : x) {
    for (const auto& [ly, ty] : y) {
      Labels l = lx;
      for (int s = 0; s < 3; ++s) {
        if (ly[s] < 0) continue;
        if (lx[s] >= 0 || (tx.mask >> s & 1u)) {
          throw std::domain_error("primitive-scalar method: a non-primitive generator right of a non-commuting factor");
        }
        l[s] = ly[s];
      }
      accumulate(out, l, tx.coefficient * ty.coefficient, tx.mask | ty.mask);
    }
  }
  return out;
}

SlotValue evaluate_slots(const Expr& e, const SlotBinding& binding) {
  const auto& n = e.node();
  auto scalar_node = [&](auto&& f, const char* what) {
    const SlotTerm arg = require_scalar(evaluate_slots(n.children[0], binding), what);
    SlotValue out;
    accumulate(out, kNoLabels, f(arg.coefficient), arg.mask);
    return out;
  };
  switch (n.kind) {
    case Expr::Kind::identity: {
      SlotValue out;
      accumulate(out, kNoLabels, 1.0, 0);
      return out;
    }
    case Expr::Kind::generator:
      return binding[static_cast<std::size_t>(n.generator)];
    case Expr::Kind::scale: {
      SlotValue out = evaluate_slots(n.children[0], binding);
      for (auto& [l, t] : out) t.coefficient *= n.coefficient;
      return out;
    }
    case Expr::Kind::sum: {
      SlotValue out = evaluate_slots(n.children[0], binding);
      for (const auto& [l, t] : evaluate_slots(n.children[1], binding)) accumulate(out, l, t.coefficient, t.mask);
      return out;
    }
    case Expr::Kind::product:
      return multiply(evaluate_slots(n.children[0], binding), evaluate_slots(n.children[1], binding));
    case Expr::Kind::exp:
      return scalar_node([](Complex z) { return std::exp(z); }, "exp");
    case Expr::Kind::phi1:
      return scalar_node([](Complex z) { return phi1(z); }, "phi1");
    case Expr::Kind::phi2:
      return scalar_node([](Complex z) { return phi2(z); }, "phi2");
    case Expr::Kind::central:
      return scalar_node(n.fn, n.fn_name.c_str());
  }
  throw std::logic_error("evaluate_slots");
}

SlotBinding single_slot(const CoproductRule& rule, int slot, const std::array<double, 4>& samples) {
  SlotBinding out;
  for (int i = 0; i < 4; ++i) {
    if (rule.primitive[i]) {
      accumulate(out[i], kNoLabels, samples[i], 1u << slot);
    } else {
      Labels l = kNoLabels;
      l[slot] = i;
      accumulate(out[i], l, 1.0, 0);
    }
  }
  return out;
}

SlotValue apply_delta(const CoproductRule& rule, int i, const SlotBinding& left, const SlotBinding& right) {
  SlotValue out;
  for (const auto& t : rule.images[i]) {
    for (const auto& [l, v] : multiply(evaluate_slots(t.left, left), evaluate_slots(t.right, right))) {
      accumulate(out, l, t.coefficient * v.coefficient, v.mask);
    }
  }
  return out;
}

double difference(const SlotValue& x, const SlotValue& y) {
  SlotValue d = x;
  for (const auto& [l, t] : y) accumulate(d, l, -t.coefficient, t.mask);
  double worst = 0.0;
  for (const auto& [l, t] : d) worst = std::max(worst, std::abs(t.coefficient));
  return worst;
}

}  // namespace

double coassociativity_primitive_scalar(const CoproductRule& rule, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    std::array<std::array<double, 4>, 3> values{};
    for (auto& slot : values) {
      for (auto& v : slot) v = dist(rng);
    }
    std::array<SlotBinding, 3> slot;
    for (int s = 0; s < 3; ++s) slot[s] = single_slot(rule, s, values[s]);
    SlotBinding delta01, delta12;
    for (int i = 0; i < 4; ++i) {
      delta01[i] = apply_delta(rule, i, slot[0], slot[1]);
      delta12[i] = apply_delta(rule, i, slot[1], slot[2]);
      if (rule.primitive[i]) {
        SlotValue expected;
        accumulate(expected, kNoLabels, values[0][i] + values[1][i], 0);
        if (difference(delta01[i], expected) > 1e-12) {
          throw std::domain_error("primitive-scalar method: " + rule.labels[i] + " is declared primitive but is not");
        }
      }
    }
    for (int i = 0; i < 4; ++i) {
      const SlotValue lhs = apply_delta(rule, i, delta01, slot[2]);
      const SlotValue rhs = apply_delta(rule, i, slot[0], delta12);
      worst = std::max(worst, difference(lhs, rhs));
    }
  }
  return worst;
}

}  // namespace gl2q::quantum
