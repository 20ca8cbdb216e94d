#include "gl2q/contraction/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl2q::contract {

namespace {

namespace g = lie::gl2;
namespace h = lie::h4;

constexpr int kDim = lie::kDim;

MultiPoly var(Sym s) { return MultiPoly::variable(s); }

LaurentTensor gen(int i, int eps_degree, Rational scale = Rational(1)) {
  return LaurentTensor::generator(i, LaurentPoly::monomial(eps_degree, MultiPoly(scale)));
}

/// Replaces every slot index by its image and every coefficient by its Laurent
/// rescaling.
LaurentTensor map_tensor(const Tensor& t, const std::array<LaurentTensor, kDim>& images,
                         const std::map<Sym, LaurentPoly>& params) {
  LaurentTensor out(t.degree());
  for (const auto& [idx, c] : t.terms()) {
    LaurentTensor term = images[idx[0]];
    for (std::size_t s = 1; s < idx.size(); ++s) term = tensor(term, images[idx[s]]);
    out += sym::substitute(c, params) * term;
  }
  return out;
}

std::vector<Sym> symbols_in(const Tensor& t) {
  std::vector<Sym> out;
  for (std::size_t k = 0; k < sym::kSymbolCount; ++k) {
    const auto s = static_cast<Sym>(k);
    for (const auto& [idx, c] : t.terms()) {
      if (c.depends_on(s)) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

MultiPoly evaluate_partially(const MultiPoly& p, const sym::Assignment& values) { return p.partial_evaluate(values); }

Tensor bind(const Tensor& t, const sym::Assignment& values) {
  return t.map_coefficients([&](const MultiPoly& c) { return evaluate_partially(c, values); });
}

Cocommutator bind(const Cocommutator& d, const sym::Assignment& values) {
  Cocommutator out = d;
  for (auto& t : out.image) t = bind(t, values);
  return out;
}

using Matrix = BasisChange;

Matrix identity_matrix() {
  Matrix m;
  for (int i = 0; i < kDim; ++i) m[i][i] = MultiPoly(1);
  return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  Matrix out;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      for (int k = 0; k < kDim; ++k) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view family_name(ContractionFamily f) {
  switch (f) {
    case ContractionFamily::I_plus_standard: return "I+-standard";
    case ContractionFamily::I_plus_nonstandard: return "I+-nonstandard";
    case ContractionFamily::II_standard: return "II-standard";
    case ContractionFamily::II_nonstandard: return "II-nonstandard";
  }
  return "?";
}

std::optional<ContractionFamily> parse_family(std::string_view text) {
  for (auto f : kAllFamilies) {
    if (family_name(f) == text) return f;
  }
  if (text == "I+-non-standard") return ContractionFamily::I_plus_nonstandard;
  if (text == "II-non-standard") return ContractionFamily::II_nonstandard;
  return std::nullopt;
}

const GeneratorMap& generator_map() {
  static const GeneratorMap m = [] {
    GeneratorMap out;
    out.gl2_in_h4[g::J3] = gen(h::N, 0, 2) - gen(h::M, -2);
    out.gl2_in_h4[g::Jp] = gen(h::Ap, -1);
    out.gl2_in_h4[g::Jm] = gen(h::Am, -1);
    out.gl2_in_h4[g::I] = gen(h::M, -2);
    const Rational half(1, 2);
    out.h4_in_gl2[h::N] = gen(g::J3, 0, half) + gen(g::I, 0, half);
    out.h4_in_gl2[h::Ap] = gen(g::Jp, 1);
    out.h4_in_gl2[h::Am] = gen(g::Jm, 1);
    out.h4_in_gl2[h::M] = gen(g::I, 2);
    return out;
  }();
  return m;
}

ContractionScheme scheme_for(ContractionFamily family, bool include_beta_plus) {
  ContractionScheme s;
  s.family = family;
  const MultiPoly ap = var(Sym::a_plus), am = var(Sym::a_minus), bp = var(Sym::b_plus), a = var(Sym::a);
  const MultiPoly alpha = var(Sym::alpha_plus), beta_p = var(Sym::beta_plus), beta_m = var(Sym::beta_minus),
                  theta = var(Sym::vartheta), xi = var(Sym::xi);
  const MultiPoly inv_ap = ap.pow(-1);
  auto beta_plus_terms = [&](std::vector<ParamTerm> terms) {
    if (include_beta_plus) terms.push_back({Rational(-2), beta_p, -1, 3});
    return terms;
  };
  switch (family) {
    case ContractionFamily::I_plus_standard:
      s.exponent_names = {"a+", "a-", "b+", "a"};
      s.rules[Sym::a_plus] = {{Rational(1), alpha, 0}};
      s.rules[Sym::a_minus] = {{Rational(-1), beta_m, 1}};
      s.rules[Sym::b_plus] = beta_plus_terms({{Rational(-1), alpha, 2}});
      s.rules[Sym::a] = {{Rational(1), theta, 3}};
      s.dependents[Sym::b_minus] = -(am * bp * inv_ap);
      s.dependents[Sym::b] = bp * a * inv_ap;
      break;
    case ContractionFamily::I_plus_nonstandard:
      s.exponent_names = {"a+", "b+", "a"};
      s.rules[Sym::a_plus] = {{Rational(1), alpha, 0}};
      s.rules[Sym::b_plus] = beta_plus_terms({{Rational(-1), alpha, 1}});
      s.rules[Sym::a] = {{Rational(1), theta, 2}};
      s.dependents[Sym::a_minus] = -(a * a * inv_ap);
      s.dependents[Sym::b_minus] = bp * a * a * inv_ap * inv_ap;
      s.dependents[Sym::b] = bp * a * inv_ap;
      break;
    case ContractionFamily::II_standard:
      s.exponent_names = {"a", "b"};
      s.rules[Sym::a] = {{Rational(-1), xi, 0}};
      s.rules[Sym::b] = {{Rational(-1), theta, 1}};
      break;
    case ContractionFamily::II_nonstandard:
      s.exponent_names = {"b", "b+", "b-"};
      s.rules[Sym::b] = {{Rational(-1), theta, 0}};
      s.rules[Sym::b_plus] = {{Rational(2), beta_p, 1}};
      s.rules[Sym::b_minus] = {{Rational(-2), beta_m, 2}};
      break;
  }
  return s;
}

Tensor family_r(const ContractionScheme& scheme) {
  Tensor r = bialg::generic_r();
  return r.map_coefficients([&](const MultiPoly& c) {
    MultiPoly out = c;
    for (const auto& [s, value] : scheme.dependents) out = out.substitute(s, value);
    for (Sym p : sym::kDeformationParameters) {
      if (!scheme.rules.count(p) && !scheme.dependents.count(p)) out = out.substitute(p, MultiPoly());
    }
    return out;
  });
}

Cocommutator family_delta(const ContractionScheme& scheme) {
  return bialg::coboundary_delta(lie::LieAlgebra::gl2(), family_r(scheme));
}

std::map<Sym, LaurentPoly> parameter_images(const ContractionScheme& scheme, const std::vector<int>& exponents) {
  if (exponents.size() != scheme.exponent_count()) throw std::invalid_argument("exponent vector has wrong length");
  std::map<Sym, LaurentPoly> out;
  for (const auto& [p, terms] : scheme.rules) {
    LaurentPoly value;
    for (const auto& t : terms) {
      const int degree = t.slot >= 0 ? exponents[t.slot] : t.fixed_degree;
      value += LaurentPoly::monomial(degree, t.scale * t.value);
    }
    out.emplace(p, value);
  }
  return out;
}

LaurentTensor transform_r(const Tensor& r, const ContractionScheme& scheme, const std::vector<int>& exponents) {
  return map_tensor(r, generator_map().gl2_in_h4, parameter_images(scheme, exponents));
}

LaurentCocommutator transform_delta(const Cocommutator& delta, const ContractionScheme& scheme,
                                    const std::vector<int>& exponents) {
  const auto params = parameter_images(scheme, exponents);
  const auto& gm = generator_map();
  std::array<LaurentTensor, kDim> mapped{LaurentTensor(2), LaurentTensor(2), LaurentTensor(2), LaurentTensor(2)};
  for (int i = 0; i < kDim; ++i) mapped[i] = map_tensor(delta.image[i], gm.gl2_in_h4, params);
  LaurentCocommutator out;
  out.algebra = lie::AlgebraName::h4;
  for (int y = 0; y < kDim; ++y) {
    for (const auto& [idx, c] : gm.h4_in_gl2[y].terms()) out.image[y] += c * mapped[idx[0]];
  }
  return out;
}

std::optional<int> min_degree(const LaurentTensor& t) {
  std::optional<int> out;
  for (const auto& [idx, c] : t.terms()) {
    const auto d = c.min_degree();
    if (d && (!out || *d < *out)) out = d;
  }
  return out;
}

std::optional<int> min_degree(const LaurentCocommutator& d) {
  std::optional<int> out;
  for (const auto& t : d.image) {
    const auto m = min_degree(t);
    if (m && (!out || *m < *out)) out = m;
  }
  return out;
}

std::optional<Tensor> tensor_limit(const LaurentTensor& t) {
  Tensor out(t.degree());
  for (const auto& [idx, c] : t.terms()) {
    auto lim = sym::laurent_limit(c);
    if (std::holds_alternative<sym::DivergenceReport>(lim)) return std::nullopt;
    out.add(idx, std::get<MultiPoly>(lim));
  }
  return out;
}

std::optional<Cocommutator> cocommutator_limit(const LaurentCocommutator& d) {
  Cocommutator out;
  out.algebra = d.algebra;
  for (int i = 0; i < kDim; ++i) {
    auto lim = tensor_limit(d.image[i]);
    if (!lim) return std::nullopt;
    out.image[i] = std::move(*lim);
  }
  return out;
}

ExponentSearch minimal_exponents(ContractedObject which, const ContractionScheme& scheme) {
  const std::size_t k = scheme.exponent_count();
  const Tensor r = family_r(scheme);
  const Cocommutator delta = family_delta(scheme);

  auto converges = [&](const std::vector<int>& e) {
    if (which == ContractedObject::r_matrix) {
      const auto d = min_degree(transform_r(r, scheme, e));
      return !d || *d >= 0;
    }
    const auto d = min_degree(transform_delta(delta, scheme, e));
    return !d || *d >= 0;
  };

  // a slot is scanned only if the object actually depends on a parameter it rescales
  std::vector<Sym> present;
  if (which == ContractedObject::r_matrix) {
    present = symbols_in(r);
  } else {
    for (const auto& t : delta.image) {
      for (Sym s : symbols_in(t)) present.push_back(s);
    }
  }
  std::vector<bool> active(k, false);
  for (const auto& [p, terms] : scheme.rules) {
    if (std::find(present.begin(), present.end(), p) == present.end()) continue;
    for (const auto& t : terms) {
      if (t.slot >= 0) active[t.slot] = true;
    }
  }

  ExponentSearch out;
  out.minimal.assign(k, 0);
  const std::vector<int> zeros(k, 0);
  const auto d0 = which == ContractedObject::r_matrix ? min_degree(transform_r(r, scheme, zeros))
                                                      : min_degree(transform_delta(delta, scheme, zeros));
  if (!d0) return out;  // zero object: vacuous
  out.lower_bound = std::min(*d0, 0);
  out.upper_bound = std::max(-*d0 + 1, 1);

  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < k; ++i) {
    if (active[i]) slots.push_back(i);
  }
  std::vector<std::vector<int>> convergent;
  std::vector<int> e(k, 0);
  for (auto s : slots) e[s] = out.lower_bound;
  while (true) {
    ++out.candidates_tried;
    if (converges(e)) convergent.push_back(e);
    std::size_t pos = 0;
    while (pos < slots.size() && e[slots[pos]] == out.upper_bound) {
      e[slots[pos]] = out.lower_bound;
      ++pos;
    }
    if (pos == slots.size()) break;
    ++e[slots[pos]];
  }
  if (convergent.empty()) {
    throw std::runtime_error("minimal_exponents: no convergent exponents in [" + std::to_string(out.lower_bound) + ", " +
                             std::to_string(out.upper_bound) + "] for " + std::string(family_name(scheme.family)));
  }
  std::vector<int> best = convergent.front();
  for (const auto& c : convergent) {
    for (std::size_t i = 0; i < k; ++i) best[i] = std::min(best[i], c[i]);
  }
  if (std::find(convergent.begin(), convergent.end(), best) == convergent.end()) {
    throw std::runtime_error("minimal_exponents: convergent exponents have no componentwise minimum for " +
                             std::string(family_name(scheme.family)));
  }
  out.minimal = best;
  return out;
}

ContractedBialgebra contract(ContractionFamily family, bool include_beta_plus) {
  const auto scheme = scheme_for(family, include_beta_plus);
  ContractedBialgebra out;
  out.family = family;
  out.ledger.exponent_names = scheme.exponent_names;
  out.ledger.r_minimal = minimal_exponents(ContractedObject::r_matrix, scheme).minimal;
  out.ledger.delta_minimal = minimal_exponents(ContractedObject::cocommutator, scheme).minimal;
  out.exponents = out.ledger.delta_minimal;
  out.r = tensor_limit(transform_r(family_r(scheme), scheme, out.exponents));
  auto delta = cocommutator_limit(transform_delta(family_delta(scheme), scheme, out.exponents));
  if (!delta) throw std::logic_error("contract: cocommutator diverges at its own minimal exponents");
  out.delta = std::move(*delta);
  return out;
}

BasisChange invert_unipotent(const BasisChange& change) {
  Matrix nil = change;
  for (int i = 0; i < kDim; ++i) nil[i][i] -= MultiPoly(1);
  Matrix power = nil;
  Matrix inverse = identity_matrix();
  int sign = -1;
  for (int k = 1; k <= kDim; ++k) {
    if (is_zero(power)) return inverse;
    for (int i = 0; i < kDim; ++i) {
      for (int j = 0; j < kDim; ++j) inverse[i][j] += Rational(sign) * power[i][j];
    }
    sign = -sign;
    power = multiply(power, nil);
  }
  if (!is_zero(power)) throw std::invalid_argument("invert_unipotent: basis change is not unipotent");
  return inverse;
}

Tensor change_basis(const Tensor& t, const BasisChange& change) {
  const Matrix inv = invert_unipotent(change);
  Tensor out(t.degree());
  for (const auto& [idx, c] : t.terms()) {
    // old_i = sum_k inv[i][k] new_k
    std::vector<std::pair<lie::Index, MultiPoly>> partial{{{}, c}};
    for (int old : idx) {
      std::vector<std::pair<lie::Index, MultiPoly>> next;
      for (const auto& [prefix, coef] : partial) {
        for (int k = 0; k < kDim; ++k) {
          if (inv[old][k].is_zero()) continue;
          lie::Index p = prefix;
          p.push_back(k);
          next.emplace_back(std::move(p), coef * inv[old][k]);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [p, coef] : partial) out.add(p, coef);
  }
  return out;
}

Cocommutator change_basis(const Cocommutator& delta, const BasisChange& change) {
  Cocommutator out;
  out.algebra = delta.algebra;
  for (int i = 0; i < kDim; ++i) {
    Tensor image(2);
    for (int j = 0; j < kDim; ++j) {
      if (!change[i][j].is_zero()) image += change[i][j] * delta.image[j];
    }
    out.image[i] = change_basis(image, change);
  }
  return out;
}

bool preserves_h4(const BasisChange& change) {
  const auto& alg = lie::LieAlgebra::h4();
  const Matrix inv = invert_unipotent(change);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      std::array<MultiPoly, kDim> old_coords;
      for (int a = 0; a < kDim; ++a) {
        for (int b = 0; b < kDim; ++b) {
          const MultiPoly w = change[i][a] * change[j][b];
          if (w.is_zero()) continue;
          for (int m = 0; m < kDim; ++m) old_coords[m] += w * alg.structure(a, b)[m];
        }
      }
      for (int k = 0; k < kDim; ++k) {
        MultiPoly c;
        for (int m = 0; m < kDim; ++m) c += old_coords[m] * inv[m][k];
        if (!(c == MultiPoly(alg.structure(i, j)[k]))) return false;
      }
    }
  }
  return true;
}

ContractedBialgebra standard_II_with_betas() {
  const auto& alg = lie::LieAlgebra::h4();
  Tensor r = var(Sym::vartheta) * lie::wedge(h::N, h::M) + var(Sym::xi) * lie::wedge(h::Ap, h::Am) -
             var(Sym::beta_plus) * lie::wedge(h::Ap, h::M) - var(Sym::beta_minus) * lie::wedge(h::Am, h::M);
  ContractedBialgebra out;
  out.family = ContractionFamily::II_standard;
  out.delta = bialg::coboundary_delta(alg, r);
  out.r = std::move(r);
  return out;
}

ContractedBialgebra oscillator_normalize(const ContractedBialgebra& b, Normalization which,
                                         const sym::Assignment& bindings) {
  ContractedBialgebra out = b;
  if (out.r) out.r = bind(*out.r, bindings);
  out.delta = bind(out.delta, bindings);
  auto bound = [&](Sym s) { return var(s).partial_evaluate(bindings); };

  Matrix change = identity_matrix();
  if (which == Normalization::remove_beta_plus) {
    if (b.family != ContractionFamily::I_plus_standard && b.family != ContractionFamily::I_plus_nonstandard) {
      throw std::invalid_argument("remove_beta_plus applies to the I+ families");
    }
    const auto inv_alpha = bound(Sym::alpha_plus).unit_inverse();
    if (!inv_alpha) throw std::domain_error("remove_beta_plus needs alpha+ != 0");
    change[h::N][h::M] = bound(Sym::beta_plus) * *inv_alpha;
  } else {
    if (b.family != ContractionFamily::II_standard) throw std::invalid_argument("standard_II applies to family II standard");
    const MultiPoly sum = bound(Sym::vartheta) + bound(Sym::xi);
    const MultiPoly diff = bound(Sym::vartheta) - bound(Sym::xi);
    if (sum.is_zero()) throw std::domain_error("theta + xi = 0: isolated bialgebra, beta+ cannot be removed");
    if (diff.is_zero()) throw std::domain_error("theta - xi = 0: isolated bialgebra, beta- cannot be removed");
    const auto inv_sum = sum.unit_inverse();
    const auto inv_diff = diff.unit_inverse();
    if (!inv_sum) throw std::invalid_argument("theta + xi = " + sum.to_string() + " is not invertible; bind theta or xi");
    if (!inv_diff) throw std::invalid_argument("theta - xi = " + diff.to_string() + " is not invertible; bind theta or xi");
    const MultiPoly kp = bound(Sym::beta_plus) * *inv_sum;
    const MultiPoly km = bound(Sym::beta_minus) * *inv_diff;
    change[h::N][h::Ap] = -kp;
    change[h::N][h::Am] = -km;
    change[h::Ap][h::M] = -km;
    change[h::Am][h::M] = -kp;
  }
  if (!preserves_h4(change)) throw std::logic_error("oscillator basis change does not preserve h4");
  if (out.r) out.r = change_basis(*out.r, change);
  out.delta = change_basis(out.delta, change);
  return out;
}

}  // namespace gl2q::contract
