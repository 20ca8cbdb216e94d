#include "gl2q/bialgebra/classify.hpp"

namespace gl2q::bialg {

namespace {

using namespace lie::gl2;

/// Image index and sign of each gl(2) generator.
constexpr std::pair<int, int> kGeneratorMap[] = {{J3, -1}, {Jm, 1}, {Jp, 1}, {I, 1}};

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::I_plus: return "I+";
    case Family::I_minus: return "I-";
    case Family::II: return "II";
  }
  return "?";
}

std::variant<FamilyTag, NotABialgebra> classify(const ParamPoint& pt) {
  NotABialgebra bad;
  const auto values = pt.assignment();
  for (const auto& c : jacobi_constraint_polys()) {
    const Rational v = c.evaluate(values);
    if (!v.is_zero()) bad.violated.emplace_back(c.to_string(), v);
  }
  if (!bad.violated.empty()) return bad;

  FamilyTag tag;
  tag.discriminant = pt.discriminant();
  tag.standard = !tag.discriminant.is_zero();
  if (!pt.a_plus().is_zero()) {
    tag.family = Family::I_plus;
  } else if (!pt.a_minus().is_zero()) {
    tag.family = Family::I_minus;
    tag.equivalent_to_I_plus = true;
  } else {
    tag.family = Family::II;
  }
  return tag;
}

ParamPoint apply_automorphism(const ParamPoint& pt) {
  return {pt.a_minus(), pt.a_plus(), -pt.b_minus(), -pt.b_plus(), -pt.a(), -pt.b()};
}

Tensor apply_automorphism(const Tensor& t) {
  Tensor out(t.degree());
  for (const auto& [idx, c] : t.terms()) {
    lie::Index image(idx.size());
    int sign = 1;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      image[s] = kGeneratorMap[idx[s]].first;
      sign *= kGeneratorMap[idx[s]].second;
    }
    out.add(image, sign > 0 ? c : -c);
  }
  return out;
}

Cocommutator apply_automorphism(const Cocommutator& delta) {
  // delta' = (O (x) O) delta O^{-1}, and O^{-1} = O
  Cocommutator out;
  for (int i = 0; i < lie::kDim; ++i) {
    const auto [j, sign] = kGeneratorMap[i];
    Tensor image = apply_automorphism(delta.image[j]);
    out.image[i] = sign > 0 ? image : -image;
  }
  return out;
}

MultiPoly apply_automorphism(const MultiPoly& p) {
  // simultaneous substitution through temporaries c1..c6 to avoid clobbering
  const std::pair<Sym, MultiPoly> step1[] = {
      {Sym::a_plus, MultiPoly::variable(Sym::c2)},        {Sym::a_minus, MultiPoly::variable(Sym::c1)},
      {Sym::b_plus, -MultiPoly::variable(Sym::c5)},       {Sym::b_minus, -MultiPoly::variable(Sym::c4)},
      {Sym::a, -MultiPoly::variable(Sym::c6)},            {Sym::b, -MultiPoly::variable(Sym::c3)},
  };
  const std::pair<Sym, Sym> step2[] = {{Sym::c1, Sym::a_plus}, {Sym::c2, Sym::a_minus}, {Sym::c4, Sym::b_plus},
                                       {Sym::c5, Sym::b_minus}, {Sym::c6, Sym::a},      {Sym::c3, Sym::b}};
  for (const auto& [s, _] : step2) {
    if (p.depends_on(s)) throw std::invalid_argument("apply_automorphism: polynomial already uses c coordinates");
  }
  MultiPoly out = p;
  for (const auto& [s, v] : step1) out = out.substitute(s, v);
  for (const auto& [tmp, s] : step2) out = out.substitute(tmp, MultiPoly::variable(s));
  return out;
}

}  // namespace gl2q::bialg
