#include "gl2q/bialgebra/rmatrix.hpp"

namespace gl2q::bialg {

namespace {

using namespace lie::gl2;

MultiPoly var(Sym s) { return MultiPoly::variable(s); }

Tensor w(int i, int j, const MultiPoly& c) { return c * lie::wedge(i, j); }

struct Identification {
  Sym param;
  Sym c;
  long scale;
};

constexpr Identification kIdent[] = {
    {Sym::a_plus, Sym::c1, 2}, {Sym::a_minus, Sym::c2, -2}, {Sym::b_plus, Sym::c4, 2},
    {Sym::b_minus, Sym::c5, -2}, {Sym::a, Sym::c6, -1},     {Sym::b, Sym::c3, -2},
};

}  // namespace

ClassicalRMatrix generic_r() {
  const Rational half(1, 2);
  ClassicalRMatrix r = w(J3, Jp, var(Sym::a_plus)) - w(J3, Jm, var(Sym::a_minus)) - w(J3, I, var(Sym::b)) +
                       w(Jp, I, var(Sym::b_plus)) - w(Jm, I, var(Sym::b_minus)) - w(Jp, Jm, 2 * var(Sym::a));
  return MultiPoly(half) * r;
}

ClassicalRMatrix r_at(const ParamPoint& pt) {
  const auto values = pt.assignment();
  return generic_r().map_coefficients([&](const MultiPoly& c) { return c.partial_evaluate(values); });
}

ClassicalRMatrix c_coordinate_r() {
  return w(J3, Jp, var(Sym::c1)) + w(J3, Jm, var(Sym::c2)) + w(J3, I, var(Sym::c3)) + w(Jp, I, var(Sym::c4)) +
         w(Jm, I, var(Sym::c5)) + w(Jp, Jm, var(Sym::c6));
}

const std::map<Sym, MultiPoly>& params_in_c() {
  static const std::map<Sym, MultiPoly> m = [] {
    std::map<Sym, MultiPoly> out;
    for (const auto& e : kIdent) out.emplace(e.param, Rational(e.scale) * var(e.c));
    return out;
  }();
  return m;
}

const std::map<Sym, MultiPoly>& c_in_params() {
  static const std::map<Sym, MultiPoly> m = [] {
    std::map<Sym, MultiPoly> out;
    for (const auto& e : kIdent) out.emplace(e.c, Rational(1, e.scale) * var(e.param));
    return out;
  }();
  return m;
}

MultiPoly c_to_params(const MultiPoly& p) {
  MultiPoly out = p;
  for (const auto& [s, value] : c_in_params()) out = out.substitute(s, value);
  return out;
}

MultiPoly params_to_c(const MultiPoly& p) {
  MultiPoly out = p;
  for (const auto& [s, value] : params_in_c()) out = out.substitute(s, value);
  return out;
}

Tensor schouten(const LieAlgebra& alg, const ClassicalRMatrix& r) {
  Tensor out(3);
  for (const auto& [ij, rij] : r.terms()) {
    const int i = ij[0], j = ij[1];
    for (const auto& [kl, rkl] : r.terms()) {
      const int k = kl[0], l = kl[1];
      const MultiPoly c = rij * rkl;
      for (int m = 0; m < lie::kDim; ++m) {
        // [r12,r13] -> [X_i,X_k] (x) X_j (x) X_l
        if (const auto& f = alg.structure(i, k)[m]; !f.is_zero()) out.add({m, j, l}, f * c);
        // [r12,r23] -> X_i (x) [X_j,X_k] (x) X_l
        if (const auto& f = alg.structure(j, k)[m]; !f.is_zero()) out.add({i, m, l}, f * c);
        // [r13,r23] -> X_i (x) X_k (x) [X_j,X_l]
        if (const auto& f = alg.structure(j, l)[m]; !f.is_zero()) out.add({i, k, m}, f * c);
      }
    }
  }
  return out;
}

std::vector<MultiPoly> mcybe_conditions(const LieAlgebra& alg, const ClassicalRMatrix& r) {
  const Tensor s = schouten(alg, r);
  std::vector<MultiPoly> polys;
  for (int x = 0; x < lie::kDim; ++x) {
    const Tensor moved = lie::ad_action(alg, x, s);
    for (const auto& [idx, c] : moved.terms()) polys.push_back(c);
  }
  return sym::dedupe_up_to_scalars(polys);
}

}  // namespace gl2q::bialg
