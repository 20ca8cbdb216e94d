#include "gl2q/bialgebra/cocommutator.hpp"

namespace gl2q::bialg {

namespace {

using namespace lie::gl2;

MultiPoly var(Sym s) { return MultiPoly::variable(s); }

Tensor w(int i, int j, const MultiPoly& c) { return c * lie::wedge(i, j); }

template <typename Coeff>
BasicTensor<Coeff> cocycle_residual(const BasicCocommutator<Coeff>& delta, int x, int y) {
  const auto& alg = delta.lie_algebra();
  BasicTensor<Coeff> lhs(2);
  const auto& row = alg.structure(x, y);
  for (int k = 0; k < lie::kDim; ++k) {
    if (!row[k].is_zero()) lhs += Coeff(MultiPoly(row[k])) * delta.image[k];
  }
  return lhs - lie::ad_action(alg, x, delta.image[y]) + lie::ad_action(alg, y, delta.image[x]);
}

}  // namespace

Cocommutator generic_cocommutator() {
  const MultiPoly ap = var(Sym::a_plus), am = var(Sym::a_minus), bp = var(Sym::b_plus), bm = var(Sym::b_minus),
                  a = var(Sym::a), b = var(Sym::b);
  const Rational half(1, 2);
  Cocommutator d;
  d.image[J3] = w(J3, Jp, ap) + w(J3, Jm, am) + w(Jp, I, bp) + w(Jm, I, bm);
  d.image[Jp] = w(J3, Jp, a) + w(J3, I, -half * bm) + w(Jp, Jm, am) + w(Jp, I, b);
  d.image[Jm] = w(J3, Jm, a) + w(J3, I, -half * bp) + w(Jp, Jm, -ap) + w(Jm, I, -b);
  return d;
}

Cocommutator cocommutator_at(const ParamPoint& pt) {
  Cocommutator d = generic_cocommutator();
  const auto values = pt.assignment();
  for (auto& t : d.image) t = t.map_coefficients([&](const MultiPoly& c) { return c.partial_evaluate(values); });
  return d;
}

CocycleReport cocycle_check(const Cocommutator& delta) {
  CocycleReport report;
  for (int x = 0; x < lie::kDim; ++x) {
    for (int y = x + 1; y < lie::kDim; ++y) {
      Tensor res = cocycle_residual(delta, x, y);
      if (!res.is_zero()) {
        report.holds = false;
        report.residuals.push_back({x, y, std::move(res)});
      }
    }
  }
  return report;
}

bool cocycle_holds(const LaurentCocommutator& delta) {
  for (int x = 0; x < lie::kDim; ++x) {
    for (int y = x + 1; y < lie::kDim; ++y) {
      if (!cocycle_residual(delta, x, y).is_zero()) return false;
    }
  }
  return true;
}

std::vector<MultiPoly> cojacobi_constraints(const Cocommutator& delta) {
  constexpr int n = lie::kDim;
  // f[i][x][y] = coefficient of X_x (x) X_y in delta(X_i)
  std::array<std::array<std::array<MultiPoly, n>, n>, n> f;
  for (int i = 0; i < n; ++i) {
    for (const auto& [idx, c] : delta.image[i].terms()) f[i][idx[0]][idx[1]] = c;
  }
  std::vector<MultiPoly> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int m = 0; m < n; ++m) {
          // coefficient of xi^m in [[xi^x,xi^y],xi^z] + cyclic
          MultiPoly sum;
          for (int i = 0; i < n; ++i) {
            sum += f[i][x][y] * f[m][i][z];
            sum += f[i][y][z] * f[m][i][x];
            sum += f[i][z][x] * f[m][i][y];
          }
          if (!sum.is_zero()) out.push_back(std::move(sum));
        }
      }
    }
  }
  return sym::dedupe_up_to_scalars(out);
}

std::vector<MultiPoly> jacobi_constraint_polys() {
  const MultiPoly ap = var(Sym::a_plus), am = var(Sym::a_minus), bp = var(Sym::b_plus), bm = var(Sym::b_minus),
                  a = var(Sym::a), b = var(Sym::b);
  return {ap * b - bp * a, ap * bm + am * bp, am * b + bm * a};
}

}  // namespace gl2q::bialg
