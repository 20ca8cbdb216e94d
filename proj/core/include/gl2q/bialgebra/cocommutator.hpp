#pragma once

#include <array>
#include <string>
#include <vector>

#include "gl2q/bialgebra/param_point.hpp"
#include "gl2q/liealg/tensor.hpp"

namespace gl2q::bialg {

using lie::AlgebraName;
using lie::BasicTensor;
using lie::LieAlgebra;
using lie::Tensor;
using sym::MultiPoly;

/// Images delta(X_i) of the basis generators.
template <typename Coeff>
struct BasicCocommutator {
  AlgebraName algebra = AlgebraName::gl2;
  std::array<BasicTensor<Coeff>, lie::kDim> image{BasicTensor<Coeff>(2), BasicTensor<Coeff>(2),
                                                  BasicTensor<Coeff>(2), BasicTensor<Coeff>(2)};

  const LieAlgebra& lie_algebra() const { return LieAlgebra::get(algebra); }
  bool is_antisymmetric() const {
    for (const auto& t : image) {
      if (!t.is_antisymmetric()) return false;
    }
    return true;
  }
  bool is_zero() const {
    for (const auto& t : image) {
      if (!t.is_zero()) return false;
    }
    return true;
  }
  friend bool operator==(const BasicCocommutator&, const BasicCocommutator&) = default;
};

using Cocommutator = BasicCocommutator<MultiPoly>;
using LaurentCocommutator = BasicCocommutator<sym::LaurentPoly>;

/// Six-parameter gl(2) cocommutator with symbolic a+, a-, b+, b-, a, b.
Cocommutator generic_cocommutator();

/// The generic cocommutator with every parameter replaced by its value.
Cocommutator cocommutator_at(const ParamPoint& pt);

/// delta(X) = [1(x)X + X(x)1, r] = ad_X(r).
template <typename Coeff>
BasicCocommutator<Coeff> coboundary_delta(const LieAlgebra& alg, const BasicTensor<Coeff>& r) {
  BasicCocommutator<Coeff> d;
  d.algebra = alg.name();
  for (int i = 0; i < lie::kDim; ++i) d.image[i] = lie::ad_action(alg, i, r);
  return d;
}

struct CocycleResidual {
  int x = 0;
  int y = 0;
  Tensor residual;
};

struct CocycleReport {
  bool holds = true;
  std::vector<CocycleResidual> residuals;  // only the nonzero ones, x < y
};

/// Checks delta([X,Y]) = ad_X delta(Y) - ad_Y delta(X) for all basis pairs.
CocycleReport cocycle_check(const Cocommutator& delta);

/// Exact cocycle test for Laurent-coefficient cocommutators (used after
/// contraction before the limit is taken).
bool cocycle_holds(const LaurentCocommutator& delta);

/// Jacobi identity of the dual bracket [xi^a, xi^b] = sum_i f_i^{ab} xi^i,
/// with f_i^{ab} the (a,b) coefficient of delta(X_i). Returns the distinct
/// nonzero obstruction polynomials (deduplicated up to rational factors).
std::vector<MultiPoly> cojacobi_constraints(const Cocommutator& delta);

/// a+ b - b+ a, a+ b- + a- b+, a- b + b- a as the library states them.
std::vector<MultiPoly> jacobi_constraint_polys();

}  // namespace gl2q::bialg
