#include "gl2q/liealg/tensor.hpp"

namespace gl2q::lie {

Tensor eta_element(const Rational& tau1, const Rational& tau2, const Rational& minus_plus_coefficient) {
  Tensor eta(2);
  eta.add({gl2::J3, gl2::J3}, sym::MultiPoly(tau1));
  eta.add({gl2::Jm, gl2::Jp}, sym::MultiPoly(tau1 * minus_plus_coefficient));
  eta.add({gl2::Jp, gl2::Jm}, sym::MultiPoly(tau1 * Rational(2)));
  eta.add({gl2::I, gl2::I}, sym::MultiPoly(tau2));
  return eta;
}

bool is_ad_invariant(const LieAlgebra& alg, const Tensor& t) {
  for (int i = 0; i < kDim; ++i) {
    if (!ad_action(alg, i, t).is_zero()) return false;
  }
  return true;
}

bool eta_invariance_check(const Rational& tau1, const Rational& tau2, const Rational& minus_plus_coefficient) {
  return is_ad_invariant(LieAlgebra::gl2(), eta_element(tau1, tau2, minus_plus_coefficient));
}

}  // namespace gl2q::lie
