#pragma once

#include <map>
#include <vector>

#include "gl2q/bialgebra/cocommutator.hpp"

namespace gl2q::bialg {

/// Antisymmetric degree-2 tensor over gl(2) or h4.
using ClassicalRMatrix = Tensor;

/// r = 1/2 (a+ J3^J+ - a- J3^J- - b J3^I + b+ J+^I - b- J-^I - 2a J+^J-).
ClassicalRMatrix generic_r();
ClassicalRMatrix r_at(const ParamPoint& pt);

/// c1 J3^J+ + c2 J3^J- + c3 J3^I + c4 J+^I + c5 J-^I + c6 J+^J-.
ClassicalRMatrix c_coordinate_r();

/// Each deformation parameter as a multiple of one c coordinate
/// (a+ = 2c1, a- = -2c2, b+ = 2c4, b- = -2c5, a = -c6, b = -2c3).
const std::map<Sym, MultiPoly>& params_in_c();
/// The inverse substitution c_k -> parameter / scale.
const std::map<Sym, MultiPoly>& c_in_params();

/// Rewrites a polynomial in c1..c6 through c_in_params, and back.
MultiPoly c_to_params(const MultiPoly& p);
MultiPoly params_to_c(const MultiPoly& p);

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] from structure constants.
Tensor schouten(const LieAlgebra& alg, const ClassicalRMatrix& r);

/// Distinct coefficient polynomials of ad_X [[r,r]] over all basis X; their
/// joint vanishing is the modified classical Yang-Baxter equation.
std::vector<MultiPoly> mcybe_conditions(const LieAlgebra& alg, const ClassicalRMatrix& r);

}  // namespace gl2q::bialg
