#pragma once

#include <array>
#include <map>
#include <string>

#include "gl2q/quantum/expr.hpp"

namespace gl2q::quantum {

/// Matrices of the four generators (slot order J3, J+, J-, I; the standard
/// deformation uses J3' in slot 0) together with what they represent.
struct Representation {
  std::string quantization;
  std::array<std::string, 4> labels{"J3", "J+", "J-", "I"};
  std::map<std::string, double> params;
  DenseBinding binding;

  Eigen::Index dim() const { return binding.dim(); }
  const CMatrix& operator[](int i) const { return binding.generators[static_cast<std::size_t>(i)]; }
};

/// sigma_3, sigma_+, sigma_- in the conventions of the fundamental rep.
CMatrix sigma3();
CMatrix sigma_plus();
CMatrix sigma_minus();
CMatrix flip(Eigen::Index d);

Representation fundamental_rep();
/// Standard deformation with Jordanian twist, generators (J3', J+, J-, I). a != 0.
Representation deformed_rep_Ia(double a_plus, double a);
/// Twisted XXZ algebra: J+- rescaled by sqrt(sinh(a)/a). a != 0.
Representation deformed_rep_xxz(double a, double b);
/// Two-parameter Jordanian algebra with D(I) = lambda. a_plus != 0.
Representation deformed_rep_jordanian(double a_plus, double b_plus, double lambda = 1.0);

}  // namespace gl2q::quantum
