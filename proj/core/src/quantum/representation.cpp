#include "gl2q/quantum/representation.hpp"

#include <cmath>
#include <stdexcept>

namespace gl2q::quantum {

namespace {

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

CMatrix sigma3() { return mat2(1.0, 0.0, 0.0, -1.0); }
CMatrix sigma_plus() { return mat2(0.0, 1.0, 0.0, 0.0); }
CMatrix sigma_minus() { return mat2(0.0, 0.0, 1.0, 0.0); }

CMatrix flip(Eigen::Index d) {
  CMatrix p = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
  }
  return p;
}

Representation fundamental_rep() {
  Representation rep;
  rep.quantization = "undeformed";
  rep.binding.generators = {sigma3(), sigma_plus(), sigma_minus(), CMatrix::Identity(2, 2)};
  return rep;
}

Representation deformed_rep_Ia(double a_plus, double a) {
  if (a == 0.0) throw std::domain_error("deformed_rep_Ia: a = 0 is not a Hopf algebra limit; use the Jordanian algebra");
  const double s = 2.0 / a * std::sinh(a / 2.0);
  const double c = std::cosh(a / 2.0);
  Representation rep;
  rep.quantization = "Ia";
  rep.labels = {"J3'", "J+", "J-", "I"};
  rep.params = {{"a+", a_plus}, {"a", a}};
  rep.binding.generators = {
      mat2(1.0, -a_plus / a, 0.0, -1.0),
      mat2(0.0, c, 0.0, 0.0),
      mat2(0.0, a_plus * a_plus / (4.0 * a * a) * (s - c), s, 0.0),
      CMatrix::Identity(2, 2),
  };
  return rep;
}

Representation deformed_rep_xxz(double a, double b) {
  if (a == 0.0) throw std::domain_error("deformed_rep_xxz: a = 0; use the fundamental representation");
  const double scale = std::sqrt(std::sinh(a) / a);
  Representation rep;
  rep.quantization = "xxz";
  rep.params = {{"a", a}, {"b", b}};
  rep.binding.generators = {sigma3(), scale * sigma_plus(), scale * sigma_minus(), CMatrix::Identity(2, 2)};
  return rep;
}

Representation deformed_rep_jordanian(double a_plus, double b_plus, double lambda) {
  if (a_plus == 0.0) throw std::domain_error("deformed_rep_jordanian: a+ = 0");
  const double lo = (a_plus - b_plus * lambda) * (a_plus - b_plus * lambda) / (4.0 * a_plus);
  const double hi = (a_plus + b_plus * lambda) * (a_plus + b_plus * lambda) / (4.0 * a_plus);
  Representation rep;
  rep.quantization = "jordanian";
  rep.params = {{"a+", a_plus}, {"b+", b_plus}, {"lambda", lambda}};
  rep.binding.generators = {sigma3(), sigma_plus(), mat2(lo, 0.0, 1.0, hi), lambda * CMatrix::Identity(2, 2)};
  return rep;
}

}  // namespace gl2q::quantum
