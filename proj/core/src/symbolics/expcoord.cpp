#include "gl2q/symbolics/expcoord.hpp"

#include <cmath>
#include <sstream>

namespace gl2q::sym {

ExpCoordExpr::ExpCoordExpr(MultiPoly constant) { add({}, constant); }

ExpCoordExpr ExpCoordExpr::term(MultiPoly coefficient, ExpKey key) {
  ExpCoordExpr out;
  out.add(key, coefficient);
  return out;
}

void ExpCoordExpr::add(const ExpKey& k, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpCoordExpr ExpCoordExpr::derive(Coord c) const {
  ExpCoordExpr out;
  for (const auto& [k, coef] : terms_) {
    switch (c) {
      case Coord::theta3:
        out.add(k, coef * Rational(k.v - k.w));
        break;
      case Coord::theta:
        out.add(k, coef * Rational(k.v + k.w));
        break;
      case Coord::theta_plus:
        if (k.tp != 0) out.add({k.v, k.w, k.tp - 1, k.tm}, coef * Rational(k.tp));
        break;
      case Coord::theta_minus:
        if (k.tm != 0) out.add({k.v, k.w, k.tp, k.tm - 1}, coef * Rational(k.tm));
        break;
    }
  }
  return out;
}

ExpCoordExpr& ExpCoordExpr::operator+=(const ExpCoordExpr& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

ExpCoordExpr& ExpCoordExpr::operator-=(const ExpCoordExpr& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

ExpCoordExpr operator*(const ExpCoordExpr& lhs, const ExpCoordExpr& rhs) {
  ExpCoordExpr out;
  for (const auto& [kl, cl] : lhs.terms_) {
    for (const auto& [kr, cr] : rhs.terms_) {
      out.add({kl.v + kr.v, kl.w + kr.w, kl.tp + kr.tp, kl.tm + kr.tm}, cl * cr);
    }
  }
  return out;
}

ExpCoordExpr ExpCoordExpr::operator-() const {
  ExpCoordExpr out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

double ExpCoordExpr::evaluate(double theta3, double theta_plus, double theta_minus, double theta,
                              const Assignment& params) const {
  const double v = std::exp(theta + theta3);
  const double w = std::exp(theta - theta3);
  double sum = 0.0;
  for (const auto& [k, c] : terms_) {
    sum += c.evaluate(params).to_double() * std::pow(v, k.v) * std::pow(w, k.w) *
           std::pow(theta_plus, k.tp) * std::pow(theta_minus, k.tm);
  }
  return sum;
}

std::string ExpCoordExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k.v != 0) os << "*v^" << k.v;
    if (k.w != 0) os << "*w^" << k.w;
    if (k.tp != 0) os << "*theta+^" << k.tp;
    if (k.tm != 0) os << "*theta-^" << k.tm;
  }
  return os.str();
}

std::string_view coord_name(Coord c) {
  switch (c) {
    case Coord::theta3: return "theta3";
    case Coord::theta_plus: return "theta+";
    case Coord::theta_minus: return "theta-";
    case Coord::theta: return "theta";
  }
  return "?";
}

}  // namespace gl2q::sym
