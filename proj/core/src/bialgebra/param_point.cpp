#include "gl2q/bialgebra/param_point.hpp"

#include <sstream>
#include <stdexcept>

namespace gl2q::bialg {

namespace {

std::size_t slot(Sym s) {
  const auto i = sym::index_of(s);
  if (i >= 6) throw std::invalid_argument("not a deformation parameter: " + std::string(sym::symbol_name(s)));
  return i;
}

}  // namespace

const Rational& ParamPoint::get(Sym s) const { return values_[slot(s)]; }

ParamPoint& ParamPoint::set(Sym s, Rational value) {
  values_[slot(s)] = std::move(value);
  return *this;
}

sym::Assignment ParamPoint::assignment() const {
  sym::Assignment out;
  for (std::size_t i = 0; i < 6; ++i) out.set(sym::kDeformationParameters[i], values_[i]);
  return out;
}

std::string ParamPoint::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) os << ' ';
    os << sym::symbol_name(sym::kDeformationParameters[i]) << '=' << values_[i].to_string();
  }
  return os.str();
}

}  // namespace gl2q::bialg
