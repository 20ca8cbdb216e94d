#include "gl2q/symbolics/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace gl2q::sym {

LaurentPoly::LaurentPoly(MultiPoly constant) { add(0, constant); }

LaurentPoly LaurentPoly::monomial(int degree, MultiPoly coefficient) {
  LaurentPoly out;
  out.add(degree, coefficient);
  return out;
}

void LaurentPoly::add(int degree, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

MultiPoly LaurentPoly::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? MultiPoly() : it->second;
}

std::optional<int> LaurentPoly::min_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

std::optional<int> LaurentPoly::max_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [dl, cl] : lhs.coeffs_) {
    for (const auto& [dr, cr] : rhs.coeffs_) out.add(dl + dr, cl * cr);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  if (exponent < 0) {
    auto inv = unit_inverse();
    if (!inv) throw std::domain_error("LaurentPoly::pow: negative power of a non-unit " + to_string());
    return inv->pow(-exponent);
  }
  LaurentPoly result(MultiPoly(1));
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (coeffs_.size() != 1) return std::nullopt;
  const auto& [d, c] = *coeffs_.begin();
  auto inv = c.unit_inverse();
  if (!inv) return std::nullopt;
  return monomial(-d, *inv);
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "eps^" << d << "*(" << c.to_string() << ")";
  }
  return os.str();
}

std::variant<MultiPoly, DivergenceReport> laurent_limit(const LaurentPoly& x) {
  DivergenceReport report;
  for (const auto& [d, c] : x.coefficients()) {
    if (d < 0) report.terms.emplace_back(d, c);
  }
  if (!report.terms.empty()) return report;
  return x.coefficient(0);
}

LaurentPoly substitute(const MultiPoly& p, const std::map<Sym, LaurentPoly>& replacements) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    LaurentPoly factor(MultiPoly(1));
    for (const auto& [s, value] : replacements) {
      const int e = m[index_of(s)];
      if (e == 0) continue;
      rest[index_of(s)] = 0;
      factor = factor * value.pow(e);
    }
    out += factor * LaurentPoly(MultiPoly::term(c, rest));
  }
  return out;
}

}  // namespace gl2q::sym
