#include "gl2q/symbolics/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gl2q::sym {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool MonomialOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const int dl = total_degree(lhs);
  const int dr = total_degree(rhs);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

Assignment& Assignment::set(Sym s, Rational value) {
  values_[index_of(s)] = std::move(value);
  return *this;
}

MultiPoly::MultiPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

MultiPoly MultiPoly::variable(Sym s, int power) {
  Monomial m{};
  m[index_of(s)] = static_cast<std::int16_t>(power);
  return term(Rational(1), m);
}

MultiPoly MultiPoly::term(Rational coefficient, const Monomial& monomial) {
  MultiPoly p;
  p.add_term(monomial, coefficient);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

bool MultiPoly::depends_on(Sym s) const {
  return std::any_of(terms_.begin(), terms_.end(), [s](const auto& t) { return t.first[index_of(s)] != 0; });
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kSymbolCount; ++i) m[i] = static_cast<std::int16_t>(ml[i] + mr[i]);
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) {
    auto inv = unit_inverse();
    if (!inv) throw std::domain_error("MultiPoly::pow: negative power of a non-unit " + to_string());
    return inv->pow(-exponent);
  }
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  Monomial inv;
  for (std::size_t i = 0; i < kSymbolCount; ++i) inv[i] = static_cast<std::int16_t>(-m[i]);
  return term(c.inverse(), inv);
}

Rational MultiPoly::evaluate(const Assignment& values) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (m[i] == 0) continue;
      const auto& v = values.get(static_cast<Sym>(i));
      if (!v) {
        throw std::invalid_argument("MultiPoly::evaluate: no value for symbol " +
                                    std::string(symbol_name(static_cast<Sym>(i))));
      }
      if (m[i] < 0 && v->is_zero()) {
        throw std::domain_error("MultiPoly::evaluate: division by zero symbol " +
                                std::string(symbol_name(static_cast<Sym>(i))));
      }
      t *= v->pow(m[i]);
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::partial_evaluate(const Assignment& values) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest = m;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (m[i] == 0) continue;
      const auto& v = values.get(static_cast<Sym>(i));
      if (!v) continue;
      if (m[i] < 0 && v->is_zero()) {
        throw std::domain_error("MultiPoly::partial_evaluate: division by zero symbol " +
                                std::string(symbol_name(static_cast<Sym>(i))));
      }
      coeff *= v->pow(m[i]);
      rest[i] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

MultiPoly MultiPoly::substitute(Sym s, const MultiPoly& replacement) const {
  const std::size_t k = index_of(s);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[k] = 0;
    out += term(c, rest) * replacement.pow(m[k]);
  }
  return out;
}

std::optional<Rational> MultiPoly::ratio_to(const MultiPoly& other) const {
  if (other.is_zero()) return std::nullopt;
  if (terms_.size() != other.terms_.size()) return std::nullopt;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  if (it == terms_.end()) return std::nullopt;
  if (it->first != jt->first) return std::nullopt;
  const Rational k = it->second / jt->second;
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != k * jt->second) return std::nullopt;
  }
  return k;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool constant_monomial = total_degree(m) == 0 &&
                                   std::all_of(m.begin(), m.end(), [](std::int16_t e) { return e == 0; });
    if (!mag.is_one() || constant_monomial) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << symbol_name(static_cast<Sym>(i));
      if (m[i] != 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

MultiPoly parse_term(std::string_view term, std::string_view whole) {
  term = trim(term);
  if (term.empty()) throw std::invalid_argument("MultiPoly::parse: empty term in '" + std::string(whole) + "'");
  Rational coeff(1);
  Monomial m{};
  std::size_t start = 0;
  bool first_factor = true;
  while (start <= term.size()) {
    const std::size_t star = term.find('*', start);
    std::string_view factor = trim(term.substr(start, star == std::string_view::npos ? term.size() - start : star - start));
    if (factor.empty()) throw std::invalid_argument("MultiPoly::parse: empty factor in '" + std::string(whole) + "'");
    const char lead = factor.front();
    if (first_factor && (std::isdigit(static_cast<unsigned char>(lead)) || lead == '-')) {
      coeff *= Rational::parse(factor);
    } else {
      std::string_view name = factor;
      int power = 1;
      if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
        name = factor.substr(0, caret);
        power = std::stoi(std::string(factor.substr(caret + 1)));
      }
      const auto s = parse_symbol(name);
      if (!s) throw std::invalid_argument("MultiPoly::parse: unknown symbol '" + std::string(name) + "'");
      m[index_of(*s)] = static_cast<std::int16_t>(m[index_of(*s)] + power);
    }
    first_factor = false;
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return MultiPoly::term(coeff, m);
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("MultiPoly::parse: empty input");
  MultiPoly out;
  bool negative = false;
  if (s.front() == '-' && s.size() > 1 && !std::isdigit(static_cast<unsigned char>(s[1]))) {
    negative = true;
    s.remove_prefix(1);
  }
  std::size_t pos = 0;
  while (true) {
    std::size_t next = std::string_view::npos;
    bool next_negative = false;
    for (std::size_t i = pos; i + 2 < s.size(); ++i) {
      if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
        next = i;
        next_negative = s[i + 1] == '-';
        break;
      }
    }
    std::string_view term = s.substr(pos, next == std::string_view::npos ? s.size() - pos : next - pos);
    MultiPoly t = parse_term(term, text);
    out += negative ? -t : t;
    if (next == std::string_view::npos) break;
    negative = next_negative;
    pos = next + 3;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

std::optional<std::vector<Rational>> express_in_span(const MultiPoly& p, const std::vector<MultiPoly>& generators) {
  // Columns are generators plus the target; rows are monomials.
  std::map<Monomial, std::size_t, MonomialOrder> rows;
  auto row_of = [&rows](const Monomial& m) {
    auto [it, inserted] = rows.try_emplace(m, rows.size());
    return it->second;
  };
  for (const auto& g : generators) {
    for (const auto& [m, c] : g.terms()) row_of(m);
  }
  for (const auto& [m, c] : p.terms()) row_of(m);

  const std::size_t n = generators.size();
  std::vector<std::vector<Rational>> mat(rows.size(), std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [m, c] : generators[j].terms()) mat[rows.at(m)][j] = c;
  }
  for (const auto& [m, c] : p.terms()) mat[rows.at(m)][n] = c;

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < mat.size(); ++col) {
    std::size_t piv = r;
    while (piv < mat.size() && mat[piv][col].is_zero()) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[piv], mat[r]);
    const Rational inv = mat[r][col].inverse();
    for (auto& x : mat[r]) x *= inv;
    for (std::size_t i = 0; i < mat.size(); ++i) {
      if (i == r || mat[i][col].is_zero()) continue;
      const Rational f = mat[i][col];
      for (std::size_t k = col; k <= n; ++k) mat[i][k] -= f * mat[r][k];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < mat.size(); ++i) {
    if (!mat[i][n].is_zero()) return std::nullopt;
  }
  std::vector<Rational> k(n, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) k[pivot_cols[i]] = mat[i][n];
  return k;
}

std::vector<MultiPoly> dedupe_up_to_scalars(const std::vector<MultiPoly>& polys) {
  std::vector<MultiPoly> out;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&p](const MultiPoly& q) { return p.ratio_to(q).has_value(); });
    if (!seen) out.push_back(p);
  }
  return out;
}

bool same_up_to_scalars(const std::vector<MultiPoly>& lhs, const std::vector<MultiPoly>& rhs) {
  const auto a = dedupe_up_to_scalars(lhs);
  const auto b = dedupe_up_to_scalars(rhs);
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    if (std::none_of(b.begin(), b.end(), [&p](const MultiPoly& q) { return p.ratio_to(q).has_value(); })) return false;
  }
  return true;
}

}  // namespace gl2q::sym
