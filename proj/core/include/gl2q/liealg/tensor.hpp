#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2q/liealg/lie_algebra.hpp"
#include "gl2q/symbolics/laurent.hpp"
#include "gl2q/symbolics/multipoly.hpp"

namespace gl2q::lie {

using Index = std::vector<int>;

/// Degree-k element of g^{(x)k}. Coeff is MultiPoly for the classical layer
/// and LaurentPoly for contraction bookkeeping; it only needs ring operations
/// and construction from MultiPoly.
template <typename Coeff>
class BasicTensor {
 public:
  using Terms = std::map<Index, Coeff>;

  explicit BasicTensor(int degree = 1) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("tensor degree must be >= 1");
  }

  static BasicTensor generator(int i, Coeff c = Coeff(sym::MultiPoly(1))) {
    BasicTensor t(1);
    t.add({i}, c);
    return t;
  }

  /// Totally antisymmetric tensor from its coefficients at strictly increasing
  /// index tuples; the coefficient at the sorted tuple is kept as given.
  static BasicTensor from_wedge(int degree, const std::map<Index, Coeff>& sorted_coeffs) {
    BasicTensor t(degree);
    for (const auto& [idx, c] : sorted_coeffs) {
      Index perm = idx;
      std::sort(perm.begin(), perm.end());
      if (std::adjacent_find(perm.begin(), perm.end()) != perm.end()) continue;
      Index order(perm.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        Index key(perm.size());
        for (std::size_t s = 0; s < perm.size(); ++s) key[s] = perm[order[s]];
        t.add(key, permutation_sign(order) > 0 ? c : -c);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    return t;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Coeff coefficient(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add(const Index& idx, const Coeff& c) {
    if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("tensor index has wrong degree");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  BasicTensor& operator+=(const BasicTensor& o) {
    check_degree(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& o) {
    check_degree(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend BasicTensor operator+(BasicTensor l, const BasicTensor& r) { return l += r; }
  friend BasicTensor operator-(BasicTensor l, const BasicTensor& r) { return l -= r; }
  BasicTensor operator-() const {
    BasicTensor out(degree_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }
  friend BasicTensor operator*(const Coeff& s, const BasicTensor& t) {
    BasicTensor out(t.degree_);
    for (const auto& [k, c] : t.terms_) out.add(k, s * c);
    return out;
  }
  friend bool operator==(const BasicTensor& l, const BasicTensor& r) {
    return l.degree_ == r.degree_ && l.terms_ == r.terms_;
  }

  /// Outer product x (x) y.
  friend BasicTensor tensor(const BasicTensor& x, const BasicTensor& y) {
    BasicTensor out(x.degree_ + y.degree_);
    for (const auto& [kx, cx] : x.terms_) {
      for (const auto& [ky, cy] : y.terms_) {
        Index k = kx;
        k.insert(k.end(), ky.begin(), ky.end());
        out.add(k, cx * cy);
      }
    }
    return out;
  }

  /// Permutes tensor slots: slot s of the result is slot perm[s] of *this.
  BasicTensor permuted(const Index& perm) const {
    BasicTensor out(degree_);
    for (const auto& [k, c] : terms_) {
      Index nk(k.size());
      for (std::size_t s = 0; s < k.size(); ++s) nk[s] = k[perm[s]];
      out.add(nk, c);
    }
    return out;
  }

  bool is_antisymmetric() const {
    Index order(degree_);
    std::iota(order.begin(), order.end(), 0);
    while (std::next_permutation(order.begin(), order.end())) {
      BasicTensor p = permuted(order);
      if (permutation_sign(order) < 0) p = -p;
      if (!(p == *this)) return false;
    }
    return true;
  }

  /// Coefficients at strictly increasing index tuples.
  std::map<Index, Coeff> wedge_coefficients() const {
    std::map<Index, Coeff> out;
    for (const auto& [k, c] : terms_) {
      if (std::is_sorted(k.begin(), k.end()) && std::adjacent_find(k.begin(), k.end()) == k.end()) out.emplace(k, c);
    }
    return out;
  }

  template <typename F>
  auto map_coefficients(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Coeff&>()))>;
    BasicTensor<Out> out(degree_);
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  /// Plain text "c*X(x)Y + ..." using the algebra's labels.
  std::string to_string(const LieAlgebra& alg) const {
    return render(alg, terms_, "(x)");
  }

  /// Wedge form "c*X^Y" over sorted tuples; only meaningful when antisymmetric.
  std::string to_wedge_string(const LieAlgebra& alg) const {
    return render(alg, wedge_coefficients(), "^");
  }

  static int permutation_sign(const Index& order) {
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (order[i] > order[j]) sign = -sign;
      }
    }
    return sign;
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return c.is_zero(); }

  void check_degree(const BasicTensor& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("tensor degree mismatch");
  }

  template <typename Map>
  static std::string render(const LieAlgebra& alg, const Map& terms, const char* sep) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")*";
      for (std::size_t s = 0; s < k.size(); ++s) {
        if (s) os << sep;
        os << alg.basis_label(k[s]);
      }
    }
    return os.str();
  }

  int degree_;
  Terms terms_;
};

using Tensor = BasicTensor<sym::MultiPoly>;
using LaurentTensor = BasicTensor<sym::LaurentPoly>;

/// x (x) y - y (x) x for degree-1 inputs (generally: swap the two halves).
template <typename Coeff>
BasicTensor<Coeff> wedge(const BasicTensor<Coeff>& x, const BasicTensor<Coeff>& y) {
  return tensor(x, y) - tensor(y, x);
}

/// X_i ^ X_j with unit coefficient.
inline Tensor wedge(int i, int j) { return wedge(Tensor::generator(i), Tensor::generator(j)); }

/// [X_i, X_j] as a degree-1 tensor.
template <typename Coeff = sym::MultiPoly>
BasicTensor<Coeff> bracket(const LieAlgebra& alg, int i, int j) {
  BasicTensor<Coeff> out(1);
  const auto& row = alg.structure(i, j);
  for (int k = 0; k < kDim; ++k) {
    if (!row[k].is_zero()) out.add({k}, Coeff(sym::MultiPoly(row[k])));
  }
  return out;
}

inline Tensor bracket(const LieAlgebra& alg, std::string_view x, std::string_view y) {
  return bracket(alg, alg.require_index(x), alg.require_index(y));
}

/// Leibniz action sum_s 1 (x) ... (x) ad_{X_i} (x) ... (x) 1.
template <typename Coeff>
BasicTensor<Coeff> ad_action(const LieAlgebra& alg, int i, const BasicTensor<Coeff>& t) {
  BasicTensor<Coeff> out(t.degree());
  for (const auto& [k, c] : t.terms()) {
    for (std::size_t s = 0; s < k.size(); ++s) {
      const auto& row = alg.structure(i, k[s]);
      for (int m = 0; m < kDim; ++m) {
        if (row[m].is_zero()) continue;
        Index nk = k;
        nk[s] = m;
        out.add(nk, Coeff(sym::MultiPoly(row[m])) * c);
      }
    }
  }
  return out;
}

/// ad action of a general degree-1 element.
template <typename Coeff>
BasicTensor<Coeff> ad_action(const LieAlgebra& alg, const BasicTensor<Coeff>& x, const BasicTensor<Coeff>& t) {
  if (x.degree() != 1) throw std::invalid_argument("ad_action: acting element must have degree 1");
  BasicTensor<Coeff> out(t.degree());
  for (const auto& [k, c] : x.terms()) out += c * ad_action(alg, k[0], t);
  return out;
}

/// Lie bracket of two degree-1 tensors.
template <typename Coeff>
BasicTensor<Coeff> bracket(const LieAlgebra& alg, const BasicTensor<Coeff>& x, const BasicTensor<Coeff>& y) {
  return ad_action(alg, x, y);
}

/// eta = tau1 (J3(x)J3 + k J-(x)J+ + 2 J+(x)J-) + tau2 I(x)I; k = 2 is the
/// invariant element.
Tensor eta_element(const Rational& tau1, const Rational& tau2, const Rational& minus_plus_coefficient = Rational(2));

/// True when ad_X(t) = 0 for every basis X.
bool is_ad_invariant(const LieAlgebra& alg, const Tensor& t);

bool eta_invariance_check(const Rational& tau1, const Rational& tau2,
                          const Rational& minus_plus_coefficient = Rational(2));

}  // namespace gl2q::lie
