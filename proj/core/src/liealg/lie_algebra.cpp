#include "gl2q/liealg/lie_algebra.hpp"

#include <stdexcept>

namespace gl2q::lie {

namespace {

LieAlgebra::Row unit(int k, long scale = 1) {
  LieAlgebra::Row r{};
  r[k] = Rational(scale);
  return r;
}

}  // namespace

LieAlgebra::LieAlgebra(AlgebraName name, std::array<std::string, kDim> labels)
    : name_(name), labels_(std::move(labels)) {}

void LieAlgebra::set_bracket(int i, int j, Row value) {
  table_[i][j] = value;
  for (auto& x : value) x = -x;
  table_[j][i] = value;
}

const LieAlgebra& LieAlgebra::gl2() {
  static const LieAlgebra alg = [] {
    LieAlgebra g(AlgebraName::gl2, {"J3", "J+", "J-", "I"});
    g.set_bracket(gl2::J3, gl2::Jp, unit(gl2::Jp, 2));
    g.set_bracket(gl2::J3, gl2::Jm, unit(gl2::Jm, -2));
    g.set_bracket(gl2::Jp, gl2::Jm, unit(gl2::J3));
    if (!g.satisfies_jacobi()) throw std::logic_error("gl2 structure constants violate Jacobi");
    return g;
  }();
  return alg;
}

const LieAlgebra& LieAlgebra::h4() {
  static const LieAlgebra alg = [] {
    LieAlgebra h(AlgebraName::h4, {"N", "A+", "A-", "M"});
    h.set_bracket(h4::N, h4::Ap, unit(h4::Ap));
    h.set_bracket(h4::N, h4::Am, unit(h4::Am, -1));
    h.set_bracket(h4::Am, h4::Ap, unit(h4::M));
    if (!h.satisfies_jacobi()) throw std::logic_error("h4 structure constants violate Jacobi");
    return h;
  }();
  return alg;
}

std::optional<int> LieAlgebra::index_of(std::string_view label) const {
  for (int i = 0; i < kDim; ++i) {
    if (labels_[i] == label) return i;
  }
  if (name_ == AlgebraName::gl2) {
    if (label == "J0" || label == "J_3") return gl2::J3;
    if (label == "Jp" || label == "J_+") return gl2::Jp;
    if (label == "Jm" || label == "J_-") return gl2::Jm;
  } else {
    if (label == "Ap" || label == "A_+") return h4::Ap;
    if (label == "Am" || label == "A_-") return h4::Am;
  }
  return std::nullopt;
}

int LieAlgebra::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw std::invalid_argument("unknown " + std::string(this->label()) + " generator '" + std::string(label) + "'");
}

bool LieAlgebra::satisfies_jacobi() const {
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      for (int k = 0; k < kDim; ++k) {
        // [X_i,[X_j,X_k]] + cyclic
        for (int out = 0; out < kDim; ++out) {
          Rational sum;
          for (int m = 0; m < kDim; ++m) {
            sum += table_[j][k][m] * table_[i][m][out];
            sum += table_[k][i][m] * table_[j][m][out];
            sum += table_[i][j][m] * table_[k][m][out];
          }
          if (!sum.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

CasimirSpec CasimirSpec::gl2_quadratic() {
  return {AlgebraName::gl2,
          {{Rational(1), {gl2::J3, gl2::J3}}, {Rational(2), {gl2::Jp, gl2::Jm}}, {Rational(2), {gl2::Jm, gl2::Jp}}}};
}

}  // namespace gl2q::lie
