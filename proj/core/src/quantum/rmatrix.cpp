#include "gl2q/quantum/rmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace gl2q::quantum {

std::string r_kind_name(RKind kind) {
  switch (kind) {
    case RKind::Ia:
      return "Ia";
    case RKind::II_exp:
      return "II-exp";
    case RKind::II_matrix:
      return "II-matrix";
  }
  return "?";
}

std::optional<RKind> parse_r_kind(const std::string& name) {
  for (auto k : {RKind::Ia, RKind::II_exp, RKind::II_matrix}) {
    if (r_kind_name(k) == name) return k;
  }
  if (name == "II") return RKind::II_matrix;
  return std::nullopt;
}

QuantumRMatrix build_R_Ia(double a_plus, double a) {
  const double q = std::exp(a);
  const double h = a_plus / 2.0 * phi1(Complex(a, 0.0)).real();
  QuantumRMatrix r;
  r.which = RKind::Ia;
  r.params = {{"a+", a_plus}, {"a", a}};
  r.q = q;
  r.h = h;
  r.matrix.resize(4, 4);
  r.matrix << 1.0, h, -q * h, h * h,
              0.0, q, 1.0 - q * q, q * h,
              0.0, 0.0, q, -h,
              0.0, 0.0, 0.0, 1.0;
  return r;
}

QuantumRMatrix build_R_II_exp(double b_plus, double b) {
  const CMatrix half = 0.5 * (b * sigma3() - b_plus * sigma_plus());
  const CMatrix id = CMatrix::Identity(2, 2);
  QuantumRMatrix r;
  r.which = RKind::II_exp;
  r.params = {{"b+", b_plus}, {"b", b}};
  r.p = b_plus / 2.0 * phi1(Complex(b, 0.0)).real();
  r.matrix = matrix_exp(kron(id, half)) * matrix_exp(-kron(half, id));
  return r;
}

QuantumRMatrix build_R_II_matrix(double b_plus, double b) {
  const double p = b_plus / 2.0 * phi1(Complex(b, 0.0)).real();
  const double em = std::exp(-b);
  const double ep = std::exp(b);
  QuantumRMatrix r;
  r.which = RKind::II_matrix;
  r.params = {{"b+", b_plus}, {"b", b}};
  r.p = p;
  r.matrix.resize(4, 4);
  r.matrix << 1.0, -em * p, p, -em * p * p,
              0.0, em, 0.0, em * p,
              0.0, 0.0, ep, -p,
              0.0, 0.0, 0.0, 1.0;
  return r;
}

QuantumRMatrix build_R(RKind which, const std::map<std::string, double>& params) {
  auto get = [&](const char* name) {
    auto it = params.find(name);
    return it == params.end() ? 0.0 : it->second;
  };
  switch (which) {
    case RKind::Ia:
      return build_R_Ia(get("a+"), get("a"));
    case RKind::II_exp:
      return build_R_II_exp(get("b+"), get("b"));
    case RKind::II_matrix:
      return build_R_II_matrix(get("b+"), get("b"));
  }
  throw std::logic_error("build_R");
}

namespace {

Eigen::Index factor_dim(const CMatrix& r) {
  const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(r.rows()))));
  if (d * d != r.rows() || r.rows() != r.cols()) throw std::invalid_argument("R-matrix is not square of size d^2");
  return d;
}

}  // namespace

double qybe_check(const CMatrix& r) {
  const Eigen::Index d = factor_dim(r);
  const CMatrix id = CMatrix::Identity(d, d);
  const CMatrix p23 = kron(id, flip(d));
  const CMatrix r12 = kron(r, id);
  const CMatrix r23 = kron(id, r);
  const CMatrix r13 = p23 * r12 * p23;
  return max_abs(r12 * r13 * r23 - r23 * r13 * r12);
}

double intertwine_check(const CMatrix& r, const GeneratorImages& delta) {
  const Eigen::Index d = factor_dim(r);
  Eigen::PartialPivLU<CMatrix> lu(r);
  if (std::abs(lu.determinant()) < 1e-300) throw std::domain_error("intertwine_check: singular R");
  const CMatrix r_inv = lu.inverse();
  const CMatrix p = flip(d);
  double worst = 0.0;
  for (const auto& x : delta) {
    if (x.rows() != r.rows()) throw std::invalid_argument("intertwine_check: dimension mismatch");
    worst = std::max(worst, max_abs(r * x * r_inv - p * x * p));
  }
  return worst;
}

TriangularityReport triangularity_check(const CMatrix& r, double tol) {
  const Eigen::Index d = factor_dim(r);
  const CMatrix p = flip(d);
  const CMatrix r21 = p * r * p;
  TriangularityReport out;
  out.norm = max_abs(r * r21 - CMatrix::Identity(r.rows(), r.cols()));
  out.triangular = out.norm < tol;
  return out;
}

CasimirReport casimir_check(const Quantization& q, const Representation& rep) {
  CasimirReport out;
  out.value = evaluate(q.casimir, rep.binding);
  const auto n = static_cast<double>(rep.dim());
  out.scalar = out.value.trace() / n;
  out.scalar_residual = max_abs(out.value - out.scalar * CMatrix::Identity(rep.dim(), rep.dim()));
  for (const auto& x : rep.binding.generators) {
    out.centrality_residual = std::max(out.centrality_residual, max_abs(out.value * x - x * out.value));
  }
  return out;
}

}  // namespace gl2q::quantum
