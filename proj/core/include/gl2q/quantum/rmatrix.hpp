#pragma once

#include <map>
#include <optional>
#include <string>

#include "gl2q/quantum/hopf.hpp"

namespace gl2q::quantum {

enum class RKind { Ia, II_exp, II_matrix };

std::string r_kind_name(RKind kind);
std::optional<RKind> parse_r_kind(const std::string& name);

/// 4x4 R-matrix in the fundamental-size representation, index 2i+j for e_i (x) e_j.
struct QuantumRMatrix {
  RKind which = RKind::Ia;
  std::map<std::string, double> params;
  CMatrix matrix;
  std::optional<double> q;
  std::optional<double> h;
  std::optional<double> p;
};

/// q = e^a, h = (a+/2)(e^a - 1)/a (continued analytically to a = 0).
QuantumRMatrix build_R_Ia(double a_plus, double a);
/// exp{I (x) A} exp{-A (x) I} with A = (b J3 - b+ J+)/2 in the fundamental rep.
QuantumRMatrix build_R_II_exp(double b_plus, double b);
/// Closed 4x4 form with p = (b+/2)(e^b - 1)/b, p -> b+/2 at b = 0.
QuantumRMatrix build_R_II_matrix(double b_plus, double b);
QuantumRMatrix build_R(RKind which, const std::map<std::string, double>& params);

/// |R12 R13 R23 - R23 R13 R12|
double qybe_check(const CMatrix& r);
inline double qybe_check(const QuantumRMatrix& r) { return qybe_check(r.matrix); }

/// max over generators of |R D(X) R^-1 - P D(X) P|. Throws on singular R.
double intertwine_check(const CMatrix& r, const GeneratorImages& delta);
inline double intertwine_check(const QuantumRMatrix& r, const GeneratorImages& delta) {
  return intertwine_check(r.matrix, delta);
}

struct TriangularityReport {
  bool triangular = false;
  double norm = 0.0;  // |R12 R21 - 1|
};

TriangularityReport triangularity_check(const CMatrix& r, double tol = 1e-12);
inline TriangularityReport triangularity_check(const QuantumRMatrix& r, double tol = 1e-12) {
  return triangularity_check(r.matrix, tol);
}

struct CasimirReport {
  Complex scalar;
  double scalar_residual = 0.0;     // |C - scalar * 1|
  double centrality_residual = 0.0; // max |[C, D(X)]|
  CMatrix value;
};

CasimirReport casimir_check(const Quantization& q, const Representation& rep);

}  // namespace gl2q::quantum
