#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace gl2q::quantum {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Noncommutative expression in the four generators of a quantum gl(2)
/// algebra. Values are immutable and cheap to copy.
class Expr {
 public:
  enum class Kind { identity, generator, scale, sum, product, exp, phi1, phi2, central };

  struct Node {
    Kind kind = Kind::identity;
    int generator = 0;
    Complex coefficient{1.0, 0.0};
    std::vector<Expr> children;
    std::function<Complex(Complex)> fn;
    std::string fn_name;
  };

  Expr() : Expr(identity()) {}

  static Expr identity();
  static Expr generator(int i);
  static Expr constant(Complex c);
  static Expr make(Node node);

  const Node& node() const { return *node_; }
  Kind kind() const { return node_->kind; }

  friend Expr operator+(const Expr& x, const Expr& y);
  friend Expr operator-(const Expr& x, const Expr& y);
  friend Expr operator*(const Expr& x, const Expr& y);
  friend Expr operator*(Complex c, const Expr& x);
  friend Expr operator*(double c, const Expr& x) { return Complex(c, 0.0) * x; }
  Expr operator-() const { return Complex(-1.0, 0.0) * *this; }

  /// e^X.
  friend Expr exp(const Expr& x);
  /// (e^X - 1) / X, an entire function of X.
  friend Expr phi1(const Expr& x);
  /// (e^X - 1 - X) / X^2, an entire function of X.
  friend Expr phi2(const Expr& x);
  /// f(X) for an argument that must act as a scalar (central element in an
  /// irreducible or scalar representation).
  friend Expr central(const Expr& x, std::function<Complex(Complex)> f, std::string name);

  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Expr commutator(const Expr& x, const Expr& y);
Expr anticommutator(const Expr& x, const Expr& y);
/// sinh(x X) / x for x != 0, written through exponentials.
Expr sinh_over(double x, const Expr& m);
/// cosh(x X).
Expr cosh_of(double x, const Expr& m);

/// Scalar versions of the entire functions above, accurate near zero.
Complex phi1(Complex z);
Complex phi2(Complex z);

/// Matrix exponential (scaling and squaring), with an exact fast path for
/// scalar multiples of the identity.
CMatrix matrix_exp(const CMatrix& m);
CMatrix matrix_phi1(const CMatrix& m);
CMatrix matrix_phi2(const CMatrix& m);

/// lambda with m == lambda * 1 up to `tol` (absolute, entrywise), if any.
std::optional<Complex> as_scalar(const CMatrix& m, double tol = 0.0);
std::optional<Complex> as_scalar(const SparseMatrix& m, double tol = 0.0);

/// Max-abs entry, the residual norm used throughout the quantum layer.
double max_abs(const CMatrix& m);
double max_abs(const SparseMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Generator matrices an expression is evaluated against.
struct DenseBinding {
  std::array<CMatrix, 4> generators;
  Eigen::Index dim() const { return generators[0].rows(); }
};

struct SparseBinding {
  std::array<SparseMatrix, 4> generators;
  Eigen::Index dim() const { return generators[0].rows(); }
};

CMatrix evaluate(const Expr& e, const DenseBinding& binding);
/// Sparse evaluation; exp/phi/central nodes need scalar arguments and throw
/// std::domain_error otherwise.
SparseMatrix evaluate(const Expr& e, const SparseBinding& binding);

}  // namespace gl2q::quantum
