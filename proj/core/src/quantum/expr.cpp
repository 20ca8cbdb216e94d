#include "gl2q/quantum/expr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace gl2q::quantum {

Expr Expr::make(Node node) { return Expr(std::make_shared<const Node>(std::move(node))); }

Expr Expr::identity() {
  static const Expr one = make(Node{});
  return one;
}

Expr Expr::generator(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("Expr::generator: index out of range");
  Node n;
  n.kind = Kind::generator;
  n.generator = i;
  return make(std::move(n));
}

Expr Expr::constant(Complex c) { return c * identity(); }

Expr operator+(const Expr& x, const Expr& y) {
  Expr::Node n;
  n.kind = Expr::Kind::sum;
  n.children = {x, y};
  return Expr::make(std::move(n));
}

Expr operator-(const Expr& x, const Expr& y) { return x + (-y); }

Expr operator*(const Expr& x, const Expr& y) {
  Expr::Node n;
  n.kind = Expr::Kind::product;
  n.children = {x, y};
  return Expr::make(std::move(n));
}

Expr operator*(Complex c, const Expr& x) {
  Expr::Node n;
  n.kind = Expr::Kind::scale;
  n.coefficient = c;
  n.children = {x};
  return Expr::make(std::move(n));
}

namespace {

Expr unary(Expr::Kind kind, const Expr& x) {
  Expr::Node n;
  n.kind = kind;
  n.children = {x};
  return Expr::make(std::move(n));
}

}  // namespace

Expr exp(const Expr& x) { return unary(Expr::Kind::exp, x); }
Expr phi1(const Expr& x) { return unary(Expr::Kind::phi1, x); }
Expr phi2(const Expr& x) { return unary(Expr::Kind::phi2, x); }

Expr central(const Expr& x, std::function<Complex(Complex)> f, std::string name) {
  Expr::Node n;
  n.kind = Expr::Kind::central;
  n.children = {x};
  n.fn = std::move(f);
  n.fn_name = std::move(name);
  return Expr::make(std::move(n));
}

Expr commutator(const Expr& x, const Expr& y) { return x * y - y * x; }
Expr anticommutator(const Expr& x, const Expr& y) { return x * y + y * x; }

Expr sinh_over(double x, const Expr& m) {
  if (x == 0.0) return m;
  return Complex(0.5 / x, 0.0) * (exp(x * m) - exp(-x * m));
}

Expr cosh_of(double x, const Expr& m) { return 0.5 * (exp(x * m) + exp(-x * m)); }

std::string Expr::to_string(const std::vector<std::string>& labels) const {
  const Node& n = *node_;
  auto child = [&](std::size_t i) { return n.children[i].to_string(labels); };
  std::ostringstream os;
  switch (n.kind) {
    case Kind::identity:
      return "1";
    case Kind::generator:
      return labels.at(static_cast<std::size_t>(n.generator));
    case Kind::scale:
      os << "(" << n.coefficient.real();
      if (n.coefficient.imag() != 0.0) os << (n.coefficient.imag() > 0 ? "+" : "") << n.coefficient.imag() << "i";
      os << ")*" << child(0);
      return os.str();
    case Kind::sum:
      return "(" + child(0) + " + " + child(1) + ")";
    case Kind::product:
      return child(0) + "*" + child(1);
    case Kind::exp:
      return "exp(" + child(0) + ")";
    case Kind::phi1:
      return "phi1(" + child(0) + ")";
    case Kind::phi2:
      return "phi2(" + child(0) + ")";
    case Kind::central:
      return n.fn_name + "(" + child(0) + ")";
  }
  return "?";
}

Complex phi1(Complex z) {
  if (std::abs(z) < 1.0) {
    // sum z^k / (k+1)!
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    for (int k = 1; k < 30; ++k) {
      term *= z / static_cast<double>(k + 1);
      sum += term;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

Complex phi2(Complex z) {
  if (std::abs(z) < 1.0) {
    // sum z^k / (k+2)!
    Complex term(0.5, 0.0), sum(0.5, 0.0);
    for (int k = 1; k < 30; ++k) {
      term *= z / static_cast<double>(k + 2);
      sum += term;
    }
    return sum;
  }
  return (std::exp(z) - 1.0 - z) / (z * z);
}

std::optional<Complex> as_scalar(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const Complex lambda = m(0, 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex expected = i == j ? lambda : Complex(0.0, 0.0);
      if (std::abs(m(i, j) - expected) > tol) return std::nullopt;
    }
  }
  return lambda;
}

std::optional<Complex> as_scalar(const SparseMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const Complex lambda = m.coeff(0, 0);
  Eigen::Index diagonal_seen = 0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      if (it.row() == it.col()) {
        ++diagonal_seen;
        if (std::abs(it.value() - lambda) > tol) return std::nullopt;
      } else if (std::abs(it.value()) > tol) {
        return std::nullopt;
      }
    }
  }
  if (diagonal_seen != m.rows() && std::abs(lambda) > tol) return std::nullopt;
  return lambda;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const SparseMatrix& m) {
  double out = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out = Eigen::kroneckerProduct(a, b);
  return out;
}

CMatrix matrix_exp(const CMatrix& m) {
  if (auto s = as_scalar(m)) return std::exp(*s) * CMatrix::Identity(m.rows(), m.cols());
  return m.exp();
}

// Both phi functions come out of the exponential of a block upper-triangular
// matrix, which avoids dividing by a possibly singular argument.
CMatrix matrix_phi1(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  if (auto s = as_scalar(m)) return phi1(*s) * CMatrix::Identity(n, n);
  CMatrix big = CMatrix::Zero(2 * n, 2 * n);
  big.topLeftCorner(n, n) = m;
  big.topRightCorner(n, n) = CMatrix::Identity(n, n);
  return big.exp().topRightCorner(n, n);
}

CMatrix matrix_phi2(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  if (auto s = as_scalar(m)) return phi2(*s) * CMatrix::Identity(n, n);
  CMatrix big = CMatrix::Zero(3 * n, 3 * n);
  big.block(0, 0, n, n) = m;
  big.block(0, n, n, n) = CMatrix::Identity(n, n);
  big.block(n, 2 * n, n, n) = CMatrix::Identity(n, n);
  return big.exp().topRightCorner(n, n);
}

namespace {

SparseMatrix sparse_identity(Eigen::Index n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

Complex require_scalar(const SparseMatrix& m, const char* what) {
  auto s = as_scalar(m);
  if (!s) throw std::domain_error(std::string("sparse evaluation: ") + what + " of a non-scalar argument");
  return *s;
}

}  // namespace

CMatrix evaluate(const Expr& e, const DenseBinding& binding) {
  const auto& n = e.node();
  const Eigen::Index dim = binding.dim();
  switch (n.kind) {
    case Expr::Kind::identity:
      return CMatrix::Identity(dim, dim);
    case Expr::Kind::generator:
      return binding.generators[static_cast<std::size_t>(n.generator)];
    case Expr::Kind::scale:
      return n.coefficient * evaluate(n.children[0], binding);
    case Expr::Kind::sum:
      return evaluate(n.children[0], binding) + evaluate(n.children[1], binding);
    case Expr::Kind::product:
      return evaluate(n.children[0], binding) * evaluate(n.children[1], binding);
    case Expr::Kind::exp:
      return matrix_exp(evaluate(n.children[0], binding));
    case Expr::Kind::phi1:
      return matrix_phi1(evaluate(n.children[0], binding));
    case Expr::Kind::phi2:
      return matrix_phi2(evaluate(n.children[0], binding));
    case Expr::Kind::central: {
      const CMatrix arg = evaluate(n.children[0], binding);
      auto s = as_scalar(arg, 1e-12 * std::max(1.0, max_abs(arg)));
      if (!s) throw std::domain_error("central function " + n.fn_name + " applied to a non-scalar matrix");
      return n.fn(*s) * CMatrix::Identity(dim, dim);
    }
  }
  throw std::logic_error("evaluate: unknown node");
}

SparseMatrix evaluate(const Expr& e, const SparseBinding& binding) {
  const auto& n = e.node();
  const Eigen::Index dim = binding.dim();
  switch (n.kind) {
    case Expr::Kind::identity:
      return sparse_identity(dim);
    case Expr::Kind::generator:
      return binding.generators[static_cast<std::size_t>(n.generator)];
    case Expr::Kind::scale:
      return n.coefficient * evaluate(n.children[0], binding);
    case Expr::Kind::sum:
      return evaluate(n.children[0], binding) + evaluate(n.children[1], binding);
    case Expr::Kind::product:
      return (evaluate(n.children[0], binding) * evaluate(n.children[1], binding)).pruned();
    case Expr::Kind::exp:
      return std::exp(require_scalar(evaluate(n.children[0], binding), "exp")) * sparse_identity(dim);
    case Expr::Kind::phi1:
      return phi1(require_scalar(evaluate(n.children[0], binding), "phi1")) * sparse_identity(dim);
    case Expr::Kind::phi2:
      return phi2(require_scalar(evaluate(n.children[0], binding), "phi2")) * sparse_identity(dim);
    case Expr::Kind::central:
      return n.fn(require_scalar(evaluate(n.children[0], binding), n.fn_name.c_str())) * sparse_identity(dim);
  }
  throw std::logic_error("evaluate: unknown node");
}

}  // namespace gl2q::quantum
