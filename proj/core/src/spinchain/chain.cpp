#include "gl2q/spinchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gl2q/quantum/representation.hpp"

namespace gl2q::chain {

using quantum::kron;
using quantum::max_abs;

std::string boundary_name(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

std::optional<Boundary> parse_boundary(const std::string& name) {
  if (name == "open") return Boundary::open;
  if (name == "periodic") return Boundary::periodic;
  return std::nullopt;
}

CMatrix two_site_block(double b, double b_plus) {
  const auto q = quantum::quantization_twisted(b_plus, b);
  const quantum::DenseBinding delta{quantum::coproduct_eval(q.coproduct, quantum::fundamental_rep())};
  return quantum::evaluate(q.casimir, delta);
}

CMatrix two_site_block_closed_form(double b, double b_plus) {
  const CMatrix s3 = quantum::sigma3();
  const CMatrix sp = quantum::sigma_plus();
  const CMatrix sm = quantum::sigma_minus();
  const Complex zb(b, 0.0);
  const double up = quantum::phi1(zb).real();          // (e^b - 1)/b
  const double down = -quantum::phi1(-zb).real();      // (e^-b - 1)/b
  const double bend = -0.5 * (quantum::phi2(zb) + quantum::phi2(-zb)).real();  // (1 - cosh b)/b^2
  CMatrix h = 6.0 * CMatrix::Identity(4, 4);
  h += 2.0 * (kron(s3, s3) + 2.0 * std::exp(-b) * kron(sm, sp) + 2.0 * std::exp(b) * kron(sp, sm));
  h += 2.0 * b_plus * (up * kron(sp, s3) + down * kron(s3, sp));
  h += 2.0 * b_plus * b_plus * bend * kron(sp, sp);
  return h;
}

namespace {

SparseMatrix sparse_identity(Eigen::Index n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

SparseMatrix elementary(int d, int row, int col) {
  SparseMatrix e(d, d);
  e.insert(row, col) = 1.0;
  return e;
}

void check_sites(int sites) {
  if (sites < 1) throw std::invalid_argument("chain: at least one site required");
  if (sites > kMaxSites) {
    throw std::domain_error("chain: " + std::to_string(sites) + " sites exceed the cap of " + std::to_string(kMaxSites));
  }
}

}  // namespace

SparseMatrix embed_two_site(const CMatrix& block, int sites, int first, int second, int d) {
  if (first == second || first < 0 || second < 0 || first >= sites || second >= sites) {
    throw std::invalid_argument("embed_two_site: bad site pair");
  }
  if (block.rows() != d * d || block.cols() != d * d) throw std::invalid_argument("embed_two_site: block size");
  Eigen::Index dim = 1;
  for (int s = 0; s < sites; ++s) dim *= d;
  SparseMatrix out(dim, dim);
  // block = sum B(a d + b, c d + e) E_ac (x) E_be
  for (int a = 0; a < d; ++a) {
    for (int c = 0; c < d; ++c) {
      for (int b = 0; b < d; ++b) {
        for (int e = 0; e < d; ++e) {
          const Complex coeff = block(a * d + b, c * d + e);
          if (coeff == Complex(0.0, 0.0)) continue;
          SparseMatrix acc = sparse_identity(1);
          for (int s = 0; s < sites; ++s) {
            const SparseMatrix local =
                s == first ? elementary(d, a, c) : s == second ? elementary(d, b, e) : sparse_identity(d);
            acc = kron(acc, local);
          }
          out += coeff * acc;
        }
      }
    }
  }
  out.prune(Complex(0.0, 0.0));
  return out;
}

ChainHamiltonian chain_hamiltonian(const ChainSpec& spec) {
  if (spec.bonds < 1) throw std::invalid_argument("chain_hamiltonian: bonds must be >= 1");
  check_sites(spec.sites());
  if (spec.deformation == Deformation::twisted && spec.b_plus != 0.0) {
    throw std::invalid_argument("chain_hamiltonian: the twisted chain has b+ = 0");
  }
  const CMatrix block = two_site_block(spec.b, spec.b_plus);
  const int n = spec.sites();
  ChainHamiltonian h;
  h.spec = spec;
  h.matrix = SparseMatrix(Eigen::Index(1) << n, Eigen::Index(1) << n);
  for (int i = 0; i + 1 < n; ++i) h.matrix += embed_two_site(block, n, i, i + 1);
  if (spec.boundary == Boundary::periodic && n > 2) h.matrix += embed_two_site(block, n, n - 1, 0);
  const SparseMatrix adjoint = h.matrix.adjoint();
  h.hermitian = max_abs(SparseMatrix(h.matrix - adjoint)) < 1e-12;
  return h;
}

std::array<SparseMatrix, 4> iterated_coproduct(const quantum::CoproductRule& rule, int sites, IterationOrder order) {
  check_sites(sites);
  const auto fundamental = quantum::fundamental_rep();
  quantum::SparseBinding one;
  for (std::size_t i = 0; i < 4; ++i) one.generators[i] = fundamental.binding.generators[i].sparseView();
  quantum::SparseBinding current = one;
  for (int k = 1; k < sites; ++k) {
    const auto& left = order == IterationOrder::left ? current : one;
    const auto& right = order == IterationOrder::left ? one : current;
    quantum::SparseBinding next;
    const Eigen::Index dim = left.dim() * right.dim();
    for (std::size_t i = 0; i < 4; ++i) {
      SparseMatrix acc(dim, dim);
      for (const auto& t : rule.images[i]) {
        acc += t.coefficient * kron(quantum::evaluate(t.left, left), quantum::evaluate(t.right, right));
      }
      acc.prune(Complex(0.0, 0.0));
      next.generators[i] = acc;
    }
    current = std::move(next);
  }
  return current.generators;
}

double InvarianceReport::max() const { return *std::max_element(residual.begin(), residual.end()); }

InvarianceReport invariance_check(const ChainHamiltonian& h, double b, double b_plus) {
  if (b != h.spec.b || b_plus != h.spec.b_plus) {
    throw std::invalid_argument("invariance_check: parameters differ from those of the Hamiltonian");
  }
  return invariance_check(h);
}

InvarianceReport invariance_check(const ChainHamiltonian& h) {
  const auto rule = quantum::quantization_twisted(h.spec.b_plus, h.spec.b).coproduct;
  const auto delta = iterated_coproduct(rule, h.spec.sites());
  InvarianceReport out;
  for (std::size_t i = 0; i < 4; ++i) {
    const SparseMatrix comm = h.matrix * delta[i] - delta[i] * h.matrix;
    out.residual[i] = max_abs(comm);
  }
  return out;
}

Spectrum spectrum(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum: matrix is not square");
  if (m.rows() > (Eigen::Index(1) << kMaxSites)) throw std::domain_error("spectrum: dimension above 4096");
  Spectrum out;
  const double scale = std::max(1.0, max_abs(m));
  if (max_abs(m - m.adjoint()) < 1e-12 * scale) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver did not converge");
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.eigenvalues.emplace_back(solver.eigenvalues()(i), 0.0);
    out.hermitian_solver = true;
  } else {
    Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver did not converge");
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.eigenvalues.push_back(solver.eigenvalues()(i));
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  out.is_real = std::all_of(out.eigenvalues.begin(), out.eigenvalues.end(),
                            [&](Complex z) { return std::abs(z.imag()) < 1e-8 * scale; });
  return out;
}

Spectrum spectrum(const ChainHamiltonian& h) { return spectrum(h.dense()); }

}  // namespace gl2q::chain
