#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gl2q/quantum/hopf.hpp"

namespace gl2q::chain {

using quantum::CMatrix;
using quantum::Complex;
using quantum::SparseMatrix;

enum class Boundary { open, periodic };
/// twisted: only b; deformed: b+ and b.
enum class Deformation { twisted, deformed };

std::string boundary_name(Boundary b);
std::optional<Boundary> parse_boundary(const std::string& name);

struct ChainSpec {
  int bonds = 1;
  Deformation deformation = Deformation::twisted;
  Boundary boundary = Boundary::open;
  double b = 0.0;
  double b_plus = 0.0;

  int sites() const { return bonds + 1; }
};

/// Largest number of sites accepted (matrix dimension 4096).
inline constexpr int kMaxSites = 12;

struct ChainHamiltonian {
  ChainSpec spec;
  SparseMatrix matrix;
  bool hermitian = false;

  Eigen::Index dim() const { return matrix.rows(); }
  CMatrix dense() const { return CMatrix(matrix); }
};

/// (D (x) D)(Delta C) for the family II non-standard coproduct at b- = 0.
CMatrix two_site_block(double b, double b_plus);
/// The same block written in Pauli matrices, b -> 0 limits taken analytically.
CMatrix two_site_block_closed_form(double b, double b_plus);

/// Sum of two-site blocks over bonds (i, i+1), plus the wrap bond (last, first)
/// for a periodic chain. Throws std::domain_error above kMaxSites.
ChainHamiltonian chain_hamiltonian(const ChainSpec& spec);

/// Places a (d^2 x d^2) two-site operator on sites (first, second) of a chain of
/// `sites` sites with local dimension d.
SparseMatrix embed_two_site(const CMatrix& block, int sites, int first, int second, int d = 2);

enum class IterationOrder { left, right };

/// n-fold coproduct of every generator in the fundamental representation, built
/// by (Delta^(k) (x) id) Delta or (id (x) Delta^(k)) Delta.
std::array<SparseMatrix, 4> iterated_coproduct(const quantum::CoproductRule& rule, int sites,
                                               IterationOrder order = IterationOrder::left);

struct InvarianceReport {
  std::array<double, 4> residual{};  // |[H, Delta^(n)(X)]| for J3, J+, J-, I
  double max() const;
};

/// Throws std::invalid_argument when (b, b_plus) differ from the chain's own.
InvarianceReport invariance_check(const ChainHamiltonian& h, double b, double b_plus);
InvarianceReport invariance_check(const ChainHamiltonian& h);

struct Spectrum {
  std::vector<Complex> eigenvalues;  // sorted by real part, then imaginary part
  bool is_real = false;
  bool hermitian_solver = false;
};

Spectrum spectrum(const CMatrix& m);
Spectrum spectrum(const ChainHamiltonian& h);

}  // namespace gl2q::chain
