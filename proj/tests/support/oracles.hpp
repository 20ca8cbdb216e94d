#pragma once

// Independent transcriptions used as test oracles. Nothing here calls the
// library routines under test; tensors are assembled term by term.

#include <array>
#include <cmath>
#include <map>
#include <string>

#include "generators.hpp"
#include "gl2q/bialgebra/cocommutator.hpp"
#include "gl2q/liealg/tensor.hpp"
#include "gl2q/quantum/expr.hpp"
#include "gl2q/symbolics/expcoord.hpp"

namespace gl2q::testing {

using lie::Tensor;
using sym::ExpCoordExpr;
using sym::MultiPoly;
using sym::Sym;

inline Tensor w2(int x, int y, const MultiPoly& c) { return c * lie::wedge(x, y); }

// ---- gl(2) bialgebras, by family column ----

struct FamilyBialgebra {
  Tensor r{2};
  bialg::Cocommutator delta;
};

inline FamilyBialgebra gl2_family_bialgebra(Column column, const bialg::ParamPoint& pt) {
  using namespace lie::gl2;
  const MultiPoly ap = pt.a_plus(), am = pt.a_minus(), bp = pt.b_plus(), bm = pt.b_minus(), a = pt.a(), b = pt.b();
  const MultiPoly half = Rational(1, 2);
  FamilyBialgebra e;
  auto& d = e.delta.image;
  switch (column) {
    case Column::I_plus_standard: {
      const Rational apr = pt.a_plus();
      const MultiPoly inv = apr.inverse();
      e.r = half * (w2(J3, Jp, ap) - w2(J3, Jm, am) - w2(J3, I, bp * a * inv) + w2(Jp, I, bp) + w2(Jm, I, am * bp * inv) -
                    w2(Jp, Jm, 2 * a));
      // -(a+ J+ + a- J-)^J3 + b+ (J+ - a-/a+ J-)^I
      d[J3] = -(w2(Jp, J3, ap) + w2(Jm, J3, am)) + w2(Jp, I, bp) - w2(Jm, I, bp * am * inv);
      // (a J3 - a- J-)^J+ + b+/a+ (a J+ + a-/2 J3)^I
      d[Jp] = w2(J3, Jp, a) - w2(Jm, Jp, am) + w2(Jp, I, bp * inv * a) + w2(J3, I, bp * inv * am * half);
      // (a J3 - a+ J+)^J- - b+/2 (J3 + 2a/a+ J-)^I
      d[Jm] = w2(J3, Jm, a) - w2(Jp, Jm, ap) - w2(J3, I, bp * half) - w2(Jm, I, bp * a * inv);
      break;
    }
    case Column::I_plus_nonstandard: {
      const Rational apr = pt.a_plus();
      const MultiPoly inv = apr.inverse();
      const MultiPoly inv2 = (apr * apr).inverse();
      e.r = half * (w2(J3, Jp, ap) + w2(J3, Jm, a * a * inv) - w2(J3, I, bp * a * inv) + w2(Jp, I, bp) -
                    w2(Jm, I, bp * a * a * inv2) - w2(Jp, Jm, 2 * a));
      // -a+ (J+ - a^2/a+^2 J-)^J3 + b+ (J+ + a^2/a+^2 J-)^I
      d[J3] = -(w2(Jp, J3, ap) - w2(Jm, J3, ap * a * a * inv2)) + w2(Jp, I, bp) + w2(Jm, I, bp * a * a * inv2);
      // a (J3 + a/a+ J-)^J+ + b+ a/a+ (J+ - a/(2a+) J3)^I
      d[Jp] = w2(J3, Jp, a) + w2(Jm, Jp, a * a * inv) + w2(Jp, I, bp * a * inv) - w2(J3, I, bp * a * a * inv2 * half);
      d[Jm] = w2(J3, Jm, a) - w2(Jp, Jm, ap) - w2(J3, I, bp * half) - w2(Jm, I, bp * a * inv);
      break;
    }
    case Column::II_standard:
      e.r = -(w2(J3, I, half * b)) - w2(Jp, Jm, a);
      d[Jp] = -w2(Jp, J3, a) + w2(Jp, I, b);
      d[Jm] = -w2(Jm, J3, a) - w2(Jm, I, b);
      break;
    case Column::II_nonstandard:
      e.r = -half * (w2(J3, I, b) - w2(Jp, I, bp) + w2(Jm, I, bm));
      d[J3] = w2(Jp, I, bp) + w2(Jm, I, bm);
      d[Jp] = -(w2(J3, I, half * bm) - w2(Jp, I, b));
      d[Jm] = -(w2(J3, I, half * bp) + w2(Jm, I, b));
      break;
  }
  return e;
}

// ---- Poisson-Lie brackets on GL(2) ----

inline MultiPoly var(Sym s) { return MultiPoly::variable(s); }

/// The six coordinate brackets for the generic r-matrix, keyed "x,y" with
/// coordinates named t3, t+, t-, t.
inline std::map<std::string, ExpCoordExpr> coordinate_brackets() {
  const MultiPoly ap = var(Sym::a_plus), am = var(Sym::a_minus), bp = var(Sym::b_plus), bm = var(Sym::b_minus),
                  a = var(Sym::a), b = var(Sym::b), half = Rational(1, 2);
  const ExpCoordExpr tp = ExpCoordExpr::theta_plus(), tm = ExpCoordExpr::theta_minus();
  const ExpCoordExpr one(MultiPoly(1));
  const ExpCoordExpr e = ExpCoordExpr::exp_minus_2theta3();
  auto c = [](const MultiPoly& p) { return ExpCoordExpr(p); };
  std::map<std::string, ExpCoordExpr> out;
  out["t+,t3"] = c(-a) * tp + c(am * half) * tp * tp - c(ap * half) * (one - e);
  out["t-,t3"] = c(-a) * tm + c(ap * half) * tm * tm - c(am * half) * (one - e);
  out["t+,t-"] = (c(am) * tp - c(ap) * tm) * e;
  out["t+,t"] = c(b) * tp + c(bm * half) * tp * tp + c(bp * half) * (one - e);
  out["t-,t"] = c(-b) * tm + c(bp * half) * tm * tm + c(bm * half) * (one - e);
  out["t3,t"] = -c(half) * (c(bp) * tm + c(bm) * tp);
  return out;
}

/// Group matrix entries written out from the product of one-parameter subgroups.
inline std::array<ExpCoordExpr, 4> matrix_entries() {
  const ExpCoordExpr v = ExpCoordExpr::v(), w = ExpCoordExpr::w();
  const ExpCoordExpr tp = ExpCoordExpr::theta_plus(), tm = ExpCoordExpr::theta_minus();
  return {v, v * tp, v * tm, v * tm * tp + w};
}

/// The six quadratic brackets among the entries A, B, C, D, keyed "X,Y".
inline std::map<std::string, ExpCoordExpr> quadratic_brackets() {
  const auto [A, B, C, D] = matrix_entries();
  const MultiPoly ap = var(Sym::a_plus), am = var(Sym::a_minus), bp = var(Sym::b_plus), bm = var(Sym::b_minus),
                  a = var(Sym::a), b = var(Sym::b), half = Rational(1, 2);
  auto c = [](const MultiPoly& p) { return ExpCoordExpr(p); };
  const ExpCoordExpr pp = c(half * (ap + bp)), pm = c(half * (ap - bp)), mp = c(half * (am + bm)), mm = c(half * (am - bm));
  const ExpCoordExpr q = B * C - A * D;
  std::map<std::string, ExpCoordExpr> out;
  out["A,C"] = c(a + b) * A * C - pp * C * C + mm * (A * A + q);
  out["A,B"] = c(a - b) * A * B - mp * B * B + pm * (A * A + q);
  out["B,D"] = c(a + b) * B * D - pp * (D * D + q) + mm * B * B;
  out["C,D"] = c(a - b) * C * D + pm * C * C - mp * (D * D + q);
  out["A,D"] = c(2 * a) * B * C - pp * C * D + pm * A * C - mp * B * D + mm * A * B;
  out["B,C"] = c(2 * b) * B * C - pp * C * D - pm * A * C + mp * B * D + mm * A * B;
  return out;
}

// ---- oscillator bialgebras ----

struct OscillatorBialgebra {
  Tensor r{2};
  bialg::Cocommutator delta;
};

inline OscillatorBialgebra oscillator_bialgebra(Column column) {
  using namespace lie::h4;
  const MultiPoly alpha = var(Sym::alpha_plus), theta = var(Sym::vartheta), beta_m = var(Sym::beta_minus),
                  beta_p = var(Sym::beta_plus), xi = var(Sym::xi);
  OscillatorBialgebra e;
  e.delta.algebra = lie::AlgebraName::h4;
  auto& d = e.delta.image;
  switch (column) {
    case Column::I_plus_standard:
    case Column::I_plus_nonstandard: {
      const MultiPoly coeff =
          column == Column::I_plus_standard ? beta_m : theta * theta * alpha.unit_inverse().value();
      e.r = w2(N, Ap, alpha) + w2(N, M, theta) - w2(Ap, Am, theta) + w2(Am, M, coeff);
      d[N] = w2(N, Ap, alpha) - w2(Am, M, coeff);
      d[Am] = w2(N, M, alpha) - w2(Ap, Am, alpha) + w2(Am, M, 2 * theta);
      break;
    }
    case Column::II_standard:
      e.r = w2(N, M, theta) + w2(Ap, Am, xi);
      d[Ap] = -w2(Ap, M, theta + xi);
      d[Am] = w2(Am, M, theta - xi);
      break;
    case Column::II_nonstandard:
      e.r = w2(N, M, theta) + w2(Ap, M, beta_p) + w2(Am, M, beta_m);
      d[N] = w2(Ap, M, beta_p) - w2(Am, M, beta_m);
      d[Ap] = -w2(Ap, M, theta);
      d[Am] = w2(Am, M, theta);
      break;
  }
  return e;
}

// ---- spin chains ----

/// Dense operator acting as `local` on `site` of an n-site chain of spins 1/2.
inline quantum::CMatrix site_operator(const quantum::CMatrix& local, int site, int sites) {
  quantum::CMatrix out = quantum::CMatrix::Identity(1, 1);
  for (int s = 0; s < sites; ++s) {
    const quantum::CMatrix factor = s == site ? local : quantum::CMatrix::Identity(2, 2);
    quantum::CMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = out(i, j) * factor;
    }
    out = next;
  }
  return out;
}

/// Open-chain Hamiltonian written directly as a sum of Pauli products per bond.
inline quantum::CMatrix pauli_chain(int bonds, double b, double b_plus) {
  using quantum::CMatrix;
  const int n = bonds + 1;
  CMatrix s3(2, 2), sp(2, 2), sm(2, 2);
  s3 << 1, 0, 0, -1;
  sp << 0, 1, 0, 0;
  sm << 0, 0, 1, 0;
  const double up = b == 0.0 ? 1.0 : std::expm1(b) / b;
  const double down = b == 0.0 ? -1.0 : std::expm1(-b) / b;
  const double half_sinh = b == 0.0 ? 0.5 : std::sinh(b / 2) / b;
  const double bend = -2.0 * half_sinh * half_sinh;  // (1 - cosh b) / b^2 without cancellation
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix h = 6.0 * bonds * CMatrix::Identity(dim, dim);
  for (int i = 0; i + 1 < n; ++i) {
    auto at = [&](const CMatrix& x, int site) { return site_operator(x, site, n); };
    h += 2.0 * (at(s3, i) * at(s3, i + 1) + 2.0 * std::exp(-b) * at(sm, i) * at(sp, i + 1) +
                2.0 * std::exp(b) * at(sp, i) * at(sm, i + 1));
    h += 2.0 * b_plus * (up * at(sp, i) * at(s3, i + 1) + down * at(s3, i) * at(sp, i + 1));
    h += 2.0 * b_plus * b_plus * bend * at(sp, i) * at(sp, i + 1);
  }
  return h;
}

}  // namespace gl2q::testing
