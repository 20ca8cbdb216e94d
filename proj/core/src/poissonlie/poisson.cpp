#include "gl2q/poissonlie/poisson.hpp"

#include <stdexcept>

namespace gl2q::poisson {

namespace {

using lie::gl2::I;
using lie::gl2::J3;
using lie::gl2::Jm;
using lie::gl2::Jp;

constexpr int kT3 = static_cast<int>(Coord::theta3);
constexpr int kTp = static_cast<int>(Coord::theta_plus);
constexpr int kTm = static_cast<int>(Coord::theta_minus);
constexpr int kT = static_cast<int>(Coord::theta);

ExpCoordExpr one() { return ExpCoordExpr(MultiPoly(1)); }

VectorField field(std::initializer_list<std::pair<int, ExpCoordExpr>> parts) {
  VectorField f;
  for (const auto& [k, e] : parts) f.component[k] += e;
  return f;
}

/// X(x_a) for the chart coordinate x_a is the a-th component.
ExpCoordExpr sklyanin_pair(const lie::Tensor& r, const InvariantFields& fields, int a, int b) {
  ExpCoordExpr out;
  for (const auto& [ij, c] : r.terms()) {
    const auto& li = fields.left[ij[0]].component;
    const auto& lj = fields.left[ij[1]].component;
    const auto& ri = fields.right[ij[0]].component;
    const auto& rj = fields.right[ij[1]].component;
    out += ExpCoordExpr(c) * (li[a] * lj[b] - ri[a] * rj[b]);
  }
  return out;
}

}  // namespace

ExpCoordExpr VectorField::apply(const ExpCoordExpr& f) const {
  ExpCoordExpr out;
  for (int k = 0; k < kCoords; ++k) {
    if (!component[k].is_zero()) out += component[k] * f.derive(static_cast<Coord>(k));
  }
  return out;
}

bool VectorField::is_zero() const {
  for (const auto& c : component) {
    if (!c.is_zero()) return false;
  }
  return true;
}

VectorField commutator(const VectorField& x, const VectorField& y) {
  VectorField out;
  for (int k = 0; k < kCoords; ++k) out.component[k] = x.apply(y.component[k]) - y.apply(x.component[k]);
  return out;
}

const InvariantFields& invariant_fields() {
  static const InvariantFields fields = [] {
    const auto tp = ExpCoordExpr::theta_plus();
    const auto tm = ExpCoordExpr::theta_minus();
    const auto e = ExpCoordExpr::exp_minus_2theta3();
    const MultiPoly two(2);
    InvariantFields f;
    f.left[J3] = field({{kT3, one()}, {kTp, -(ExpCoordExpr(two) * tp)}});
    f.left[Jp] = field({{kTp, one()}});
    f.left[Jm] = field({{kT3, tp}, {kTp, -(tp * tp)}, {kTm, e}});
    f.left[I] = field({{kT, one()}});
    f.right[J3] = field({{kT3, one()}, {kTm, -(ExpCoordExpr(two) * tm)}});
    f.right[Jp] = field({{kT3, tm}, {kTm, -(tm * tm)}, {kTp, e}});
    f.right[Jm] = field({{kTm, one()}});
    f.right[I] = field({{kT, one()}});
    return f;
  }();
  return fields;
}

std::string_view PoissonTable::label(Chart chart, int i) {
  static constexpr std::string_view coords[] = {"theta3", "theta+", "theta-", "theta"};
  static constexpr std::string_view entries[] = {"A", "B", "C", "D"};
  return chart == Chart::coordinates ? coords[i] : entries[i];
}

bool PoissonTable::is_antisymmetric() const {
  for (int i = 0; i < kCoords; ++i) {
    for (int j = 0; j < kCoords; ++j) {
      if (!(bracket[i][j] == -bracket[j][i])) return false;
    }
  }
  return true;
}

bool PoissonTable::is_zero() const {
  for (const auto& row : bracket) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

PoissonTable sklyanin_table(const lie::Tensor& r) {
  if (r.degree() != 2) throw std::invalid_argument("sklyanin_table: r must have degree 2");
  const auto& fields = invariant_fields();
  PoissonTable t;
  t.chart = Chart::coordinates;
  for (int a = 0; a < kCoords; ++a) {
    for (int b = 0; b < kCoords; ++b) t.bracket[a][b] = sklyanin_pair(r, fields, a, b);
  }
  return t;
}

ExpCoordExpr coordinate_bracket(const PoissonTable& coords, int a, const ExpCoordExpr& f) {
  if (coords.chart != Chart::coordinates) throw std::invalid_argument("coordinate_bracket needs a coordinate table");
  ExpCoordExpr out;
  for (int d = 0; d < kCoords; ++d) {
    if (!coords.bracket[a][d].is_zero()) out += coords.bracket[a][d] * f.derive(static_cast<Coord>(d));
  }
  return out;
}

ExpCoordExpr poisson_bracket(const PoissonTable& coords, const ExpCoordExpr& f, const ExpCoordExpr& g) {
  if (coords.chart != Chart::coordinates) throw std::invalid_argument("poisson_bracket needs a coordinate table");
  ExpCoordExpr out;
  for (int a = 0; a < kCoords; ++a) {
    const ExpCoordExpr fa = f.derive(static_cast<Coord>(a));
    if (fa.is_zero()) continue;
    out += fa * coordinate_bracket(coords, a, g);
  }
  return out;
}

JacobiReport poisson_jacobi(const PoissonTable& coords) {
  JacobiReport report;
  std::vector<MultiPoly> all;
  for (int a = 0; a < kCoords; ++a) {
    for (int b = a + 1; b < kCoords; ++b) {
      for (int c = b + 1; c < kCoords; ++c) {
        ExpCoordExpr sum = coordinate_bracket(coords, a, coords.bracket[b][c]) +
                           coordinate_bracket(coords, b, coords.bracket[c][a]) +
                           coordinate_bracket(coords, c, coords.bracket[a][b]);
        for (const auto& p : sum.coefficients()) all.push_back(p);
        report.cyclic_sums.push_back({{a, b, c}, std::move(sum)});
      }
    }
  }
  report.obstructions = sym::dedupe_up_to_scalars(all);
  return report;
}

std::array<ExpCoordExpr, 4> group_entries() {
  const auto v = ExpCoordExpr::v();
  const auto tp = ExpCoordExpr::theta_plus();
  const auto tm = ExpCoordExpr::theta_minus();
  return {v, v * tp, v * tm, v * tp * tm + ExpCoordExpr::w()};
}

PoissonTable entry_brackets(const PoissonTable& coords) {
  const auto entries = group_entries();
  PoissonTable t;
  t.chart = Chart::entries;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) t.bracket[i][j] = poisson_bracket(coords, entries[i], entries[j]);
  }
  return t;
}

std::variant<KupershmidtParams, NotEmbeddable> kupershmidt_map(const bialg::ParamPoint& pt) {
  if (pt.a_minus() != pt.b_minus()) return NotEmbeddable{pt.a_minus(), pt.b_minus()};
  const sym::Rational half(1, 2);
  return KupershmidtParams{pt.a() + pt.b(), -(pt.a_plus() + pt.b_plus()) * half, pt.b_plus() - pt.a_plus(),
                           pt.b() - pt.a(), sym::Rational(2) * pt.a_minus()};
}

}  // namespace gl2q::poisson
