#include "doctest.h"
#include "generators.hpp"
#include "gl2q/bialgebra/classify.hpp"
#include "gl2q/bialgebra/cocommutator.hpp"
#include "gl2q/bialgebra/rmatrix.hpp"
#include "oracles.hpp"

using namespace gl2q;
using namespace gl2q::bialg;
using gl2q::testing::Column;
using sym::MultiPoly;

namespace {

constexpr std::array<Column, 4> kColumns{Column::I_plus_standard, Column::I_plus_nonstandard, Column::II_standard,
                                         Column::II_nonstandard};

// The three co-Jacobi obstructions, typed in directly.
std::vector<MultiPoly> expected_constraints() {
  return {MultiPoly::parse("a+*b - b+*a"), MultiPoly::parse("a+*b- + a-*b+"), MultiPoly::parse("a-*b + b-*a")};
}

Tensor triple(const Rational& c) { return Tensor::from_wedge(3, {{{0, 1, 2}, MultiPoly(c)}}); }

// Point with the six parameters drawn independently, rejected until a constraint fails.
ParamPoint off_family_point(testing::Rng& rng) {
  for (;;) {
    ParamPoint pt(rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational());
    const auto at = pt.assignment();
    for (const auto& c : expected_constraints()) {
      if (!c.evaluate(at).is_zero()) return pt;
    }
  }
}

}  // namespace

TEST_CASE("co-Jacobi constraints of the generic cocommutator") {
  const auto found = cojacobi_constraints(generic_cocommutator());
  CHECK(same_up_to_scalars(found, expected_constraints()));
  CHECK(same_up_to_scalars(jacobi_constraint_polys(), expected_constraints()));
}

TEST_CASE("mCYBE conditions in c coordinates map onto the co-Jacobi constraints") {
  std::vector<MultiPoly> mapped;
  for (const auto& p : mcybe_conditions(LieAlgebra::gl2(), c_coordinate_r())) mapped.push_back(c_to_params(p));
  CHECK(same_up_to_scalars(mapped, expected_constraints()));
  for (const auto& [s, p] : params_in_c()) CHECK(c_to_params(p) == MultiPoly::variable(s));
}

TEST_CASE("generic r is a coboundary for the generic cocommutator") {
  CHECK(coboundary_delta(LieAlgebra::gl2(), generic_r()) == generic_cocommutator());
  CHECK(generic_r().is_antisymmetric());
  CHECK(generic_cocommutator().is_antisymmetric());
  CHECK(cocycle_check(generic_cocommutator()).holds);
}

TEST_CASE("family r-matrices, cocommutators and Schouten brackets at random exact points") {
  testing::Rng rng;
  for (Column col : kColumns) {
    for (int k = 0; k < 20; ++k) {
      const ParamPoint pt = testing::random_point(rng, col);
      const auto oracle = testing::gl2_family_bialgebra(col, pt);
      const Tensor r = r_at(pt);
      CHECK(r == oracle.r);
      CHECK(coboundary_delta(LieAlgebra::gl2(), r) == oracle.delta);
      CHECK(cocommutator_at(pt) == oracle.delta);
      CHECK(schouten(LieAlgebra::gl2(), r) == triple(pt.discriminant()));
      CHECK(cojacobi_constraints(cocommutator_at(pt)).empty());
    }
  }
}

TEST_CASE("Schouten bracket is ad-invariant for bialgebra points") {
  testing::Rng rng;
  for (Column col : kColumns) {
    const ParamPoint pt = testing::random_point(rng, col);
    const Tensor s = schouten(LieAlgebra::gl2(), r_at(pt));
    for (int i = 0; i < lie::kDim; ++i) CHECK(lie::ad_action(LieAlgebra::gl2(), i, s).is_zero());
  }
}

TEST_CASE("off-family points break co-Jacobi") {
  testing::Rng rng;
  for (int k = 0; k < 20; ++k) {
    const ParamPoint pt = off_family_point(rng);
    CHECK_FALSE(cojacobi_constraints(cocommutator_at(pt)).empty());
    CHECK(std::holds_alternative<NotABialgebra>(classify(pt)));
  }
}

TEST_CASE("classification") {
  const auto tag = classify(ParamPoint(1, 1, 2, -2, 1, 2));
  REQUIRE(std::holds_alternative<FamilyTag>(tag));
  CHECK(std::get<FamilyTag>(tag).family == Family::I_plus);
  CHECK(std::get<FamilyTag>(tag).standard);

  testing::Rng rng;
  for (int k = 0; k < 20; ++k) {
    auto check = [](const ParamPoint& pt, Family f, bool standard) {
      const auto t = classify(pt);
      REQUIRE(std::holds_alternative<FamilyTag>(t));
      CHECK(std::get<FamilyTag>(t).family == f);
      CHECK(std::get<FamilyTag>(t).standard == standard);
    };
    check(testing::random_point(rng, Column::I_plus_standard), Family::I_plus, true);
    check(testing::random_point(rng, Column::I_plus_nonstandard), Family::I_plus, false);
    check(testing::random_point(rng, Column::II_standard), Family::II, true);
    const ParamPoint nonstd = testing::random_point(rng, Column::II_nonstandard);
    check(nonstd, Family::II, false);
  }
  CHECK(std::get<NotABialgebra>(classify(ParamPoint(1, 0, 0, 0, 0, 1))).violated.size() >= 1);
}

TEST_CASE("automorphism carries I- points to I+ form") {
  testing::Rng rng;
  for (Column col : {Column::I_plus_standard, Column::I_plus_nonstandard}) {
    for (int k = 0; k < 10; ++k) {
      const ParamPoint plus = testing::random_point(rng, col);
      const ParamPoint minus = apply_automorphism(plus);
      CHECK(apply_automorphism(minus) == plus);
      CHECK(apply_automorphism(cocommutator_at(plus)) == cocommutator_at(minus));
      CHECK(apply_automorphism(r_at(plus)) == r_at(minus));
      const auto t = classify(minus);
      REQUIRE(std::holds_alternative<FamilyTag>(t));
      if (minus.a_plus().is_zero()) {
        CHECK(std::get<FamilyTag>(t).family == Family::I_minus);
        CHECK(std::get<FamilyTag>(t).equivalent_to_I_plus);
      }
    }
  }
  for (int k = 0; k < 10; ++k) {
    const Rational ap = rng.nonzero_rational(), bp = rng.rational(), a = rng.rational();
    const ParamPoint minus = apply_automorphism(ParamPoint(ap, 0, bp, 0, a, bp * a / ap));
    const auto t = classify(minus);
    REQUIRE(std::holds_alternative<FamilyTag>(t));
    CHECK(std::get<FamilyTag>(t).family == Family::I_minus);
    CHECK(std::get<FamilyTag>(t).equivalent_to_I_plus);
  }
}

TEST_CASE("the zero point is the trivial family II non-standard bialgebra") {
  const auto t = classify(ParamPoint());
  REQUIRE(std::holds_alternative<FamilyTag>(t));
  CHECK(std::get<FamilyTag>(t).family == Family::II);
  CHECK_FALSE(std::get<FamilyTag>(t).standard);
}
