#include "doctest.h"
#include "generators.hpp"
#include "gl2q/contraction/contraction.hpp"
#include "oracles.hpp"

using namespace gl2q;
using namespace gl2q::contract;
using gl2q::testing::Column;
using sym::LaurentPoly;
using sym::MultiPoly;
using sym::Sym;

namespace {

struct Expected {
  ContractionFamily family;
  Column column;
  std::vector<int> exponents;
  // parameter -> (epsilon degree, coefficient)
  std::map<Sym, std::pair<int, MultiPoly>> images;
};

MultiPoly var(Sym s) { return MultiPoly::variable(s); }

std::vector<Expected> expected_schemes() {
  const MultiPoly alpha = var(Sym::alpha_plus), theta = var(Sym::vartheta), beta_m = var(Sym::beta_minus),
                  beta_p = var(Sym::beta_plus), xi = var(Sym::xi);
  return {
      {ContractionFamily::I_plus_standard,
       Column::I_plus_standard,
       {1, 3, 1, 2},
       {{Sym::a_plus, {1, alpha}}, {Sym::a_minus, {3, -beta_m}}, {Sym::b_plus, {1, -alpha}}, {Sym::a, {2, theta}}}},
      {ContractionFamily::I_plus_nonstandard,
       Column::I_plus_nonstandard,
       {1, 1, 2},
       {{Sym::a_plus, {1, alpha}}, {Sym::b_plus, {1, -alpha}}, {Sym::a, {2, theta}}}},
      {ContractionFamily::II_standard, Column::II_standard, {2, 2}, {{Sym::a, {2, -xi}}, {Sym::b, {2, -theta}}}},
      {ContractionFamily::II_nonstandard,
       Column::II_nonstandard,
       {2, 3, 3},
       {{Sym::b_plus, {3, 2 * beta_p}}, {Sym::b_minus, {3, -2 * beta_m}}, {Sym::b, {2, -theta}}}},
  };
}

}  // namespace

TEST_CASE("family names round trip") {
  for (auto f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("III").has_value());
}

TEST_CASE("minimal convergent exponents and parameter maps") {
  for (const auto& e : expected_schemes()) {
    INFO(family_name(e.family));
    const auto scheme = scheme_for(e.family);
    CHECK(minimal_exponents(ContractedObject::r_matrix, scheme).minimal == e.exponents);
    CHECK(minimal_exponents(ContractedObject::cocommutator, scheme).minimal == e.exponents);
    const auto images = parameter_images(scheme, e.exponents);
    for (const auto& [s, image] : e.images) {
      REQUIRE(images.count(s) == 1);
      CHECK(images.at(s) == LaurentPoly::monomial(image.first, image.second));
    }
  }
}

TEST_CASE("lowering any exponent makes the r-matrix diverge") {
  for (const auto& e : expected_schemes()) {
    const auto scheme = scheme_for(e.family);
    const Tensor r = family_r(scheme);
    CHECK(tensor_limit(transform_r(r, scheme, e.exponents)).has_value());
    for (std::size_t k = 0; k < e.exponents.size(); ++k) {
      auto lowered = e.exponents;
      --lowered[k];
      INFO(family_name(e.family) << " exponent " << k);
      CHECK_FALSE(tensor_limit(transform_r(r, scheme, lowered)).has_value());
    }
  }
}

TEST_CASE("contracted bialgebras match the oscillator family list") {
  const auto& h = lie::LieAlgebra::h4();
  for (const auto& e : expected_schemes()) {
    INFO(family_name(e.family));
    const ContractedBialgebra c = contract::contract(e.family);
    const auto oracle = testing::oscillator_bialgebra(e.column);
    REQUIRE(c.r.has_value());
    CHECK(*c.r == oracle.r);
    CHECK(c.delta == oracle.delta);
    CHECK(c.exponents == e.exponents);
    CHECK(c.ledger.r_minimal == e.exponents);
    CHECK(c.ledger.delta_minimal == e.exponents);
    CHECK(bialg::coboundary_delta(h, *c.r) == c.delta);
    CHECK(bialg::cocycle_check(c.delta).holds);
    CHECK(bialg::cojacobi_constraints(c.delta).empty());
  }
}

TEST_CASE("beta+ enters the I+ contraction and is removed by a basis change") {
  const ContractedBialgebra with = contract::contract(ContractionFamily::I_plus_standard, true);
  REQUIRE(with.r.has_value());
  CHECK(with.r->coefficient({lie::h4::Ap, lie::h4::M}) == -var(Sym::beta_plus));
  const ContractedBialgebra normal = oscillator_normalize(with, Normalization::remove_beta_plus);
  const auto oracle = testing::oscillator_bialgebra(Column::I_plus_standard);
  CHECK(*normal.r == oracle.r);
  CHECK(normal.delta == oracle.delta);
}

TEST_CASE("standard II normalization") {
  const ContractedBialgebra raw = standard_II_with_betas();
  sym::Assignment zero_theta;
  zero_theta.set(Sym::vartheta, 0);
  const auto n = oscillator_normalize(raw, Normalization::standard_II, zero_theta);
  REQUIRE(n.r.has_value());
  CHECK(*n.r == var(Sym::xi) * lie::wedge(lie::h4::Ap, lie::h4::Am));
  sym::Assignment degenerate;
  degenerate.set(Sym::vartheta, 1).set(Sym::xi, 1);
  CHECK_THROWS(oscillator_normalize(raw, Normalization::standard_II, degenerate));
}

TEST_CASE("contracted cocycles specialize to h4 bialgebras at random values") {
  testing::Rng rng;
  const auto c = contract::contract(ContractionFamily::II_nonstandard);
  for (int k = 0; k < 10; ++k) {
    sym::Assignment at;
    at.set(Sym::vartheta, rng.rational()).set(Sym::beta_plus, rng.rational()).set(Sym::beta_minus, rng.rational());
    bialg::Cocommutator d = c.delta;
    for (auto& t : d.image) t = t.map_coefficients([&](const MultiPoly& p) { return p.partial_evaluate(at); });
    CHECK(bialg::cocycle_check(d).holds);
    CHECK(bialg::cojacobi_constraints(d).empty());
  }
}

TEST_CASE("epsilon rescaling is linear in the r-matrix") {
  testing::Rng rng;
  for (const auto& e : expected_schemes()) {
    const auto scheme = scheme_for(e.family);
    const Tensor r = family_r(scheme);
    for (int k = 0; k < 5; ++k) {
      Tensor other(2);
      other.add({rng.integer(0, 3), rng.integer(0, 3)}, MultiPoly(rng.nonzero_rational()));
      const auto lhs = transform_r(r + other, scheme, e.exponents);
      const auto rhs = transform_r(r, scheme, e.exponents) + transform_r(other, scheme, e.exponents);
      CHECK(lhs == rhs);
    }
  }
}
