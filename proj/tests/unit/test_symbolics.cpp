#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "gl2q/symbolics/expcoord.hpp"
#include "gl2q/symbolics/laurent.hpp"
#include "gl2q/symbolics/multipoly.hpp"
#include "gl2q/symbolics/rational.hpp"

using namespace gl2q::sym;
using gl2q::testing::Rng;

namespace {

MultiPoly random_poly(Rng& rng) {
  const std::array<Sym, 4> syms{Sym::a_plus, Sym::a, Sym::b, Sym::b_plus};
  MultiPoly p;
  const int terms = rng.integer(0, 4);
  for (int t = 0; t < terms; ++t) {
    MultiPoly m = rng.rational();
    for (Sym s : syms) m *= MultiPoly::variable(s, rng.integer(0, 2));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK(Rational(2, 6).to_string() == "1/3");
}

TEST_CASE("rational field axioms on random draws") {
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    const Rational x = rng.rational(), y = rng.rational(), z = rng.nonzero_rational();
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x / z * z == x);
    CHECK(z * z.inverse() == Rational(1));
    CHECK(Rational::parse(x.to_string()) == x);
  }
}

TEST_CASE("multipoly ring laws and text round trip") {
  Rng rng;
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK(MultiPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("multipoly evaluation is a ring homomorphism") {
  Rng rng;
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = random_poly(rng), q = random_poly(rng);
    Assignment at;
    at.set(Sym::a_plus, rng.rational()).set(Sym::a, rng.rational()).set(Sym::b, rng.rational());
    at.set(Sym::b_plus, rng.rational());
    CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
    CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
  }
}

TEST_CASE("laurent monomials invert and evaluation errors surface") {
  const MultiPoly x = MultiPoly::variable(Sym::a_plus);
  CHECK(x * *x.unit_inverse() == MultiPoly(1));
  CHECK_FALSE((x + 1).unit_inverse().has_value());
  Assignment zero;
  zero.set(Sym::a_plus, Rational(0));
  CHECK_THROWS_AS(x.pow(-1).evaluate(zero), std::domain_error);
  CHECK_THROWS_AS(x.evaluate(Assignment{}), std::invalid_argument);
}

TEST_CASE("span membership and scalar-multiple comparison") {
  const MultiPoly p = MultiPoly::parse("a+*b - b+*a");
  const MultiPoly q = MultiPoly::parse("a-*b + b-*a");
  auto k = express_in_span(Rational(3) * p - Rational(1, 2) * q, {p, q});
  REQUIRE(k.has_value());
  CHECK((*k)[0] == Rational(3));
  CHECK((*k)[1] == Rational(-1, 2));
  CHECK_FALSE(express_in_span(MultiPoly::parse("a*b"), {p, q}).has_value());
  CHECK(same_up_to_scalars({p, q}, {Rational(-2) * q, Rational(5) * p}));
  CHECK_FALSE(same_up_to_scalars({p}, {q}));
}

TEST_CASE("epsilon series: limits and divergence") {
  const LaurentPoly eps = LaurentPoly::monomial(1);
  const LaurentPoly x = LaurentPoly::monomial(-2, MultiPoly(3)) + LaurentPoly(MultiPoly(5));
  CHECK(std::holds_alternative<DivergenceReport>(laurent_limit(x)));
  CHECK(std::get<DivergenceReport>(laurent_limit(x)).worst_degree() == -2);
  const auto lim = laurent_limit(x * eps * eps);
  REQUIRE(std::holds_alternative<MultiPoly>(lim));
  CHECK(std::get<MultiPoly>(lim) == MultiPoly(3));
  CHECK(eps.pow(-3) * eps.pow(3) == LaurentPoly(MultiPoly(1)));
}

TEST_CASE("exponential-coordinate ring: derivatives and evaluation") {
  const ExpCoordExpr v = ExpCoordExpr::v(), w = ExpCoordExpr::w(), tp = ExpCoordExpr::theta_plus();
  // v = e^(theta + theta3), w = e^(theta - theta3)
  CHECK(v.derive(Coord::theta3) == v);
  CHECK(w.derive(Coord::theta3) == -w);
  CHECK(v.derive(Coord::theta) == v);
  CHECK((tp * tp).derive(Coord::theta_plus) == ExpCoordExpr(MultiPoly(2)) * tp);
  const ExpCoordExpr e = ExpCoordExpr::exp_minus_2theta3();
  Assignment none;
  CHECK(e.evaluate(0.3, 0.0, 0.0, 0.7, none) == doctest::Approx(std::exp(-0.6)));
  CHECK((v * ExpCoordExpr::v(-1)) == ExpCoordExpr(MultiPoly(1)));
  Rng rng;
  for (int i = 0; i < 50; ++i) {
    const double t3 = rng.real(-1, 1), t = rng.real(-1, 1), p = rng.real(-1, 1), m = rng.real(-1, 1);
    const ExpCoordExpr f = v * tp + w * ExpCoordExpr::theta_minus(2);
    const double direct = std::exp(t + t3) * p + std::exp(t - t3) * m * m;
    CHECK(f.evaluate(t3, p, m, t, none) == doctest::Approx(direct).epsilon(1e-12));
  }
}
