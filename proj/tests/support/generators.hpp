#pragma once

#include <cstdint>
#include <random>

#include "gl2q/bialgebra/param_point.hpp"
#include "gl2q/symbolics/rational.hpp"

namespace gl2q::testing {

using sym::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20240901) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  /// p/q with |p| <= 9, 1 <= q <= 7.
  Rational rational() { return Rational(integer(-9, 9), integer(1, 7)); }
  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }
  /// Uniform in [-1, 1] avoiding a small neighbourhood of zero.
  double nonzero_real(double gap = 0.05) {
    for (;;) {
      const double x = real(-1.0, 1.0);
      if (std::abs(x) > gap) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Column { I_plus_standard, I_plus_nonstandard, II_standard, II_nonstandard };

/// Random exact point of a bialgebra family, drawn from its free parameters.
inline bialg::ParamPoint random_point(Rng& rng, Column column) {
  using bialg::ParamPoint;
  switch (column) {
    case Column::I_plus_standard:
      for (;;) {
        const Rational ap = rng.nonzero_rational(), am = rng.rational(), bp = rng.rational(), a = rng.rational();
        if ((a * a + ap * am).is_zero()) continue;
        return ParamPoint(ap, am, bp, -(am * bp) / ap, a, bp * a / ap);
      }
    case Column::I_plus_nonstandard: {
      const Rational ap = rng.nonzero_rational(), bp = rng.rational(), a = rng.rational();
      return ParamPoint(ap, -(a * a) / ap, bp, bp * a * a / (ap * ap), a, bp * a / ap);
    }
    case Column::II_standard:
      return ParamPoint(0, 0, 0, 0, rng.nonzero_rational(), rng.rational());
    case Column::II_nonstandard:
      return ParamPoint(0, 0, rng.rational(), rng.rational(), 0, rng.rational());
  }
  return {};
}

}  // namespace gl2q::testing
