#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropnev/polyseg/piecewise.hpp"

namespace tropnev::sampling {

using numeric::Polynomial;
using numeric::Rational;
using polyseg::PiecewiseFunction;

// Seeded generator of small exact test objects. Draws use only mt19937_64
// output and integer arithmetic, so a seed reproduces on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);  // inclusive
  bool coin(int numerator = 1, int denominator = 2);
  // num/den with |num| <= magnitude*den, den in 1..max_den.
  Rational rational(std::int64_t magnitude, std::int64_t max_den = 4);
  Rational rational_in(const Rational& lo, const Rational& hi, std::int64_t max_den = 8);
  Polynomial polynomial(int degree, std::int64_t magnitude = 5);
  // `count` distinct sorted rationals in [-width, width].
  std::vector<Rational> breakpoints(int count, std::int64_t width, std::int64_t max_den = 4);

  // Continuous piecewise polynomial: random jumps in the Taylor coefficients.
  PiecewiseFunction piecewise(int degree, int breakpoint_count, std::int64_t width = 4);
  // Tropical entire: every jump omega^(j) >= 0, including even orders at 0.
  PiecewiseFunction entire(int degree, int breakpoint_count, std::int64_t width = 4);
  // No roots and no poles: c + odd(x) + sgn(x)-mirrored even part.
  PiecewiseFunction nowhere_vanishing(int degree);
  // Segment minus constant is parity-pure with one-signed coefficients.
  PiecewiseFunction well_defined(int degree, int breakpoint_count, std::int64_t width = 4);
  // Convex piecewise-linear function with `roots` breakpoints.
  PiecewiseFunction convex_linear(int roots, std::int64_t width = 6);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tropnev::sampling
