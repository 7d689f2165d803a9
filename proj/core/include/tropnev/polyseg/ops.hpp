#pragma once

#include <optional>
#include <vector>

#include "tropnev/polyseg/piecewise.hpp"

namespace tropnev::polyseg {

// f^(j)(x^side)/j! for j = 0..max_order.
std::vector<ExactValue> evaluate_jet(const PiecewiseFunction& f, const RealScalar& x, Side side, int max_order);

// a*f + b*g.
PiecewiseFunction linear_combine(const PiecewiseFunction& f, const PiecewiseFunction& g, const Rational& a,
                                 const Rational& b);

// Tropical operations: f (+) g = max, f (x) g = f + g, f (/) g = f - g.
PiecewiseFunction tropical_plus(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction tropical_times(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction tropical_divide(const PiecewiseFunction& f, const PiecewiseFunction& g);
// 1_0 (/) f = -f.
PiecewiseFunction tropical_inverse(const PiecewiseFunction& f);
PiecewiseFunction tropical_min(const PiecewiseFunction& f, const PiecewiseFunction& g);

PiecewiseFunction scale(const PiecewiseFunction& f, const Rational& c);
PiecewiseFunction add_constant(const PiecewiseFunction& f, const Rational& c);

// x -> f(x + c).
PiecewiseFunction shift(const PiecewiseFunction& f, const Rational& c);
// x -> f(-x).
PiecewiseFunction reflect(const PiecewiseFunction& f);
// Pointwise f(x)^k, k >= 1.
PiecewiseFunction power(const PiecewiseFunction& f, int k);
// Pointwise product f*g.
PiecewiseFunction multiply(const PiecewiseFunction& f, const PiecewiseFunction& g);

// Element of R_max: a rational or -inf.
using MaxPlusValue = std::optional<Rational>;

struct TropicalProductFactor {
  std::vector<MaxPlusValue> numerator;    // A_k0..A_kp: max_i {i X + A_ki}
  std::vector<MaxPlusValue> denominator;  // B_k0..B_kq: max_j {j X + B_kj}
};

struct TropicalProductSpec {
  std::vector<TropicalProductFactor> factors;
};

// Upper envelope max_i {i x + c_i} over the finite entries.
PiecewiseFunction max_affine(const std::vector<MaxPlusValue>& coefficients);

// prod_k (max_i{iX + A_ki} - max_j{jX + B_kj}); throws AllNegInfinity.
PiecewiseFunction from_tropical_product(const TropicalProductSpec& spec);

// Breakpoints of both functions merged, ascending, without duplicates.
std::vector<RealScalar> merge_breakpoints(const std::vector<RealScalar>& a, const std::vector<RealScalar>& b);

// Pieces of f governing [lo, hi]; breakpoints outside (lo, hi) are dropped and
// the outer pieces extended as tails.
PiecewiseFunction restrict_to(const PiecewiseFunction& f, const RealScalar& lo, const RealScalar& hi);

}  // namespace tropnev::polyseg
