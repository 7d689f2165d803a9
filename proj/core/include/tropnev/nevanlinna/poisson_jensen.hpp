#pragma once

#include <vector>

#include "tropnev/nevanlinna/functionals.hpp"

namespace tropnev::nevanlinna {

// B_k(r, x) = ((r + x)^k + (r - x)^k) / 2 and D_k(r, x) = ((r + x)^k - (r - x)^k) / 2.
Rational B(int k, const Rational& r, const Rational& x);
Rational D(int k, const Rational& r, const Rational& x);
// E(r, x, y) = r^2 - |x - y| r - x y.
ExactValue E(const Rational& r, const Rational& x, const RealScalar& y);

// The nine-part split of (-r, r) relative to x; values 1..9.
enum class Region { F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9 };
Region classify_region(const RealScalar& y, const Rational& x);
std::string to_string(Region region);

struct PoissonJensenTerm {
  RealScalar point;
  Region region = Region::F1;
  int order = 0;
  ExactValue omega;
  ExactValue Omega;  // from the sgn((y - x)^{+-}) definition
  ExactValue Gamma;
  bool decomposition_agrees = true;  // omega plus left-jet split reproduces Omega and Gamma
  Interval b_term;                   // signed contribution to omega_b_sum
  Interval d_term;                   // signed contribution to gamma_d_sum
};

// Every block is stored with the sign it carries in the reconstruction, so
// reconstructed = sum of the six blocks.
struct PoissonJensenReport {
  Rational x;
  Rational r;
  int n = 1;
  Interval boundary_mean;
  Interval slope_term;
  Interval omega_b_sum;
  Interval gamma_d_sum;
  Interval left_correction;
  Interval zero_correction;
  Interval reconstructed;
  Interval reference;
  Interval residual;
  std::vector<PoissonJensenTerm> terms;
  bool decomposition_agrees = true;

  bool passes() const { return residual.contains(Rational(0)); }
};

PoissonJensenReport poisson_jensen(const PiecewiseFunction& f, const Rational& x, const Rational& r);

enum class Lemma31Side { RightToR, LeftToMinusR };

// Jet-plus-jumps expansion of f(r) - f(x) (right) or f(x) - f(-r) (left).
Interval lemma31_sum(const PiecewiseFunction& f, const Rational& x, const Rational& r, Lemma31Side side);

// f(delta r + c) - f(delta r), delta = +1 or -1.
Rational log_difference(const PiecewiseFunction& f, const Rational& c, int delta, const Rational& r);

struct Lemma44Report {
  Rational lhs_plus;   // |f(r + c) - f(r)|
  Rational lhs_minus;  // |f(-r + c) - f(-r)|
  Interval characteristic;  // T(alpha (r + |c|))
  Interval rhs;
  bool holds = false;  // both sides certified below rhs.lo
};

// `offset` encloses an unknown constant g - f, when the analyzed function g is
// only known up to a constant (a truncated hyperexp tail, say). Throws ZeroShift,
// NotWellDefined, RadiusBelowThreshold.
Lemma44Report lemma44_check(const PiecewiseFunction& f, const Rational& c, const Rational& alpha, const Rational& r,
                            const Interval& offset = Interval(Rational(0)));

// Smallest integer window half-width covering alpha (r + |c|) with one unit of slack.
long lemma44_window(const Rational& c, const Rational& alpha, const Rational& r);

}  // namespace tropnev::nevanlinna
