#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropnev/nevanlinna/functionals.hpp"
#include "tropnev/polyseg/ops.hpp"

namespace tropnev::curves {

using nevanlinna::RadiusProfile;
using numeric::Interval;
using numeric::Rational;
using numeric::RealScalar;
using polyseg::MaxPlusValue;
using polyseg::PiecewiseFunction;

// Tuple f_0..f_m of tropical entire functions.
class TropicalCurve {
 public:
  // Throws NotEntireComponent, InvalidArgument for an empty tuple.
  explicit TropicalCurve(std::vector<PiecewiseFunction> components);

  const std::vector<PiecewiseFunction>& components() const { return components_; }
  const PiecewiseFunction& operator[](std::size_t i) const { return components_[i]; }
  std::size_t size() const { return components_.size(); }
  // max(1, largest degree bound)
  int order() const;
  // F = f_0 (+) ... (+) f_m
  const PiecewiseFunction& envelope() const { return envelope_; }

 private:
  std::vector<PiecewiseFunction> components_;
  PiecewiseFunction envelope_;
};

struct CommonRoot {
  RealScalar location;
  int order = 0;
};

struct ReducedCheck {
  bool reduced = true;
  std::optional<CommonRoot> witness;
};

// A curve is reduced when no (x, j) is a j-th root of every component.
ReducedCheck check_reduced(const TropicalCurve& curve);

// T_f(r) = (F(r) + F(-r))/2 - F(0).
Interval cartan(const TropicalCurve& curve, const RealScalar& r);
RadiusProfile cartan_profile(const TropicalCurve& curve, const Rational& r_max);

struct Monomial {
  std::vector<int> exponents;  // i_0..i_m
  MaxPlusValue coefficient;
};

struct TropicalPolynomialMap {
  std::vector<Monomial> monomials;

  // Common exponent sum; throws InvalidArgument when the map is not homogeneous.
  int degree() const;
  // alpha_k of x_k^d, or nullopt when absent or -inf.
  MaxPlusValue pure_power(std::size_t k) const;
};

// max over monomials of alpha_I + sum_k i_k f_k. Throws ArityMismatch, AllNegInfinity.
PiecewiseFunction compose_tropical(const TropicalPolynomialMap& p, const TropicalCurve& curve);

struct FermatForm {
  std::vector<Rational> weights;
  int power = 1;
};

// sum_i alpha_i f_i^n in ordinary arithmetic. Throws ArityMismatch, InvalidArgument.
PiecewiseFunction compose_fermat(const FermatForm& q, const TropicalCurve& curve);

inline constexpr std::size_t max_casoratian_components = 9;

// Max-plus permanent max_pi sum_i f_i(x + pi(i) step). Throws TooManyComponents.
PiecewiseFunction casoratian(const TropicalCurve& curve, const Rational& step = 1);

struct SmtRow {
  Rational r;
  Interval cartan;
  Interval roots;  // sum_j N^(j)(r, -P o f)
  Interval poles;  // sum_j N^(j)(r, P o f)
  Interval residual;
  bool pass = false;
};

struct SmtReport {
  int degree = 0;
  Rational beta;   // largest finite coefficient
  Rational gamma;  // smallest pure-power coefficient
  Rational composed_at_zero;
  Rational envelope_at_zero;
  Rational band_lo;
  Rational band_hi;
  bool reduced = true;
  PiecewiseFunction composed;
  std::vector<SmtRow> rows;

  bool passes() const;
};

// Residual (1/d)(N-difference) - T_f(r) against the band implied by
// gamma + d F <= P o f <= beta + d F. Enclosures must be narrower than 1e-12.
// Throws MissingPurePowers, NonPositiveRadius.
SmtReport smt_homogeneous_check(const TropicalPolynomialMap& p, const TropicalCurve& curve,
                                const std::vector<Rational>& grid);

struct FermatRow {
  Rational r;
  Interval cartan;
  Interval counting;             // sum_j N^(j)(r, -Q o f)
  std::optional<Interval> ratio;  // counting / T_f^n, absent when T_f(r) = 0
  double growth = 0;             // r / T_f(r)
};

struct FermatReport {
  Rational theta;
  Rational big_theta;
  int power = 1;
  PiecewiseFunction composed;
  std::vector<FermatRow> rows;
};

// Finite-r ratios only. Throws NonLinearComponents, InvalidArgument.
FermatReport fermat_bounds(const FermatForm& q, const TropicalCurve& curve, const std::vector<Rational>& grid);

struct BalanceRow {
  Rational r;
  Interval component_roots;   // sum_i sum_j N^(j)(r, -f_i)
  Interval casoratian_roots;  // sum_j N^(j)(r, -C_0)
  Interval lhs;
  Interval shift_terms;       // sum_i sum_j |N^(j)(r, -fbar_i) - N^(j)(r, -f_i)|
  Interval casoratian_poles;  // sum_j |N^(j)(r, C_0) - sum_i N^(j)(r, fbar_i)|
  Interval even_windows;      // sum_i sum_{2j <= n} |N^(2j)_[-2i,0](-fbar_i) - N^(2j)_[-i,i](-f_i)|
  Interval boundary;          // |1/2 sum_{+-} (C_0 - sum_i fbar_i)(+-r)|
  Interval at_zero;           // |C_0(0) - sum_i fbar_i(0)|
  Interval bound;             // shift_terms + casoratian_poles + boundary + at_zero
  bool holds = false;
};

// Tail slopes of the root counting functions, for curves of order 1.
struct TailSlopes {
  Rational formula;     // sum_i (k_i^+ - k_i^-) / 2
  Rational components;  // slope of sum_i N(r, -f_i)
  Rational casoratian;  // slope of N(r, -C_0)
  bool equal() const { return formula == components && components == casoratian; }
};

struct BalanceReport {
  Rational step;
  PiecewiseFunction casoratian;
  std::vector<BalanceRow> rows;
  std::optional<TailSlopes> tails;

  bool holds() const;
};

// fbar_i(x) = f_i(x + i step). Window ends are clipped to [-r, r].
// Throws TooManyComponents, NonPositiveRadius, InvalidArgument.
BalanceReport casoratian_balance(const TropicalCurve& curve, const std::vector<Rational>& grid,
                                 const Rational& step = 1);

}  // namespace tropnev::curves
