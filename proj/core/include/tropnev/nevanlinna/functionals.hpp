#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropnev/numeric/interval.hpp"
#include "tropnev/singular/singular.hpp"

namespace tropnev::nevanlinna {

using numeric::ExactValue;
using numeric::Interval;
using numeric::Polynomial;
using numeric::Rational;
using numeric::RealScalar;
using polyseg::PiecewiseFunction;
using singular::Window;

// PolesOfNegF counts the poles of -f, i.e. the roots of f.
enum class CountSign { PolesOfF, PolesOfNegF };

// Values are exact (degenerate intervals) whenever every point involved is
// rational; otherwise enclosures of width around numeric::default_precision().
Interval proximity(const PiecewiseFunction& f, const RealScalar& r);

// Half-sum of |omega^(j)(z)| (r - |z|)^j over j-th poles in `sub` (default (-r, r)).
Interval counting(const PiecewiseFunction& f, int j, const RealScalar& r, CountSign sign = CountSign::PolesOfF,
                  const std::optional<Window>& sub = std::nullopt);

// Sum of counting over j = 1..n, n the degree bound of f.
Interval counting_total(const PiecewiseFunction& f, const RealScalar& r, CountSign sign = CountSign::PolesOfF);

// Midpoint Riemann sum of the j-fold integral of n^(j)(min t_s), reduced to the
// one-dimensional integral of n^(j)(t) j (r - t)^(j-1) over (0, r).
double counting_oracle(const PiecewiseFunction& f, int j, const Rational& r, const Rational& mesh,
                       CountSign sign = CountSign::PolesOfF);

Interval characteristic(const PiecewiseFunction& f, const RealScalar& r);

// f(0) rebuilt from the boundary mean and the singularities in (-r, r).
struct JensenReport {
  Interval boundary_mean;
  Interval root_term;  // -1/2 sum over roots
  Interval pole_term;  // +1/2 sum over poles
  Interval reconstructed;
  Interval reference;
  Interval residual;
};
JensenReport jensen_sum(const PiecewiseFunction& f, const RealScalar& r);

// T(r, f) - T(r, -f) - f(0).
Interval jensen_balance(const PiecewiseFunction& f, const RealScalar& r);

enum class ProfileKind { Proximity, Counting, Characteristic, Cartan };
std::string to_string(ProfileKind kind);

// A functional as an exact piecewise polynomial in r, valid on (0, r_max].
struct RadiusProfile {
  ProfileKind kind = ProfileKind::Characteristic;
  int order = 0;  // j for counting profiles
  CountSign sign = CountSign::PolesOfF;
  Rational r_max;
  PiecewiseFunction closed_form;

  Rational operator()(const Rational& r) const { return closed_form(r); }
  bool nonnegative() const;
  bool nondecreasing() const;
  bool convex() const;
};

// Counting profiles need rational singularity locations; throws Unsupported otherwise.
RadiusProfile proximity_profile(const PiecewiseFunction& f, const Rational& r_max);
RadiusProfile counting_profile(const PiecewiseFunction& f, int j, const Rational& r_max,
                               CountSign sign = CountSign::PolesOfF);
RadiusProfile characteristic_profile(const PiecewiseFunction& f, const Rational& r_max);

// p >= 0 on the closed interval [a, b].
bool nonnegative_on(const Polynomial& p, const RealScalar& a, const RealScalar& b);

struct GrowthEstimates {
  std::vector<Rational> radii;
  std::vector<double> order;        // log T / log r
  std::vector<double> hyper_order;  // log log T / log r
};

// Grid points must lie in (1, r_max]. Throws NonPositiveValues when T <= 1 on the grid.
GrowthEstimates growth_estimates(const RadiusProfile& profile, const std::vector<Rational>& grid);

}  // namespace tropnev::nevanlinna
