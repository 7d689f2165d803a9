#include "tropnev/nevanlinna/poisson_jensen.hpp"

#include <algorithm>

#include "tropnev/error.hpp"
#include "tropnev/polyseg/ops.hpp"

namespace tropnev::nevanlinna {

using numeric::default_precision;
using polyseg::Side;

namespace {

Interval enclose(const ExactValue& v) { return v.enclosure(default_precision()); }

Rational minus_one_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void require_inside(const Rational& x, const Rational& r) {
  if (sgn(r) <= 0) throw Error(ErrorCode::NonPositiveRadius, "radius must be positive, got " + numeric::to_string(r));
  if (cmp(numeric::abs(x), r) >= 0)
    throw Error(ErrorCode::PointOutsideDisk,
                "x = " + numeric::to_string(x) + " is not inside (-r, r) for r = " + numeric::to_string(r));
}

ExactValue power(ExactValue v, int k) {
  ExactValue out(1);
  for (int i = 0; i < k; ++i) out *= v;
  return out;
}

// Weights of omega in the B-sum and D-sum of the reconstruction.
Rational omega_b_weight(Region g, int j) {
  switch (g) {
    case Region::F1: case Region::F2: case Region::F3: case Region::F6: case Region::F8: return 1;
    default: return minus_one_pow(j + 1);
  }
}

// `in_theorem` drops F3, whose D-weight is multiplied by D_{n-j}(r, 0) = 0 anyway.
Rational omega_d_weight(Region g, int j, bool in_theorem) {
  switch (g) {
    case Region::F1: return -1;
    case Region::F3: return in_theorem ? 0 : 1;
    case Region::F2: case Region::F6: case Region::F8: return 1;
    case Region::F4: case Region::F7: return minus_one_pow(j);
    default: return minus_one_pow(j + 1);
  }
}

// Left-jet corrections in the omega decomposition of Omega and Gamma.
Rational left_jet_weight_Omega(Region g, int j) {
  switch (g) {
    case Region::F6: return minus_one_pow(j + 1) - 1;
    case Region::F7: case Region::F8: case Region::F9: return 1 - minus_one_pow(j + 1);
    default: return 0;
  }
}

Rational left_jet_weight_Gamma(Region g, int j) {
  switch (g) {
    case Region::F3: return 2 * minus_one_pow(j + 1);
    case Region::F6: case Region::F7: return minus_one_pow(j + 1) - 1;
    case Region::F8: case Region::F9: return 1 - minus_one_pow(j);
    default: return 0;
  }
}

}  // namespace

Rational B(int k, const Rational& r, const Rational& x) {
  return (numeric::pow(r + x, static_cast<unsigned>(k)) + numeric::pow(r - x, static_cast<unsigned>(k))) / 2;
}

Rational D(int k, const Rational& r, const Rational& x) {
  return (numeric::pow(r + x, static_cast<unsigned>(k)) - numeric::pow(r - x, static_cast<unsigned>(k))) / 2;
}

ExactValue E(const Rational& r, const Rational& x, const RealScalar& y) {
  // (r - y)(r + x) when x <= y, else (r + y)(r - x); as a polynomial in y.
  Polynomial e = y >= RealScalar(x) ? Polynomial(std::vector<Rational>{r, Rational(-1)}) * Rational(r + x)
                                    : Polynomial(std::vector<Rational>{r, Rational(1)}) * Rational(r - x);
  return ExactValue::evaluate(e, y);
}

Region classify_region(const RealScalar& y, const Rational& x) {
  const int sy = y.sign();
  const int sx = sgn(x);
  const auto c = compare(y, RealScalar(x));
  if (c == 0) return sx == 0 ? Region::F3 : (sx > 0 ? Region::F8 : Region::F9);
  if (c < 0) return sy < 0 ? Region::F1 : (sy == 0 ? Region::F7 : Region::F4);
  return sy > 0 ? Region::F2 : (sy == 0 ? Region::F6 : Region::F5);
}

std::string to_string(Region region) { return "F" + std::to_string(static_cast<int>(region)); }

PoissonJensenReport poisson_jensen(const PiecewiseFunction& f, const Rational& x, const Rational& r) {
  require_inside(x, r);
  PoissonJensenReport rep;
  rep.x = x;
  rep.r = r;
  const int n = rep.n = std::max(1, f.degree_bound());
  const Rational two_b = 2 * B(n, r, x);

  const Rational fr = f(r), fmr = f(Rational(-r)), fx = f(x), f0 = f(Rational(0));
  rep.boundary_mean = Interval(Rational((fr + fmr) / 2));
  rep.slope_term = Interval(Rational(D(n, r, x) / two_b * (fr - fmr)));

  std::vector<RealScalar> candidates;
  for (const auto& y : polyseg::merge_breakpoints(f.breakpoints(), polyseg::merge_breakpoints({RealScalar(0)}, {RealScalar(x)})))
    if (RealScalar(-r) < y && y < RealScalar(r)) candidates.push_back(y);

  rep.omega_b_sum = rep.gamma_d_sum = Interval(Rational(0));
  for (const auto& y : candidates) {
    const Region g = classify_region(y, x);
    const auto jp = singular::omega_at(f, y, n);
    const auto right = polyseg::evaluate_jet(f, y, Side::Right, n);
    const auto left = polyseg::evaluate_jet(f, y, Side::Left, n);
    const int cmp_yx = (y <=> RealScalar(x)) < 0 ? -1 : ((y <=> RealScalar(x)) > 0 ? 1 : 0);
    const int s_plus = cmp_yx == 0 ? 1 : cmp_yx;  // sgn((y - x)^+)
    const int s_minus = cmp_yx == 0 ? -1 : cmp_yx;
    const ExactValue e = E(r, x, y);
    for (int j = 1; j <= n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      PoissonJensenTerm t;
      t.point = y;
      t.region = g;
      t.order = j;
      t.omega = jp.omega[jj - 1];
      const Rational sp1 = s_plus > 0 ? Rational(1) : minus_one_pow(j + 1);
      const Rational sm1 = s_minus > 0 ? Rational(1) : minus_one_pow(j + 1);
      const Rational sp0 = s_plus > 0 ? Rational(1) : minus_one_pow(j);
      const Rational sm0 = s_minus > 0 ? Rational(1) : minus_one_pow(j);
      t.Omega = right[jj] * sp1 - left[jj] * sm1;
      t.Gamma = right[jj] * sp0 - left[jj] * sm0;
      ExactValue Omega_split = t.omega * omega_b_weight(g, j) + left[jj] * left_jet_weight_Omega(g, j);
      ExactValue Gamma_split = t.omega * omega_d_weight(g, j, false) + left[jj] * left_jet_weight_Gamma(g, j);
      t.decomposition_agrees = (t.Omega - Omega_split).is_zero() && (t.Gamma - Gamma_split).is_zero();
      rep.decomposition_agrees = rep.decomposition_agrees && t.decomposition_agrees;

      const ExactValue base = t.omega * power(e, j);
      t.b_term = -enclose(base * Rational(omega_b_weight(g, j) * B(n - j, r, x) / two_b));
      t.d_term = -enclose(base * Rational(omega_d_weight(g, j, true) * D(n - j, r, x) / two_b));
      rep.omega_b_sum += t.b_term;
      rep.gamma_d_sum += t.d_term;
      rep.terms.push_back(std::move(t));
    }
  }

  const Polynomial& fl = f.segment_at(RealScalar(x), Side::Left);
  const Rational up = numeric::pow(r + x, static_cast<unsigned>(n));
  const Rational down = numeric::pow(r - x, static_cast<unsigned>(n));
  rep.left_correction = Interval(Rational(-(up * (fl(r) - fx) + down * (fl(Rational(-r)) - fx)) / two_b));

  const Polynomial& f0l = f.segment_at(RealScalar(0), Side::Left);
  const Rational sgn_left = sgn(x) > 0 ? 1 : -1;  // sgn(x^-), with sgn(0^-) = -1
  const Rational near = numeric::pow(r - numeric::abs(x), static_cast<unsigned>(n));
  rep.zero_correction = Interval(Rational(-sgn_left * near * (f0l(r) + f0l(Rational(-r)) - 2 * f0) / two_b));

  rep.reconstructed = rep.boundary_mean + rep.slope_term + rep.omega_b_sum + rep.gamma_d_sum + rep.left_correction +
                      rep.zero_correction;
  rep.reference = Interval(fx);
  rep.residual = rep.reconstructed - rep.reference;
  return rep;
}

Interval lemma31_sum(const PiecewiseFunction& f, const Rational& x, const Rational& r, Lemma31Side side) {
  require_inside(x, r);
  const int n = std::max(1, f.degree_bound());
  const bool right = side == Lemma31Side::RightToR;
  const auto jet = polyseg::evaluate_jet(f, RealScalar(x), right ? Side::Right : Side::Left, n);
  Interval total(Rational(0));
  for (int j = 1; j <= n; ++j) {
    const auto ju = static_cast<unsigned>(j);
    if (right)
      total += enclose(jet[ju] * numeric::pow(r - x, ju));
    else
      total += enclose(jet[ju] * Rational(minus_one_pow(j + 1) * numeric::pow(r + x, ju)));
  }
  for (const auto& y : f.breakpoints()) {
    const bool inside = right ? (RealScalar(x) < y && y < RealScalar(r)) : (RealScalar(-r) < y && y < RealScalar(x));
    if (!inside) continue;
    const auto jp = singular::omega_at(f, y, n);
    // (r - y) or (r + y) as a polynomial in y.
    const Polynomial dist(std::vector<Rational>{r, Rational(right ? -1 : 1)});
    for (int j = 1; j <= n; ++j) {
      const auto ju = static_cast<unsigned>(j);
      ExactValue term = jp.tau[ju - 1] * ExactValue::evaluate(dist.pow(ju), y);
      total += enclose(right ? term : term * minus_one_pow(j));
    }
  }
  return total;
}

Rational log_difference(const PiecewiseFunction& f, const Rational& c, int delta, const Rational& r) {
  if (sgn(c) == 0) throw Error(ErrorCode::ZeroShift, "shift c must be nonzero");
  if (delta != 1 && delta != -1) throw Error(ErrorCode::InvalidArgument, "delta must be +1 or -1");
  const Rational at = delta * r;
  return f(Rational(at + c)) - f(at);
}

Lemma44Report lemma44_check(const PiecewiseFunction& f, const Rational& c, const Rational& alpha, const Rational& r,
                            const Interval& offset) {
  if (sgn(c) == 0) throw Error(ErrorCode::ZeroShift, "shift c must be nonzero");
  if (cmp(alpha, 1) <= 0) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1");
  if (!singular::classify(f).well_defined) throw Error(ErrorCode::NotWellDefined, "function is not well defined");
  const Rational ac = numeric::abs(c);
  const Rational threshold = std::max(Rational(2 * ac), Rational((3 - alpha) * ac / (alpha - 1)), [](const Rational& a, const Rational& b) {
    return cmp(a, b) < 0;
  });
  if (cmp(r, threshold) <= 0)
    throw Error(ErrorCode::RadiusBelowThreshold,
                "r = " + numeric::to_string(r) + " must exceed " + numeric::to_string(threshold));

  Lemma44Report rep;
  rep.lhs_plus = numeric::abs(log_difference(f, c, 1, r));
  rep.lhs_minus = numeric::abs(log_difference(f, c, -1, r));
  // A constant offset moves m by at most its size and leaves every jump alone.
  const Interval spread(std::min(offset.lo(), Rational(0), [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; }),
                        std::max(offset.hi(), Rational(0), [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; }));
  rep.characteristic = characteristic(f, RealScalar(Rational(alpha * (r + ac)))) + spread;
  const Interval at_zero = (Interval(f(Rational(0))) + offset).abs();
  const Rational factor = 32 * ac / ((alpha - 1) * (r + ac));
  rep.rhs = Interval(factor) * (rep.characteristic + at_zero * Interval(Rational(1, 2)));
  rep.holds = cmp(rep.lhs_plus, rep.rhs.lo()) <= 0 && cmp(rep.lhs_minus, rep.rhs.lo()) <= 0;
  return rep;
}

long lemma44_window(const Rational& c, const Rational& alpha, const Rational& r) {
  return numeric::ceil(Rational(alpha * (r + numeric::abs(c)))).get_si() + 1;
}

}  // namespace tropnev::nevanlinna
