#include "tropnev/curves/curves.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tropnev/error.hpp"
#include "tropnev/singular/singular.hpp"

namespace tropnev::curves {

using nevanlinna::CountSign;
using nevanlinna::counting;
using nevanlinna::counting_total;
using numeric::ExactValue;
using numeric::Polynomial;
using numeric::default_precision;
using singular::Window;

namespace {

Interval enclose(const ExactValue& v) { return v.enclosure(default_precision()); }

void require_positive(const Rational& r) {
  if (sgn(r) <= 0) throw Error(ErrorCode::NonPositiveRadius, "radius must be positive, got " + numeric::to_string(r));
}

void require_arity(std::size_t got, const TropicalCurve& curve) {
  if (got != curve.size())
    throw Error(ErrorCode::ArityMismatch, "form has arity " + std::to_string(got) + " but the curve has " +
                                              std::to_string(curve.size()) + " components");
}

Interval sum_counting(const PiecewiseFunction& f, int n, const Rational& r, CountSign sign) {
  Interval total(Rational(0));
  for (int j = 1; j <= n; ++j) total += counting(f, j, r, sign);
  return total;
}

// Value of f at +-r averaged.
Interval boundary_mean(const PiecewiseFunction& f, const Rational& r) {
  return Interval(Rational((f(r) + f(Rational(-r))) / 2));
}

Rational last_slope(const PiecewiseFunction& f) { return f.segments().back().coefficient(1); }
Rational first_slope(const PiecewiseFunction& f) { return f.segments().front().coefficient(1); }

std::optional<Rational> max_abs_breakpoint(const std::vector<const PiecewiseFunction*>& fs) {
  Rational out = 0;
  for (const auto* f : fs)
    for (const auto& b : f->breakpoints()) {
      if (!b.is_rational()) return std::nullopt;
      Rational mag = numeric::abs(b.rational());
      if (cmp(mag, out) > 0) out = mag;
    }
  return out;
}

}  // namespace

TropicalCurve::TropicalCurve(std::vector<PiecewiseFunction> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidArgument, "a curve needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!singular::classify(components_[i]).entire)
      throw Error(ErrorCode::NotEntireComponent, "component " + std::to_string(i) + " has poles");
  envelope_ = components_.front();
  for (std::size_t i = 1; i < components_.size(); ++i) envelope_ = polyseg::tropical_plus(envelope_, components_[i]);
}

int TropicalCurve::order() const {
  int n = 1;
  for (const auto& f : components_) n = std::max(n, f.degree_bound());
  return n;
}

ReducedCheck check_reduced(const TropicalCurve& curve) {
  // A common root has to be a root of f_0: one of its breakpoints, or 0.
  std::vector<RealScalar> candidates = curve[0].breakpoints();
  if (std::find(candidates.begin(), candidates.end(), RealScalar(0)) == candidates.end())
    candidates.emplace_back(0);
  const int n = curve.order();
  for (const auto& x : candidates) {
    std::vector<bool> common(static_cast<std::size_t>(n), true);
    for (const auto& f : curve.components()) {
      auto jp = singular::omega_at(f, x, n);
      for (int j = 0; j < n; ++j)
        if (jp.omega[static_cast<std::size_t>(j)].sign() <= 0) common[static_cast<std::size_t>(j)] = false;
    }
    for (int j = 0; j < n; ++j)
      if (common[static_cast<std::size_t>(j)]) return {false, CommonRoot{x, j + 1}};
  }
  return {};
}

Interval cartan(const TropicalCurve& curve, const RealScalar& r) {
  if (r.sign() <= 0) throw Error(ErrorCode::NonPositiveRadius, "radius must be positive, got " + r.to_string());
  const auto& F = curve.envelope();
  return (enclose(F.value(r)) + enclose(F.value(-r))) * Interval(Rational(1, 2)) - Interval(F(Rational(0)));
}

RadiusProfile cartan_profile(const TropicalCurve& curve, const Rational& r_max) {
  require_positive(r_max);
  const auto& F = curve.envelope();
  auto mean = polyseg::linear_combine(F, polyseg::reflect(F), Rational(1, 2), Rational(1, 2));
  auto closed = polyseg::add_constant(mean, Rational(-F(Rational(0))));
  RadiusProfile out;
  out.kind = nevanlinna::ProfileKind::Cartan;
  out.r_max = r_max;
  out.closed_form = polyseg::restrict_to(closed, 0, r_max);
  return out;
}

int TropicalPolynomialMap::degree() const {
  if (monomials.empty()) throw Error(ErrorCode::AllNegInfinity, "tropical polynomial has no monomials");
  auto total = [](const Monomial& m) { return std::accumulate(m.exponents.begin(), m.exponents.end(), 0); };
  const int d = total(monomials.front());
  for (const auto& m : monomials) {
    if (std::any_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e < 0; }))
      throw Error(ErrorCode::InvalidArgument, "exponents must be non-negative");
    if (total(m) != d) throw Error(ErrorCode::InvalidArgument, "tropical polynomial is not homogeneous");
  }
  return d;
}

MaxPlusValue TropicalPolynomialMap::pure_power(std::size_t k) const {
  const int d = degree();
  MaxPlusValue best;
  for (const auto& m : monomials) {
    if (k >= m.exponents.size() || m.exponents[k] != d || !m.coefficient) continue;
    if (!best || cmp(*m.coefficient, *best) > 0) best = m.coefficient;
  }
  return best;
}

PiecewiseFunction compose_tropical(const TropicalPolynomialMap& p, const TropicalCurve& curve) {
  std::optional<PiecewiseFunction> out;
  for (const auto& m : p.monomials) require_arity(m.exponents.size(), curve);
  p.degree();
  for (const auto& m : p.monomials) {
    if (!m.coefficient) continue;
    PiecewiseFunction term(Polynomial::constant(*m.coefficient));
    for (std::size_t k = 0; k < curve.size(); ++k)
      if (m.exponents[k] != 0) term = polyseg::linear_combine(term, curve[k], 1, m.exponents[k]);
    out = out ? polyseg::tropical_plus(*out, term) : term;
  }
  if (!out) throw Error(ErrorCode::AllNegInfinity, "every coefficient is -inf");
  return *out;
}

PiecewiseFunction compose_fermat(const FermatForm& q, const TropicalCurve& curve) {
  require_arity(q.weights.size(), curve);
  if (q.power < 1) throw Error(ErrorCode::InvalidArgument, "Fermat power must be positive");
  for (const auto& w : q.weights)
    if (sgn(w) <= 0) throw Error(ErrorCode::InvalidArgument, "Fermat weights must be positive");
  PiecewiseFunction out;
  for (std::size_t i = 0; i < curve.size(); ++i)
    out = polyseg::linear_combine(out, polyseg::power(curve[i], q.power), 1, q.weights[i]);
  return out;
}

PiecewiseFunction casoratian(const TropicalCurve& curve, const Rational& step) {
  const std::size_t n = curve.size();
  if (n > max_casoratian_components)
    throw Error(ErrorCode::TooManyComponents, std::to_string(n) + " components; at most " +
                                                  std::to_string(max_casoratian_components) + " supported");
  // dp[mask]: best assignment of components 0..popcount(mask)-1 to the shifts in mask.
  std::vector<std::vector<PiecewiseFunction>> shifted(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) shifted[i].push_back(polyseg::shift(curve[i], Rational(step * long(s))));
  std::vector<std::optional<PiecewiseFunction>> dp(std::size_t{1} << n);
  dp[0] = PiecewiseFunction();
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask)) - 1;
    for (std::size_t s = 0; s < n; ++s) {
      if (!(mask & (std::size_t{1} << s))) continue;
      auto cand = polyseg::tropical_times(*dp[mask ^ (std::size_t{1} << s)], shifted[k][s]);
      dp[mask] = dp[mask] ? polyseg::tropical_plus(*dp[mask], cand) : cand;
    }
  }
  return *dp.back();
}

bool SmtReport::passes() const {
  return std::all_of(rows.begin(), rows.end(), [](const SmtRow& row) { return row.pass; });
}

SmtReport smt_homogeneous_check(const TropicalPolynomialMap& p, const TropicalCurve& curve,
                                const std::vector<Rational>& grid) {
  SmtReport rep;
  rep.degree = p.degree();
  if (rep.degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::optional<Rational> gamma;
  for (std::size_t k = 0; k < curve.size(); ++k) {
    auto a = p.pure_power(k);
    if (!a) throw Error(ErrorCode::MissingPurePowers, "coefficient of x_" + std::to_string(k) + "^d is -inf");
    if (!gamma || cmp(*a, *gamma) < 0) gamma = a;
  }
  rep.composed = compose_tropical(p, curve);
  std::optional<Rational> beta;
  for (const auto& m : p.monomials)
    if (m.coefficient && (!beta || cmp(*m.coefficient, *beta) > 0)) beta = m.coefficient;
  rep.beta = *beta;
  rep.gamma = *gamma;
  rep.reduced = check_reduced(curve).reduced;
  rep.composed_at_zero = rep.composed(Rational(0));
  rep.envelope_at_zero = curve.envelope()(Rational(0));
  const Rational d(rep.degree);
  rep.band_lo = (rep.gamma - rep.composed_at_zero) / d + rep.envelope_at_zero;
  rep.band_hi = (rep.beta - rep.composed_at_zero) / d + rep.envelope_at_zero;

  const Interval band(rep.band_lo, rep.band_hi);
  const Rational tolerance = numeric::make_rational(1, 1000000000000L);
  for (const auto& r : grid) {
    require_positive(r);
    SmtRow row;
    row.r = r;
    row.cartan = cartan(curve, r);
    row.roots = counting_total(rep.composed, r, CountSign::PolesOfNegF);
    row.poles = counting_total(rep.composed, r, CountSign::PolesOfF);
    row.residual = (row.roots - row.poles) * Interval(Rational(1 / d)) - row.cartan;
    row.pass = row.residual.width() <= tolerance && band.intersects(row.residual);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

FermatReport fermat_bounds(const FermatForm& q, const TropicalCurve& curve, const std::vector<Rational>& grid) {
  for (std::size_t i = 0; i < curve.size(); ++i)
    if (curve[i].degree_bound() > 1)
      throw Error(ErrorCode::NonLinearComponents, "component " + std::to_string(i) + " is not piecewise linear");
  FermatReport rep;
  rep.composed = compose_fermat(q, curve);
  rep.power = q.power;
  rep.theta = *std::min_element(q.weights.begin(), q.weights.end(),
                                [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
  Rational sum = 0;
  for (const auto& w : q.weights) sum += w;
  rep.big_theta = numeric::pow(Rational(2), static_cast<unsigned>(q.power - 1)) * sum;

  for (const auto& r : grid) {
    require_positive(r);
    FermatRow row;
    row.r = r;
    row.cartan = cartan(curve, r);
    row.counting = sum_counting(rep.composed, q.power, r, CountSign::PolesOfNegF);
    const Interval tn = row.cartan.pow(static_cast<unsigned>(q.power));
    if (sgn(tn.lo()) > 0) {
      row.ratio = row.counting * Interval(Rational(1 / tn.hi()), Rational(1 / tn.lo()));
      row.growth = Rational(r / row.cartan.midpoint()).get_d();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool BalanceReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const BalanceRow& row) { return row.holds; });
}

BalanceReport casoratian_balance(const TropicalCurve& curve, const std::vector<Rational>& grid, const Rational& step) {
  if (sgn(step) <= 0) throw Error(ErrorCode::InvalidArgument, "shift step must be positive");
  BalanceReport rep;
  rep.step = step;
  rep.casoratian = casoratian(curve, step);
  const auto& c0 = rep.casoratian;
  const int n = curve.order();
  const std::size_t m = curve.size();

  std::vector<PiecewiseFunction> bar;
  for (std::size_t i = 0; i < m; ++i) bar.push_back(polyseg::shift(curve[i], Rational(step * long(i))));

  auto clip = [](const Rational& lo, const Rational& hi, const Rational& r) {
    const Rational a = cmp(lo, -r) < 0 ? Rational(-r) : lo;
    const Rational b = cmp(hi, r) > 0 ? r : hi;
    return Window::closed(a, b);
  };

  for (const auto& r : grid) {
    require_positive(r);
    BalanceRow row;
    row.r = r;
    row.component_roots = Interval(Rational(0));
    row.shift_terms = Interval(Rational(0));
    row.even_windows = Interval(Rational(0));
    row.casoratian_poles = Interval(Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (int j = 1; j <= n; ++j) {
        Interval orig = counting(curve[i], j, r, CountSign::PolesOfNegF);
        row.component_roots += orig;
        row.shift_terms += (counting(bar[i], j, r, CountSign::PolesOfNegF) - orig).abs();
      }
      const Rational span = step * long(i);
      for (int j = 2; j <= n; j += 2) {
        Interval shifted = counting(bar[i], j, r, CountSign::PolesOfNegF, clip(Rational(-2 * span), 0, r));
        Interval centred = counting(curve[i], j, r, CountSign::PolesOfNegF, clip(Rational(-span), span, r));
        row.even_windows += (shifted - centred).abs();
      }
    }
    for (int j = 1; j <= n; ++j) {
      Interval diff = counting(c0, j, r, CountSign::PolesOfF);
      for (const auto& b : bar) diff -= counting(b, j, r, CountSign::PolesOfF);
      row.casoratian_poles += diff.abs();
    }
    row.casoratian_roots = sum_counting(c0, n, r, CountSign::PolesOfNegF);
    row.lhs = (row.component_roots - row.casoratian_roots).abs();

    Interval edge = boundary_mean(c0, r);
    Rational zero = c0(Rational(0));
    for (const auto& b : bar) {
      edge -= boundary_mean(b, r);
      zero -= b(Rational(0));
    }
    row.boundary = edge.abs();
    row.at_zero = Interval(Rational(numeric::abs(zero)));
    row.bound = row.shift_terms + row.casoratian_poles + row.boundary + row.at_zero;
    row.holds = cmp(row.lhs.lo(), row.bound.hi()) <= 0;
    rep.rows.push_back(std::move(row));
  }

  if (n == 1) {
    std::vector<const PiecewiseFunction*> all{&c0};
    for (const auto& f : curve.components()) all.push_back(&f);
    if (auto reach = max_abs_breakpoint(all)) {
      const Rational r_max = *reach + 1;
      TailSlopes t;
      for (const auto& f : curve.components()) {
        t.formula += (last_slope(f) - first_slope(f)) / 2;
        t.components += last_slope(nevanlinna::counting_profile(f, 1, r_max, CountSign::PolesOfNegF).closed_form);
      }
      t.casoratian = last_slope(nevanlinna::counting_profile(c0, 1, r_max, CountSign::PolesOfNegF).closed_form);
      rep.tails = t;
    }
  }
  return rep;
}

}  // namespace tropnev::curves
