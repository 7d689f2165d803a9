#include "tropnev/nevanlinna/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tropnev/error.hpp"
#include "tropnev/polyseg/ops.hpp"

namespace tropnev::nevanlinna {

using numeric::default_precision;
using singular::Kind;

namespace {

Interval enclose(const ExactValue& v) { return v.enclosure(default_precision()); }

void require_positive(const RealScalar& r) {
  if (r.sign() <= 0) throw Error(ErrorCode::NonPositiveRadius, "radius must be positive, got " + r.to_string());
}

Kind kind_for(CountSign sign) { return sign == CountSign::PolesOfF ? Kind::Pole : Kind::Root; }

// |w| (r - |z|)^j, with w an exact value living at z.
Interval weighted_distance(const ExactValue& w, const RealScalar& z, const RealScalar& r, int j) {
  if (r.is_rational()) {
    // r - |X| as a polynomial in the generator of z.
    Polynomial dist = z.sign() >= 0 ? Polynomial{0, -1} : Polynomial{0, 1};
    dist += Polynomial::constant(r.rational());
    return enclose(w * ExactValue::evaluate(dist.pow(static_cast<unsigned>(j)), z));
  }
  const RealScalar mag = z.abs();
  Rational eps = default_precision();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Interval v = w.enclosure(eps) * (r.enclosure(eps) - mag.enclosure(eps)).pow(static_cast<unsigned>(j));
    if (v.width() <= default_precision()) return v;
    eps /= 16;
  }
  throw Error(ErrorCode::Unsupported, "could not tighten counting term");
}

Window default_window(const RealScalar& r) { return Window::open(-r, r); }

void check_subwindow(const Window& w, const RealScalar& r) {
  if (!w.lo || !w.hi) throw Error(ErrorCode::WindowOutOfRange, "sub-window must be bounded");
  if (*w.lo < -r || *w.hi > r)
    throw Error(ErrorCode::WindowOutOfRange, "sub-window must lie inside [-r, r] for r = " + r.to_string());
}

// Cells [lo, hi] of the profile clipped to [0, r_max], with their polynomial.
struct Cell {
  RealScalar lo;
  RealScalar hi;
  const Polynomial* p;
};

std::vector<Cell> cells(const RadiusProfile& prof) {
  const auto& bps = prof.closed_form.breakpoints();
  const auto& segs = prof.closed_form.segments();
  std::vector<Cell> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    RealScalar lo = i == 0 ? RealScalar(0) : std::max(bps[i - 1], RealScalar(0));
    RealScalar hi = i == bps.size() ? RealScalar(prof.r_max) : std::min(bps[i], RealScalar(prof.r_max));
    if (lo < hi) out.push_back({lo, hi, &segs[i]});
  }
  return out;
}

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

}  // namespace

Interval proximity(const PiecewiseFunction& f, const RealScalar& r) {
  require_positive(r);
  Interval total(Rational(0));
  for (const RealScalar& at : {r, -r}) {
    ExactValue v = f.value(at);
    if (v.sign() > 0) total += enclose(v);
  }
  return total * Interval(Rational(1, 2));
}

Interval counting(const PiecewiseFunction& f, int j, const RealScalar& r, CountSign sign,
                  const std::optional<Window>& sub) {
  require_positive(r);
  if (j < 1) throw Error(ErrorCode::InvalidArgument, "counting order must be at least 1");
  if (sub) check_subwindow(*sub, r);
  auto table = singular::scan(f, sub ? *sub : default_window(r));
  Interval total(Rational(0));
  for (const auto& s : table.select(j, kind_for(sign))) total += weighted_distance(s.multiplicity, s.location, r, j);
  return total * Interval(Rational(1, 2));
}

Interval counting_total(const PiecewiseFunction& f, const RealScalar& r, CountSign sign) {
  Interval total(Rational(0));
  for (int j = 1; j <= std::max(1, f.degree_bound()); ++j) total += counting(f, j, r, sign);
  return total;
}

double counting_oracle(const PiecewiseFunction& f, int j, const Rational& r, const Rational& mesh, CountSign sign) {
  require_positive(r);
  if (j < 1) throw Error(ErrorCode::InvalidArgument, "counting order must be at least 1");
  if (sgn(mesh) <= 0) throw Error(ErrorCode::InvalidArgument, "mesh must be positive");
  std::vector<std::pair<double, double>> poles;  // (|z|, multiplicity)
  for (const auto& s : singular::scan(f, default_window(r)).select(j, kind_for(sign)))
    poles.emplace_back(s.location.abs().enclosure(default_precision()).midpoint().get_d(),
                       s.multiplicity.enclosure(default_precision()).midpoint().get_d());
  std::sort(poles.begin(), poles.end());

  const double rr = r.get_d();
  const long steps = numeric::ceil(Rational(r / mesh)).get_si();
  const double h = rr / static_cast<double>(steps);
  double sum = 0;
  double counted = 0;
  std::size_t next = 0;
  for (long k = 0; k < steps; ++k) {
    const double t = (static_cast<double>(k) + 0.5) * h;
    while (next < poles.size() && poles[next].first < t) counted += poles[next++].second;
    sum += counted * j * std::pow(rr - t, j - 1);
  }
  return 0.5 * sum * h;
}

Interval characteristic(const PiecewiseFunction& f, const RealScalar& r) {
  return proximity(f, r) + counting_total(f, r, CountSign::PolesOfF);
}

JensenReport jensen_sum(const PiecewiseFunction& f, const RealScalar& r) {
  require_positive(r);
  JensenReport rep;
  rep.boundary_mean = (enclose(f.value(r)) + enclose(f.value(-r))) * Interval(Rational(1, 2));
  rep.root_term = -counting_total(f, r, CountSign::PolesOfNegF);
  rep.pole_term = counting_total(f, r, CountSign::PolesOfF);
  rep.reconstructed = rep.boundary_mean + rep.root_term + rep.pole_term;
  rep.reference = Interval(f(Rational(0)));
  rep.residual = rep.reconstructed - rep.reference;
  return rep;
}

Interval jensen_balance(const PiecewiseFunction& f, const RealScalar& r) {
  return characteristic(f, r) - characteristic(polyseg::tropical_inverse(f), r) - Interval(f(Rational(0)));
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Proximity: return "m";
    case ProfileKind::Counting: return "N";
    case ProfileKind::Characteristic: return "T";
    case ProfileKind::Cartan: return "T_f";
  }
  return "?";
}

RadiusProfile proximity_profile(const PiecewiseFunction& f, const Rational& r_max) {
  require_positive(r_max);
  const PiecewiseFunction zero;
  auto both = polyseg::linear_combine(polyseg::tropical_plus(f, zero), polyseg::tropical_plus(polyseg::reflect(f), zero),
                                      Rational(1, 2), Rational(1, 2));
  return {ProfileKind::Proximity, 0, CountSign::PolesOfF, r_max, polyseg::restrict_to(both, 0, r_max)};
}

RadiusProfile counting_profile(const PiecewiseFunction& f, int j, const Rational& r_max, CountSign sign) {
  require_positive(r_max);
  if (j < 1) throw Error(ErrorCode::InvalidArgument, "counting order must be at least 1");
  std::map<Rational, Rational, RationalLess> weight;  // |z| -> summed multiplicity
  for (const auto& s : singular::scan(f, default_window(r_max)).select(j, kind_for(sign))) {
    if (!s.location.is_rational() || !s.multiplicity.is_rational())
      throw Error(ErrorCode::Unsupported, "counting profile needs rational singularities, got " + s.location.to_string());
    weight[numeric::abs(s.location.rational())] += s.multiplicity.rational();
  }
  std::vector<RealScalar> bps;
  std::vector<Polynomial> segs{Polynomial()};
  for (const auto& [rho, w] : weight) {
    Polynomial term = Polynomial::shifted_power(rho, j) * Rational(w / 2);
    if (sgn(rho) == 0) {
      segs.back() += term;
      continue;
    }
    bps.emplace_back(rho);
    segs.push_back(segs.back() + term);
  }
  auto closed = PiecewiseFunction::from_trusted(std::move(bps), std::move(segs));
  return {ProfileKind::Counting, j, sign, r_max, polyseg::restrict_to(closed, 0, r_max)};
}

RadiusProfile characteristic_profile(const PiecewiseFunction& f, const Rational& r_max) {
  PiecewiseFunction total = proximity_profile(f, r_max).closed_form;
  for (int j = 1; j <= std::max(1, f.degree_bound()); ++j)
    total = polyseg::linear_combine(total, counting_profile(f, j, r_max).closed_form, 1, 1);
  return {ProfileKind::Characteristic, 0, CountSign::PolesOfF, r_max, polyseg::restrict_to(total, 0, r_max)};
}

bool nonnegative_on(const Polynomial& p, const RealScalar& a, const RealScalar& b) {
  if (p.is_zero()) return true;
  std::vector<RealScalar> marks{a};
  if (!p.is_constant()) {
    Polynomial sf = p.square_free();
    for (const auto& iv : numeric::sturm_isolate(sf)) {
      RealScalar root = RealScalar::root_of(sf, iv.lo, iv.hi);
      if (a < root && root < b) marks.push_back(root);
    }
  }
  marks.push_back(b);
  for (const auto& m : {a, b})
    if (ExactValue::evaluate(p, m).sign() < 0) return false;
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    if (!(marks[i] < marks[i + 1])) continue;
    if (sgn(p(numeric::rational_between(marks[i], marks[i + 1]))) < 0) return false;
  }
  return true;
}

bool RadiusProfile::nonnegative() const {
  for (const auto& c : cells(*this))
    if (!nonnegative_on(*c.p, c.lo, c.hi)) return false;
  return true;
}

bool RadiusProfile::nondecreasing() const {
  for (const auto& c : cells(*this))
    if (!nonnegative_on(c.p->derivative(), c.lo, c.hi)) return false;
  return true;
}

bool RadiusProfile::convex() const {
  auto cs = cells(*this);
  for (const auto& c : cs)
    if (!nonnegative_on(c.p->derivative().derivative(), c.lo, c.hi)) return false;
  // Slopes may only jump upwards at interior breakpoints.
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    ExactValue jump = ExactValue::evaluate(cs[i + 1].p->derivative() - cs[i].p->derivative(), cs[i].hi);
    if (jump.sign() < 0) return false;
  }
  return true;
}

GrowthEstimates growth_estimates(const RadiusProfile& profile, const std::vector<Rational>& grid) {
  GrowthEstimates out;
  for (const auto& r : grid) {
    if (cmp(r, 1) <= 0 || cmp(r, profile.r_max) > 0)
      throw Error(ErrorCode::InvalidArgument, "grid point " + numeric::to_string(r) + " outside (1, r_max]");
    Rational t = profile(r);
    if (cmp(t, 1) <= 0)
      throw Error(ErrorCode::NonPositiveValues, "log log T undefined at r = " + numeric::to_string(r));
    const double lr = std::log(r.get_d());
    const double lt = std::log(t.get_d());
    out.radii.push_back(r);
    out.order.push_back(lt / lr);
    out.hyper_order.push_back(std::log(lt) / lr);
  }
  return out;
}

}  // namespace tropnev::nevanlinna
