#include "tropnev/singular/singular.hpp"

#include <algorithm>

#include "tropnev/error.hpp"
#include "tropnev/polyseg/ops.hpp"

namespace tropnev::singular {

namespace {

// sgn(x^+), sgn(x^-) with sgn(0^+) = 1, sgn(0^-) = -1.
std::pair<int, int> side_signs(const RealScalar& x) {
  int s = x.sign();
  if (s == 0) return {1, -1};
  return {s, s};
}

int signed_power(int s, int e) { return (s < 0 && e % 2 == 1) ? -1 : 1; }

}  // namespace

JumpProfile omega_at(const PiecewiseFunction& f, const RealScalar& x) {
  return omega_at(f, x, std::max(1, f.degree_bound()));
}

JumpProfile omega_at(const PiecewiseFunction& f, const RealScalar& x, int n) {
  auto loc = f.locate(x);
  const Polynomial& right = f.segments()[loc.right];
  const Polynomial& left = f.segments()[loc.left];
  auto [s_plus, s_minus] = side_signs(x);
  JumpProfile out{x, {}, {}};
  for (int j = 1; j <= n; ++j) {
    ExactValue a = ExactValue::evaluate(right.taylor_coefficient_poly(j), x);
    ExactValue b = loc.at_breakpoint() ? ExactValue::evaluate(left.taylor_coefficient_poly(j), x) : a;
    out.tau.push_back(a - b);
    out.omega.push_back(a * Rational(signed_power(s_plus, j + 1)) - b * Rational(signed_power(s_minus, j + 1)));
  }
  return out;
}

std::string to_string(Kind kind) { return kind == Kind::Root ? "root" : "pole"; }

std::vector<Singularity> SingularityTable::select(int order, Kind kind) const {
  std::vector<Singularity> out;
  for (const auto& e : entries)
    if (e.order == order && e.kind == kind) out.push_back(e);
  return out;
}

bool Window::contains(const RealScalar& x) const {
  if (lo) {
    auto c = compare(x, *lo);
    if (c < 0 || (c == 0 && !include_lo)) return false;
  }
  if (hi) {
    auto c = compare(x, *hi);
    if (c > 0 || (c == 0 && !include_hi)) return false;
  }
  return true;
}

SingularityTable scan(const PiecewiseFunction& f, const Window& window) {
  if (window.lo && window.hi) {
    auto c = compare(*window.lo, *window.hi);
    if (c > 0 || (c == 0 && !(window.include_lo && window.include_hi)))
      throw Error(ErrorCode::EmptyWindow, "scan window is empty");
  }
  // Even orders can jump at 0 without a breakpoint there.
  std::vector<RealScalar> candidates = polyseg::merge_breakpoints(f.breakpoints(), {RealScalar(0)});
  const int n = std::max(1, f.degree_bound());
  SingularityTable table;
  for (const auto& x : candidates) {
    if (!window.contains(x)) continue;
    JumpProfile jp = omega_at(f, x, n);
    for (int j = 1; j <= n; ++j) {
      const ExactValue& w = jp.omega[static_cast<std::size_t>(j - 1)];
      int s = w.sign();
      if (s == 0) continue;
      table.entries.push_back({x, j, s > 0 ? Kind::Root : Kind::Pole, w.abs()});
    }
  }
  return table;
}

bool is_well_defined_segment(const Polynomial& p) {
  int parity = -1;
  int sign = 0;
  for (int k = 1; k <= p.degree(); ++k) {
    int s = numeric::sign(p.coefficient(k));
    if (s == 0) continue;
    if (parity == -1) parity = k % 2;
    if (k % 2 != parity) return false;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

Classification classify(const PiecewiseFunction& f) {
  SingularityTable t = scan(f);
  Classification c;
  c.entire = std::none_of(t.entries.begin(), t.entries.end(), [](const Singularity& s) { return s.kind == Kind::Pole; });
  c.nowhere_vanishing = t.entries.empty();
  c.well_defined = std::all_of(f.segments().begin(), f.segments().end(), is_well_defined_segment);
  return c;
}

namespace {

// Jump of g across x (right minus left): minus the pole part of f's jump.
Polynomial compensating_jump(const PiecewiseFunction& f, const RealScalar& x, int n) {
  JumpProfile jp = omega_at(f, x, n);
  bool all_poles = true;
  bool any_pole = false;
  for (int j = 1; j <= n; ++j) {
    const auto& tau = jp.tau[static_cast<std::size_t>(j - 1)];
    if (tau.is_zero()) continue;
    bool pole = jp.omega[static_cast<std::size_t>(j - 1)].sign() < 0;
    all_poles = all_poles && pole;
    any_pole = any_pole || pole;
  }
  if (!any_pole) return {};
  auto loc = f.locate(x);
  if (all_poles) return f.segments()[loc.left] - f.segments()[loc.right];
  if (!x.is_rational())
    throw Error(ErrorCode::Unsupported,
                "pole at irrational breakpoint " + x.to_string() + " needs irrational coefficients in g");
  Polynomial out;
  for (int j = 1; j <= n; ++j) {
    if (jp.omega[static_cast<std::size_t>(j - 1)].sign() >= 0) continue;
    out -= Polynomial::shifted_power(x.rational(), j) * jp.tau[static_cast<std::size_t>(j - 1)].rational();
  }
  return out;
}

}  // namespace

Decomposition entire_decomposition(const PiecewiseFunction& f, const std::vector<Rational>& seed) {
  const int n = std::max(1, f.degree_bound());
  std::vector<Rational> coeffs(seed.begin(), seed.end());
  if (static_cast<int>(coeffs.size()) > n + 1)
    throw Error(ErrorCode::InvalidArgument, "seed has more than n+1 coefficients");
  Polynomial g_right0(coeffs);

  std::vector<RealScalar> bps = polyseg::merge_breakpoints(f.breakpoints(), {RealScalar(0)});
  auto zero_it = std::find_if(bps.begin(), bps.end(), [](const RealScalar& b) { return b.sign() == 0; });
  auto zero = static_cast<std::size_t>(zero_it - bps.begin());

  // segs[i] governs the cell left of bps[i]; segs[zero + 1] is the seed cell (0, next].
  std::vector<Polynomial> segs(bps.size() + 1);
  segs[zero + 1] = g_right0;
  for (std::size_t i = zero + 1; i < bps.size(); ++i) segs[i + 1] = segs[i] + compensating_jump(f, bps[i], n);

  // Across 0: b_{-1,j} = (-1)^{j+1} (b_{1,j} - omega_g^(j)(0)).
  JumpProfile at0 = omega_at(f, RealScalar(0), n);
  std::vector<Rational> left0(static_cast<std::size_t>(n) + 1);
  left0[0] = g_right0.coefficient(0);
  for (int j = 1; j <= n; ++j) {
    Rational wf = at0.omega[static_cast<std::size_t>(j - 1)].rational();
    Rational wg = sgn(wf) < 0 ? Rational(-wf) : Rational(0);
    Rational v = g_right0.coefficient(j) - wg;
    left0[static_cast<std::size_t>(j)] = (j % 2 == 1) ? v : Rational(-v);
  }
  segs[zero] = Polynomial(std::move(left0));
  for (std::size_t i = zero; i-- > 0;) segs[i] = segs[i + 1] - compensating_jump(f, bps[i], n);

  PiecewiseFunction g = PiecewiseFunction::from_trusted(std::move(bps), std::move(segs));
  PiecewiseFunction h = polyseg::linear_combine(f, g, Rational(1), Rational(1));
  return {std::move(h), std::move(g)};
}

JumpMatrix jump_matrix(const RealScalar& x0, int n, MatrixVariant variant) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "jump matrix order must be >= 1");
  auto [s_plus, s_minus] = side_signs(x0);
  JumpMatrix m{n, std::vector<std::vector<ExactValue>>(static_cast<std::size_t>(n),
                                                       std::vector<ExactValue>(static_cast<std::size_t>(n)))};
  for (int j = 1; j <= n; ++j) {
    int row_sign = 1;
    if (variant == MatrixVariant::DPlus) row_sign = signed_power(s_plus, j + 1);
    if (variant == MatrixVariant::DMinus) row_sign = signed_power(s_minus, j + 1);
    for (int k = j; k <= n; ++k) {
      Rational c(numeric::binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * row_sign);
      m.entries[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
          ExactValue::evaluate(Polynomial::monomial(c, k - j), x0);
    }
  }
  return m;
}

std::vector<ExactValue> jump_vector(const RealScalar& x0, int n, const Polynomial& right, const Polynomial& left) {
  JumpMatrix dp = jump_matrix(x0, n, MatrixVariant::DPlus);
  JumpMatrix dm = jump_matrix(x0, n, MatrixVariant::DMinus);
  std::vector<ExactValue> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    ExactValue acc;
    for (int k = 1; k <= n; ++k) {
      acc += dp.entries[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] * right.coefficient(k);
      acc -= dm.entries[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] * left.coefficient(k);
    }
    out[static_cast<std::size_t>(j - 1)] = acc;
  }
  return out;
}

}  // namespace tropnev::singular
