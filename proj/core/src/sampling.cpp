#include "tropnev/sampling.hpp"

#include <algorithm>
#include <set>

#include "tropnev/error.hpp"

namespace tropnev::sampling {

using numeric::RealScalar;

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty integer range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

bool Sampler::coin(int numerator, int denominator) { return integer(0, denominator - 1) < numerator; }

Rational Sampler::rational(std::int64_t magnitude, std::int64_t max_den) {
  std::int64_t den = integer(1, max_den);
  std::int64_t num = integer(-magnitude * den, magnitude * den);
  return numeric::make_rational(num, den);
}

Rational Sampler::rational_in(const Rational& lo, const Rational& hi, std::int64_t max_den) {
  std::int64_t den = integer(1, max_den);
  Rational steps = (hi - lo) * den;
  auto n = static_cast<std::int64_t>(numeric::floor(steps).get_si());
  Rational out = lo + Rational(integer(0, n)) / den;
  return out;
}

Polynomial Sampler::polynomial(int degree, std::int64_t magnitude) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(rational(magnitude, 3));
  return Polynomial(std::move(c));
}

std::vector<Rational> Sampler::breakpoints(int count, std::int64_t width, std::int64_t max_den) {
  std::set<Rational> pts;
  int guard = 0;
  while (static_cast<int>(pts.size()) < count && guard++ < 100 * (count + 1)) pts.insert(rational(width, max_den));
  return {pts.begin(), pts.end()};
}

PiecewiseFunction Sampler::piecewise(int degree, int breakpoint_count, std::int64_t width) {
  auto bps = breakpoints(breakpoint_count, width);
  std::vector<Polynomial> segs{polynomial(degree)};
  for (const auto& b : bps) {
    Polynomial next = segs.back();
    for (int j = 1; j <= degree; ++j)
      if (coin(2, 3)) next += Polynomial::shifted_power(b, j) * rational(4, 2);
    segs.push_back(std::move(next));
  }
  return PiecewiseFunction::from_trusted({bps.begin(), bps.end()}, std::move(segs));
}

PiecewiseFunction Sampler::entire(int degree, int breakpoint_count, std::int64_t width) {
  auto bps = breakpoints(breakpoint_count, width);
  auto jump = [&]() { return coin(2, 3) ? numeric::make_rational(integer(0, 8), integer(1, 3)) : Rational(0); };

  std::vector<Rational> neg;
  std::vector<Rational> pos;
  bool has_zero = false;
  for (const auto& b : bps) {
    if (sgn(b) < 0) neg.push_back(b);
    if (sgn(b) > 0) pos.push_back(b);
    if (sgn(b) == 0) has_zero = true;
  }

  // Segment left of (or containing) 0.
  std::vector<Rational> c0;
  for (int k = 0; k <= degree; ++k) {
    Rational c = rational(4, 3);
    if (!has_zero && k >= 2 && k % 2 == 0) c = numeric::abs(c);
    c0.push_back(c);
  }
  Polynomial left0(c0);
  Polynomial right0 = left0;
  if (has_zero) {
    for (int j = 1; j <= degree; ++j) {
      // odd j: a_j - b_j >= 0; even j: a_j + b_j >= 0.
      Rational b = left0.coefficient(j);
      Rational a = (j % 2 == 1) ? Rational(b + jump()) : Rational(-b + jump());
      right0 += Polynomial::monomial(a - b, j);
    }
  }

  std::vector<Polynomial> right_side{right0};
  for (const auto& b : pos) {
    Polynomial next = right_side.back();
    for (int j = 1; j <= degree; ++j) next += Polynomial::shifted_power(b, j) * jump();
    right_side.push_back(std::move(next));
  }
  std::vector<Polynomial> left_side{left0};
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
    Polynomial prev = left_side.back();
    for (int j = 1; j <= degree; ++j) {
      // omega = sgn(x)^{j+1} tau with x < 0.
      Rational tau = jump();
      if (j % 2 == 0) tau = -tau;
      prev -= Polynomial::shifted_power(*it, j) * tau;
    }
    left_side.push_back(std::move(prev));
  }

  std::vector<RealScalar> out_bps;
  std::vector<Polynomial> segs(left_side.rbegin(), left_side.rend());
  for (const auto& b : neg) out_bps.emplace_back(b);
  if (has_zero) {
    out_bps.emplace_back(Rational(0));
    segs.push_back(right0);
  }
  for (std::size_t i = 0; i < pos.size(); ++i) {
    out_bps.emplace_back(pos[i]);
    segs.push_back(right_side[i + 1]);
  }
  return PiecewiseFunction::from_trusted(std::move(out_bps), std::move(segs));
}

PiecewiseFunction Sampler::nowhere_vanishing(int degree) {
  Polynomial left = polynomial(degree, 4);
  Polynomial right = Polynomial::constant(left.coefficient(0));
  for (int k = 1; k <= degree; ++k) {
    Rational c = left.coefficient(k);
    right += Polynomial::monomial(k % 2 == 1 ? c : Rational(-c), k);
  }
  return PiecewiseFunction::from_trusted({RealScalar(0)}, {left, right});
}

PiecewiseFunction Sampler::well_defined(int degree, int breakpoint_count, std::int64_t width) {
  auto bps = breakpoints(breakpoint_count, width);
  auto shape = [&]() {
    int d = static_cast<int>(integer(1, degree));
    int parity = d % 2;
    int s = coin() ? 1 : -1;
    Polynomial p;
    for (int k = 1; k <= d; ++k) {
      if (k % 2 != parity) continue;
      if (k != d && coin()) continue;
      p += Polynomial::monomial(numeric::make_rational(s * integer(k == d ? 1 : 0, 4), integer(1, 3)), k);
    }
    return p;
  };
  std::vector<Polynomial> segs{shape() + Polynomial::constant(rational(3, 2))};
  for (const auto& b : bps) {
    Polynomial next = shape();
    Rational c = segs.back()(b) - next(b);
    segs.push_back(next + Polynomial::constant(c));
  }
  return PiecewiseFunction::from_trusted({bps.begin(), bps.end()}, std::move(segs));
}

PiecewiseFunction Sampler::convex_linear(int roots, std::int64_t width) {
  auto bps = breakpoints(roots, width, 2);
  Rational slope = rational(3, 2);
  std::vector<Polynomial> segs{Polynomial(std::vector<Rational>{rational(3, 2), slope})};
  for (const auto& b : bps) {
    Rational step = numeric::make_rational(integer(1, 6), integer(1, 2));
    segs.push_back(segs.back() + Polynomial::shifted_power(b, 1) * step);
  }
  return PiecewiseFunction::from_trusted({bps.begin(), bps.end()}, std::move(segs));
}

}  // namespace tropnev::sampling
