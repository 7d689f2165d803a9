#include "tropnev/nevanlinna/hyperexp.hpp"

#include <algorithm>

#include "tropnev/error.hpp"

namespace tropnev::nevanlinna {

using numeric::Polynomial;
using numeric::Rational;
using numeric::RealScalar;

namespace {

Rational int_pow(const Rational& base, long e) {
  if (e >= 0) return numeric::pow(base, static_cast<unsigned>(e));
  return numeric::pow(Rational(1 / base), static_cast<unsigned>(-e));
}

// sgn^{n+1}(m^+): sgn(m^+) is -1 only for negative m.
Rational side_sign(int n, long m) { return (m < 0 && n % 2 == 0) ? Rational(-1) : Rational(1); }

}  // namespace

HyperExp hyperexp(int n, const Rational& alpha, long lower, long upper, long cutoff) {
  if (n < 1) throw Error(ErrorCode::BadWindow, "order n must be at least 1");
  if (cmp(alpha, 1) <= 0) throw Error(ErrorCode::BadWindow, "alpha must exceed 1");
  if (lower <= 0 || upper <= 0 || cutoff <= 0) throw Error(ErrorCode::BadWindow, "window bounds and cutoff must be positive");
  if (cutoff < lower) throw Error(ErrorCode::BadWindow, "cutoff must be at least the lower window bound");

  const long start = std::min(-cutoff, -lower - 1);
  const long k1 = -start + 1;  // first dropped index is -k1
  const Rational q = numeric::pow(numeric::make_rational(k1 + 1, k1), static_cast<unsigned>(n - 1)) / alpha;
  if (cmp(q, 1) >= 0) throw Error(ErrorCode::BadWindow, "tail ratio does not contract; raise the cutoff");

  HyperExp out;
  out.n = n;
  out.alpha = alpha;
  out.lower = lower;
  out.upper = upper;
  out.cutoff = cutoff;
  out.tail_bound = Rational(n) * numeric::pow(Rational(k1), static_cast<unsigned>(n - 1)) * int_pow(alpha, -k1) / (1 - q);

  auto increment = [&](long i) -> Rational {
    return side_sign(n, i) * int_pow(alpha, i) *
           (numeric::pow(Rational(i + 1), static_cast<unsigned>(n)) - numeric::pow(Rational(i), static_cast<unsigned>(n)));
  };
  Rational acc = 0;
  for (long i = start; i < -lower - 1; ++i) acc += increment(i);

  std::vector<RealScalar> bps;
  std::vector<Polynomial> segs;
  const Polynomial xn = Polynomial::monomial(1, n);
  for (long m = -lower - 1; m <= upper; ++m) {
    if (m > -lower - 1) bps.emplace_back(Rational(m));
    const Rational scale = side_sign(n, m) * int_pow(alpha, m);
    Polynomial seg = (xn - Polynomial::constant(numeric::pow(Rational(m), static_cast<unsigned>(n)))) * scale;
    segs.push_back(seg + Polynomial::constant(acc));
    acc += increment(m);
  }
  out.f = polyseg::PiecewiseFunction(std::move(bps), std::move(segs));
  return out;
}

Rational hyperexp_jump(int n, const Rational& alpha, long m, int j) {
  const long am = m < 0 ? -m : m;
  const Rational mag = (n == j) ? Rational(1) : numeric::pow(Rational(am), static_cast<unsigned>(n - j));
  return Rational(numeric::binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) * mag * int_pow(alpha, m - 1) *
         (alpha - 1);
}

}  // namespace tropnev::nevanlinna
