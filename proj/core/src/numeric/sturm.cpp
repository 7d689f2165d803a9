#include "tropnev/numeric/sturm.hpp"

#include "tropnev/error.hpp"

namespace tropnev::numeric {

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of zero");
  chain_.push_back(p);
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    Polynomial r = -(chain_[chain_.size() - 2] % chain_.back());
    // Positive rescaling keeps signs and keeps coefficients small.
    if (!r.is_zero()) r *= Rational(1) / numeric::abs(r.leading());
    next = std::move(r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  return variations(a) - variations(b);
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  int n = count_half_open(a, b);
  if (sgn(base()(b)) == 0) --n;
  return n;
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of zero");
  Rational lead = numeric::abs(p.leading());
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = numeric::abs(p.coefficient(k)) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

// A point strictly inside (a, b) that is not a root of p.
Rational split_point(const Polynomial& p, const Rational& a, const Rational& b) {
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rational t(num, den);
      t.canonicalize();
      if (t.get_den() != den) continue;
      Rational m = a + (b - a) * t;
      if (sgn(p(m)) != 0) return m;
    }
  }
}

void isolate_rec(const SturmSequence& s, const Rational& a, const Rational& b, int count,
                 std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  const Polynomial& p = s.base();
  if (count == 1) {
    Rational lo = a;
    Rational hi = b;
    // Only the outer window endpoints can be roots; pull them inwards.
    if (sgn(p(lo)) == 0) {
      Rational d = (hi - lo) / 2;
      while (true) {
        Rational cand = lo + d;
        if (sgn(p(cand)) != 0 && s.count_open(lo, cand) == 0 && s.count_open(cand, hi) == 1) {
          lo = cand;
          break;
        }
        d /= 2;
      }
    }
    if (sgn(p(hi)) == 0) {
      Rational d = (hi - lo) / 2;
      while (true) {
        Rational cand = hi - d;
        if (sgn(p(cand)) != 0 && s.count_open(cand, hi) == 0 && s.count_open(lo, cand) == 1) {
          hi = cand;
          break;
        }
        d /= 2;
      }
    }
    out.push_back({lo, hi});
    return;
  }
  Rational m = split_point(p, a, b);
  int left = s.count_open(a, m);
  isolate_rec(s, a, m, left, out);
  isolate_rec(s, m, b, count - left, out);
}

}  // namespace

std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  if (lo >= hi) throw Error(ErrorCode::EmptyWindow, "isolation window has lo >= hi");
  std::vector<IsolatingInterval> out;
  if (p.is_constant()) return out;
  SturmSequence s(p.square_free());
  isolate_rec(s, lo, hi, s.count_open(lo, hi), out);
  return out;
}

std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  if (p.is_constant()) return {};
  Rational b = cauchy_bound(p);
  return sturm_isolate(p, Rational(-b), b);
}

IsolatingInterval refine_root(const Polynomial& p, IsolatingInterval iv, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorCode::NonPositiveEps, "refinement width must be positive");
  int s_lo = sgn(p(iv.lo));
  while (iv.hi - iv.lo >= eps) {
    Rational m = (iv.lo + iv.hi) / 2;
    int s_m = sgn(p(m));
    if (s_m == 0) return {m, m};
    if (s_m == s_lo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

}  // namespace tropnev::numeric
