#include "tropnev/numeric/interval.hpp"

#include <algorithm>

#include "tropnev/error.hpp"

namespace tropnev::numeric {

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

Interval& Interval::operator+=(const Interval& rhs) {
  lo_ += rhs.lo_;
  hi_ += rhs.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  Rational lo = lo_ - rhs.hi_;
  Rational hi = hi_ - rhs.lo_;
  lo_ = lo;
  hi_ = hi;
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  if (is_point() && rhs.is_point()) {
    lo_ *= rhs.lo_;
    hi_ = lo_;
    return *this;
  }
  Rational a = lo_ * rhs.lo_;
  Rational b = lo_ * rhs.hi_;
  Rational c = hi_ * rhs.lo_;
  Rational d = hi_ * rhs.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval Interval::abs() const {
  if (sgn(lo_) >= 0) return *this;
  if (sgn(hi_) <= 0) return -*this;
  return Interval(Rational(0), std::max(Rational(-lo_), hi_));
}

Interval Interval::positive_part() const {
  return Interval(std::max(lo_, Rational(0)), std::max(hi_, Rational(0)));
}

Interval Interval::pow(unsigned k) const {
  if (k == 0) return Interval(Rational(1));
  if (is_point()) return Interval(numeric::pow(lo_, k));
  if (k % 2 == 1) return Interval(numeric::pow(lo_, k), numeric::pow(hi_, k));
  Interval a = abs();
  return Interval(numeric::pow(a.lo_, k), numeric::pow(a.hi_, k));
}

std::string Interval::to_string() const {
  if (is_point()) return numeric::to_string(lo_);
  return "[" + numeric::to_string(lo_) + ", " + numeric::to_string(hi_) + "]";
}

std::string Interval::to_decimal(int digits) const {
  if (is_point()) return numeric::to_decimal(lo_, digits);
  return numeric::to_decimal(midpoint(), digits);
}

Interval operator+(Interval a, const Interval& b) { return a += b; }
Interval operator-(Interval a, const Interval& b) { return a -= b; }
Interval operator*(Interval a, const Interval& b) { return a *= b; }

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

}  // namespace tropnev::numeric
