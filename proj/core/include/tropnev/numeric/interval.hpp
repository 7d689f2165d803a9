#pragma once

#include <string>

#include "tropnev/numeric/rational.hpp"

namespace tropnev::numeric {

// Closed interval with rational endpoints. A degenerate interval is an exact value.
class Interval {
 public:
  Interval() = default;
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT(implicit)
  Interval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  bool operator==(const Interval& other) const { return lo_ == other.lo_ && hi_ == other.hi_; }

  Interval operator-() const { return Interval(Rational(-hi_), Rational(-lo_)); }
  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);

  Interval abs() const;
  Interval positive_part() const;
  Interval pow(unsigned k) const;

  std::string to_string() const;
  std::string to_decimal(int digits) const;

 private:
  Rational lo_;
  Rational hi_;
};

Interval operator+(Interval a, const Interval& b);
Interval operator-(Interval a, const Interval& b);
Interval operator*(Interval a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

}  // namespace tropnev::numeric
