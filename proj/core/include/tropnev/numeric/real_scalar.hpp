#pragma once

#include <compare>
#include <memory>
#include <string>
#include <variant>

#include "tropnev/numeric/interval.hpp"
#include "tropnev/numeric/polynomial.hpp"
#include "tropnev/numeric/sturm.hpp"

namespace tropnev::numeric {

// Exact real: either a rational or an irrational root of a square-free rational
// polynomial, pinned down by an isolating interval.
class RealScalar {
 public:
  RealScalar() : value_(Rational(0)) {}
  RealScalar(const Rational& q) : value_(q) {}  // NOLINT(implicit)
  RealScalar(long v) : value_(Rational(v)) {}   // NOLINT(implicit)

  // The unique root of p in the open interval (lo, hi). Rational roots come back
  // as exact rationals. Throws InvalidArgument if (lo, hi) does not isolate a root.
  static RealScalar root_of(const Polynomial& p, const Rational& lo, const Rational& hi);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;

  // Defining polynomial: x - q for rationals.
  Polynomial polynomial() const;
  // Current isolating interval (a point for rationals).
  Interval enclosure() const;
  // Enclosure of width below eps.
  Interval enclosure(const Rational& eps) const;

  int sign() const;
  RealScalar operator-() const;
  RealScalar abs() const;
  RealScalar operator+(const Rational& c) const;
  RealScalar operator-(const Rational& c) const { return *this + Rational(-c); }

  // True when both are rational, or both share the same algebraic data.
  bool shares_generator(const RealScalar& other) const;

  std::string to_string() const;
  std::string to_decimal(int digits) const;

 private:
  struct Algebraic {
    Polynomial poly;
    // Tightened in place by refinement; the represented number never changes.
    mutable Rational lo;
    mutable Rational hi;
  };

  explicit RealScalar(std::shared_ptr<const Algebraic> a) : value_(std::move(a)) {}
  const Algebraic& alg() const { return *std::get<std::shared_ptr<const Algebraic>>(value_); }
  void tighten(const Rational& eps) const;

  friend std::strong_ordering compare(const RealScalar& a, const RealScalar& b);
  friend class ExactValue;

  std::variant<Rational, std::shared_ptr<const Algebraic>> value_;
};

std::strong_ordering compare(const RealScalar& a, const RealScalar& b);
inline std::strong_ordering operator<=>(const RealScalar& a, const RealScalar& b) { return compare(a, b); }
inline bool operator==(const RealScalar& a, const RealScalar& b) { return compare(a, b) == 0; }

// Isolating interval of width below eps (degenerate for rationals).
Interval refine(const RealScalar& x, const Rational& eps);

// A rational strictly between a < b.
Rational rational_between(const RealScalar& a, const RealScalar& b);

// Exact value q(alpha) of a rational polynomial at a RealScalar, reduced modulo
// the defining polynomial of alpha. Arithmetic is closed for values at the same point.
class ExactValue {
 public:
  ExactValue() : q_(), at_() {}
  ExactValue(const Rational& c) : q_(Polynomial::constant(c)), at_() {}  // NOLINT(implicit)
  ExactValue(long c) : ExactValue(Rational(c)) {}                        // NOLINT(implicit)

  static ExactValue evaluate(const Polynomial& q, const RealScalar& at);

  bool is_rational() const { return q_.is_constant(); }
  Rational rational() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Interval enclosure(const Rational& width) const;

  // Representation: polynomial in the generator, and the generator.
  const Polynomial& polynomial() const { return q_; }
  const RealScalar& point() const { return at_; }

  ExactValue operator-() const;
  ExactValue abs() const;
  ExactValue& operator+=(const ExactValue& rhs);
  ExactValue& operator-=(const ExactValue& rhs);
  ExactValue& operator*=(const ExactValue& rhs);
  ExactValue& operator*=(const Rational& c);

  std::string to_string(int digits = 17) const;

 private:
  ExactValue(Polynomial q, RealScalar at);
  void unify(const ExactValue& rhs);

  Polynomial q_;
  RealScalar at_;
};

ExactValue operator+(ExactValue a, const ExactValue& b);
ExactValue operator-(ExactValue a, const ExactValue& b);
ExactValue operator*(ExactValue a, const ExactValue& b);
ExactValue operator*(ExactValue a, const Rational& c);

// Default enclosure width for functionals that touch irrational points.
const Rational& default_precision();

}  // namespace tropnev::numeric
