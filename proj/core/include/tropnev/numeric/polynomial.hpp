#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropnev/numeric/interval.hpp"
#include "tropnev/numeric/rational.hpp"

namespace tropnev::numeric {

// Dense univariate polynomial over Q, coefficients in ascending order.
// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  // (x - a)^k
  static Polynomial shifted_power(const Rational& a, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Interval operator()(const Interval& x) const;

  Polynomial derivative() const;
  // p(x + c)
  Polynomial taylor_shift(const Rational& c) const;
  // p(-x)
  Polynomial reflect() const;
  // p^(j) / j! as a polynomial; its value at a is the j-th Taylor coefficient at a.
  Polynomial taylor_coefficient_poly(int j) const;
  Polynomial pow(unsigned k) const;
  Polynomial monic() const;
  // p / gcd(p, p'), monic.
  Polynomial square_free() const;
  // Integer multiple with coprime integer coefficients and positive leading term.
  std::vector<Integer> primitive_integer() const;
  // Composition p(q(x)).
  Polynomial compose(const Polynomial& q) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);

// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace tropnev::numeric
