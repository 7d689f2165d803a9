#include "tropnev/numeric/polynomial.hpp"

#include <algorithm>

#include "tropnev/error.hpp"

namespace tropnev::numeric {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_power(const Rational& a, int k) {
  Polynomial base(std::vector<Rational>{Rational(-a), Rational(1)});
  return base.pow(static_cast<unsigned>(k));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Interval Polynomial::operator()(const Interval& x) const {
  if (x.is_point()) return Interval((*this)(x.lo()));
  // Centered Horner form: expand around the midpoint, then bound each power.
  Rational c = x.midpoint();
  Polynomial shifted = taylor_shift(c);
  Interval dx = x - Interval(c);
  Interval acc(Rational(0));
  const auto& cs = shifted.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (sgn(cs[k]) == 0) continue;
    acc += Interval(cs[k]) * dx.pow(static_cast<unsigned>(k));
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::taylor_shift(const Rational& c) const {
  std::vector<Rational> a = coeffs_;
  const std::size_t n = a.size();
  if (sgn(c) == 0 || n <= 1) return *this;
  // Repeated synthetic division.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) a[k - 1] += c * a[k];
  return Polynomial(std::move(a));
}

Polynomial Polynomial::reflect() const {
  std::vector<Rational> a = coeffs_;
  for (std::size_t k = 1; k < a.size(); k += 2) a[k] = -a[k];
  return Polynomial(std::move(a));
}

Polynomial Polynomial::taylor_coefficient_poly(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return {};
  std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(j));
  for (std::size_t k = static_cast<std::size_t>(j); k < coeffs_.size(); ++k)
    out[k - static_cast<std::size_t>(j)] =
        coeffs_[k] * Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Polynomial Polynomial::square_free() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free part of zero");
  Polynomial g = gcd(*this, derivative());
  return divmod(*this, g).first.monic();
}

std::vector<Integer> Polynomial::primitive_integer() const {
  Integer lcm_den(1);
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content(0);
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0) {
    if (sgn(leading()) < 0) content = -content;
    for (auto& v : out) v /= content;
  }
  return out;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = numeric::abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) out += numeric::to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lead = bc.back();
  for (int k = a.degree(); k >= db; --k) {
    Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (sgn(factor) == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= factor * bc[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace tropnev::numeric
