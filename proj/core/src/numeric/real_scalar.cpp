#include "tropnev/numeric/real_scalar.hpp"

#include <algorithm>

#include "tropnev/error.hpp"

namespace tropnev::numeric {

namespace {

Rational leading_integer_coefficient(const Polynomial& p) {
  auto ints = p.primitive_integer();
  return Rational(ints.back());
}

}  // namespace

RealScalar RealScalar::root_of(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root of the zero polynomial");
  if (lo >= hi) throw Error(ErrorCode::EmptyWindow, "isolating interval has lo >= hi");
  Polynomial sf = p.square_free();
  SturmSequence s(sf);
  if (s.count_open(lo, hi) != 1)
    throw Error(ErrorCode::InvalidArgument, "interval does not isolate exactly one root");
  if (sf.degree() == 1) return RealScalar(Rational(-sf.coefficient(0) / sf.coefficient(1)));

  IsolatingInterval iv{lo, hi};
  if (sgn(sf(lo)) == 0 || sgn(sf(hi)) == 0) iv = sturm_isolate(sf, lo, hi).front();

  // A rational root has denominator dividing the leading integer coefficient L,
  // and two such rationals are at least 1/L^2 apart.
  Rational lead = leading_integer_coefficient(sf);
  Rational width = Rational(1) / (lead * lead * 2);
  IsolatingInterval tight = refine_root(sf, iv, width);
  if (tight.lo == tight.hi) return RealScalar(tight.lo);
  Rational candidate = simplest_between(tight.lo, tight.hi);
  if (sgn(sf(candidate)) == 0) return RealScalar(candidate);

  auto data = std::make_shared<Algebraic>();
  data->poly = sf;
  data->lo = iv.lo;
  data->hi = iv.hi;
  return RealScalar(std::shared_ptr<const Algebraic>(std::move(data)));
}

const Rational& RealScalar::rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value is irrational: " + to_string());
  return std::get<Rational>(value_);
}

Polynomial RealScalar::polynomial() const {
  if (is_rational()) return Polynomial(std::vector<Rational>{Rational(-rational()), Rational(1)});
  return alg().poly;
}

Interval RealScalar::enclosure() const {
  if (is_rational()) return Interval(rational());
  return Interval(alg().lo, alg().hi);
}

Interval RealScalar::enclosure(const Rational& eps) const {
  if (is_rational()) return Interval(rational());
  tighten(eps);
  return enclosure();
}

void RealScalar::tighten(const Rational& eps) const {
  const Algebraic& a = alg();
  if (a.hi - a.lo < eps) return;
  IsolatingInterval iv = refine_root(a.poly, {a.lo, a.hi}, eps);
  a.lo = iv.lo;
  a.hi = iv.hi;
}

int RealScalar::sign() const {
  if (is_rational()) return sgn(rational());
  const Algebraic& a = alg();
  // Zero is rational, so the isolating interval eventually excludes it.
  while (sgn(a.lo) < 0 && sgn(a.hi) > 0) tighten((a.hi - a.lo) / 2);
  return sgn(a.lo) >= 0 ? 1 : -1;
}

RealScalar RealScalar::operator-() const {
  if (is_rational()) return RealScalar(Rational(-rational()));
  auto data = std::make_shared<Algebraic>();
  data->poly = alg().poly.reflect().monic();
  data->lo = -alg().hi;
  data->hi = -alg().lo;
  return RealScalar(std::shared_ptr<const Algebraic>(std::move(data)));
}

RealScalar RealScalar::abs() const { return sign() < 0 ? -*this : *this; }

RealScalar RealScalar::operator+(const Rational& c) const {
  if (is_rational()) return RealScalar(Rational(rational() + c));
  if (sgn(c) == 0) return *this;
  auto data = std::make_shared<Algebraic>();
  data->poly = alg().poly.taylor_shift(Rational(-c));
  data->lo = alg().lo + c;
  data->hi = alg().hi + c;
  return RealScalar(std::shared_ptr<const Algebraic>(std::move(data)));
}

bool RealScalar::shares_generator(const RealScalar& other) const {
  if (is_rational() || other.is_rational()) return is_rational() && other.is_rational();
  const auto& a = std::get<std::shared_ptr<const Algebraic>>(value_);
  const auto& b = std::get<std::shared_ptr<const Algebraic>>(other.value_);
  if (a == b) return true;
  return a->poly == b->poly && compare(*this, other) == 0;
}

std::string RealScalar::to_string() const {
  if (is_rational()) return numeric::to_string(rational());
  return "root(" + alg().poly.to_string() + ", " + numeric::to_string(alg().lo) + ", " +
         numeric::to_string(alg().hi) + ")";
}

std::string RealScalar::to_decimal(int digits) const {
  if (is_rational()) return numeric::to_decimal(rational(), digits);
  Interval e = enclosure(pow2(-4 * (digits + 2)));
  return numeric::to_decimal(e.midpoint(), digits);
}

std::strong_ordering compare(const RealScalar& a, const RealScalar& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational(), b.rational()) <=> 0;
  if (a.is_rational()) return 0 <=> compare(b, a);
  const auto& A = a.alg();
  if (b.is_rational()) {
    const Rational& q = b.rational();
    if (q <= A.lo) return std::strong_ordering::greater;
    if (q >= A.hi) return std::strong_ordering::less;
    int s_q = sgn(A.poly(q));
    if (s_q == 0) return std::strong_ordering::equal;
    // Root lies in (lo, q) exactly when p changes sign there.
    return sgn(A.poly(A.lo)) != s_q ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto& B = b.alg();
  if (&A == &B) return std::strong_ordering::equal;
  if (A.hi <= B.lo) return std::strong_ordering::less;
  if (B.hi <= A.lo) return std::strong_ordering::greater;
  Polynomial g = gcd(A.poly, B.poly);
  if (!g.is_constant()) {
    Rational lo = std::max(A.lo, B.lo);
    Rational hi = std::min(A.hi, B.hi);
    if (SturmSequence(g).count_open(lo, hi) >= 1) return std::strong_ordering::equal;
  }
  while (true) {
    a.tighten((A.hi - A.lo) / 2);
    b.tighten((B.hi - B.lo) / 2);
    if (A.hi <= B.lo) return std::strong_ordering::less;
    if (B.hi <= A.lo) return std::strong_ordering::greater;
  }
}

Interval refine(const RealScalar& x, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorCode::NonPositiveEps, "refinement width must be positive");
  return x.enclosure(eps);
}

Rational rational_between(const RealScalar& a, const RealScalar& b) {
  if (compare(a, b) >= 0) throw Error(ErrorCode::InvalidArgument, "rational_between needs a < b");
  Interval ea = a.enclosure();
  Interval eb = b.enclosure();
  Rational w = std::max(ea.width(), eb.width());
  while (ea.hi() >= eb.lo()) {
    w /= 2;
    ea = a.enclosure(w);
    eb = b.enclosure(w);
  }
  return simplest_between(ea.hi() + (eb.lo() - ea.hi()) / 4, eb.lo() - (eb.lo() - ea.hi()) / 4);
}

// ---------------------------------------------------------------------------

ExactValue::ExactValue(Polynomial q, RealScalar at) : q_(std::move(q)), at_(std::move(at)) {
  if (at_.is_rational()) {
    q_ = Polynomial::constant(q_(at_.rational()));
    at_ = RealScalar();
    return;
  }
  q_ = q_ % at_.alg().poly;
  if (q_.is_constant()) at_ = RealScalar();
}

ExactValue ExactValue::evaluate(const Polynomial& q, const RealScalar& at) { return ExactValue(q, at); }

Rational ExactValue::rational() const {
  if (!is_rational()) {
    if (is_zero()) return Rational(0);
    throw Error(ErrorCode::InvalidArgument, "value is irrational");
  }
  return q_.coefficient(0);
}

int ExactValue::sign() const {
  if (is_rational()) return sgn(q_.coefficient(0));
  const auto& A = at_.alg();
  Polynomial g = gcd(q_, A.poly);
  if (!g.is_constant() && SturmSequence(g).count_open(A.lo, A.hi) >= 1) return 0;
  SturmSequence s(q_.square_free());
  while (s.count_open(A.lo, A.hi) > 0) at_.tighten((A.hi - A.lo) / 2);
  return sgn(q_((A.lo + A.hi) / 2));
}

Interval ExactValue::enclosure(const Rational& width) const {
  if (is_rational()) return Interval(q_.coefficient(0));
  Rational w = width;
  while (true) {
    Interval e = q_(at_.enclosure(w));
    if (e.width() <= width) return e;
    w /= 16;
  }
}

ExactValue ExactValue::operator-() const { return ExactValue(-q_, at_); }

ExactValue ExactValue::abs() const { return sign() < 0 ? -*this : *this; }

void ExactValue::unify(const ExactValue& rhs) {
  if (rhs.is_rational() || is_rational()) {
    if (is_rational() && !rhs.is_rational()) at_ = rhs.at_;
    return;
  }
  if (!at_.shares_generator(rhs.at_))
    throw Error(ErrorCode::Unsupported, "arithmetic on exact values at different irrational points");
}

ExactValue& ExactValue::operator+=(const ExactValue& rhs) {
  unify(rhs);
  *this = ExactValue(q_ + rhs.q_, at_);
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& rhs) {
  unify(rhs);
  *this = ExactValue(q_ - rhs.q_, at_);
  return *this;
}

ExactValue& ExactValue::operator*=(const ExactValue& rhs) {
  unify(rhs);
  *this = ExactValue(q_ * rhs.q_, at_);
  return *this;
}

ExactValue& ExactValue::operator*=(const Rational& c) {
  *this = ExactValue(q_ * c, at_);
  return *this;
}

std::string ExactValue::to_string(int digits) const {
  if (is_rational()) return numeric::to_string(q_.coefficient(0));
  return "~" + numeric::to_decimal(enclosure(pow2(-4 * (digits + 2))).midpoint(), digits);
}

ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
ExactValue operator*(ExactValue a, const Rational& c) { return a *= c; }

const Rational& default_precision() {
  static const Rational eps = pow2(-96);
  return eps;
}

}  // namespace tropnev::numeric
