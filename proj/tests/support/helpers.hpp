#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tropnev/numeric/polynomial.hpp"
#include "tropnev/numeric/real_scalar.hpp"
#include "tropnev/polyseg/piecewise.hpp"

namespace testing_support {

using tropnev::numeric::Polynomial;
using tropnev::numeric::Rational;
using tropnev::numeric::RealScalar;
using tropnev::polyseg::PiecewiseFunction;

inline Rational Q(std::string_view text) { return tropnev::numeric::parse_rational(text); }
inline Rational Q(long n, long d = 1) { return tropnev::numeric::make_rational(n, d); }

inline Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

inline PiecewiseFunction pw(std::vector<Rational> bps, std::vector<Polynomial> segs) {
  return PiecewiseFunction(std::vector<RealScalar>(bps.begin(), bps.end()), std::move(segs));
}

// sqrt(k) for non-square k.
inline RealScalar sqrt_of(long k) {
  return RealScalar::root_of(Polynomial{-k, 0, 1}, Rational(0), Rational(k + 1));
}

}  // namespace testing_support
