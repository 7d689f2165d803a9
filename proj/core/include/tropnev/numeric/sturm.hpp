#pragma once

#include <vector>

#include "tropnev/numeric/polynomial.hpp"

namespace tropnev::numeric {

class SturmSequence {
 public:
  // `p` must be square-free and nonzero.
  explicit SturmSequence(const Polynomial& p);

  int variations(const Rational& x) const;
  // Distinct roots in (a, b].
  int count_half_open(const Rational& a, const Rational& b) const;
  // Distinct roots in (a, b).
  int count_open(const Rational& a, const Rational& b) const;

  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

struct IsolatingInterval {
  Rational lo;
  Rational hi;
};

// Bound B with every real root in (-B, B).
Rational cauchy_bound(const Polynomial& p);

// Disjoint open intervals (lo, hi), ascending, each holding exactly one distinct
// real root of p inside the open window (lo, hi). Endpoints are never roots.
std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p, const Rational& lo, const Rational& hi);

// Same over the whole real line.
std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p);

// Bisect an isolating interval of the square-free `p` until its width is below eps.
// Returns a degenerate interval if a bisection point hits the root exactly.
IsolatingInterval refine_root(const Polynomial& p, IsolatingInterval iv, const Rational& eps);

}  // namespace tropnev::numeric
