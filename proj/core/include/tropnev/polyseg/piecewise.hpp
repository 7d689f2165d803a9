#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropnev/numeric/polynomial.hpp"
#include "tropnev/numeric/real_scalar.hpp"

namespace tropnev::polyseg {

using numeric::ExactValue;
using numeric::Polynomial;
using numeric::Rational;
using numeric::RealScalar;

enum class Side { Left, Right };

// Continuous piecewise polynomial on the real line. segments[0] governs
// (-inf, b_0], segments[i] governs [b_{i-1}, b_i], the last one [b_last, +inf).
class PiecewiseFunction {
 public:
  PiecewiseFunction() : segments_{Polynomial()} {}
  PiecewiseFunction(Polynomial p) : segments_{std::move(p)} {}  // NOLINT(implicit)

  // Validates ordering, segment count and continuity, then fuses identical
  // neighbours. Throws DiscontinuityDetected, InvalidArgument.
  PiecewiseFunction(std::vector<RealScalar> breakpoints, std::vector<Polynomial> segments);

  // For pieces that are continuous by construction: skips the continuity check
  // but still fuses identical neighbours.
  static PiecewiseFunction from_trusted(std::vector<RealScalar> breakpoints, std::vector<Polynomial> segments);

  const std::vector<RealScalar>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& segments() const { return segments_; }
  std::size_t segment_count() const { return segments_.size(); }
  bool is_polynomial() const { return segments_.size() == 1; }
  // n = max segment degree (0 for constants, including the zero function).
  int degree_bound() const;

  struct Location {
    std::size_t left;   // segment governing x^-
    std::size_t right;  // segment governing x^+
    bool at_breakpoint() const { return left != right; }
  };
  Location locate(const RealScalar& x) const;
  const Polynomial& segment_at(const RealScalar& x, Side side) const;

  Rational operator()(const Rational& x) const;
  ExactValue value(const RealScalar& x) const;

  bool operator==(const PiecewiseFunction& other) const;
  bool operator!=(const PiecewiseFunction& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::vector<RealScalar> breakpoints_;
  std::vector<Polynomial> segments_;
};

// Builds a function from raw pieces: checks ordering and continuity, fuses
// identical adjacent segments. Idempotent on normalized input.
PiecewiseFunction normalize(std::vector<RealScalar> breakpoints, std::vector<Polynomial> segments);
PiecewiseFunction normalize(const PiecewiseFunction& f);

}  // namespace tropnev::polyseg
