#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropnev/polyseg/piecewise.hpp"

namespace tropnev::singular {

using numeric::ExactValue;
using numeric::Polynomial;
using numeric::Rational;
using numeric::RealScalar;
using polyseg::PiecewiseFunction;

// omega[j-1] and tau[j-1] hold the order-j jumps, j = 1..n.
struct JumpProfile {
  RealScalar location;
  std::vector<ExactValue> omega;
  std::vector<ExactValue> tau;
};

// n defaults to the degree bound of f.
JumpProfile omega_at(const PiecewiseFunction& f, const RealScalar& x);
JumpProfile omega_at(const PiecewiseFunction& f, const RealScalar& x, int n);

enum class Kind { Root, Pole };
std::string to_string(Kind kind);

struct Singularity {
  RealScalar location;
  int order = 0;
  Kind kind = Kind::Root;
  ExactValue multiplicity;  // |omega|, always > 0
};

// Entries sorted by location, then order, roots before poles.
struct SingularityTable {
  std::vector<Singularity> entries;

  std::vector<Singularity> select(int order, Kind kind) const;
  std::size_t size() const { return entries.size(); }
};

// Interval of the real line; missing ends are infinite.
struct Window {
  std::optional<RealScalar> lo;
  std::optional<RealScalar> hi;
  bool include_lo = false;
  bool include_hi = false;

  bool contains(const RealScalar& x) const;
  static Window open(const RealScalar& lo, const RealScalar& hi) { return {lo, hi, false, false}; }
  static Window closed(const RealScalar& lo, const RealScalar& hi) { return {lo, hi, true, true}; }
};

// Breakpoints of f inside the window, plus 0, with their nonzero jumps.
SingularityTable scan(const PiecewiseFunction& f, const Window& window = {});

struct Classification {
  bool entire = false;
  bool nowhere_vanishing = false;
  bool well_defined = false;
};

Classification classify(const PiecewiseFunction& f);
// p - p(0) has only odd or only even powers, all coefficients of one sign.
bool is_well_defined_segment(const Polynomial& p);

struct Decomposition {
  PiecewiseFunction h;
  PiecewiseFunction g;
};

// f = h - g with g and h entire. `seed` holds b_0..b_n of g on the segment just
// right of 0 (missing entries are zero). Throws Unsupported when a pole sits at
// an irrational breakpoint whose jump is only partly a pole.
Decomposition entire_decomposition(const PiecewiseFunction& f, const std::vector<Rational>& seed = {});

enum class MatrixVariant { C, DPlus, DMinus };

// Rows and columns indexed by orders 1..n (entry [j-1][k-1]).
struct JumpMatrix {
  int n = 0;
  std::vector<std::vector<ExactValue>> entries;
};

JumpMatrix jump_matrix(const RealScalar& x0, int n, MatrixVariant variant);

// D_n(x0+) a - D_n(x0-) b for monomial coefficient vectors a (right) and b (left).
std::vector<ExactValue> jump_vector(const RealScalar& x0, int n, const Polynomial& right, const Polynomial& left);

}  // namespace tropnev::singular
