#pragma once

#include "tropnev/polyseg/piecewise.hpp"

namespace tropnev::nevanlinna {

struct HyperExp {
  int n = 1;
  numeric::Rational alpha;
  long lower = 0;  // window (-lower, upper)
  long upper = 0;
  long cutoff = 0;
  // e_{n,alpha} = f + t with an unknown constant t in [0, tail_bound].
  polyseg::PiecewiseFunction f;
  numeric::Rational tail_bound;
};

// Integer breakpoints -lower..upper; the lower tail sum below -max(cutoff, lower+1)
// is dropped and bounded. Throws BadWindow.
HyperExp hyperexp(int n, const numeric::Rational& alpha, long lower, long upper, long cutoff);

// C(n, j) |m|^(n-j) alpha^(m-1) (alpha - 1).
numeric::Rational hyperexp_jump(int n, const numeric::Rational& alpha, long m, int j);

}  // namespace tropnev::nevanlinna
