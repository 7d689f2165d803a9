#include "tropnev/polyseg/ops.hpp"

#include "tropnev/error.hpp"
#include "tropnev/numeric/sturm.hpp"

namespace tropnev::polyseg {

namespace {

// Walks the cells of a merged breakpoint list and reports, per cell, the index of
// the segment of `f` governing it.
class CellCursor {
 public:
  explicit CellCursor(const PiecewiseFunction& f) : f_(f) {}

  const Polynomial& advance(const std::vector<RealScalar>& merged, std::size_t cell) {
    if (cell > 0 && next_ < f_.breakpoints().size() && compare(f_.breakpoints()[next_], merged[cell - 1]) == 0)
      ++next_;
    return f_.segments()[next_];
  }

 private:
  const PiecewiseFunction& f_;
  std::size_t next_ = 0;
};

template <typename Combine>
PiecewiseFunction combine_cellwise(const PiecewiseFunction& f, const PiecewiseFunction& g, Combine combine) {
  std::vector<RealScalar> merged = merge_breakpoints(f.breakpoints(), g.breakpoints());
  std::vector<Polynomial> segments;
  segments.reserve(merged.size() + 1);
  CellCursor cf(f);
  CellCursor cg(g);
  for (std::size_t c = 0; c <= merged.size(); ++c) {
    const Polynomial& p = cf.advance(merged, c);
    const Polynomial& q = cg.advance(merged, c);
    segments.push_back(combine(p, q));
  }
  return PiecewiseFunction::from_trusted(std::move(merged), std::move(segments));
}

// A rational strictly inside the cell (lo, hi); null pointers stand for -inf/+inf.
Rational sample_in(const RealScalar* lo, const RealScalar* hi) {
  if (lo == nullptr && hi == nullptr) return Rational(0);
  if (lo == nullptr) return Rational(hi->enclosure().lo() - 1);
  if (hi == nullptr) return Rational(lo->enclosure().hi() + 1);
  return numeric::rational_between(*lo, *hi);
}

}  // namespace

std::vector<RealScalar> merge_breakpoints(const std::vector<RealScalar>& a, const std::vector<RealScalar>& b) {
  std::vector<RealScalar> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back(b[j++]);
    } else {
      auto ord = compare(a[i], b[j]);
      if (ord < 0) {
        out.push_back(a[i++]);
      } else if (ord > 0) {
        out.push_back(b[j++]);
      } else {
        out.push_back(a[i++]);
        ++j;
      }
    }
  }
  return out;
}

std::vector<ExactValue> evaluate_jet(const PiecewiseFunction& f, const RealScalar& x, Side side, int max_order) {
  if (max_order < 0) throw Error(ErrorCode::InvalidArgument, "max_order must be non-negative");
  const Polynomial& seg = f.segment_at(x, side);
  std::vector<ExactValue> out;
  out.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int j = 0; j <= max_order; ++j) out.push_back(ExactValue::evaluate(seg.taylor_coefficient_poly(j), x));
  return out;
}

PiecewiseFunction linear_combine(const PiecewiseFunction& f, const PiecewiseFunction& g, const Rational& a,
                                 const Rational& b) {
  return combine_cellwise(f, g, [&](const Polynomial& p, const Polynomial& q) { return p * a + q * b; });
}

PiecewiseFunction tropical_plus(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  std::vector<RealScalar> merged = merge_breakpoints(f.breakpoints(), g.breakpoints());
  std::vector<RealScalar> out_bps;
  std::vector<Polynomial> out_segs;
  CellCursor cf(f);
  CellCursor cg(g);
  for (std::size_t c = 0; c <= merged.size(); ++c) {
    const Polynomial& p = cf.advance(merged, c);
    const Polynomial& q = cg.advance(merged, c);
    const RealScalar* lo = c == 0 ? nullptr : &merged[c - 1];
    const RealScalar* hi = c == merged.size() ? nullptr : &merged[c];
    if (c > 0) out_bps.push_back(merged[c - 1]);

    Polynomial d = p - q;
    if (d.is_constant()) {
      out_segs.push_back(numeric::sign(d.coefficient(0)) >= 0 ? p : q);
      continue;
    }
    // Crossings of p and q strictly inside the cell.
    Rational bound = numeric::cauchy_bound(d);
    Rational wlo = lo ? lo->enclosure().lo() : Rational(-bound);
    Rational whi = hi ? hi->enclosure().hi() : bound;
    std::vector<RealScalar> crossings;
    if (wlo < whi) {
      for (const auto& iv : numeric::sturm_isolate(d, wlo, whi)) {
        RealScalar root = RealScalar::root_of(d, iv.lo, iv.hi);
        if (lo && compare(root, *lo) <= 0) continue;
        if (hi && compare(root, *hi) >= 0) continue;
        crossings.push_back(std::move(root));
      }
    }
    for (std::size_t k = 0; k <= crossings.size(); ++k) {
      const RealScalar* sub_lo = k == 0 ? lo : &crossings[k - 1];
      const RealScalar* sub_hi = k == crossings.size() ? hi : &crossings[k];
      Rational t = sample_in(sub_lo, sub_hi);
      if (k > 0) out_bps.push_back(crossings[k - 1]);
      out_segs.push_back(numeric::sign(d(t)) >= 0 ? p : q);
    }
  }
  return PiecewiseFunction::from_trusted(std::move(out_bps), std::move(out_segs));
}

PiecewiseFunction tropical_times(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  return linear_combine(f, g, Rational(1), Rational(1));
}

PiecewiseFunction tropical_divide(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  return linear_combine(f, g, Rational(1), Rational(-1));
}

PiecewiseFunction tropical_inverse(const PiecewiseFunction& f) { return scale(f, Rational(-1)); }

PiecewiseFunction tropical_min(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  return tropical_inverse(tropical_plus(tropical_inverse(f), tropical_inverse(g)));
}

PiecewiseFunction scale(const PiecewiseFunction& f, const Rational& c) {
  std::vector<Polynomial> segs;
  segs.reserve(f.segment_count());
  for (const auto& s : f.segments()) segs.push_back(s * c);
  return PiecewiseFunction::from_trusted(f.breakpoints(), std::move(segs));
}

PiecewiseFunction add_constant(const PiecewiseFunction& f, const Rational& c) {
  std::vector<Polynomial> segs;
  segs.reserve(f.segment_count());
  for (const auto& s : f.segments()) segs.push_back(s + Polynomial::constant(c));
  return PiecewiseFunction::from_trusted(f.breakpoints(), std::move(segs));
}

PiecewiseFunction shift(const PiecewiseFunction& f, const Rational& c) {
  std::vector<RealScalar> bps;
  bps.reserve(f.breakpoints().size());
  for (const auto& b : f.breakpoints()) bps.push_back(b - c);
  std::vector<Polynomial> segs;
  segs.reserve(f.segment_count());
  for (const auto& s : f.segments()) segs.push_back(s.taylor_shift(c));
  return PiecewiseFunction::from_trusted(std::move(bps), std::move(segs));
}

PiecewiseFunction reflect(const PiecewiseFunction& f) {
  std::vector<RealScalar> bps;
  bps.reserve(f.breakpoints().size());
  for (auto it = f.breakpoints().rbegin(); it != f.breakpoints().rend(); ++it) bps.push_back(-*it);
  std::vector<Polynomial> segs;
  segs.reserve(f.segment_count());
  for (auto it = f.segments().rbegin(); it != f.segments().rend(); ++it) segs.push_back(it->reflect());
  return PiecewiseFunction::from_trusted(std::move(bps), std::move(segs));
}

PiecewiseFunction power(const PiecewiseFunction& f, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "power exponent must be >= 1");
  std::vector<Polynomial> segs;
  segs.reserve(f.segment_count());
  for (const auto& s : f.segments()) segs.push_back(s.pow(static_cast<unsigned>(k)));
  return PiecewiseFunction::from_trusted(f.breakpoints(), std::move(segs));
}

PiecewiseFunction multiply(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  return combine_cellwise(f, g, [](const Polynomial& p, const Polynomial& q) { return p * q; });
}

PiecewiseFunction max_affine(const std::vector<MaxPlusValue>& coefficients) {
  std::optional<PiecewiseFunction> env;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i]) continue;
    PiecewiseFunction line(Polynomial(std::vector<Rational>{*coefficients[i], Rational(static_cast<long>(i))}));
    env = env ? tropical_plus(*env, line) : line;
  }
  if (!env) throw Error(ErrorCode::AllNegInfinity, "every coefficient of the max is -inf");
  return *env;
}

PiecewiseFunction from_tropical_product(const TropicalProductSpec& spec) {
  if (spec.factors.empty()) throw Error(ErrorCode::InvalidArgument, "tropical product has no factors");
  std::optional<PiecewiseFunction> out;
  for (const auto& factor : spec.factors) {
    PiecewiseFunction term = linear_combine(max_affine(factor.numerator), max_affine(factor.denominator),
                                            Rational(1), Rational(-1));
    out = out ? multiply(*out, term) : term;
  }
  return *out;
}

PiecewiseFunction restrict_to(const PiecewiseFunction& f, const RealScalar& lo, const RealScalar& hi) {
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();
  std::size_t first = 0;
  while (first < bps.size() && bps[first] <= lo) ++first;
  std::size_t last = first;
  while (last < bps.size() && bps[last] < hi) ++last;
  using Diff = std::ptrdiff_t;
  std::vector<RealScalar> kept(bps.begin() + static_cast<Diff>(first), bps.begin() + static_cast<Diff>(last));
  std::vector<Polynomial> pieces(segs.begin() + static_cast<Diff>(first), segs.begin() + static_cast<Diff>(last + 1));
  return PiecewiseFunction::from_trusted(std::move(kept), std::move(pieces));
}

}  // namespace tropnev::polyseg
