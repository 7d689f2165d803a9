#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "examples.hpp"
#include "tropnev/curves/curves.hpp"
#include "tropnev/error.hpp"
#include "tropnev/nevanlinna/functionals.hpp"
#include "tropnev/polyseg/ops.hpp"
#include "tropnev/sampling.hpp"
#include "tropnev/singular/singular.hpp"

using namespace tropnev::curves;
using namespace testing_support;
using tropnev::Error;
using tropnev::ErrorCode;
namespace nev = tropnev::nevanlinna;
namespace ops = tropnev::polyseg;
namespace sing = tropnev::singular;

namespace {

bool is_exact(const Interval& v, const Rational& q) { return v.is_point() && v.lo() == q; }

TropicalPolynomialMap max_of_two() { return {{{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}}}; }

// Entire curve with no common roots, or nullopt when the draw is not reduced.
std::optional<TropicalCurve> random_reduced(tropnev::sampling::Sampler& s, std::size_t m, int degree) {
  std::vector<PiecewiseFunction> fs;
  for (std::size_t i = 0; i < m; ++i)
    fs.push_back(s.entire(degree, static_cast<int>(s.integer(0, 3)), 4));
  TropicalCurve c(fs);
  if (!check_reduced(c).reduced) return std::nullopt;
  return c;
}

PiecewiseFunction brute_casoratian(const TropicalCurve& c, const Rational& step) {
  std::vector<long> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<PiecewiseFunction> out;
  do {
    PiecewiseFunction term;
    for (std::size_t i = 0; i < c.size(); ++i)
      term = ops::tropical_times(term, ops::shift(c[i], Rational(step * perm[i])));
    out = out ? ops::tropical_plus(*out, term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *out;
}

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("curve construction rejects poles") {
    CHECK_THROWS_AS(TropicalCurve(std::vector<PiecewiseFunction>{}), Error);
    try {
      TropicalCurve({PiecewiseFunction(), example_3_4()});
      FAIL("expected NotEntireComponent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotEntireComponent);
    }
    TropicalCurve c(example_6_4());
    CHECK(c.size() == 2);
    CHECK(c.order() == 2);
  }

  TEST_CASE("reduced check") {
    CHECK(check_reduced(TropicalCurve({PiecewiseFunction(), PiecewiseFunction(Polynomial{0, 2})})).reduced);
    CHECK(check_reduced(TropicalCurve(example_6_4())).reduced);

    PiecewiseFunction kink = pw({Q(1)}, {Polynomial(), Polynomial{-1, 1}});  // max(0, x-1)
    auto rc = check_reduced(TropicalCurve({kink, kink}));
    REQUIRE_FALSE(rc.reduced);
    REQUIRE(rc.witness);
    CHECK(rc.witness->location == RealScalar(1));
    CHECK(rc.witness->order == 1);

    // x^2 has a second-order root at 0 by itself.
    auto sq = check_reduced(TropicalCurve({PiecewiseFunction(Polynomial{0, 0, 1}), PiecewiseFunction(Polynomial{1, 0, 3})}));
    REQUIRE_FALSE(sq.reduced);
    CHECK(sq.witness->location == RealScalar(0));
    CHECK(sq.witness->order == 2);
  }

  TEST_CASE("cartan characteristic of worked examples") {
    TropicalCurve line({PiecewiseFunction(), PiecewiseFunction(Polynomial{0, 2})});
    TropicalCurve quad(example_6_4());
    for (long r = 1; r <= 6; ++r) {
      CHECK(is_exact(cartan(line, Rational(r)), Rational(r)));
      CHECK(is_exact(cartan(quad, Rational(r)), Rational(r * r)));
    }
    CHECK(is_exact(cartan(quad, Q(5, 2)), Q(25, 4)));
    CHECK(cartan_profile(quad, Q(10)).closed_form == PiecewiseFunction(Polynomial{0, 0, 1}));
    CHECK(cartan_profile(line, Q(10)).closed_form == PiecewiseFunction(Polynomial{0, 1}));

    TropicalCurve flat({PiecewiseFunction(Polynomial{3}), PiecewiseFunction(Polynomial{-1})});
    CHECK(is_exact(cartan(flat, Q(7)), Rational(0)));
    CHECK_THROWS_AS(cartan(flat, Rational(0)), Error);

    // irrational radius gives a tight enclosure of r^2 = 2
    Interval v = cartan(quad, sqrt_of(2));
    CHECK(v.contains(Rational(2)));
    CHECK(v.width() < Q(1, 1000000));
  }

  TEST_CASE("tropical composition") {
    TropicalCurve c(example_5_5());
    PiecewiseFunction h = compose_tropical(max_of_two(), c);
    CHECK(h == c.envelope());

    // second-order poles at 2k+1 - sqrt(2)/2 with multiplicity 1
    auto poles = sing::scan(h, sing::Window::open(Rational(0), Rational(15))).select(2, sing::Kind::Pole);
    REQUIRE(poles.size() == 8);
    for (long k = 0; k < 8; ++k) {
      Polynomial crossing = P({Q(4 * k * k + 4 * k) + Q(1, 2), Q(-(4 * k + 2)), Q(1)});
      RealScalar expected = RealScalar::root_of(crossing, Rational(2 * k), Rational(2 * k + 1));
      CHECK(poles[static_cast<std::size_t>(k)].location == expected);
      CHECK(poles[static_cast<std::size_t>(k)].multiplicity.enclosure(Q(1, 1000)).contains(Rational(1)));
    }

    TropicalPolynomialMap cube{{{{3, 0}, Rational(5)}}};
    CHECK(compose_tropical(cube, c) == ops::add_constant(ops::scale(c[0], 3), 5));

    TropicalPolynomialMap wrong{{{{1, 0, 0}, Rational(0)}}};
    CHECK_THROWS_AS(compose_tropical(wrong, c), Error);
    try {
      compose_tropical({{{{1, 0}, std::nullopt}, {{0, 1}, std::nullopt}}}, c);
      FAIL("expected AllNegInfinity");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AllNegInfinity);
    }
    CHECK_THROWS_AS(compose_tropical({{{{2, 0}, Rational(0)}, {{0, 1}, Rational(0)}}}, c), Error);
  }

  TEST_CASE("tropical composition matches the max formula") {
    tropnev::sampling::Sampler s(515);
    for (int trial = 0; trial < 10; ++trial) {
      TropicalCurve c({s.entire(2, 2), s.entire(2, 2), s.entire(1, 3)});
      const int d = static_cast<int>(s.integer(1, 3));
      TropicalPolynomialMap p;
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) {
          MaxPlusValue coef;
          if (s.coin(3, 4)) coef = s.rational(4);
          p.monomials.push_back({{a, b, d - a - b}, coef});
        }
      p.monomials.push_back({{d, 0, 0}, Rational(0)});
      PiecewiseFunction h = compose_tropical(p, c);
      for (int k = 0; k < 100; ++k) {
        Rational x = Q(k - 50, 8);
        std::optional<Rational> best;
        for (const auto& mono : p.monomials) {
          if (!mono.coefficient) continue;
          Rational v = *mono.coefficient;
          for (std::size_t i = 0; i < 3; ++i) v += Rational(mono.exponents[i]) * c[i](x);
          if (!best || cmp(v, *best) > 0) best = v;
        }
        CHECK(h(x) == *best);
      }
    }
  }

  TEST_CASE("Fermat composition") {
    TropicalCurve line({PiecewiseFunction(), PiecewiseFunction(Polynomial{0, 2})});
    CHECK(compose_fermat({{Q(1), Q(2)}, 2}, line) == PiecewiseFunction(Polynomial{0, 0, 8}));
    TropicalCurve single({example_5_9_f1(4)});
    CHECK(compose_fermat({{Q(1)}, 1}, single) == single[0]);
    TropicalCurve g({PiecewiseFunction(), example_5_9_f1(4)});
    CHECK(compose_fermat({{Q(1), Q(1)}, 1}, g) == g[1]);
    try {
      compose_fermat({{Q(1)}, 1}, g);
      FAIL("expected ArityMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ArityMismatch);
    }
    CHECK_THROWS_AS(compose_fermat({{Q(1), Q(0)}, 1}, g), Error);
  }

  TEST_CASE("casoratian of the signed-square curve") {
    TropicalCurve c(example_6_4());
    PiecewiseFunction expected = pw({Q(-1), Q(0)}, {Polynomial{-1, -2}, Polynomial{1, 2, 2}, Polynomial{1, 2}});
    CHECK(casoratian(c) == expected);
    CHECK(casoratian(c) == brute_casoratian(c, 1));

    TropicalCurve single({PiecewiseFunction(Polynomial{1, 1})});
    CHECK(casoratian(single) == single[0]);

    std::vector<PiecewiseFunction> many(10, PiecewiseFunction());
    try {
      casoratian(TropicalCurve(many));
      FAIL("expected TooManyComponents");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooManyComponents);
    }
  }

  TEST_CASE("casoratian agrees with the permutation oracle and is symmetric") {
    tropnev::sampling::Sampler s(61);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t m = static_cast<std::size_t>(s.integer(1, 4));
      std::vector<PiecewiseFunction> fs;
      for (std::size_t i = 0; i < m; ++i) fs.push_back(s.entire(static_cast<int>(s.integer(1, 2)), 2));
      const Rational step = s.coin() ? Rational(1) : s.rational_in(Q(1, 4), Q(2));
      TropicalCurve c(fs);
      PiecewiseFunction direct = casoratian(c, step);
      CHECK(direct == brute_casoratian(c, step));
      std::reverse(fs.begin(), fs.end());
      CHECK(casoratian(TropicalCurve(fs), step) == direct);
    }
  }

  TEST_CASE("gauge identity") {
    tropnev::sampling::Sampler s(6101);
    for (int trial = 0; trial < 20; ++trial) {
      PiecewiseFunction f0 = s.entire(2, 2), f1 = s.entire(2, 2), g = s.entire(2, 2);
      TropicalCurve plain({f0, f1});
      TropicalCurve gauged({ops::tropical_times(f0, g), ops::tropical_times(f1, g)});
      PiecewiseFunction rhs = ops::tropical_times(ops::tropical_times(g, ops::shift(g, 1)), casoratian(plain));
      CHECK(casoratian(gauged) == rhs);
    }
  }

  TEST_CASE("cartan invariance under odd polynomial gauge") {
    tropnev::sampling::Sampler s(52);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 20; ++trial) {
      auto c = random_reduced(s, 3, 2);
      if (!c) continue;
      Polynomial lambda = P({s.rational(3), s.rational(3), Rational(0), s.rational(3)});
      std::vector<PiecewiseFunction> moved;
      for (const auto& f : c->components()) moved.push_back(ops::linear_combine(f, PiecewiseFunction(lambda), 1, 1));
      CHECK(cartan_profile(*c, Q(20)).closed_form == cartan_profile(TropicalCurve(moved), Q(20)).closed_form);
      ++checked;
    }
    CHECK(checked == 20);
  }

  TEST_CASE("two-component cartan through the quotient") {
    tropnev::sampling::Sampler s(53);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 30; ++trial) {
      auto c = random_reduced(s, 2, 2);
      if (!c) continue;
      PiecewiseFunction g = ops::tropical_divide((*c)[1], (*c)[0]);
      const Rational g0 = g(Rational(0));
      const Rational gplus = cmp(g0, 0) > 0 ? g0 : Rational(0);
      for (const Rational& r : {Q(1, 2), Q(3), Q(7, 2), Q(6), Q(11)})
        CHECK(cartan(*c, r) == nev::characteristic(g, r) - Interval(gplus));
      ++checked;
    }
    CHECK(checked == 30);
  }

  TEST_CASE("quotient characteristic stays within a constant of the cartan characteristic") {
    tropnev::sampling::Sampler s(54);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 15; ++trial) {
      auto c = random_reduced(s, 3, 2);
      if (!c) continue;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t l = 0; l < 3; ++l) {
          if (i == l) continue;
          PiecewiseFunction q = ops::tropical_divide((*c)[i], (*c)[l]);
          // sup over a doubling grid; must stop moving once r passes the breakpoints
          std::vector<double> sups;
          double sup = -1e300;
          for (long r = 1; r <= 256; r *= 2) {
            Interval gap = nev::characteristic(q, Rational(r)) - cartan(*c, Rational(r));
            sup = std::max(sup, gap.hi().get_d());
            sups.push_back(sup);
          }
          CHECK(std::abs(sups.back() - sups[sups.size() - 2]) < 1e-9);
          CHECK(std::abs(sups.back() - sups[sups.size() - 3]) < 1e-9);
        }
      ++checked;
    }
    CHECK(checked == 15);
  }

  TEST_CASE("homogeneous second main theorem band") {
    TropicalCurve c(example_5_5());
    auto rep = smt_homogeneous_check(max_of_two(), c, {Q(3), Q(5), Q(9)});
    CHECK(rep.degree == 1);
    CHECK(rep.band_lo == 0);
    CHECK(rep.band_hi == 0);
    CHECK(rep.passes());
    for (const auto& row : rep.rows) {
      CHECK(row.poles.lo() > 0);
      CHECK(row.residual.width() <= Q(1, 1000000000000L));
    }

    // x^2 = max(sgn x^2, -sgn x^2): only roots, the pole term vanishes
    auto sq = smt_homogeneous_check(max_of_two(), TropicalCurve(example_6_4()), {Q(1), Q(2), Q(5, 2)});
    CHECK(sq.passes());
    CHECK(sq.composed == PiecewiseFunction(Polynomial{0, 0, 1}));
    for (const auto& row : sq.rows) {
      CHECK(is_exact(row.roots, Rational(row.r * row.r)));
      CHECK(is_exact(row.poles, Rational(0)));
      CHECK(is_exact(row.residual, Rational(0)));
    }

    TropicalCurve zero({PiecewiseFunction()});
    auto pure = smt_homogeneous_check({{{{3}, Rational(2)}}}, zero, {Q(1), Q(4)});
    CHECK(pure.passes());
    CHECK(pure.band_lo == pure.band_hi);

    try {
      smt_homogeneous_check({{{{1, 0}, Rational(0)}, {{0, 1}, std::nullopt}}}, c, {Q(3)});
      FAIL("expected MissingPurePowers");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MissingPurePowers);
    }
  }

  TEST_CASE("band holds for random tropical polynomials") {
    tropnev::sampling::Sampler s(56);
    for (int trial = 0; trial < 20; ++trial) {
      TropicalCurve c({s.entire(2, 2), s.entire(2, 2)});
      const int d = static_cast<int>(s.integer(1, 3));
      TropicalPolynomialMap p;
      for (int a = 0; a <= d; ++a) {
        MaxPlusValue coef = s.rational(3);
        if (a != 0 && a != d && s.coin()) coef.reset();
        p.monomials.push_back({{a, d - a}, coef});
      }
      auto rep = smt_homogeneous_check(p, c, {Q(1, 2), Q(2), Q(5), Q(9)});
      CHECK(rep.passes());
      CHECK(rep.band_lo <= rep.band_hi);
    }
  }

  TEST_CASE("Fermat ratios of the attainment examples") {
    auto f1 = example_5_9_f1();
    auto f2 = example_5_9_f2();
    const std::vector<Rational> grid{Q(10), Q(20), Q(40)};

    auto low = fermat_bounds({{Q(1), Q(1)}, 1}, TropicalCurve({PiecewiseFunction(), f1}), grid);
    CHECK(low.theta == 1);
    CHECK(low.big_theta == 2);
    REQUIRE(low.rows[0].ratio);
    CHECK(is_exact(low.rows[0].counting, Q(41, 2)));
    CHECK(is_exact(low.rows[0].cartan, Q(41, 2)));
    for (const auto& row : low.rows) CHECK(std::abs(row.ratio->midpoint().get_d() - 1) <= 10 / row.r.get_d());

    auto high = fermat_bounds({{Q(1), Q(1)}, 1}, TropicalCurve({f1, f2}), grid);
    CHECK(is_exact(high.rows[0].counting, Q(81, 2)));
    CHECK(is_exact(high.rows[0].cartan, Q(41, 2)));
    for (const auto& row : high.rows) CHECK(std::abs(row.ratio->midpoint().get_d() - 2) <= 10 / row.r.get_d());

    TropicalCurve line({PiecewiseFunction(), PiecewiseFunction(Polynomial{0, 2})});
    auto fail = fermat_bounds({{Q(1), Q(2)}, 2}, line, grid);
    CHECK(fail.theta == 1);
    CHECK(fail.big_theta == 6);
    for (const auto& row : fail.rows) {
      CHECK(is_exact(row.counting, Rational(8 * row.r * row.r)));
      CHECK(row.growth == doctest::Approx(1.0));
      CHECK(is_exact(*row.ratio, Rational(8)));
    }

    try {
      fermat_bounds({{Q(1), Q(1)}, 2}, TropicalCurve(example_6_4()), grid);
      FAIL("expected NonLinearComponents");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonLinearComponents);
    }
    auto flat = fermat_bounds({{Q(1)}, 1}, TropicalCurve({PiecewiseFunction(Polynomial{2})}), {Q(3)});
    CHECK_FALSE(flat.rows[0].ratio);
  }

  TEST_CASE("casoratian balance of the signed-square curve") {
    auto rep = casoratian_balance(TropicalCurve(example_6_4()), {Q(1, 2), Q(2), Q(3), Q(5)});
    CHECK(rep.holds());
    CHECK_FALSE(rep.tails);
    for (const auto& row : rep.rows) {
      const Rational r2 = row.r * row.r;
      CHECK(is_exact(row.component_roots, Rational(0)));
      CHECK(is_exact(row.casoratian_roots, r2));
      CHECK(is_exact(row.lhs, r2));
      CHECK(row.bound.lo() > 0);
      CHECK(row.bound.lo() >= row.lhs.hi());
    }
    // C_0 has a second-order pole at -1 of weight 2; fbar_1 = -(x+1)|x+1| has one too
    CHECK(rep.rows[2].casoratian_poles.hi() >= 0);
    CHECK(rep.rows[3].even_windows.lo() > 0);
  }

  TEST_CASE("single component balance is trivial") {
    auto rep = casoratian_balance(TropicalCurve({example_5_9_f1(6)}), {Q(2), Q(5)});
    for (const auto& row : rep.rows) {
      CHECK(is_exact(row.lhs, Rational(0)));
      CHECK(is_exact(row.bound, Rational(0)));
      CHECK(row.holds);
    }
    REQUIRE(rep.tails);
    CHECK(rep.tails->equal());
  }

  TEST_CASE("finite-root tail slopes agree") {
    tropnev::sampling::Sampler s(63);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t m = static_cast<std::size_t>(s.integer(2, 4));
      std::vector<PiecewiseFunction> fs;
      for (std::size_t i = 0; i < m; ++i) fs.push_back(s.convex_linear(static_cast<int>(s.integer(0, 6))));
      auto rep = casoratian_balance(TropicalCurve(fs), {Q(3), Q(8)});
      CHECK(rep.holds());
      REQUIRE(rep.tails);
      CHECK(rep.tails->formula == rep.tails->components);
      CHECK(rep.tails->components == rep.tails->casoratian);
    }
  }

  TEST_CASE("balance inequality on random curves") {
    tropnev::sampling::Sampler s(64);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<PiecewiseFunction> fs;
      const std::size_t m = static_cast<std::size_t>(s.integer(1, 3));
      for (std::size_t i = 0; i < m; ++i) fs.push_back(s.entire(2, 2));
      auto rep = casoratian_balance(TropicalCurve(fs), {Q(1), Q(4), Q(9)}, s.rational_in(Q(1, 2), Q(2)));
      CHECK(rep.holds());
    }
    CHECK_THROWS_AS(casoratian_balance(TropicalCurve(example_6_4()), {Q(1)}, Rational(0)), Error);
    CHECK_THROWS_AS(casoratian_balance(TropicalCurve(example_6_4()), {Q(-1)}), Error);
  }
}
