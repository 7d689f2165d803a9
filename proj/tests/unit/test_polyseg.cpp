#include "doctest.h"
#include "examples.hpp"
#include "tropnev/error.hpp"
#include "tropnev/polyseg/ops.hpp"
#include "tropnev/sampling.hpp"

using namespace tropnev::polyseg;
using namespace testing_support;
using tropnev::Error;
using tropnev::ErrorCode;
using tropnev::numeric::ExactValue;

namespace {

std::vector<Rational> rationals(const std::vector<ExactValue>& v) {
  std::vector<Rational> out;
  for (const auto& e : v) out.push_back(e.rational());
  return out;
}

Rational max_q(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace

TEST_SUITE("polyseg") {
  TEST_CASE("evaluate_jet") {
    auto f = example_3_4();
    CHECK(rationals(evaluate_jet(f, Q(0), Side::Right, 2)) == std::vector<Rational>{Q(1), Q(2), Q(1)});
    auto s = signed_square();
    CHECK(rationals(evaluate_jet(s, Q(0), Side::Left, 2)) == std::vector<Rational>{Q(0), Q(0), Q(-1)});
    CHECK(rationals(evaluate_jet(s, Q(0), Side::Right, 2)) == std::vector<Rational>{Q(0), Q(0), Q(1)});
    for (const auto& b : f.breakpoints())
      CHECK(evaluate_jet(f, b, Side::Left, 0)[0].rational() == evaluate_jet(f, b, Side::Right, 0)[0].rational());
    // jet at -2 from the left is the cubic tail
    CHECK(rationals(evaluate_jet(f, Q(-2), Side::Left, 3)) ==
          std::vector<Rational>{Q(0), Q(-46 + 68 - 24), Q(-17 + 12), Q(-2)});
  }

  TEST_CASE("linear_combine") {
    auto f = example_3_4();
    CHECK(tropical_times(f, PiecewiseFunction()) == f);
    CHECK(tropical_divide(f, f) == PiecewiseFunction());
    auto c = example_6_4();
    auto sum = linear_combine(c[0], shift(c[1], Q(1)), Q(1), Q(1));
    CHECK(sum.segment_at(Q(-3), Side::Left) == Polynomial{1, 2});
    CHECK(sum(Q(-1)) == Q(-1));
  }

  TEST_CASE("tropical_plus reproduces the max of sgn(x)x^2 and x") {
    auto m = tropical_plus(signed_square(), identity_line());
    auto expected = pw({Q(-1), Q(0), Q(1)},
                       {Polynomial{0, 1}, Polynomial{0, 0, -1}, Polynomial{0, 1}, Polynomial{0, 0, 1}});
    CHECK(m == expected);
    CHECK(tropical_plus(identity_line(), signed_square()) == expected);
    CHECK(tropical_plus(example_3_4(), example_3_4()) == example_3_4());
  }

  TEST_CASE("tropical_plus creates algebraic crossings") {
    auto curve = example_5_5(2);
    auto m = tropical_plus(curve[0], curve[1]);
    // -x^2 meets -1/2 at -sqrt2/2; x^2 meets 2x - 1/2 and 6x - 17/2 at 1 +- sqrt2/2 and 3 +- sqrt2/2
    std::vector<RealScalar> algebraic;
    for (const auto& b : m.breakpoints())
      if (!b.is_rational()) algebraic.push_back(b);
    REQUIRE(algebraic.size() == 5);
    RealScalar h = RealScalar::root_of(Polynomial{-1, 0, 2}, Q(0), Q(1));  // sqrt2/2
    CHECK(compare(algebraic[0], -h) == 0);
    CHECK(compare(algebraic[1], -h + Q(1)) == 0);
    CHECK(compare(algebraic[2], h + Q(1)) == 0);
    CHECK(compare(algebraic[3], -h + Q(3)) == 0);
    CHECK(compare(algebraic[4], h + Q(3)) == 0);
    // continuity is re-verified at the irrational breakpoints
    CHECK_NOTHROW(normalize(m));
  }

  TEST_CASE("shift and reflect") {
    auto s = shift(signed_square(), Q(1));
    CHECK(s == pw({Q(-1)}, {Polynomial{-1, -2, -1}, Polynomial{1, 2, 1}}));
    CHECK(shift(example_3_4(), Q(0)) == example_3_4());
    CHECK(shift(PiecewiseFunction(Polynomial{0, 2}), Q(3)) == PiecewiseFunction(Polynomial{6, 2}));
    CHECK(reflect(reflect(example_3_4())) == example_3_4());
    CHECK(reflect(example_3_4())(Q(3, 2)) == example_3_4()(Q(-3, 2)));
  }

  TEST_CASE("power") {
    CHECK(power(PiecewiseFunction(Polynomial{0, 2}), 2) == PiecewiseFunction(Polynomial{0, 0, 4}));
    CHECK(power(example_3_4(), 1) == example_3_4());
    auto absx = pw({Q(0)}, {Polynomial{0, -1}, Polynomial{0, 1}});
    auto sq = power(absx, 2);
    CHECK(sq.is_polynomial());
    CHECK(sq == PiecewiseFunction(Polynomial{0, 0, 1}));
    CHECK_THROWS_AS(power(absx, 0), Error);
  }

  TEST_CASE("from_tropical_product") {
    TropicalProductSpec one{{{{Q(0), Q(0)}, {Q(0)}}}};
    CHECK(from_tropical_product(one) == pw({Q(0)}, {Polynomial(), Polynomial{0, 1}}));
    TropicalProductSpec two{{{{Q(0), Q(0)}, {Q(0)}}, {{Q(0), Q(0)}, {Q(0)}}}};
    auto f2 = from_tropical_product(two);
    CHECK(f2 == pw({Q(0)}, {Polynomial(), Polynomial{0, 0, 1}}));
    for (long k = -40; k <= 40; ++k) {
      Rational x = Q(k, 7);
      Rational direct = max_q(Q(0), x) * max_q(Q(0), x);
      CHECK(f2(x) == direct);
    }
    // single finite entry per list: (2X + 1) - (X + 3)
    TropicalProductSpec single{{{{std::nullopt, std::nullopt, Q(1)}, {std::nullopt, Q(3)}}}};
    CHECK(from_tropical_product(single) == PiecewiseFunction(Polynomial{-2, 1}));
    TropicalProductSpec empty{{{{std::nullopt}, {Q(0)}}}};
    try {
      from_tropical_product(empty);
      FAIL("expected AllNegInfinity");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AllNegInfinity);
    }
  }

  TEST_CASE("normalize") {
    auto fused = normalize({RealScalar(Q(1))}, {Polynomial{0, 1}, Polynomial{0, 1}});
    CHECK(fused.is_polynomial());
    CHECK(normalize(example_3_4()) == example_3_4());
    try {
      normalize({RealScalar(Q(0))}, {Polynomial{0, 1}, Polynomial{1, 1}});
      FAIL("expected DiscontinuityDetected");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DiscontinuityDetected);
      CHECK(std::string(e.what()).find("x = 0") != std::string::npos);
    }
    CHECK_THROWS_AS(normalize({RealScalar(Q(1)), RealScalar(Q(0))},
                              {Polynomial{0}, Polynomial{0}, Polynomial{0}}),
                    Error);
  }

  TEST_CASE("property: tropical semiring laws on random functions") {
    tropnev::sampling::Sampler rng(7);
    for (int t = 0; t < 100; ++t) {
      auto f = rng.piecewise(static_cast<int>(rng.integer(1, 3)), static_cast<int>(rng.integer(0, 3)));
      auto g = rng.piecewise(static_cast<int>(rng.integer(1, 3)), static_cast<int>(rng.integer(0, 3)));
      auto h = rng.piecewise(static_cast<int>(rng.integer(1, 2)), static_cast<int>(rng.integer(0, 2)));
      auto fg = tropical_plus(f, g);
      CHECK(fg == tropical_plus(g, f));
      CHECK(tropical_plus(f, f) == f);
      CHECK(tropical_plus(fg, h) == tropical_plus(f, tropical_plus(g, h)));
      CHECK(tropical_times(h, fg) == tropical_plus(tropical_times(h, f), tropical_times(h, g)));
      for (int s = 0; s < 10; ++s) {
        Rational x = rng.rational(6, 7);
        CHECK(fg(x) == max_q(f(x), g(x)));
      }
      CHECK(shift(shift(f, Q(5, 3)), Q(-5, 3)) == f);
      auto p3 = power(g, 3);
      for (int s = 0; s < 5; ++s) {
        Rational x = rng.rational(5, 3);
        CHECK(p3(x) == tropnev::numeric::pow(g(x), 3));
      }
    }
  }

  TEST_CASE("property: max agrees with pointwise max on 1000 samples") {
    tropnev::sampling::Sampler rng(99);
    for (int t = 0; t < 5; ++t) {
      auto f = rng.piecewise(3, 4);
      auto g = rng.piecewise(2, 3);
      auto m = tropical_plus(f, g);
      for (int s = 0; s < 1000; ++s) {
        Rational x = rng.rational(8, 16);
        CHECK(m(x) == max_q(f(x), g(x)));
      }
    }
  }
}
