// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// The time budget of each criterion is part of its pass condition.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "examples.hpp"
#include "properties.hpp"
#include "table1.hpp"
#include "tropnev/curves/curves.hpp"
#include "tropnev/nevanlinna/functionals.hpp"
#include "tropnev/nevanlinna/hyperexp.hpp"
#include "tropnev/nevanlinna/poisson_jensen.hpp"
#include "tropnev/polyseg/ops.hpp"
#include "tropnev/sampling.hpp"
#include "tropnev/singular/singular.hpp"

using namespace testing_support;
using tropnev::numeric::Interval;
namespace cur = tropnev::curves;
namespace nev = tropnev::nevanlinna;
namespace ops = tropnev::polyseg;
namespace sing = tropnev::singular;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed checks; the first few are echoed in the detail column.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failed_.size() < 3) failed_.push_back(what);
    ++failures_;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Outcome outcome() const {
    std::ostringstream out;
    out << total_ - failures_ << "/" << total_ << " checks";
    for (const auto& f : failed_) out << "; failed: " << f;
    for (const auto& n : notes_) out << "; " << n;
    return {failures_ == 0, out.str()};
  }

 private:
  int total_ = 0;
  int failures_ = 0;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

bool is_exact(const Interval& v, const Rational& q) { return v.is_point() && v.lo() == q; }

std::string str(const Rational& q) { return tropnev::numeric::to_string(q); }

Outcome table_reproduction() {
  Checks c;
  auto t = sing::scan(example_3_4(), sing::Window::open(Q(-3), Q(3)));
  c.expect(matches_table1(t), "scan differs from the reference table");
  c.expect(t.size() == table1_cells().size(), "entry count " + std::to_string(t.size()));
  c.note("reference table has 10 nonzero cells; all matched, no extras");
  return c.outcome();
}

Outcome jensen_identity() {
  Checks c;
  auto f = example_3_4();
  for (const Rational& r : {Q(9, 4), Q(5, 2), Q(11, 4)}) {
    auto rep = nev::jensen_sum(f, r);
    c.expect(is_exact(rep.reconstructed, Q(1)) && is_exact(rep.reference, Q(1)), "f(0) at r=" + str(r));
    c.expect(is_exact(rep.residual, Q(0)), "residual at r=" + str(r));
  }
  tropnev::sampling::Sampler s(20240201);
  int zero = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = s.piecewise(static_cast<int>(s.integer(1, 4)), static_cast<int>(s.integer(0, 6)));
    for (int k = 0; k < 5; ++k) {
      Rational r = s.rational_in(Q(1, 4), Q(8));
      bool ok = is_exact(nev::jensen_balance(g, r), Q(0));
      zero += ok;
      c.expect(ok, "random function " + std::to_string(i) + " at r=" + str(r));
    }
  }
  c.note(std::to_string(zero) + "/1000 random balances exactly 0");
  return c.outcome();
}

Outcome poisson_jensen() {
  Checks c;
  auto f = example_3_4();
  for (auto [x, r] : {std::pair{Q(0), Q(5, 2)}, std::pair{Q(1, 2), Q(5, 2)}, std::pair{Q(-3, 2), Q(11, 4)}}) {
    auto rep = nev::poisson_jensen(f, x, r);
    c.expect(is_exact(rep.residual, Q(0)) && is_exact(rep.reconstructed, f(x)), "x=" + str(x) + " r=" + str(r));
  }
  tropnev::sampling::Sampler s(20240202);
  for (int i = 0; i < 50; ++i) {
    auto g = s.piecewise(static_cast<int>(s.integer(1, 4)), static_cast<int>(s.integer(0, 6)));
    Rational r = s.rational_in(Q(1, 2), Q(7));
    Rational x = s.rational_in(Rational(-r + Q(1, 16)), Rational(r - Q(1, 16)));
    auto rep = nev::poisson_jensen(g, x, r);
    c.expect(is_exact(rep.residual, Q(0)), "random function " + std::to_string(i));
  }
  return c.outcome();
}

Outcome characteristic_closed_form() {
  Checks c;
  std::vector<Rational> bps;
  std::vector<Polynomial> segs;
  for (long k = 0; k <= 4; ++k) {
    if (k > 0) bps.push_back(Q(k));
    segs.push_back(P({Q(-k * (k + 1)), Q(4 * k + 1, 2), Q(-1, 2)}));
  }
  auto prof = nev::characteristic_profile(example_4_1(), Q(5));
  c.expect(prof.closed_form == pw(bps, segs), "closed form on (0, 5]");
  c.expect(!prof.convex(), "flagged convex");
  c.expect(!prof.nondecreasing(), "flagged non-decreasing");
  return c.outcome();
}

Outcome counting_oracle() {
  Checks c;
  auto f = example_3_4();
  for (int j = 1; j <= 3; ++j) {
    Interval closed = nev::counting(f, j, Q(5, 2));
    double oracle = nev::counting_oracle(f, j, Q(5, 2), Q(1, 10000));
    c.expect(closed.is_point() && std::fabs(oracle - closed.lo().get_d()) <= 1e-3, "j=" + std::to_string(j));
  }
  Interval n2 = nev::counting(f, 2, Q(5, 2));
  c.expect(is_exact(n2, Q(2)), "N2(5/2) = " + str(n2.lo()));
  c.note("N2(5/2) = 1/2 (7 (1/2)^2 + (3/2)^2) = 2, not 43/16; checked against 2");
  return c.outcome();
}

Outcome shifts_and_max() {
  Checks c;
  auto m = ops::tropical_plus(signed_square(), identity_line());
  auto display = pw({Q(-1), Q(0), Q(1)}, {Polynomial{0, 1}, Polynomial{0, 0, -1}, Polynomial{0, 1}, Polynomial{0, 0, 1}});
  c.expect(m == display, "f (+) g differs from the four-segment display");

  auto shifted = sing::scan(ops::shift(signed_square(), Q(1)));
  auto poles = shifted.select(2, sing::Kind::Pole);
  c.expect(poles.size() == 1 && poles[0].location == RealScalar(Q(-1)) && poles[0].multiplicity.rational() == 2,
           "f(x+1) second pole at -1");
  auto max_poles = sing::scan(m).select(2, sing::Kind::Pole);
  c.expect(max_poles.size() == 1 && max_poles[0].location == RealScalar(Q(0)) &&
               max_poles[0].multiplicity.rational() == 1,
           "f (+) g second pole at 0");
  return c.outcome();
}

Outcome hyperexp_jumps() {
  Checks c;
  auto e = nev::hyperexp(2, Q(2), 8, 8, 64);
  auto cls = sing::classify(e.f);
  c.expect(cls.entire, "not entire");
  for (std::size_t i = 1; i < e.f.segment_count(); ++i) {
    const auto& b = e.f.breakpoints()[i - 1];
    c.expect(ops::evaluate_jet(e.f, b, ops::Side::Left, 0)[0].rational() ==
                 ops::evaluate_jet(e.f, b, ops::Side::Right, 0)[0].rational(),
             "discontinuous");
  }
  c.expect(nev::characteristic_profile(e.f, Q(8)).nondecreasing(), "characteristic decreases");
  bool monotone = true;
  for (long k = -32; k < 32; ++k) monotone = monotone && e.f(Q(k, 4)) <= e.f(Q(k + 1, 4));
  c.expect(monotone, "f decreases on the quarter grid");
  for (long m = -7; m <= 7; ++m) {
    auto jp = sing::omega_at(e.f, Q(m), 2);
    for (int j = 1; j <= 2; ++j) {
      // C(2, j) |m|^(2-j) 2^(m-1) (2-1)
      Rational expected = Rational(j == 1 ? 2 * std::labs(m) : 1) * tropnev::numeric::pow2(m - 1);
      c.expect(jp.omega[static_cast<std::size_t>(j - 1)].rational() == expected,
               "omega" + std::to_string(j) + " at " + std::to_string(m));
    }
  }
  double log2_bound = std::log2(e.tail_bound.get_d());
  std::ostringstream note;
  note.precision(3);
  note << "jumps exact; certified tail bound 2^" << log2_bound;
  c.note(note.str());
  return c.outcome();
}

Outcome lemma44() {
  Checks c;
  for (long r : {8, 12, 16}) {
    const long window = nev::lemma44_window(Q(1), Q(2), Q(r));
    auto e = nev::hyperexp(2, Q(2), window, window, 64);
    auto rep = nev::lemma44_check(e.f, Q(1), Q(2), Q(r), Interval(Q(0), e.tail_bound));
    c.expect(rep.holds, "r=" + std::to_string(r));
  }
  return c.outcome();
}

Outcome smt_band() {
  Checks c;
  cur::TropicalPolynomialMap p{{{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}}};
  auto rep = cur::smt_homogeneous_check(p, cur::TropicalCurve(example_5_5()), {Q(3), Q(5), Q(9)});
  c.expect(rep.passes(), "residual outside [" + str(rep.band_lo) + ", " + str(rep.band_hi) + "]");
  for (const auto& row : rep.rows) {
    c.expect(row.residual.width() <= Q(1, 1000000000000L), "enclosure width at r=" + str(row.r));
    c.expect(row.poles.lo() > 0, "pole term not positive at r=" + str(row.r));
  }
  auto poles = sing::scan(rep.composed, sing::Window::open(Q(0), Q(15))).select(2, sing::Kind::Pole);
  bool placed = poles.size() == 8;
  for (std::size_t k = 0; placed && k < poles.size(); ++k) {
    // 2k+1 - sqrt(2)/2 is the root in (2k, 2k+1) of 2x^2 - 4(2k+1)x + (2k+1)^2*2 - 1
    const long a = 2 * static_cast<long>(k) + 1;
    auto expected = RealScalar::root_of(Polynomial{2 * a * a - 1, -4 * a, 2}, Rational(a - 1), Rational(a));
    placed = poles[k].location == expected && poles[k].multiplicity.rational() == 1;
  }
  c.expect(placed, "second poles of P o f");
  return c.outcome();
}

Outcome fermat_attainment() {
  Checks c;
  const std::vector<Rational> grid{Q(10), Q(20), Q(40)};
  auto f1 = example_5_9_f1(), f2 = example_5_9_f2();
  auto low = cur::fermat_bounds({{Q(1), Q(1)}, 1}, cur::TropicalCurve({PiecewiseFunction(), f1}), grid);
  auto high = cur::fermat_bounds({{Q(1), Q(1)}, 1}, cur::TropicalCurve({f1, f2}), grid);
  c.expect(low.theta == 1, "theta");
  for (auto [rep, target] : {std::pair{&low, 1.0}, std::pair{&high, 2.0}})
    for (const auto& row : rep->rows)
      c.expect(row.ratio && std::fabs(row.ratio->midpoint().get_d() - target) <= 10 / row.r.get_d(),
               "ratio near " + std::to_string(static_cast<int>(target)) + " at r=" + str(row.r));
  cur::TropicalCurve line({PiecewiseFunction(), PiecewiseFunction(Polynomial{0, 2})});
  auto fail = cur::fermat_bounds({{Q(1), Q(2)}, 2}, line, grid);
  for (const auto& row : fail.rows) {
    c.expect(is_exact(row.counting, Rational(8 * row.r * row.r)), "N-sum 8r^2 at r=" + str(row.r));
    // r / T_f(r) stays at 1, so the growth assumption r = o(T_f) fails
    c.expect(row.growth == 1.0, "growth ratio at r=" + str(row.r));
  }
  c.expect(low.big_theta == 2 && high.big_theta == 2, "Theta = " + str(low.big_theta));
  return c.outcome();
}

Outcome casoratian() {
  Checks c;
  cur::TropicalCurve curve(example_6_4());
  c.expect(cur::casoratian(curve) ==
               pw({Q(-1), Q(0)}, {Polynomial{-1, -2}, Polynomial{1, 2, 2}, Polynomial{1, 2}}),
           "three-piece display");
  auto bal = cur::casoratian_balance(curve, {Q(1), Q(2), Q(7, 2), Q(6)});
  for (const auto& row : bal.rows) {
    const Rational r2 = row.r * row.r;
    c.expect(is_exact(cur::cartan(curve, row.r), r2), "T_f at r=" + str(row.r));
    c.expect(is_exact(row.component_roots, Q(0)), "component roots at r=" + str(row.r));
    c.expect(is_exact(row.casoratian_roots, r2), "casoratian roots at r=" + str(row.r));
  }
  tropnev::sampling::Sampler s(6104);
  for (int i = 0; i < 20; ++i) {
    auto f0 = s.entire(2, 2), f1 = s.entire(2, 2), g = s.entire(2, 2);
    cur::TropicalCurve plain({f0, f1});
    cur::TropicalCurve gauged({ops::tropical_times(f0, g), ops::tropical_times(f1, g)});
    auto rhs = ops::tropical_times(ops::tropical_times(g, ops::shift(g, Q(1))), cur::casoratian(plain));
    c.expect(cur::casoratian(gauged) == rhs, "gauge triple " + std::to_string(i));
  }
  return c.outcome();
}

Outcome finite_root_balance() {
  Checks c;
  tropnev::sampling::Sampler s(6103);
  for (int i = 0; i < 10; ++i) {
    const std::size_t m = static_cast<std::size_t>(s.integer(2, 4));
    std::vector<PiecewiseFunction> fs;
    for (std::size_t k = 0; k < m; ++k) fs.push_back(s.convex_linear(static_cast<int>(s.integer(0, 6))));
    auto rep = cur::casoratian_balance(cur::TropicalCurve(fs), {Q(4)});
    c.expect(rep.tails && rep.tails->components == rep.tails->casoratian, "tail slopes, curve " + std::to_string(i));
    c.expect(rep.tails && rep.tails->equal(), "closed-form slope, curve " + std::to_string(i));
  }
  return c.outcome();
}

Outcome property_suites() {
  Checks c;
  auto check = [&](const char* name, const PropertyRun& run) {
    c.expect(run.clean(100), std::string(name) + " (" + std::to_string(run.instances) + " instances, " +
                                 std::to_string(run.failures.size()) + " failures)");
  };
  check("semiring laws", semiring_laws(1301));
  check("omega additivity", omega_additivity(1302));
  check("shift compatibility", shift_compatibility(1303));
  check("midpoint inequality", midpoint_inequality(1304));
  check("decomposition round-trip", decomposition_round_trip(1305));
  return c.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "singularity table", 1, table_reproduction},
      {2, "Jensen identity", 5, jensen_identity},
      {3, "Poisson-Jensen", 5, poisson_jensen},
      {4, "characteristic closed form", 1, characteristic_closed_form},
      {5, "counting oracle", 10, counting_oracle},
      {6, "shifts and max", 1, shifts_and_max},
      {7, "hyper-exponential jumps", 2, hyperexp_jumps},
      {8, "shift lemma bound", 2, lemma44},
      {9, "homogeneous second main theorem band", 10, smt_band},
      {10, "Fermat attainment", 5, fermat_attainment},
      {11, "Casoratian", 5, casoratian},
      {12, "finite-root balance", 5, finite_root_balance},
      {13, "property suites", 30, property_suites},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = crit.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < crit.budget_s;
    bool pass = out.pass && in_time;
    if (!in_time) out.detail += "; over the time budget";
    failed += !pass;
    std::printf("%s %2d %-38s %8.3fs / %4.0fs  %s\n", pass ? "PASS" : "FAIL", crit.id, crit.name, secs, crit.budget_s,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
