#include "tropnev/cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "tropnev/cli/manifest.hpp"
#include "tropnev/cli/render.hpp"
#include "tropnev/curves/curves.hpp"
#include "tropnev/error.hpp"
#include "tropnev/nevanlinna/functionals.hpp"
#include "tropnev/nevanlinna/hyperexp.hpp"
#include "tropnev/nevanlinna/poisson_jensen.hpp"
#include "tropnev/sampling.hpp"
#include "tropnev/singular/singular.hpp"

namespace tropnev::cli {

namespace {

namespace fs = std::filesystem;
namespace nev = nevanlinna;
using numeric::Interval;
using numeric::Rational;
using numeric::RealScalar;

struct Options {
  std::string manifest;
  std::string out_dir;
  std::string format;
  int decimal = -1;
  std::uint64_t seed = 1;
  std::string grid;
  std::string fn, curve, poly, name, window;
  std::string r, x, r_max, c, alpha = "2", step = "1", offset;
  int n = 2;
  std::vector<long> hyper_window;
  long tail = 64;
  int count = 200;
};

Rational rational_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
  try {
    return numeric::parse_rational(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string(flag) + ": cannot read \"" + text + "\" as a rational");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::string plain_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// "lo:hi:step", a comma list, or "exact" (the given event points plus r_max).
std::vector<Rational> parse_grid(const std::string& spec, const std::vector<Rational>* events = nullptr,
                                 const std::optional<Rational>& r_max = std::nullopt) {
  if (spec.empty()) throw Error(ErrorCode::InvalidArgument, "--grid is required");
  if (spec == "exact") {
    if (!events || !r_max) throw Error(ErrorCode::InvalidArgument, "--grid exact needs --rmax and a closed-form profile");
    std::vector<Rational> out;
    for (const auto& e : *events)
      if (sgn(e) > 0 && cmp(e, *r_max) < 0) out.push_back(e);
    out.push_back(*r_max);
    return out;
  }
  if (spec.find(':') != std::string::npos) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "grid ranges look like lo:hi:step");
    Rational lo = rational_arg(parts[0], "--grid"), hi = rational_arg(parts[1], "--grid"),
             step = rational_arg(parts[2], "--grid");
    if (sgn(step) <= 0 || cmp(lo, hi) > 0) throw Error(ErrorCode::InvalidArgument, "grid range is empty");
    std::vector<Rational> out;
    for (Rational v = lo; cmp(v, hi) <= 0; v += step) {
      out.push_back(v);
      if (out.size() > 100000) throw Error(ErrorCode::InvalidArgument, "grid has more than 100000 points");
    }
    return out;
  }
  std::vector<Rational> out;
  for (const auto& p : split(spec, ',')) out.push_back(rational_arg(p, "--grid"));
  return out;
}

std::vector<Rational> rational_breakpoints(const polyseg::PiecewiseFunction& f) {
  std::vector<Rational> out;
  for (const auto& b : f.breakpoints())
    if (b.is_rational()) out.push_back(b.rational());
  return out;
}

Json pieces_json(const polyseg::PiecewiseFunction& f) {
  Json j = function_json("", f);
  j.erase("name");
  return j;
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {
    if (opt.decimal >= 0) fmt_.digits = opt.decimal;
    if (!opt.out_dir.empty()) dir_ = fs::path(opt.out_dir);
  }

  const Manifest& manifest() {
    if (!manifest_) {
      if (opt_.manifest.empty()) throw Error(ErrorCode::InvalidArgument, "--manifest is required");
      std::ifstream in(opt_.manifest, std::ios::binary);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read manifest " + opt_.manifest);
      std::stringstream ss;
      ss << in.rdbuf();
      manifest_ = parse_manifest(ss.str());
    }
    return *manifest_;
  }

  const Format& fmt() const { return fmt_; }
  std::ostream& err() { return err_; }

  void emit(const std::string& file, const std::string& content) {
    if (!dir_) {
      out_ << content;
      return;
    }
    fs::create_directories(*dir_);
    std::ofstream(*dir_ / file, std::ios::binary) << content;
    out_ << "wrote " << (*dir_ / file).string() << '\n';
  }

  // Writes the report as JSON and/or a CSV of its rows; the exit code follows "pass".
  int finish(const std::string& stem, const Json& report, const std::string& default_format) {
    const std::string format = opt_.format.empty() ? default_format : opt_.format;
    if (format != "json" && format != "csv") throw Error(ErrorCode::InvalidArgument, "--format is json or csv");
    const bool has_rows = report.contains("rows") && report["rows"].is_array();
    if (dir_) {
      emit(stem + ".json", report.dump(2) + "\n");
      if (has_rows) emit(stem + ".csv", rows_csv(report["rows"]));
    } else if (format == "json" || !has_rows) {
      emit(stem + ".json", report.dump(2) + "\n");
    } else {
      emit(stem + ".csv", rows_csv(report["rows"]));
    }
    if (report.contains("pass") && !report["pass"].get<bool>()) {
      for (const auto& reason : report.value("failures", Json::array())) err_ << "FAIL: " << reason.get<std::string>() << '\n';
      return exit_check_failed;
    }
    return exit_ok;
  }

 private:
  static std::string rows_csv(const Json& rows) {
    std::vector<std::string> header;
    if (!rows.empty())
      for (const auto& [k, _] : rows.front().items()) header.push_back(k);
    CsvWriter csv(header);
    for (const auto& row : rows) {
      std::vector<std::string> cells;
      for (const auto& k : header) {
        if (!row.contains(k)) cells.emplace_back();
        else if (row[k].is_string()) cells.push_back(row[k].get<std::string>());
        else cells.push_back(row[k].dump());
      }
      csv.row(std::move(cells));
    }
    std::ostringstream os;
    csv.write(os);
    return os.str();
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  Format fmt_;
  std::optional<fs::path> dir_;
  std::optional<Manifest> manifest_;
};

bool zero_residual(const Interval& v) {
  return v.contains(Rational(0)) && cmp(v.width(), numeric::make_rational(1, 1000000000000L)) <= 0;
}

int cmd_analyze(Session& s, const Options& o) {
  const auto& f = s.manifest().function(o.fn);
  singular::Window w;
  if (!o.window.empty()) {
    auto parts = split(o.window, ':');
    if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "--window looks like lo:hi");
    w = singular::Window::closed(rational_arg(parts[0], "--window"), rational_arg(parts[1], "--window"));
  }
  auto table = singular::scan(f, w);
  Json rows = Json::array();
  std::vector<RealScalar> locations;
  int top = 0;
  for (const auto& e : table.entries) {
    rows.push_back(Json{{"location", s.fmt().scalar(e.location)},
                        {"order", e.order},
                        {"kind", singular::to_string(e.kind)},
                        {"multiplicity", s.fmt().value(e.multiplicity)}});
    if (locations.empty() || !(locations.back() == e.location)) locations.push_back(e.location);
    top = std::max(top, e.order);
  }
  // Orders by kind against locations, zero where nothing sits.
  Json grid = Json::array();
  for (int j = 1; j <= top; ++j)
    for (auto kind : {singular::Kind::Root, singular::Kind::Pole}) {
      Json cells = Json::array();
      for (const auto& loc : locations) {
        std::string cell = "0";
        for (const auto& e : table.entries)
          if (e.order == j && e.kind == kind && e.location == loc) cell = s.fmt().value(e.multiplicity);
        cells.push_back(cell);
      }
      grid.push_back(Json{{"order", j}, {"kind", singular::to_string(kind)}, {"cells", cells}});
    }
  Json locs = Json::array();
  for (const auto& l : locations) locs.push_back(s.fmt().scalar(l));
  Json report{{"function", o.fn}, {"rows", rows}, {"table", {{"locations", locs}, {"grid", grid}}}};
  return s.finish("analyze", report, "csv");
}

int cmd_characteristic(Session& s, const Options& o) {
  const auto& f = s.manifest().function(o.fn);
  const Rational r_max = rational_arg(o.r_max, "--rmax");
  const int n = std::max(1, f.degree_bound());
  Json report{{"function", o.fn}, {"r_max", s.fmt().scalar(r_max)}};
  std::optional<std::vector<nev::RadiusProfile>> profiles;
  try {
    std::vector<nev::RadiusProfile> ps{nev::proximity_profile(f, r_max)};
    for (int j = 1; j <= n; ++j) ps.push_back(nev::counting_profile(f, j, r_max));
    ps.push_back(nev::characteristic_profile(f, r_max));
    profiles = std::move(ps);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unsupported) throw;
    s.err() << "note: " << e.what() << "; falling back to pointwise values\n";
  }
  std::vector<Rational> events;
  if (profiles) {
    Json closed = Json::object();
    for (const auto& p : *profiles) {
      std::string key = nev::to_string(p.kind);
      if (p.kind == nev::ProfileKind::Counting) key += "_" + std::to_string(p.order);
      closed[key] = pieces_json(p.closed_form);
      for (const auto& b : rational_breakpoints(p.closed_form)) events.push_back(b);
    }
    std::sort(events.begin(), events.end(), [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
    events.erase(std::unique(events.begin(), events.end()), events.end());
    const auto& T = profiles->back();
    report["closed_form"] = closed;
    report["T_shape"] = {{"nonnegative", T.nonnegative()}, {"nondecreasing", T.nondecreasing()}, {"convex", T.convex()}};
  } else {
    report["closed_form"] = nullptr;
  }
  auto grid = parse_grid(o.grid.empty() ? std::string("exact") : o.grid, profiles ? &events : nullptr, r_max);
  Json rows = Json::array();
  for (const auto& r : grid) {
    Json row{{"r", s.fmt().scalar(r)}};
    if (profiles) {
      const auto& ps = *profiles;
      row["m"] = s.fmt().scalar(ps.front()(r));
      for (int j = 1; j <= n; ++j) row["N_" + std::to_string(j)] = s.fmt().scalar(ps[static_cast<std::size_t>(j)](r));
      row["T"] = s.fmt().scalar(ps.back()(r));
    } else {
      row["m"] = s.fmt().interval(nev::proximity(f, r));
      for (int j = 1; j <= n; ++j) row["N_" + std::to_string(j)] = s.fmt().interval(nev::counting(f, j, r));
      row["T"] = s.fmt().interval(nev::characteristic(f, r));
    }
    rows.push_back(row);
  }
  report["rows"] = rows;
  return s.finish("characteristic", report, "csv");
}

int cmd_jensen(Session& s, const Options& o) {
  const auto& f = s.manifest().function(o.fn);
  const Rational r = rational_arg(o.r, "--r");
  auto rep = nev::jensen_sum(f, r);
  const auto& F = s.fmt();
  const bool pass = zero_residual(rep.residual);
  Json report{{"function", o.fn},
              {"r", F.scalar(r)},
              {"boundary_mean", F.interval(rep.boundary_mean)},
              {"root_term", F.interval(rep.root_term)},
              {"pole_term", F.interval(rep.pole_term)},
              {"reconstructed", F.interval(rep.reconstructed)},
              {"f0", F.interval(rep.reference)},
              {"residual", F.interval(rep.residual)},
              {"pass", pass},
              {"failures", Json::array()}};
  if (!pass) report["failures"].push_back("Jensen residual " + F.interval(rep.residual) + " is not 0");
  return s.finish("jensen", report, "json");
}

int cmd_pj(Session& s, const Options& o) {
  const auto& f = s.manifest().function(o.fn);
  const Rational x = rational_arg(o.x, "--x"), r = rational_arg(o.r, "--r");
  auto rep = nev::poisson_jensen(f, x, r);
  const auto& F = s.fmt();
  Json terms = Json::array();
  for (const auto& t : rep.terms)
    terms.push_back(Json{{"point", F.scalar(t.point)},
                         {"region", nev::to_string(t.region)},
                         {"order", t.order},
                         {"omega", F.value(t.omega)},
                         {"Omega", F.value(t.Omega)},
                         {"Gamma", F.value(t.Gamma)},
                         {"b_term", F.interval(t.b_term)},
                         {"d_term", F.interval(t.d_term)},
                         {"split_agrees", t.decomposition_agrees}});
  const bool pass = rep.passes() && zero_residual(rep.residual) && rep.decomposition_agrees;
  Json report{{"function", o.fn},
              {"x", F.scalar(x)},
              {"r", F.scalar(r)},
              {"n", rep.n},
              {"blocks",
               {{"boundary_mean", F.interval(rep.boundary_mean)},
                {"slope_term", F.interval(rep.slope_term)},
                {"omega_b_sum", F.interval(rep.omega_b_sum)},
                {"gamma_d_sum", F.interval(rep.gamma_d_sum)},
                {"left_correction", F.interval(rep.left_correction)},
                {"zero_correction", F.interval(rep.zero_correction)}}},
              {"reconstructed", F.interval(rep.reconstructed)},
              {"f_x", F.interval(rep.reference)},
              {"residual", F.interval(rep.residual)},
              {"rows", terms},
              {"pass", pass},
              {"failures", Json::array()}};
  if (!zero_residual(rep.residual)) report["failures"].push_back("residual " + F.interval(rep.residual) + " is not 0");
  if (!rep.decomposition_agrees) report["failures"].push_back("Omega/Gamma split disagrees with the direct definition");
  return s.finish("pj", report, "json");
}

int cmd_hyperexp(Session& s, const Options& o) {
  if (o.hyper_window.size() != 2) throw Error(ErrorCode::InvalidArgument, "--window takes two integers M R");
  const Rational alpha = rational_arg(o.alpha, "--alpha");
  auto h = nev::hyperexp(o.n, alpha, o.hyper_window[0], o.hyper_window[1], o.tail);
  const std::string name = o.name.empty() ? "e" : o.name;
  Json doc{{"functions", Json::array({function_json(name, h.f)})},
           {"notes",
            {{"kind", "hyperexp"},
             {"n", o.n},
             {"alpha", numeric::to_string(alpha)},
             {"window", o.hyper_window},
             {"cutoff", o.tail},
             {"tail_bound", numeric::to_string(h.tail_bound)},
             {"tail_bound_log2", plain_double(std::log2(h.tail_bound.get_d()))}}}};
  s.emit("hyperexp.json", doc.dump(2) + "\n");
  return exit_ok;
}

void warn_if_not_reduced(Session& s, const curves::TropicalCurve& c, const std::string& name) {
  auto rc = curves::check_reduced(c);
  if (!rc.reduced)
    s.err() << "warning: curve " << name << " is not reduced (common root of order " << rc.witness->order << " at "
            << s.fmt().scalar(rc.witness->location) << ")\n";
}

int cmd_cartan(Session& s, const Options& o) {
  auto c = s.manifest().curve(o.curve);
  warn_if_not_reduced(s, c, o.curve);
  std::optional<Rational> r_max;
  std::vector<Rational> events;
  Json report{{"curve", o.curve}, {"reduced", curves::check_reduced(c).reduced}};
  if (!o.r_max.empty()) {
    r_max = rational_arg(o.r_max, "--rmax");
    auto prof = curves::cartan_profile(c, *r_max);
    events = rational_breakpoints(prof.closed_form);
    report["closed_form"] = pieces_json(prof.closed_form);
  }
  auto grid = parse_grid(o.grid.empty() ? std::string("exact") : o.grid, &events, r_max);
  Json rows = Json::array();
  for (const auto& r : grid) rows.push_back(Json{{"r", s.fmt().scalar(r)}, {"T_f", s.fmt().interval(curves::cartan(c, r))}});
  report["rows"] = rows;
  return s.finish("cartan", report, "csv");
}

int cmd_compose(Session& s, const Options& o) {
  auto c = s.manifest().curve(o.curve);
  const auto& def = s.manifest().polynomial(o.poly);
  polyseg::PiecewiseFunction h = std::holds_alternative<curves::TropicalPolynomialMap>(def)
                                     ? curves::compose_tropical(std::get<curves::TropicalPolynomialMap>(def), c)
                                     : curves::compose_fermat(std::get<curves::FermatForm>(def), c);
  const std::string name = o.name.empty() ? o.poly + "_of_" + o.curve : o.name;
  s.emit("compose.json", Json{{"functions", Json::array({function_json(name, h)})}}.dump(2) + "\n");
  return exit_ok;
}

int cmd_casoratian(Session& s, const Options& o) {
  auto c = s.manifest().curve(o.curve);
  auto h = curves::casoratian(c, rational_arg(o.step, "--step"));
  const std::string name = o.name.empty() ? "C0_" + o.curve : o.name;
  s.emit("casoratian.json", Json{{"functions", Json::array({function_json(name, h)})}}.dump(2) + "\n");
  return exit_ok;
}

int cmd_verify_smt(Session& s, const Options& o) {
  auto c = s.manifest().curve(o.curve);
  const auto* p = std::get_if<curves::TropicalPolynomialMap>(&s.manifest().polynomial(o.poly));
  if (!p) throw Error(ErrorCode::InvalidArgument, o.poly + " is not a tropical polynomial");
  warn_if_not_reduced(s, c, o.curve);
  auto rep = curves::smt_homogeneous_check(*p, c, parse_grid(o.grid));
  const auto& F = s.fmt();
  Json rows = Json::array();
  Json failures = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(Json{{"r", F.scalar(row.r)},
                        {"T_f", F.interval(row.cartan)},
                        {"roots", F.interval(row.roots)},
                        {"poles", F.interval(row.poles)},
                        {"residual", F.interval(row.residual)},
                        {"pass", row.pass}});
    if (!row.pass)
      failures.push_back("r = " + F.scalar(row.r) + ": residual " + F.interval(row.residual) + " outside [" +
                         F.scalar(rep.band_lo) + ", " + F.scalar(rep.band_hi) + "]");
  }
  Json report{{"curve", o.curve},
              {"polynomial", o.poly},
              {"degree", rep.degree},
              {"beta", F.scalar(rep.beta)},
              {"gamma", F.scalar(rep.gamma)},
              {"band", {F.scalar(rep.band_lo), F.scalar(rep.band_hi)}},
              {"reduced", rep.reduced},
              {"rows", rows},
              {"pass", rep.passes()},
              {"failures", failures}};
  return s.finish("smt", report, "json");
}

int cmd_verify_fermat(Session& s, const Options& o) {
  auto c = s.manifest().curve(o.curve);
  const auto* q = std::get_if<curves::FermatForm>(&s.manifest().polynomial(o.poly));
  if (!q) throw Error(ErrorCode::InvalidArgument, o.poly + " is not a Fermat form");
  auto rep = curves::fermat_bounds(*q, c, parse_grid(o.grid));
  const auto& F = s.fmt();
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json j{{"r", F.scalar(row.r)}, {"T_f", F.interval(row.cartan)}, {"counting", F.interval(row.counting)}};
    j["ratio"] = row.ratio ? F.interval(*row.ratio) : std::string("undefined");
    j["ratio_decimal"] = row.ratio ? plain_double(row.ratio->midpoint().get_d()) : std::string("undefined");
    j["r_over_T"] = row.ratio ? plain_double(row.growth) : std::string("undefined");
    j["within_bounds"] =
        row.ratio && cmp(row.ratio->lo(), rep.theta) >= 0 && cmp(row.ratio->hi(), rep.big_theta) <= 0;
    rows.push_back(j);
  }
  // Finite-r trend table only: the bounds are asymptotic.
  Json report{{"curve", o.curve},
              {"polynomial", o.poly},
              {"power", rep.power},
              {"theta", F.scalar(rep.theta)},
              {"Theta", F.scalar(rep.big_theta)},
              {"rows", rows}};
  return s.finish("fermat", report, "json");
}

int cmd_verify_balance(Session& s, const Options& o) {
  auto c = s.manifest().curve(o.curve);
  auto rep = curves::casoratian_balance(c, parse_grid(o.grid), rational_arg(o.step, "--step"));
  const auto& F = s.fmt();
  Json rows = Json::array();
  Json failures = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(Json{{"r", F.scalar(row.r)},
                        {"lhs", F.interval(row.lhs)},
                        {"component_roots", F.interval(row.component_roots)},
                        {"casoratian_roots", F.interval(row.casoratian_roots)},
                        {"shift_terms", F.interval(row.shift_terms)},
                        {"casoratian_poles", F.interval(row.casoratian_poles)},
                        {"even_windows", F.interval(row.even_windows)},
                        {"boundary", F.interval(row.boundary)},
                        {"at_zero", F.interval(row.at_zero)},
                        {"bound", F.interval(row.bound)},
                        {"holds", row.holds}});
    if (!row.holds)
      failures.push_back("r = " + F.scalar(row.r) + ": lhs " + F.interval(row.lhs) + " exceeds " + F.interval(row.bound));
  }
  Json report{{"curve", o.curve}, {"step", F.scalar(rep.step)}, {"rows", rows}};
  bool pass = rep.holds();
  if (rep.tails) {
    report["tail_slopes"] = {{"formula", F.scalar(rep.tails->formula)},
                             {"components", F.scalar(rep.tails->components)},
                             {"casoratian", F.scalar(rep.tails->casoratian)},
                             {"equal", rep.tails->equal()}};
    if (!rep.tails->equal()) {
      pass = false;
      failures.push_back("tail slopes differ");
    }
  }
  report["pass"] = pass;
  report["failures"] = failures;
  return s.finish("casoratian_balance", report, "json");
}

int cmd_jensen_sweep(Session& s, const Options& o) {
  if (o.count < 1) throw Error(ErrorCode::InvalidArgument, "--count must be positive");
  sampling::Sampler rng(o.seed);
  Json failures = Json::array();
  int checks = 0;
  auto check = [&](const polyseg::PiecewiseFunction& f, const Rational& r, const std::string& what) {
    ++checks;
    Interval bal = nev::jensen_balance(f, r);
    Interval res = nev::jensen_sum(f, r).residual;
    if (!zero_residual(bal) || !zero_residual(res))
      failures.push_back(what + " at r = " + s.fmt().scalar(r) + ": balance " + s.fmt().interval(bal) + ", residual " +
                         s.fmt().interval(res));
  };
  if (!o.fn.empty()) {
    const auto& f = s.manifest().function(o.fn);
    Rational reach = 1;
    for (const auto& b : f.breakpoints()) {
      Rational m = b.abs().enclosure().hi();
      if (cmp(m, reach) > 0) reach = m;
    }
    for (int k = 0; k < o.count; ++k) check(f, rng.rational_in(numeric::make_rational(1, 8), Rational(2 * reach + 1)), o.fn);
  } else {
    for (int k = 0; k < o.count; ++k) {
      auto f = rng.piecewise(static_cast<int>(rng.integer(1, 3)), static_cast<int>(rng.integer(0, 4)));
      for (int t = 0; t < 5; ++t) check(f, rng.rational_in(numeric::make_rational(1, 8), Rational(6)), "random #" + std::to_string(k));
    }
  }
  Json report{{"seed", o.seed}, {"count", o.count}, {"checks", checks}, {"pass", failures.empty()}, {"failures", failures}};
  if (!o.fn.empty()) report["function"] = o.fn;
  return s.finish("jensen_sweep", report, "json");
}

int cmd_lemma44(Session& s, const Options& o) {
  const auto& f = s.manifest().function(o.fn);
  const Rational c = rational_arg(o.c, "--c"), alpha = rational_arg(o.alpha, "--alpha");
  Interval offset(Rational(0));
  if (!o.offset.empty()) {
    auto parts = split(o.offset, ':');
    if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "--offset looks like lo:hi");
    offset = Interval(rational_arg(parts[0], "--offset"), rational_arg(parts[1], "--offset"));
  }
  const auto& F = s.fmt();
  Json rows = Json::array();
  Json failures = Json::array();
  for (const auto& r : parse_grid(o.grid)) {
    auto rep = nev::lemma44_check(f, c, alpha, r, offset);
    rows.push_back(Json{{"r", F.scalar(r)},
                        {"lhs_plus", F.scalar(rep.lhs_plus)},
                        {"lhs_minus", F.scalar(rep.lhs_minus)},
                        {"T", F.interval(rep.characteristic)},
                        {"rhs", F.interval(rep.rhs)},
                        {"needs_window", nev::lemma44_window(c, alpha, r)},
                        {"holds", rep.holds}});
    if (!rep.holds) failures.push_back("r = " + F.scalar(r) + ": bound fails");
  }
  Json report{{"function", o.fn}, {"c", F.scalar(c)}, {"alpha", F.scalar(alpha)}, {"rows", rows},
              {"pass", failures.empty()}, {"failures", failures}};
  return s.finish("lemma44", report, "json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact value-distribution computations for piecewise-polynomial tropical functions", "tropnev"};
  app.require_subcommand(1);
  app.add_option("--manifest,-m", o.manifest, "Manifest JSON file");
  app.add_option("--out", o.out_dir, "Write report files into this directory");
  app.add_option("--format", o.format, "json or csv");
  app.add_option("--decimal", o.decimal, "Render numbers as decimals with this many places");
  app.add_option("--seed", o.seed, "Seed for random sweeps");
  app.add_option("--grid", o.grid, "Radii: lo:hi:step, a comma list, or exact");

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int(Session&, const Options&)> fn) {
    sub->callback([&action, fn, &o, &out, &err] {
      action = [fn, &o, &out, &err] {
        Session session(o, out, err);
        return fn(session, o);
      };
    });
  };
  // Global flags are accepted after the subcommand too.
  auto common = [&](CLI::App* sub) {
    sub->add_option("--manifest,-m", o.manifest);
    sub->add_option("--out", o.out_dir);
    sub->add_option("--format", o.format);
    sub->add_option("--decimal", o.decimal);
    sub->add_option("--seed", o.seed);
    sub->add_option("--grid", o.grid);
  };

  auto* analyze = app.add_subcommand("analyze", "Singularity table of a function");
  common(analyze);
  analyze->add_option("--fn", o.fn)->required();
  analyze->add_option("--window", o.window, "Closed window lo:hi (default: whole line)");
  bind(analyze, cmd_analyze);

  auto* characteristic = app.add_subcommand("characteristic", "Closed-form m, N_j, T profiles and grid values");
  common(characteristic);
  characteristic->add_option("--fn", o.fn)->required();
  characteristic->add_option("--rmax", o.r_max)->required();
  bind(characteristic, cmd_characteristic);

  auto* jensen = app.add_subcommand("jensen", "Jensen reconstruction of f(0)");
  common(jensen);
  jensen->add_option("--fn", o.fn)->required();
  jensen->add_option("--r", o.r)->required();
  bind(jensen, cmd_jensen);

  auto* pj = app.add_subcommand("pj", "Poisson-Jensen reconstruction of f(x)");
  common(pj);
  pj->add_option("--fn", o.fn)->required();
  pj->add_option("--x", o.x)->required();
  pj->add_option("--r", o.r)->required();
  bind(pj, cmd_pj);

  auto* special = app.add_subcommand("special", "Generated functions");
  special->require_subcommand(1);
  auto* hyper = special->add_subcommand("hyperexp", "Windowed hyper-exponential e_{n,alpha} as a manifest");
  common(hyper);
  hyper->add_option("--n", o.n)->required();
  hyper->add_option("--alpha", o.alpha)->required();
  hyper->add_option("--window", o.hyper_window, "M R: breakpoints -M..R")->expected(2)->required();
  hyper->add_option("--tail", o.tail, "Lower cutoff K");
  hyper->add_option("--name", o.name);
  bind(hyper, cmd_hyperexp);

  auto* curve = app.add_subcommand("curve", "Tropical curve operations");
  curve->require_subcommand(1);
  auto* cartan = curve->add_subcommand("cartan", "Cartan characteristic on a grid");
  common(cartan);
  cartan->add_option("--curve", o.curve)->required();
  cartan->add_option("--rmax", o.r_max);
  bind(cartan, cmd_cartan);
  auto* compose = curve->add_subcommand("compose", "Compose a tropical or Fermat polynomial with a curve");
  common(compose);
  compose->add_option("--curve", o.curve)->required();
  compose->add_option("--poly", o.poly)->required();
  compose->add_option("--name", o.name);
  bind(compose, cmd_compose);
  auto* cas = curve->add_subcommand("casoratian", "Max-plus Casoratian of a curve");
  common(cas);
  cas->add_option("--curve", o.curve)->required();
  cas->add_option("--step", o.step);
  cas->add_option("--name", o.name);
  bind(cas, cmd_casoratian);

  auto* verify = app.add_subcommand("verify", "Finite-r verifiers");
  verify->require_subcommand(1);
  auto* smt = verify->add_subcommand("smt", "Band check for a homogeneous tropical polynomial");
  common(smt);
  smt->add_option("--curve", o.curve)->required();
  smt->add_option("--poly", o.poly)->required();
  bind(smt, cmd_verify_smt);
  auto* fermat = verify->add_subcommand("fermat", "Counting-to-characteristic ratios for a Fermat form");
  common(fermat);
  fermat->add_option("--curve", o.curve)->required();
  fermat->add_option("--poly", o.poly)->required();
  bind(fermat, cmd_verify_fermat);
  auto* balance = verify->add_subcommand("casoratian-balance", "Casoratian counting balance and tail slopes");
  common(balance);
  balance->add_option("--curve", o.curve)->required();
  balance->add_option("--step", o.step);
  bind(balance, cmd_verify_balance);
  auto* sweep = verify->add_subcommand("jensen-sweep", "Jensen identity on random radii or random functions");
  common(sweep);
  sweep->add_option("--fn", o.fn);
  sweep->add_option("--count", o.count);
  bind(sweep, cmd_jensen_sweep);
  auto* l44 = verify->add_subcommand("lemma44", "Logarithmic-difference bound");
  common(l44);
  l44->add_option("--fn", o.fn)->required();
  l44->add_option("--c", o.c)->required();
  l44->add_option("--alpha", o.alpha);
  l44->add_option("--offset", o.offset, "Enclosure lo:hi of an unknown additive constant");
  bind(l44, cmd_lemma44);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }
  if (!action) return exit_input_error;
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

}  // namespace tropnev::cli
