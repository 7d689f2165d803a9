#include "tropnev/cli/render.hpp"

#include "tropnev/error.hpp"

namespace tropnev::cli {

using numeric::Rational;
using numeric::RealScalar;

std::string Format::scalar(const Rational& q) const {
  return digits ? numeric::to_decimal(q, *digits) : numeric::to_string(q);
}

std::string Format::scalar(const RealScalar& x) const {
  if (x.is_rational()) return scalar(x.rational());
  return x.to_decimal(digits.value_or(17));
}

std::string Format::value(const numeric::ExactValue& v) const {
  if (v.is_rational()) return scalar(v.rational());
  return "~" + numeric::to_decimal(v.enclosure(numeric::pow2(-4 * (digits.value_or(17) + 2))).midpoint(),
                                   digits.value_or(17));
}

std::string Format::interval(const numeric::Interval& v) const {
  if (v.is_point()) return scalar(v.lo());
  std::string lo = scalar(v.lo()), hi = scalar(v.hi());
  return lo == hi ? lo : lo + ".." + hi;
}

Json scalar_json(const RealScalar& x) {
  if (x.is_rational()) return numeric::to_string(x.rational());
  Json coeffs = Json::array();
  const numeric::Polynomial poly = x.polynomial();
  for (const auto& c : poly.coefficients()) coeffs.push_back(numeric::to_string(c));
  auto box = x.enclosure();
  return Json{{"poly", coeffs}, {"interval", {numeric::to_string(box.lo()), numeric::to_string(box.hi())}}};
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return numeric::parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::SyntaxError, "bad rational literal \"" + j.get<std::string>() + "\"");
    }
  }
  throw Error(ErrorCode::SyntaxError, "expected an integer or a \"p/q\" string, got " + j.dump());
}

}  // namespace

RealScalar scalar_from_json(const Json& j) {
  if (!j.is_object()) return rational_from_json(j);
  if (!j.contains("poly") || !j.contains("interval") || !j["poly"].is_array() || !j["interval"].is_array() ||
      j["interval"].size() != 2)
    throw Error(ErrorCode::SyntaxError, "algebraic literal needs \"poly\" and a two-element \"interval\"");
  std::vector<Rational> coeffs;
  for (const auto& c : j["poly"]) coeffs.push_back(rational_from_json(c));
  try {
    return RealScalar::root_of(numeric::Polynomial(coeffs), rational_from_json(j["interval"][0]),
                               rational_from_json(j["interval"][1]));
  } catch (const Error& e) {
    throw Error(ErrorCode::SyntaxError, std::string("bad algebraic literal: ") + e.what());
  }
}

Json function_json(const std::string& name, const polyseg::PiecewiseFunction& f) {
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(scalar_json(b));
  Json segs = Json::array();
  for (const auto& s : f.segments()) {
    Json cs = Json::array();
    for (const auto& c : s.coefficients()) cs.push_back(numeric::to_string(c));
    if (cs.empty()) cs.push_back("0");
    segs.push_back(cs);
  }
  return Json{{"name", name}, {"breakpoints", bps}, {"segments", segs}};
}

void CsvWriter::row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

void CsvWriter::write(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      // Algebraic renderings and intervals never contain commas or quotes.
      out << cells[i];
    }
    out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

}  // namespace tropnev::cli
