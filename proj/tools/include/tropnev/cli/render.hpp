#pragma once

#include "json.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tropnev/numeric/interval.hpp"
#include "tropnev/numeric/real_scalar.hpp"
#include "tropnev/polyseg/piecewise.hpp"

namespace tropnev::cli {

using Json = nlohmann::ordered_json;

// Exact "p/q" by default; fixed-point with `digits` places when set.
struct Format {
  std::optional<int> digits;

  std::string scalar(const numeric::Rational& q) const;
  std::string scalar(const numeric::RealScalar& x) const;
  std::string value(const numeric::ExactValue& v) const;
  // A point interval prints as its value, otherwise "lo..hi".
  std::string interval(const numeric::Interval& v) const;
};

// Manifest notation: rationals as strings, irrationals as {"poly", "interval"}.
Json scalar_json(const numeric::RealScalar& x);
numeric::RealScalar scalar_from_json(const Json& j);
Json function_json(const std::string& name, const polyseg::PiecewiseFunction& f);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(std::vector<std::string> cells);
  void write(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace tropnev::cli
