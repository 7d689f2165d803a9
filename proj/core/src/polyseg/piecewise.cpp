#include "tropnev/polyseg/piecewise.hpp"

#include <algorithm>

#include "tropnev/error.hpp"

namespace tropnev::polyseg {

namespace {

void check_shape(const std::vector<RealScalar>& breakpoints, const std::vector<Polynomial>& segments) {
  if (segments.size() != breakpoints.size() + 1)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(breakpoints.size() + 1) +
                                                " segments for " + std::to_string(breakpoints.size()) +
                                                " breakpoints, got " + std::to_string(segments.size()));
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (compare(breakpoints[i], breakpoints[i + 1]) >= 0)
      throw Error(ErrorCode::InvalidArgument,
                  "breakpoints not strictly increasing at " + breakpoints[i + 1].to_string());
}

}  // namespace

PiecewiseFunction::PiecewiseFunction(std::vector<RealScalar> breakpoints, std::vector<Polynomial> segments) {
  check_shape(breakpoints, segments);
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    Polynomial jump = segments[i] - segments[i + 1];
    if (!ExactValue::evaluate(jump, breakpoints[i]).is_zero())
      throw Error(ErrorCode::DiscontinuityDetected, "segments disagree at x = " + breakpoints[i].to_string());
  }
  *this = from_trusted(std::move(breakpoints), std::move(segments));
}

PiecewiseFunction PiecewiseFunction::from_trusted(std::vector<RealScalar> breakpoints,
                                                  std::vector<Polynomial> segments) {
  if (segments.size() != breakpoints.size() + 1)
    throw Error(ErrorCode::InvalidArgument, "segment/breakpoint count mismatch");
  PiecewiseFunction out;
  out.segments_.clear();
  out.segments_.push_back(std::move(segments.front()));
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (segments[i + 1] == out.segments_.back()) continue;
    out.breakpoints_.push_back(std::move(breakpoints[i]));
    out.segments_.push_back(std::move(segments[i + 1]));
  }
  return out;
}

int PiecewiseFunction::degree_bound() const {
  int n = 0;
  for (const auto& s : segments_) n = std::max(n, s.degree());
  return n;
}

PiecewiseFunction::Location PiecewiseFunction::locate(const RealScalar& x) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x,
                             [](const RealScalar& b, const RealScalar& v) { return compare(b, v) < 0; });
  auto k = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && compare(*it, x) == 0) return {k, k + 1};
  return {k, k};
}

const Polynomial& PiecewiseFunction::segment_at(const RealScalar& x, Side side) const {
  Location loc = locate(x);
  return segments_[side == Side::Left ? loc.left : loc.right];
}

Rational PiecewiseFunction::operator()(const Rational& x) const { return segments_[locate(x).left](x); }

ExactValue PiecewiseFunction::value(const RealScalar& x) const {
  return ExactValue::evaluate(segments_[locate(x).left], x);
}

bool PiecewiseFunction::operator==(const PiecewiseFunction& other) const {
  if (segments_ != other.segments_ || breakpoints_.size() != other.breakpoints_.size()) return false;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i)
    if (compare(breakpoints_[i], other.breakpoints_[i]) != 0) return false;
  return true;
}

std::string PiecewiseFunction::to_string() const {
  if (breakpoints_.empty()) return segments_.front().to_string();
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + segments_[i].to_string() + " | ";
    if (i == 0) {
      out += "x <= " + breakpoints_[0].to_string();
    } else if (i == breakpoints_.size()) {
      out += "x > " + breakpoints_.back().to_string();
    } else {
      out += breakpoints_[i - 1].to_string() + " < x <= " + breakpoints_[i].to_string();
    }
    out += "]";
  }
  return out;
}

PiecewiseFunction normalize(std::vector<RealScalar> breakpoints, std::vector<Polynomial> segments) {
  return PiecewiseFunction(std::move(breakpoints), std::move(segments));
}

PiecewiseFunction normalize(const PiecewiseFunction& f) {
  return PiecewiseFunction(f.breakpoints(), f.segments());
}

}  // namespace tropnev::polyseg
