#pragma once

#include <span>
#include <vector>

#include "braidlab/rational.hpp"

namespace braidlab {

struct Line {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& t) const { return slope * t + intercept; }
  friend bool operator==(const Line&, const Line&) = default;
};

struct Segment {
  Rational from;
  Rational to;
  Line line;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Continuous piecewise-linear function on a closed interval with exact
/// rational breakpoints. Adjacent collinear segments are always merged, so two
/// functions are equal iff their segment lists are equal.
class PiecewiseLinear {
 public:
  /// Validates contiguity, positive segment lengths and continuity.
  explicit PiecewiseLinear(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  const Rational& lower() const { return segments_.front().from; }
  const Rational& upper() const { return segments_.back().to; }

  /// Interior breakpoints (slope changes), in increasing order.
  std::vector<Rational> breakpoints() const;

  /// Exact value; throws OutOfDomain outside [lower, upper].
  Rational eval(const Rational& t) const;

  /// Extends a function on [lo, c] to [lo, 2c - lo] by f(t) = f(2c - t).
  PiecewiseLinear mirrored_about_upper() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  std::vector<Segment> segments_;
};

/// Pointwise maximum of the lines over [lo, hi]. Lines that coincide are kept
/// once; the result is convex.
PiecewiseLinear upper_envelope(std::span<const Line> lines, const Rational& lo, const Rational& hi);

inline Rational pl_eval(const PiecewiseLinear& f, const Rational& t) { return f.eval(t); }

}  // namespace braidlab
