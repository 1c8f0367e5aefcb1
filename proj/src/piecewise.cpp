#include "braidlab/piecewise.hpp"

#include <algorithm>
#include <optional>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

std::vector<Segment> merge_collinear(std::vector<Segment> in) {
  std::vector<Segment> out;
  for (auto& s : in) {
    if (!out.empty() && out.back().line == s.line) {
      out.back().to = s.to;
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Segment> segments) {
  if (segments.empty()) throw Error(ErrorCode::EmptyInput, "piecewise function without segments");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!(segments[i].from < segments[i].to)) {
      throw Error(ErrorCode::InvalidArgument, "segment with empty or reversed range");
    }
    if (i > 0) {
      const auto& prev = segments[i - 1];
      if (prev.to != segments[i].from) throw Error(ErrorCode::InvalidArgument, "segments not contiguous");
      if (prev.line.at(prev.to) != segments[i].line.at(segments[i].from)) {
        throw Error(ErrorCode::InvalidArgument, "discontinuity at " + prev.to.str());
      }
    }
  }
  segments_ = merge_collinear(std::move(segments));
}

std::vector<Rational> PiecewiseLinear::breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < segments_.size(); ++i) out.push_back(segments_[i].from);
  return out;
}

Rational PiecewiseLinear::eval(const Rational& t) const {
  if (t < lower() || t > upper()) {
    throw Error(ErrorCode::OutOfDomain, t.str() + " outside [" + lower().str() + ", " + upper().str() + "]");
  }
  auto it = std::find_if(segments_.begin(), segments_.end(), [&](const Segment& s) { return t <= s.to; });
  return it->line.at(t);
}

PiecewiseLinear PiecewiseLinear::mirrored_about_upper() const {
  const Rational c2 = upper() * Rational(2);
  std::vector<Segment> all = segments_;
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    // f(c2 - t) = s (c2 - t) + b = -s t + (s c2 + b)
    all.push_back(Segment{c2 - it->to, c2 - it->from, Line{-it->line.slope, it->line.slope * c2 + it->line.intercept}});
  }
  return PiecewiseLinear(std::move(all));
}

PiecewiseLinear upper_envelope(std::span<const Line> lines, const Rational& lo, const Rational& hi) {
  if (lines.empty()) throw Error(ErrorCode::EmptyInput, "upper envelope of no lines");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty envelope domain");

  std::vector<Line> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) {
    return a.slope != b.slope ? a.slope < b.slope : a.intercept < b.intercept;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Start with the line that is highest at lo, preferring the steepest among
  // ties since it stays on top to the right.
  auto better_at = [](const Rational& t, const Line& a, const Line& b) {
    Rational va = a.at(t), vb = b.at(t);
    return va != vb ? va > vb : a.slope > b.slope;
  };
  Line current = sorted.front();
  for (const auto& l : sorted) {
    if (better_at(lo, l, current)) current = l;
  }

  std::vector<Segment> segs;
  Rational x = lo;
  while (true) {
    // Earliest point to the right of x where a steeper line overtakes.
    std::optional<Rational> next_x;
    std::optional<Line> next_line;
    for (const auto& l : sorted) {
      if (!(l.slope > current.slope)) continue;
      Rational cross = (current.intercept - l.intercept) / (l.slope - current.slope);
      if (cross <= x) continue;
      if (!next_x || cross < *next_x || (cross == *next_x && l.slope > next_line->slope)) {
        next_x = cross;
        next_line = l;
      }
    }
    if (!next_x || *next_x >= hi) {
      segs.push_back(Segment{x, hi, current});
      break;
    }
    segs.push_back(Segment{x, *next_x, current});
    x = *next_x;
    current = *next_line;
  }
  return PiecewiseLinear(std::move(segs));
}

}  // namespace braidlab
