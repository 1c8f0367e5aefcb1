#include "braidlab/cobordism.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

std::string label(const TorusKnotId& k) { return k.is_unknot() ? "unknot" : k.str(); }

WitnessLeg leg(std::string from, std::string to, std::int64_t chi) {
  return WitnessLeg{std::move(from), std::move(to), chi, Rational(-chi, 2)};
}

// A single optimal cobordism between knots of genus g1 and g2.
WitnessLeg optimal_leg(const TorusKnotId& a, const TorusKnotId& b) {
  return leg(label(a), label(b), -2 * std::abs(genus(a) - genus(b)));
}

std::vector<WitnessLeg> mirrored(std::vector<WitnessLeg> legs) {
  auto flip = [](std::string& s) {
    if (s == "unknot") return;
    if (!s.empty() && s.front() == '-') {
      s.erase(0, 1);
    } else {
      s.insert(0, "-");
    }
  };
  for (auto& l : legs) {
    flip(l.from);
    flip(l.to);
  }
  return legs;
}

bool optimal_pair(const TorusKnotId& two, const TorusKnotId& other) {
  return optimal_exists(two.q(), other);
}

std::vector<WitnessLeg> positive_witness(const TorusKnotId& k, const TorusKnotId& t) {
  if (k == t) return {};
  if (k.is_unknot() || t.is_unknot()) return {optimal_leg(k, t)};
  if (k.braid_index() == t.braid_index()) return {optimal_leg(k, t)};
  const TorusKnotId& two = k.braid_index() == 2 ? k : t;
  const TorusKnotId& other = k.braid_index() == 2 ? t : k;
  if (two.braid_index() == 2 && (other.braid_index() == 3 || other.braid_index() == 4) && optimal_pair(two, other)) {
    return {optimal_leg(k, t)};
  }
  return distance_witness(k, t);
}

}  // namespace

std::string torus_label(int sign, std::int64_t p, std::int64_t q) {
  return std::string(sign < 0 ? "-" : "") + "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::int64_t lower_bound(const TorusKnotId& k, const TorusKnotId& t) {
  return std::max(std::abs(tau(k) - tau(t)), std::abs(upsilon(k) - upsilon(t)));
}

bool optimal_exists(std::int64_t two_braid_n, const TorusKnotId& other) {
  if (two_braid_n < 3 || two_braid_n % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "T(2,n) needs odd n >= 3");
  }
  if (other.sign() < 0) throw Error(ErrorCode::UnsupportedPair, "optimal_exists expects a positive knot");
  const std::int64_t m = other.q();
  switch (other.braid_index()) {
    case 3:
      return 3 * two_braid_n <= 5 * m - 1;
    case 4:
      return 2 * two_braid_n <= 5 * m - 3;
    default:
      throw Error(ErrorCode::UnsupportedPair, other.str() + " has braid index " + std::to_string(other.braid_index()));
  }
}

std::vector<WitnessLeg> distance_witness(const TorusKnotId& k, const TorusKnotId& t) {
  if (k.sign() < 0 || t.sign() < 0 || k.is_unknot() || t.is_unknot()) {
    throw Error(ErrorCode::NotApplicable, "witness chains are built for positive nontrivial knots");
  }
  const bool k_is_two = k.braid_index() == 2;
  const TorusKnotId& two = k_is_two ? k : t;
  const TorusKnotId& other = k_is_two ? t : k;
  if (two.braid_index() != 2 || (other.braid_index() != 3 && other.braid_index() != 4)) {
    throw Error(ErrorCode::NotApplicable, "witness chains pair braid index 2 with 3 or 4");
  }
  if (optimal_pair(two, other)) {
    throw Error(ErrorCode::NotApplicable, two.str() + " and " + other.str() + " cobound an optimal cobordism");
  }
  const std::int64_t n = two.q();
  const std::int64_t m = other.q();
  std::int64_t k_param = 0;
  std::int64_t mid = 0;
  if (other.braid_index() == 3 && m % 3 == 2) {
    k_param = (m - 2) / 3;
    mid = 5 * k_param + 3;
  } else if (other.braid_index() == 3) {
    k_param = (m - 1) / 3;
    mid = 5 * k_param + 1;
  } else {
    k_param = (m - 1) / 2;
    mid = 5 * k_param + 1;
  }
  const std::string mid_label = torus_label(1, 2, mid);
  const std::int64_t chi_other = torus_link_euler_characteristic(other.p(), other.q());
  const std::int64_t chi_mid = torus_link_euler_characteristic(2, static_cast<int>(mid));
  const std::int64_t chi_two = torus_link_euler_characteristic(2, static_cast<int>(n));
  std::vector<WitnessLeg> legs{leg(other.str(), mid_label, chi_other - chi_mid),
                               leg(mid_label, two.str(), chi_two - chi_mid)};
  if (!k_is_two) return legs;
  // Report the chain in the caller's direction.
  std::reverse(legs.begin(), legs.end());
  for (auto& l : legs) std::swap(l.from, l.to);
  return legs;
}

DistanceResult distance(const TorusKnotId& k, const TorusKnotId& t) {
  if (k.braid_index() + t.braid_index() > 6) {
    throw Error(ErrorCode::OutOfCoveredRange, "braid index sum of " + label(k) + " and " + label(t) + " exceeds 6");
  }
  DistanceResult r;
  r.tau_gap = std::abs(tau(k) - tau(t));
  r.upsilon_gap = std::abs(upsilon(k) - upsilon(t));
  r.distance = std::max(r.tau_gap, r.upsilon_gap);

  if (k.sign() * t.sign() < 0 && !k.is_unknot() && !t.is_unknot()) {
    // Through the unknot: each leg is a fiber surface.
    r.witness = {leg(label(k), "unknot", -2 * genus(k)), leg("unknot", label(t), -2 * genus(t))};
  } else if (k.sign() < 0 || t.sign() < 0) {
    r.witness = mirrored(positive_witness(k.mirror(), t.mirror()));
  } else {
    r.witness = positive_witness(k, t);
  }

  Rational total(0);
  for (const auto& l : r.witness) total = total + l.genus;
  if (total != Rational(r.distance)) {
    throw Error(ErrorCode::BoundViolated, "witness genus " + total.str() + " differs from bound " +
                                              std::to_string(r.distance) + " for " + label(k) + ", " + label(t));
  }
  return r;
}

std::int64_t staircase_upsilon_max_n(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be at least 2");
  std::int64_t n = (3 * m * m - 2 * m + 4) / 4;
  if (n % 2 == 0) --n;
  return n;
}

}  // namespace braidlab
