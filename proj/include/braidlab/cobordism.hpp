#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/invariants.hpp"
#include "braidlab/rational.hpp"

namespace braidlab {

/// One cobordism in a witness chain. Endpoints are labels such as "T(2,16)";
/// intermediate T_{2,even} are links, so a single leg may have odd Euler
/// characteristic and a half-integer genus -chi/2.
struct WitnessLeg {
  std::string from;
  std::string to;
  std::int64_t euler_characteristic = 0;
  Rational genus;

  friend bool operator==(const WitnessLeg&, const WitnessLeg&) = default;
};

struct DistanceResult {
  std::int64_t distance = 0;
  std::int64_t tau_gap = 0;
  std::int64_t upsilon_gap = 0;
  /// Always "lower-bound-matched": a witness of genus equal to the bound was built.
  std::string achieved_by = "lower-bound-matched";
  std::vector<WitnessLeg> witness;
};

/// max(|tau(K) - tau(T)|, |upsilon(K) - upsilon(T)|).
std::int64_t lower_bound(const TorusKnotId& k, const TorusKnotId& t);

/// Whether T_{2,n} and `other` (positive, braid index 3 or 4) cobound an
/// optimal cobordism: 3n <= 5m - 1 for T_{3,m}, 2n <= 5m - 3 for T_{4,m}.
/// Throws UnsupportedPair for other braid indices or negative knots.
bool optimal_exists(std::int64_t two_braid_n, const TorusKnotId& other);

/// Cobordism distance for braid index sum <= 6, with a witness chain whose
/// genera add up to the distance. Throws OutOfCoveredRange otherwise.
DistanceResult distance(const TorusKnotId& k, const TorusKnotId& t);

/// The two-leg chain through T_{2,5k+3} or T_{2,5k+1} for a positive pair
/// of braid index 2 and 3 or 4 without an optimal cobordism. Throws
/// NotApplicable for every other pair.
std::vector<WitnessLeg> distance_witness(const TorusKnotId& k, const TorusKnotId& t);

/// Largest odd n with n <= (3m^2 - 2m + 4) / 4, the most upsilon allows for
/// T(2,n) inside T(m,m+1).
std::int64_t staircase_upsilon_max_n(std::int64_t m);

/// "T(p,q)" or "-T(p,q)", also for links.
std::string torus_label(int sign, std::int64_t p, std::int64_t q);

}  // namespace braidlab
