#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/laurent.hpp"

namespace braidlab {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Reduced Burau image of w, an (n-1) x (n-1) matrix. Generator a_i acts on
/// row i by (t, -t, 1) in columns i-1, i, i+1; the image of a word is the
/// product of its letter images from left to right.
LaurentMatrix reduced_burau(const BraidWord& w);

/// det(B(w) - I), computed by evaluation at many points modulo several
/// 61-bit primes and interpolation. Exact: the number of primes comes from a
/// Hadamard bound on the coefficients.
LaurentPoly burau_characteristic_det(const BraidWord& w);

/// det(B(w) - I) (1 - t) / (1 - t^n) in unit-normal form (lowest exponent 0,
/// lowest coefficient positive). Throws ZeroDeterminantFamily when the
/// determinant vanishes, e.g. for split closures.
LaurentPoly alexander_of_closure(const BraidWord& w);

struct ClosureFingerprint {
  int components = 1;
  std::int64_t exponent_sum = 0;
  int strands = 1;
  /// strands - length; only for positive words.
  std::optional<std::int64_t> bennequin_chi;
  /// Empty when the Burau determinant vanishes.
  std::optional<LaurentPoly> alexander;

  friend bool operator==(const ClosureFingerprint&, const ClosureFingerprint&) = default;
};

/// Memoized by word; safe to call concurrently.
ClosureFingerprint fingerprint(const BraidWord& w);

/// n >= 1 such that the closure's fingerprint matches T_{2,n}, if any.
/// Throws NotPositive for words with inverse letters.
std::optional<int> identify_torus2(const BraidWord& w);

}  // namespace braidlab
