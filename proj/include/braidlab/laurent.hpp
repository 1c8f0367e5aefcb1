#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidlab/rational.hpp"

namespace braidlab {

/// Integer Laurent polynomial in one variable t.
///
/// Stored densely from the lowest exponent upwards; both ends are trimmed so
/// the lowest and highest stored coefficients are nonzero. The zero
/// polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  LaurentPoly(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms);
  explicit LaurentPoly(const std::map<std::int64_t, BigInt>& terms);

  static LaurentPoly constant(BigInt c) { return monomial(0, std::move(c)); }
  static LaurentPoly monomial(std::int64_t exponent, BigInt coefficient);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest and highest exponents; only meaningful when nonzero.
  std::int64_t low_degree() const noexcept { return low_; }
  std::int64_t high_degree() const noexcept {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::int64_t span() const noexcept { return is_zero() ? 0 : high_degree() - low_degree(); }

  BigInt coefficient(std::int64_t exponent) const;
  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<std::int64_t, BigInt>> terms() const;

  /// Value at t = 1.
  BigInt at_one() const;

  /// Multiplication by t^k.
  LaurentPoly shifted(std::int64_t k) const;

  /// Representative of the class up to units ±t^k: lowest exponent 0 and
  /// lowest coefficient positive.
  LaurentPoly unit_normal() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Human-readable form, highest exponent first, e.g. "t^2 - t + 1 - t^-1".
  std::string str() const;

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Exact product; the same as operator*.
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient q with q * divisor == dividend. Throws InexactDivision when the
/// divisor does not divide the dividend in Z[t, 1/t].
LaurentPoly laurent_exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// t^k - 1, a frequent factor in torus-knot formulas.
LaurentPoly t_power_minus_one(std::int64_t k);

}  // namespace braidlab
