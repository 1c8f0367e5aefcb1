#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidlab/laurent.hpp"
#include "braidlab/piecewise.hpp"

namespace braidlab {

/// A torus knot ±T_{p,q}, normalized to 1 <= p < q with gcd(p, q) = 1.
/// p == 1 denotes the unknot, which is stored as +T_{1,1}.
class TorusKnotId {
 public:
  /// Throws NotCoprime if gcd(p, q) != 1 and InvalidArgument if p or q < 1.
  static TorusKnotId make(int p, int q, int sign = 1);
  static TorusKnotId unknot() { return make(1, 1); }
  /// Accepts "p,q", "-p,q" (mirror) or "unknot".
  static TorusKnotId parse(std::string_view text);

  int sign() const noexcept { return sign_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  bool is_unknot() const noexcept { return p_ == 1; }
  /// min(p, q); the unknot has braid index 1.
  int braid_index() const noexcept { return p_; }
  TorusKnotId mirror() const;

  /// "T(3,4)", "-T(3,4)" or "unknot".
  std::string str() const;

  friend bool operator==(const TorusKnotId&, const TorusKnotId&) = default;
  friend auto operator<=>(const TorusKnotId&, const TorusKnotId&) = default;

 private:
  TorusKnotId(int sign, int p, int q) : sign_(sign), p_(p), q_(q) {}
  int sign_ = 1;
  int p_ = 1;
  int q_ = 1;
};

/// Seifert genus (p-1)(q-1)/2, which equals the slice genus. Throws NotCoprime.
std::int64_t genus(int p, int q);
std::int64_t genus(const TorusKnotId& k);

std::int64_t tau(const TorusKnotId& k);

/// Maximal Euler characteristic p + q - pq of the torus link T_{p,q}
/// (its positive-braid fiber surface); valid for any p, q >= 1.
std::int64_t torus_link_euler_characteristic(int p, int q);

/// Symmetrized Alexander polynomial of T_{p,q}:
/// t^{-g} (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)). Returns 1 for p == 1.
LaurentPoly alexander_torus(int p, int q);

/// Exponents of the alternating Alexander polynomial and the companion
/// sequence m (full recurrence). Both have odd length l + 1.
struct Staircase {
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> m;

  std::size_t l() const noexcept { return alpha.size() - 1; }
  /// m_0, m_2, m_4, ...
  std::vector<std::int64_t> even_m() const;
  std::vector<std::int64_t> even_alpha() const;
};

/// Throws SignPatternBroken if the coefficients are not +1, -1, +1, ...
Staircase staircase(int p, int q);
Staircase staircase_from_alexander(const LaurentPoly& alexander);

/// Upsilon of the positive T_{p,q} on [0, 2]: the upper envelope of
/// m_{2k} - t alpha_{2k} on [0, 1], extended by the symmetry t -> 2 - t.
PiecewiseLinear upsilon_function(int p, int q);
/// Signed value at t = 1. Memoized; safe to call concurrently.
std::int64_t upsilon(const TorusKnotId& k);

/// Closed forms for braid index 2, 3, 4 and for q = p + 1; nullopt when the
/// knot belongs to none of these families.
std::optional<std::int64_t> upsilon_closed_form(const TorusKnotId& k);

}  // namespace braidlab
