#include "braidlab/invariants.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

void require_torus_knot(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "torus knot parameters must be positive");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "T(" + std::to_string(p) + "," + std::to_string(q) + ") is a link");
  }
}

int parse_positive(std::string_view s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "missing number");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

TorusKnotId TorusKnotId::make(int p, int q, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  require_torus_knot(p, q);
  if (p > q) std::swap(p, q);
  if (p == 1) return TorusKnotId(1, 1, 1);
  return TorusKnotId(sign, p, q);
}

TorusKnotId TorusKnotId::parse(std::string_view text) {
  if (text == "unknot") return unknot();
  int sign = 1;
  if (!text.empty() && (text.front() == '-' || text.front() == '~')) {
    sign = -1;
    text.remove_prefix(1);
  }
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected 'p,q'");
  return make(parse_positive(text.substr(0, comma)), parse_positive(text.substr(comma + 1)), sign);
}

TorusKnotId TorusKnotId::mirror() const { return is_unknot() ? *this : TorusKnotId(-sign_, p_, q_); }

std::string TorusKnotId::str() const {
  if (is_unknot()) return "unknot";
  return std::string(sign_ < 0 ? "-" : "") + "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::int64_t genus(int p, int q) {
  require_torus_knot(p, q);
  return static_cast<std::int64_t>(p - 1) * (q - 1) / 2;
}

std::int64_t genus(const TorusKnotId& k) { return genus(k.p(), k.q()); }

std::int64_t tau(const TorusKnotId& k) { return -k.sign() * genus(k); }

std::int64_t torus_link_euler_characteristic(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "torus link parameters must be positive");
  return static_cast<std::int64_t>(p) + q - static_cast<std::int64_t>(p) * q;
}

LaurentPoly alexander_torus(int p, int q) {
  require_torus_knot(p, q);
  if (p == 1 || q == 1) return LaurentPoly::constant(1);
  const std::int64_t pq = static_cast<std::int64_t>(p) * q;
  LaurentPoly num = t_power_minus_one(pq) * t_power_minus_one(1);
  LaurentPoly den = t_power_minus_one(p) * t_power_minus_one(q);
  return laurent_exact_div(num, den).shifted(-genus(p, q));
}

std::vector<std::int64_t> Staircase::even_m() const {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < m.size(); k += 2) out.push_back(m[k]);
  return out;
}

std::vector<std::int64_t> Staircase::even_alpha() const {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < alpha.size(); k += 2) out.push_back(alpha[k]);
  return out;
}

Staircase staircase_from_alexander(const LaurentPoly& alexander) {
  auto terms = alexander.terms();
  if (terms.empty()) throw Error(ErrorCode::SignPatternBroken, "zero Alexander polynomial");
  Staircase s;
  // terms() is increasing; the staircase reads exponents downwards.
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [exponent, coeff] = terms[terms.size() - 1 - k];
    const int expected = k % 2 == 0 ? 1 : -1;
    if (coeff != expected) {
      throw Error(ErrorCode::SignPatternBroken, "coefficient of t^" + std::to_string(exponent) + " is " +
                                                    coeff.str() + ", expected " + std::to_string(expected));
    }
    s.alpha.push_back(exponent);
  }
  if (s.alpha.size() % 2 == 0) throw Error(ErrorCode::SignPatternBroken, "even number of terms");

  s.m.assign(s.alpha.size(), 0);
  for (std::size_t j = 1; j < s.alpha.size(); ++j) {
    if (j % 2 == 1) {
      s.m[j] = s.m[j - 1] - 2 * (s.alpha[j - 1] - s.alpha[j]) + 1;
    } else {
      s.m[j] = s.m[j - 1] - 1;
    }
  }
  // The even-index shortcut must agree with the full recurrence.
  for (std::size_t k = 2; k < s.alpha.size(); k += 2) {
    if (s.m[k] != s.m[k - 2] - 2 * (s.alpha[k - 2] - s.alpha[k - 1])) {
      throw Error(ErrorCode::SignPatternBroken, "m recurrences disagree at index " + std::to_string(k));
    }
  }
  return s;
}

Staircase staircase(int p, int q) { return staircase_from_alexander(alexander_torus(p, q)); }

PiecewiseLinear upsilon_function(int p, int q) {
  Staircase s = staircase(p, q);
  std::vector<Line> lines;
  for (std::size_t k = 0; k < s.alpha.size(); k += 2) {
    lines.push_back(Line{Rational(-s.alpha[k]), Rational(s.m[k])});
  }
  return upper_envelope(lines, Rational(0), Rational(1)).mirrored_about_upper();
}

std::int64_t upsilon(const TorusKnotId& k) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, std::int64_t> cache;
  const auto key = std::make_pair(k.p(), k.q());
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return k.sign() * it->second;
  }
  Staircase s = staircase(k.p(), k.q());
  std::int64_t best = s.m[0] - s.alpha[0];
  for (std::size_t j = 2; j < s.alpha.size(); j += 2) best = std::max(best, s.m[j] - s.alpha[j]);
  {
    std::unique_lock lock(mutex);
    cache.emplace(key, best);
  }
  return k.sign() * best;
}

std::optional<std::int64_t> upsilon_closed_form(const TorusKnotId& k) {
  const std::int64_t p = k.p(), q = k.q();
  std::optional<std::int64_t> value;
  if (k.is_unknot()) {
    value = 0;
  } else if (p == 2) {
    value = -(q - 1) / 2;
  } else if (p == 3) {
    value = q % 3 == 1 ? -2 * (q / 3) : -2 * (q / 3) - 1;
  } else if (p == 4) {
    value = -2 * ((q - 1) / 2);
  } else if (q == p + 1) {
    value = -(p * p / 4);
  }
  if (value) *value *= k.sign();
  return value;
}

}  // namespace braidlab
