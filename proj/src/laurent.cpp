#include "braidlab/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  std::map<std::int64_t, BigInt> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  *this = LaurentPoly(acc);
}

LaurentPoly::LaurentPoly(const std::map<std::int64_t, BigInt>& terms) {
  if (terms.empty()) return;
  low_ = terms.begin()->first;
  std::int64_t high = terms.rbegin()->first;
  coeffs_.assign(static_cast<std::size_t>(high - low_ + 1), BigInt(0));
  for (const auto& [e, c] : terms) coeffs_[static_cast<std::size_t>(e - low_)] += c;
  trim();
}

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, BigInt coefficient) {
  LaurentPoly p;
  if (coefficient != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(std::move(coefficient));
  }
  return p;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<std::int64_t, BigInt>> LaurentPoly::terms() const {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::unit_normal() const {
  if (is_zero()) return {};
  LaurentPoly p = shifted(-low_);
  if (p.coeffs_.front().sign() < 0) p = -p;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::int64_t low = std::min(low_, rhs.low_);
  std::int64_t high = std::max(high_degree(), rhs.high_degree());
  std::vector<BigInt> out(static_cast<std::size_t>(high - low + 1), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(low_ - low) + i] = std::move(coeffs_[i]);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(rhs.low_ - low) + i] += rhs.coeffs_[i];
  }
  low_ = low;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] != 0) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    std::int64_t e = low_ + static_cast<std::int64_t>(k);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly laurent_exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
  if (dividend.is_zero()) return {};
  // Divide highest terms first; the divisor's lowest coefficient is nonzero,
  // so t is coprime to it and Laurent divisibility reduces to Z[t]. A top term
  // below dividend.low + span can no longer be cancelled.
  const std::int64_t dhigh = divisor.high_degree();
  const BigInt lead = divisor.coefficient(dhigh);
  std::map<std::int64_t, BigInt> rem;
  for (auto& [e, c] : dividend.terms()) rem[e] = c;
  std::map<std::int64_t, BigInt> quotient;
  auto divisor_terms = divisor.terms();
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    std::int64_t shift = top->first - dhigh;
    if (top->first - divisor.span() < dividend.low_degree()) break;
    if (top->second % lead != 0) break;
    BigInt factor = top->second / lead;
    quotient[shift] = factor;
    for (const auto& [e, c] : divisor_terms) {
      auto& slot = rem[e + shift];
      slot -= factor * c;
      if (slot == 0) rem.erase(e + shift);
    }
  }
  if (!rem.empty()) {
    throw Error(ErrorCode::InexactDivision,
                "(" + dividend.str() + ") is not divisible by (" + divisor.str() + ")");
  }
  return LaurentPoly(quotient);
}

LaurentPoly t_power_minus_one(std::int64_t k) {
  return LaurentPoly::monomial(k, 1) - LaurentPoly::constant(1);
}

}  // namespace braidlab
