#include "braidlab/closure.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <shared_mutex>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const BigInt& v) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<u64>(r);
  }
};

// Primes just below 2^62, found once and shared.
u64 nth_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  std::mt19937_64 rng(0x5eed);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= k) {
    if (boost::multiprecision::miller_rabin_test(candidate, 32, rng)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[k];
}

// Right-multiplies the running matrix by the image of one letter. `cols` is
// column-major: cols[j][r]. Works for any ring element type via the callbacks.
template <class T, class Add, class MulT, class MulTinv, class Neg>
void apply_letter(std::vector<std::vector<T>>& cols, int letter, Add add, MulT mul_t, MulTinv mul_tinv, Neg neg) {
  const int d = static_cast<int>(cols.size());
  const int i = std::abs(letter) - 1;
  std::vector<T> ci = cols[i];
  if (letter > 0) {
    if (i - 1 >= 0)
      for (int r = 0; r < d; ++r) cols[i - 1][r] = add(cols[i - 1][r], mul_t(ci[r]));
    if (i + 1 < d)
      for (int r = 0; r < d; ++r) cols[i + 1][r] = add(cols[i + 1][r], ci[r]);
    for (int r = 0; r < d; ++r) cols[i][r] = neg(mul_t(ci[r]));
  } else {
    if (i - 1 >= 0)
      for (int r = 0; r < d; ++r) cols[i - 1][r] = add(cols[i - 1][r], ci[r]);
    if (i + 1 < d)
      for (int r = 0; r < d; ++r) cols[i + 1][r] = add(cols[i + 1][r], mul_tinv(ci[r]));
    for (int r = 0; r < d; ++r) cols[i][r] = neg(mul_tinv(ci[r]));
  }
}

std::vector<std::vector<u64>> burau_mod(const BraidWord& w, const Zp& f, u64 t) {
  const int d = w.strands() - 1;
  std::vector<std::vector<u64>> cols(d, std::vector<u64>(d, 0));
  for (int j = 0; j < d; ++j) cols[j][j] = 1;
  const u64 tinv = f.inv(t);
  auto add = [&](u64 a, u64 b) { return f.add(a, b); };
  auto mt = [&](u64 a) { return f.mul(a, t); };
  auto mti = [&](u64 a) { return f.mul(a, tinv); };
  auto neg = [&](u64 a) { return f.neg(a); };
  for (int letter : w.letters()) apply_letter(cols, letter, add, mt, mti, neg);
  return cols;
}

u64 det_mod(std::vector<std::vector<u64>> a, const Zp& f) {
  const std::size_t n = a.size();
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const u64 inv = f.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const u64 factor = f.mul(a[r][c], inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[c][k]));
    }
  }
  return det;
}

// t^{-lo} det(B(t) - I) at t = x, modulo f.p.
u64 shifted_det_at(const BraidWord& w, const Zp& f, u64 x, std::int64_t lo) {
  auto cols = burau_mod(w, f, x);
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j][j] = f.sub(cols[j][j], 1);
  // det of the transpose is the same.
  u64 d = det_mod(std::move(cols), f);
  const u64 scale = lo >= 0 ? f.inv(f.pow(x, static_cast<u64>(lo))) : f.pow(x, static_cast<u64>(-lo));
  return f.mul(d, scale);
}

// Coefficients (ascending) of the polynomial of degree <= values.size() - 1
// taking values[i] at x = i + 2.
std::vector<u64> interpolate(const std::vector<u64>& values, const Zp& f) {
  const std::size_t n = values.size();
  auto xs = [](std::size_t i) { return static_cast<u64>(i + 2); };
  std::vector<u64> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const u64 denom = f.inv(f.sub(xs(i), xs(i - level)));
      dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), denom);
    }
  }
  // Horner on the Newton form.
  std::vector<u64> coeffs(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // coeffs = coeffs * (t - x_k) + dd[k]
    std::vector<u64> next(n, 0);
    const u64 xk = xs(k);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      next[j + 1] = f.add(next[j + 1], coeffs[j]);
      next[j] = f.sub(next[j], f.mul(coeffs[j], xk));
    }
    next[0] = f.add(next[0], dd[k]);
    coeffs = std::move(next);
  }
  return coeffs;
}

// log2 of a bound on |det(B(t) - I)| over the unit circle, from the Hadamard
// inequality applied to entrywise l1 norms of the exact Burau matrix.
double log2_det_bound(const LaurentMatrix& b) {
  double total = 0;
  for (std::size_t r = 0; r < b.size(); ++r) {
    double row = 0;
    for (std::size_t c = 0; c < b.size(); ++c) {
      BigInt l1 = 0;
      for (const auto& [e, coeff] : b[r][c].terms()) l1 += abs(coeff);
      if (r == c) l1 += 1;
      const double v = static_cast<double>(l1);
      row += v * v;
    }
    total += 0.5 * std::log2(row);
  }
  return total;
}

struct Window {
  std::int64_t lo;
  std::int64_t width;
};

LaurentPoly det_in_window(const BraidWord& w, Window win, std::size_t primes, bool& verified) {
  const std::size_t points = static_cast<std::size_t>(win.width) + 1;
  std::vector<std::vector<u64>> residues;
  BigInt modulus = 1;
  std::vector<u64> used;
  verified = true;
  for (std::size_t k = 0; k < primes; ++k) {
    Zp f{nth_prime(k)};
    std::vector<u64> values(points);
    for (std::size_t i = 0; i < points; ++i) values[i] = shifted_det_at(w, f, i + 2, win.lo);
    auto coeffs = interpolate(values, f);
    // One extra point catches a window that is too narrow.
    const u64 x = points + 2;
    u64 horner = 0;
    for (std::size_t j = coeffs.size(); j-- > 0;) horner = f.add(f.mul(horner, x), coeffs[j]);
    if (horner != shifted_det_at(w, f, x, win.lo)) {
      verified = false;
      return {};
    }
    residues.push_back(std::move(coeffs));
    used.push_back(f.p);
  }
  // Garner-free CRT: fold primes one at a time over BigInt.
  std::map<std::int64_t, BigInt> terms;
  for (std::size_t j = 0; j < points; ++j) {
    BigInt value = residues[0][j];
    BigInt mod = used[0];
    for (std::size_t k = 1; k < used.size(); ++k) {
      Zp f{used[k]};
      const u64 current = f.reduce(value);
      const u64 delta = f.mul(f.sub(residues[k][j], current), f.inv(f.reduce(mod)));
      value += mod * delta;
      mod *= used[k];
    }
    if (value > mod / 2) value -= mod;
    if (value != 0) terms[win.lo + static_cast<std::int64_t>(j)] = value;
  }
  return LaurentPoly(terms);
}

}  // namespace

LaurentMatrix reduced_burau(const BraidWord& w) {
  const int d = std::max(0, w.strands() - 1);
  std::vector<std::vector<LaurentPoly>> cols(d, std::vector<LaurentPoly>(d));
  for (int j = 0; j < d; ++j) cols[j][j] = LaurentPoly::constant(1);
  auto add = [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; };
  auto mt = [](const LaurentPoly& a) { return a.shifted(1); };
  auto mti = [](const LaurentPoly& a) { return a.shifted(-1); };
  auto neg = [](const LaurentPoly& a) { return -a; };
  for (int letter : w.letters()) apply_letter(cols, letter, add, mt, mti, neg);
  LaurentMatrix rows(d, std::vector<LaurentPoly>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) rows[r][c] = cols[c][r];
  return rows;
}

LaurentPoly burau_characteristic_det(const BraidWord& w) {
  const int d = w.strands() - 1;
  if (d <= 0) return LaurentPoly::constant(1);
  const auto b = reduced_burau(w);
  const double bits = log2_det_bound(b);
  // Product of primes (each > 2^61) must exceed twice the bound.
  const std::size_t primes = static_cast<std::size_t>(std::ceil((bits + 2) / 61.0)) + 1;

  std::int64_t negatives = 0;
  for (int letter : w.letters()) negatives += letter < 0;
  const std::int64_t len = static_cast<std::int64_t>(w.size());
  // The determinant is symmetric about e/2 with span at most len, i.e. it
  // lives in [-negatives, len - negatives]. The wide window is a fallback:
  // entries of t^{negatives} B are polynomials of degree <= len.
  bool ok = false;
  LaurentPoly det = det_in_window(w, Window{-negatives, len}, primes, ok);
  if (ok) return det;
  det = det_in_window(w, Window{-negatives * d, len * d}, primes, ok);
  if (!ok) throw Error(ErrorCode::InvalidArgument, "Burau determinant interpolation failed");
  return det;
}

LaurentPoly alexander_of_closure(const BraidWord& w) {
  if (w.strands() <= 1) return LaurentPoly::constant(1);
  LaurentPoly det = burau_characteristic_det(w);
  if (det.is_zero()) throw Error(ErrorCode::ZeroDeterminantFamily, "Burau determinant vanishes for " + w.literal());
  LaurentPoly num = det * t_power_minus_one(1);
  return laurent_exact_div(num, t_power_minus_one(w.strands())).unit_normal();
}

ClosureFingerprint fingerprint(const BraidWord& w) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, std::vector<int>>, ClosureFingerprint> cache;
  constexpr std::size_t kCacheLimit = 1 << 14;
  auto key = std::make_pair(w.strands(), w.letters());
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ClosureFingerprint fp;
  fp.strands = w.strands();
  fp.components = cycle_count(permutation(w));
  fp.exponent_sum = w.algebraic_length();
  if (w.is_positive()) fp.bennequin_chi = static_cast<std::int64_t>(w.strands()) - static_cast<std::int64_t>(w.size());
  try {
    fp.alexander = alexander_of_closure(w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroDeterminantFamily) throw;
  }
  std::unique_lock lock(mutex);
  if (cache.size() >= kCacheLimit) cache.clear();
  cache.emplace(std::move(key), fp);
  return fp;
}

std::optional<int> identify_torus2(const BraidWord& w) {
  if (!w.is_positive()) throw Error(ErrorCode::NotPositive, "identify_torus2 needs a positive word");
  const auto fp = fingerprint(w);
  const std::int64_t n = 2 - *fp.bennequin_chi;
  if (n < 1 || !fp.alexander) return std::nullopt;
  const auto target = fingerprint(torus_braid(2, static_cast<int>(n)));
  if (fp.components != target.components || fp.alexander != target.alexander) return std::nullopt;
  return static_cast<int>(n);
}

}  // namespace braidlab
