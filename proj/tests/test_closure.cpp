#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>

#include "braidlab/closure.hpp"
#include "braidlab/error.hpp"
#include "braidlab/invariants.hpp"

using namespace braidlab;

namespace {

LaurentMatrix identity(int d) {
  LaurentMatrix m(d, std::vector<LaurentPoly>(d));
  for (int i = 0; i < d; ++i) m[i][i] = LaurentPoly::constant(1);
  return m;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t d = a.size();
  LaurentMatrix c(d, std::vector<LaurentPoly>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Fraction-free elimination over Z[t, 1/t], independent of the modular path.
LaurentPoly bareiss_det(LaurentMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly::constant(1);
  LaurentPoly prev = LaurentPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(a[k], a[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = laurent_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

LaurentPoly exact_det_minus_identity(const BraidWord& w) {
  auto b = reduced_burau(w);
  for (std::size_t i = 0; i < b.size(); ++i) b[i][i] -= LaurentPoly::constant(1);
  return bareiss_det(b);
}

BraidWord random_word(std::mt19937& rng, int strands, int length, bool positive) {
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) {
    int g = 1 + static_cast<int>(rng() % (strands - 1));
    letters.push_back(!positive && rng() % 3 == 0 ? -g : g);
  }
  return BraidWord(strands, letters);
}

// Positive word using every generator, so its closure is non-split.
BraidWord random_connected_positive(std::mt19937& rng, int strands, int extra) {
  std::vector<int> letters;
  for (int g = 1; g < strands; ++g) letters.push_back(g);
  for (int i = 0; i < extra; ++i) {
    auto pos = letters.begin() + static_cast<long>(rng() % (letters.size() + 1));
    letters.insert(pos, 1 + static_cast<int>(rng() % (strands - 1)));
  }
  return BraidWord(strands, letters);
}

}  // namespace

TEST_CASE("reduced burau examples") {
  CHECK(reduced_burau(BraidWord(3, {})) == identity(2));
  BraidWord w(4, {1, -2, 3, 3, -1});
  CHECK(reduced_burau(w.concat(w.inverse())) == identity(3));
  LaurentMatrix cube{{LaurentPoly{{3, -1}}}};
  CHECK(reduced_burau(torus_braid(2, 3)) == cube);
  CHECK(reduced_burau(BraidWord(1, {})).empty());
}

TEST_CASE("reduced burau satisfies the braid relations") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(reduced_burau(BraidWord(n, {i, i + 1, i})) == reduced_burau(BraidWord(n, {i + 1, i, i + 1})));
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) CHECK(reduced_burau(BraidWord(n, {i, j})) == reduced_burau(BraidWord(n, {j, i})));
  }
}

TEST_CASE("reduced burau is multiplicative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto u = random_word(rng, n, static_cast<int>(rng() % 8), false);
    auto v = random_word(rng, n, static_cast<int>(rng() % 8), false);
    CAPTURE(u.literal());
    CAPTURE(v.literal());
    CHECK(reduced_burau(u.concat(v)) == multiply(reduced_burau(u), reduced_burau(v)));
    CHECK(multiply(reduced_burau(u), reduced_burau(u.inverse())) == identity(n - 1));
  }
}

TEST_CASE("modular determinant matches exact elimination") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto w = random_word(rng, n, static_cast<int>(rng() % 14), trial % 2 == 0);
    CAPTURE(w.literal());
    CHECK(burau_characteristic_det(w) == exact_det_minus_identity(w));
  }
  // A longer mixed-sign word.
  std::vector<int> letters;
  for (int i = 0; i < 30; ++i) {
    letters.push_back(1);
    letters.push_back(-2);
    letters.push_back(3);
  }
  BraidWord big(4, letters);
  CHECK(burau_characteristic_det(big) == exact_det_minus_identity(big));
}

TEST_CASE("alexander of closures") {
  CHECK(alexander_of_closure(torus_braid(2, 3)) == LaurentPoly{{2, 1}, {1, -1}, {0, 1}});
  CHECK(alexander_of_closure(torus_braid(2, 5)) == LaurentPoly{{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}});
  CHECK(alexander_of_closure(torus_braid(3, 4)) == alexander_torus(3, 4).unit_normal());
  CHECK(alexander_of_closure(BraidWord(1, {})) == LaurentPoly::constant(1));
  CHECK(alexander_of_closure(BraidWord(2, {1})) == LaurentPoly::constant(1));
  // Figure eight knot.
  CHECK(alexander_of_closure(BraidWord(3, {1, -2, 1, -2})) == LaurentPoly{{2, 1}, {1, -3}, {0, 1}});
  try {
    alexander_of_closure(BraidWord(3, {1}));
    FAIL("split closure should not have an Alexander polynomial here");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDeterminantFamily);
  }
}

TEST_CASE("burau alexander agrees with the torus formula") {
  for (int q = 3; q <= 13; ++q)
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(alexander_of_closure(torus_braid(p, q)) == alexander_torus(p, q).unit_normal());
      CHECK(alexander_of_closure(torus_braid(q, p)) == alexander_torus(p, q).unit_normal());
    }
}

TEST_CASE("alexander is invariant under Markov moves") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    auto w = random_connected_positive(rng, n, static_cast<int>(rng() % 8));
    CAPTURE(w.literal());
    const auto a = alexander_of_closure(w);
    auto up = w.widened(n + 1);
    CHECK(alexander_of_closure(up.concat(BraidWord(n + 1, {n}))) == a);
    CHECK(alexander_of_closure(up.concat(BraidWord(n + 1, {-n}))) == a);
    auto conj = BraidWord(n, {1}).concat(w).concat(BraidWord(n, {-1}));
    CHECK(alexander_of_closure(conj) == a);
  }
}

TEST_CASE("fingerprint examples") {
  auto fp = fingerprint(torus_braid(3, 4));
  CHECK(fp.components == 1);
  CHECK(fp.bennequin_chi == -5);
  CHECK(fp.exponent_sum == 8);
  CHECK(fp.strands == 3);
  CHECK(fp.alexander == alexander_torus(3, 4).unit_normal());

  auto unknot = fingerprint(BraidWord(1, {}));
  CHECK(unknot.components == 1);
  CHECK(unknot.bennequin_chi == 1);

  auto hopf2 = fingerprint(torus_braid(2, 4));
  CHECK(hopf2.components == 2);
  CHECK(hopf2.bennequin_chi == -2);

  auto mixed = fingerprint(BraidWord(3, {1, -2}));
  CHECK_FALSE(mixed.bennequin_chi.has_value());
  CHECK(mixed.exponent_sum == 0);

  auto split = fingerprint(BraidWord(3, {1, 1}));
  CHECK(split.components == 3);
  CHECK_FALSE(split.alexander.has_value());
}

TEST_CASE("fingerprint is invariant under conjugation and relations") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto w = random_connected_positive(rng, n, static_cast<int>(rng() % 10));
    CAPTURE(w.literal());
    const auto fp = fingerprint(w);
    CHECK(fingerprint(apply_move(w, move::CyclicShift{move::CyclicShift::Direction::FrontToBack})) == fp);
    CHECK(fingerprint(apply_move(w, move::CyclicShift{move::CyclicShift::Direction::BackToFront})) == fp);
    for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
      for (auto form : {move::Relation::Form::Long, move::Relation::Form::Commuting}) {
        try {
          auto v = apply_move(w, move::Relation{pos, form});
          CHECK(fingerprint(v) == fp);
        } catch (const Error&) {
        }
      }
    }
    // Knot parity: 1 - chi and components - 1 have the same parity.
    CHECK((1 - *fp.bennequin_chi - (fp.components - 1)) % 2 == 0);
    if (fp.components <= 2) CHECK(((1 - *fp.bennequin_chi) % 2 == 0) == (fp.components == 1));
  }
}

TEST_CASE("identify_torus2") {
  CHECK(identify_torus2(BraidWord(3, {1, 1, 2, 1, 1, 1, 1})) == 6);
  CHECK(identify_torus2(torus_braid(2, 9)) == 9);
  CHECK_FALSE(identify_torus2(torus_braid(3, 5)).has_value());
  CHECK(identify_torus2(BraidWord(3, {1, 2})) == 1);
  CHECK(identify_torus2(BraidWord(2, {})) == std::nullopt);
  try {
    identify_torus2(BraidWord(2, {-1}));
    FAIL("negative word accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositive);
  }
}

TEST_CASE("fingerprint is safe under concurrent use") {
  std::vector<std::thread> pool;
  std::vector<ClosureFingerprint> got(8 * 12);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &got] {
      for (int i = 0; i < 12; ++i) got[t * 12 + i] = fingerprint(torus_braid(2 + i % 4, 5 + i));
    });
  }
  for (auto& th : pool) th.join();
  for (int i = 0; i < 12; ++i) {
    const auto expected = fingerprint(torus_braid(2 + i % 4, 5 + i));
    for (int t = 0; t < 8; ++t) CHECK(got[t * 12 + i] == expected);
  }
}
