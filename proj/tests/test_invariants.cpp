#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>

#include "braidlab/error.hpp"
#include "braidlab/invariants.hpp"

using namespace braidlab;

namespace {

// Membership in the semigroup generated by p and q.
std::vector<bool> semigroup(int p, int q, std::int64_t limit) {
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (std::int64_t s = 1; s <= limit; ++s) {
    in[s] = (s >= p && in[s - p]) || (s >= q && in[s - q]);
  }
  return in;
}

// Delta(t) = (1 - t) * sum_{s in S} t^s truncated at degree 2g, then centered.
LaurentPoly semigroup_alexander(int p, int q) {
  const std::int64_t g = static_cast<std::int64_t>(p - 1) * (q - 1) / 2;
  auto in = semigroup(p, q, 2 * g + 1);
  std::map<std::int64_t, BigInt> terms;
  for (std::int64_t s = 0; s <= 2 * g; ++s) {
    if (!in[s]) continue;
    terms[s - g] += 1;
    terms[s + 1 - g] -= 1;
  }
  // Terms above degree 2g cancel against the (truncated) tail.
  terms.erase(g + 1);
  return LaurentPoly(terms);
}

// Upsilon(t) = max_{0 <= m <= 2g} { -2 #(S cap [0, m)) - t (g - m) }.
Rational semigroup_upsilon(int p, int q, const Rational& t) {
  const std::int64_t g = static_cast<std::int64_t>(p - 1) * (q - 1) / 2;
  auto in = semigroup(p, q, 2 * g);
  std::int64_t count = 0;
  Rational best = Rational(0) - t * Rational(g);
  for (std::int64_t m = 1; m <= 2 * g; ++m) {
    if (in[m - 1]) ++count;
    Rational v = Rational(-2 * count) - t * Rational(g - m);
    if (v > best) best = v;
  }
  return best;
}

std::vector<std::pair<int, int>> coprime_pairs(int max_q) {
  std::vector<std::pair<int, int>> out;
  for (int q = 3; q <= max_q; ++q)
    for (int p = 2; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

PiecewiseLinear profile(std::vector<std::tuple<Rational, Rational, Rational, Rational>> pieces) {
  std::vector<Segment> segs;
  for (auto& [from, to, slope, icpt] : pieces) segs.push_back(Segment{from, to, Line{slope, icpt}});
  return PiecewiseLinear(segs);
}

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

PiecewiseLinear on_unit(const PiecewiseLinear& f) {
  std::vector<Segment> segs;
  for (const auto& s : f.segments()) {
    if (s.from >= r(1)) break;
    Segment c = s;
    if (c.to > r(1)) c.to = r(1);
    segs.push_back(c);
  }
  return PiecewiseLinear(segs);
}

}  // namespace

TEST_CASE("torus knot ids are canonical") {
  auto k = TorusKnotId::make(7, 3);
  CHECK(k.p() == 3);
  CHECK(k.q() == 7);
  CHECK(k.sign() == 1);
  CHECK(k.mirror().sign() == -1);
  CHECK(k.mirror().mirror() == k);
  CHECK(TorusKnotId::make(1, 9).is_unknot());
  CHECK(TorusKnotId::make(1, 9, -1) == TorusKnotId::unknot());
  CHECK(TorusKnotId::parse("-3,4") == TorusKnotId::make(3, 4, -1));
  CHECK(TorusKnotId::parse("4,3").str() == "T(3,4)");
  CHECK(TorusKnotId::make(3, 4, -1).str() == "-T(3,4)");
  CHECK_THROWS_AS(TorusKnotId::make(4, 6), Error);
  CHECK_THROWS_AS(TorusKnotId::parse("3"), Error);
  try {
    TorusKnotId::make(2, 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("genus and tau") {
  CHECK(genus(2, 7) == 3);
  CHECK(genus(1, 12) == 0);
  CHECK(genus(4, 5) == 6);
  CHECK_THROWS_AS(genus(3, 6), Error);
  CHECK(tau(TorusKnotId::make(3, 7)) == -6);
  CHECK(tau(TorusKnotId::make(3, 7).mirror()) == 6);
  CHECK(tau(TorusKnotId::unknot()) == 0);
  CHECK(torus_link_euler_characteristic(3, 4) == -5);
  CHECK(torus_link_euler_characteristic(1, 5) == 1);
  CHECK(torus_link_euler_characteristic(2, 2) == 0);
}

TEST_CASE("alexander polynomial examples") {
  CHECK(alexander_torus(2, 3) == LaurentPoly{{1, 1}, {0, -1}, {-1, 1}});
  CHECK(alexander_torus(3, 4) == LaurentPoly{{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}});
  CHECK(alexander_torus(2, 5) == LaurentPoly{{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}});
  CHECK(alexander_torus(1, 4) == LaurentPoly::constant(1));
  CHECK_THROWS_AS(alexander_torus(4, 6), Error);
}

TEST_CASE("alexander polynomial matches the semigroup oracle") {
  for (auto [p, q] : coprime_pairs(20)) {
    CAPTURE(p);
    CAPTURE(q);
    auto a = alexander_torus(p, q);
    CHECK(a == semigroup_alexander(p, q));
    CHECK(a == alexander_torus(q, p));
    CHECK(a.at_one() == 1);
    CHECK(a.span() == 2 * genus(p, q));
    for (const auto& [e, c] : a.terms()) CHECK(a.coefficient(-e) == c);
  }
}

TEST_CASE("staircase examples") {
  auto s = staircase(3, 4);
  CHECK(s.alpha == std::vector<std::int64_t>{3, 2, 0, -2, -3});
  CHECK(s.even_m() == std::vector<std::int64_t>{0, -2, -6});
  auto t = staircase(2, 3);
  CHECK(t.alpha == std::vector<std::int64_t>{1, 0, -1});
  CHECK(t.even_m() == std::vector<std::int64_t>{0, -2});
  CHECK(t.m == std::vector<std::int64_t>{0, -1, -2});
}

TEST_CASE("staircase rejects broken sign patterns") {
  try {
    staircase_from_alexander(LaurentPoly{{1, 1}, {0, 1}, {-1, 1}});
    FAIL("expected SignPatternBroken");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SignPatternBroken);
  }
  CHECK_THROWS_AS(staircase_from_alexander(LaurentPoly{{1, 2}, {0, -3}, {-1, 2}}), Error);
  CHECK_THROWS_AS(staircase_from_alexander(LaurentPoly{{1, 1}, {0, -1}}), Error);
}

TEST_CASE("staircase properties") {
  for (auto [p, q] : coprime_pairs(17)) {
    CAPTURE(p);
    CAPTURE(q);
    auto s = staircase(p, q);
    const auto l = s.l();
    CHECK(l % 2 == 0);
    CHECK(s.alpha.front() == genus(p, q));
    CHECK(s.m.front() == 0);
    for (std::size_t k = 0; k <= l; ++k) CHECK(s.alpha[k] + s.alpha[l - k] == 0);
    for (std::size_t k = 1; k <= l; ++k) {
      CHECK(s.alpha[k] < s.alpha[k - 1]);
      CHECK(s.m[k] < s.m[k - 1]);
    }
    for (std::size_t k = 2; k <= l; k += 2) CHECK(s.m[k] == s.m[k - 1] - 1);
  }
}

TEST_CASE("upsilon function examples") {
  auto u34 = upsilon_function(3, 4);
  CHECK(on_unit(u34) == profile({{r(0), r(2, 3), r(-3), r(0)}, {r(2, 3), r(1), r(0), r(-2)}}));
  CHECK(u34.upper() == r(2));
  CHECK(u34.eval(r(4, 3)) == r(-2));
  CHECK(u34.eval(r(2)) == r(0));

  auto u23 = upsilon_function(2, 3);
  CHECK(on_unit(u23) == profile({{r(0), r(1), r(-1), r(0)}}));

  auto u47 = upsilon_function(4, 7);
  CHECK(u47.eval(r(1, 2)) == r(-9, 2));
  CHECK(u47.eval(r(2, 3)) == r(-16, 3));

  auto unknot = upsilon_function(1, 5);
  CHECK(unknot.eval(r(1)) == r(0));
  CHECK(unknot.breakpoints().empty());
}

TEST_CASE("upsilon function matches the semigroup oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(0, 240);
  for (auto [p, q] : coprime_pairs(14)) {
    CAPTURE(p);
    CAPTURE(q);
    auto f = upsilon_function(p, q);
    for (int i = 0; i < 12; ++i) {
      Rational t(num(rng), 120);
      CAPTURE(t);
      Rational folded = t > r(1) ? r(2) - t : t;
      CHECK(f.eval(t) == semigroup_upsilon(p, q, folded));
    }
    for (const auto& b : f.breakpoints()) CHECK(f.eval(b) == semigroup_upsilon(p, q, b > r(1) ? r(2) - b : b));
  }
}

TEST_CASE("upsilon function shape") {
  for (auto [p, q] : coprime_pairs(16)) {
    CAPTURE(p);
    CAPTURE(q);
    auto f = upsilon_function(p, q);
    const auto g = genus(p, q);
    CHECK(f.lower() == r(0));
    CHECK(f.upper() == r(2));
    CHECK(f.eval(r(0)) == r(0));
    CHECK(f.segments().front().line.slope == r(-g));
    Rational prev = r(-g - 1);
    for (const auto& s : f.segments()) {
      if (s.from >= r(1)) break;
      CHECK(s.line.slope.den() == 1);
      CHECK(s.line.slope >= r(-g));
      CHECK(s.line.slope <= r(0));
      CHECK(s.line.slope > prev);
      prev = s.line.slope;
    }
    for (int i = 0; i <= 12; ++i) CHECK(f.eval(r(i, 12)) == f.eval(r(2) - r(i, 12)));
  }
}

TEST_CASE("Upsilon profiles for braid index 3 and 4") {
  for (std::int64_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto a = static_cast<int>(n);
    CHECK(on_unit(upsilon_function(3, 3 * a + 1)) ==
          profile({{r(0), r(2, 3), r(-3 * n), r(0)}, {r(2, 3), r(1), r(0), r(-2 * n)}}));
    CHECK(on_unit(upsilon_function(3, 3 * a + 2)) ==
          profile({{r(0), r(2, 3), r(-(3 * n + 1)), r(0)}, {r(2, 3), r(1), r(-1), r(-2 * n)}}));
    CHECK(on_unit(upsilon_function(4, 4 * a + 1)) ==
          profile({{r(0), r(1, 2), r(-6 * n), r(0)}, {r(1, 2), r(1), r(-2 * n), r(-2 * n)}}));
    CHECK(on_unit(upsilon_function(4, 4 * a + 3)) == profile({{r(0), r(1, 2), r(-(6 * n + 3)), r(0)},
                                                              {r(1, 2), r(2, 3), r(-(2 * n + 3)), r(-2 * n)},
                                                              {r(2, 3), r(1), r(-2 * n), r(-2 * n - 2)}}));
  }
}

TEST_CASE("upsilon values") {
  CHECK(upsilon(TorusKnotId::make(2, 7)) == -3);
  CHECK(upsilon(TorusKnotId::make(3, 5)) == -3);
  CHECK(upsilon(TorusKnotId::make(4, 5)) == -4);
  CHECK(upsilon(TorusKnotId::make(3, 4)) == -2);
  CHECK(upsilon(TorusKnotId::make(3, 4, -1)) == 2);
  CHECK(upsilon(TorusKnotId::unknot()) == 0);
}

TEST_CASE("closed forms") {
  CHECK(upsilon_closed_form(TorusKnotId::make(3, 7)) == -4);
  CHECK(upsilon_closed_form(TorusKnotId::make(5, 6)) == -6);
  CHECK_FALSE(upsilon_closed_form(TorusKnotId::make(5, 7)).has_value());
  CHECK(upsilon_closed_form(TorusKnotId::make(3, 7, -1)) == 4);
  for (auto [p, q] : coprime_pairs(15)) {
    auto k = TorusKnotId::make(p, q);
    if (auto c = upsilon_closed_form(k)) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(*c == upsilon(k));
      CHECK(-*c == upsilon(k.mirror()));
    }
  }
  for (int m = 2; m <= 14; ++m) CHECK(upsilon(TorusKnotId::make(m, m + 1)) == -(m * m / 4));
}

TEST_CASE("upsilon is safe under concurrent use") {
  std::vector<std::thread> pool;
  std::vector<std::int64_t> results(8 * 20);
  for (int w = 0; w < 8; ++w) {
    pool.emplace_back([w, &results] {
      for (int i = 0; i < 20; ++i) results[w * 20 + i] = upsilon(TorusKnotId::make(2 + i % 5, 61));
    });
  }
  for (auto& t : pool) t.join();
  for (int w = 0; w < 8; ++w)
    for (int i = 0; i < 20; ++i)
      CHECK(results[w * 20 + i] == semigroup_upsilon(2 + i % 5, 61, r(1)));
}
