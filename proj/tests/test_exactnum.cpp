#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "seshadri/exactnum.hpp"
#include "seshadri/linsys.hpp"  // splitmix64

using namespace seshadri;

namespace {

// Brute-force Pell oracle: increment k until 1 + D k^2 is a square. The
// cap keeps pathological fundamental solutions from stalling the suite; a
// capped scan still certifies minimality below the cap.
bool pell_brute_force(std::uint64_t D, std::uint64_t cap, std::uint64_t& ell,
                      std::uint64_t& k) {
  for (std::uint64_t kk = 1; kk <= cap; ++kk) {
    std::uint64_t v = 1 + D * kk * kk;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r == v) {
      ell = r;
      k = kk;
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("pell fundamental solutions match the stated examples") {
  PellSolution s = pell_fundamental(2);
  CHECK(s.ell0 == 3);
  CHECK(s.k0 == 2);
  s = pell_fundamental(10);
  CHECK(s.ell0 == 19);
  CHECK(s.k0 == 6);
  CHECK_THROWS_AS(pell_fundamental(4), DomainError);
  CHECK_THROWS_AS(pell_fundamental(9), DomainError);
  CHECK_THROWS_AS(pell_fundamental(1), DomainError);
  CHECK_THROWS_AS(pell_fundamental(0), DomainError);
}

TEST_CASE("pell agrees with the brute-force oracle on random nonsquares") {
  std::uint64_t state = 20240901;
  int checked = 0;
  while (checked < 60) {
    std::uint64_t D = 2 + splitmix64(state) % 9999;
    Int d(static_cast<unsigned long>(D));
    if (is_perfect_square(d)) continue;
    PellSolution s = pell_fundamental(d);
    CHECK(s.ell0 * s.ell0 - d * s.k0 * s.k0 == 1);
    std::uint64_t ell, k;
    std::uint64_t cap = 200000;
    if (pell_brute_force(D, cap, ell, k)) {
      CHECK(s.ell0 == Int(static_cast<unsigned long>(ell)));
      CHECK(s.k0 == Int(static_cast<unsigned long>(k)));
    } else {
      // No solution below the cap, so the CF solution must sit above it.
      CHECK(s.k0 > Int(static_cast<unsigned long>(cap)));
    }
    ++checked;
  }
}

TEST_CASE("compare_root decides x vs q^(1/n) exactly") {
  CHECK(compare_root(rat(3, 2), Rat(2), 2) == Ordering::Greater);
  CHECK(compare_root(rat(4, 3), rat(16, 9), 2) == Ordering::Equal);
  CHECK(compare_root(rat(60, 19), Rat(10), 2) == Ordering::Less);
  CHECK(compare_root(rat(-1, 2), Rat(3), 5) == Ordering::Less);
  CHECK(compare_root(Rat(0), Rat(0), 3) == Ordering::Equal);
  CHECK_THROWS_AS(compare_root(Rat(1), Rat(2), 0), DomainError);
}

TEST_CASE("compare_root is consistent on randomized triples") {
  std::uint64_t state = 7;
  for (int iter = 0; iter < 300; ++iter) {
    long xn = static_cast<long>(splitmix64(state) % 200);
    long xd = 1 + static_cast<long>(splitmix64(state) % 40);
    unsigned long n = 1 + splitmix64(state) % 4;
    Rat x = rat(xn, xd);
    CHECK(compare_root(x, rat_pow(x, n), n) == Ordering::Equal);
    long qn = static_cast<long>(splitmix64(state) % 500);
    long qd = 1 + static_cast<long>(splitmix64(state) % 40);
    Rat q = rat(qn, qd);
    Ordering o = compare_root(x, q, n);
    // antisymmetry against the root-vs-root comparison
    SeshadriValue a = SeshadriValue::exact(x);
    SeshadriValue b = SeshadriValue::root(q, n);
    CHECK(compare_values(a, b) == o);
    Ordering rev = compare_values(b, a);
    if (o == Ordering::Less) CHECK(rev == Ordering::Greater);
    if (o == Ordering::Greater) CHECK(rev == Ordering::Less);
    if (o == Ordering::Equal) CHECK(rev == Ordering::Equal);
  }
}

TEST_CASE("compare_values is transitive on random point values") {
  std::uint64_t state = 99;
  auto random_value = [&]() -> SeshadriValue {
    long n = static_cast<long>(splitmix64(state) % 60);
    long d = 1 + static_cast<long>(splitmix64(state) % 9);
    if (splitmix64(state) % 2 == 0) return SeshadriValue::exact(rat(n, d));
    return SeshadriValue::root(rat(n, d), 2 + splitmix64(state) % 3);
  };
  for (int iter = 0; iter < 200; ++iter) {
    SeshadriValue a = random_value(), b = random_value(), c = random_value();
    if (value_le(a, b) && value_le(b, c)) CHECK(value_le(a, c));
    if (value_lt(a, b) && value_lt(b, c)) CHECK(value_lt(a, c));
  }
}

TEST_CASE("floor_root examples and bracketing property") {
  CHECK(floor_root(10, 2) == 3);
  CHECK(floor_root(27, 3) == 3);
  CHECK(floor_root(26, 3) == 2);
  CHECK(floor_root(0, 5) == 0);
  std::uint64_t state = 13;
  for (int iter = 0; iter < 200; ++iter) {
    Int a(static_cast<unsigned long>(splitmix64(state) % 1000000));
    unsigned long n = 1 + splitmix64(state) % 5;
    Int r = floor_root(a, n);
    CHECK(int_pow(r, n) <= a);
    CHECK(int_pow(r + 1, n) > a);
  }
}

TEST_CASE("root values normalize to canonical form") {
  SeshadriValue v = SeshadriValue::root(Rat(4), 2);
  REQUIRE(v.is_exact());
  CHECK(v.exact_value() == 2);

  v = SeshadriValue::root(rat(16, 9), 2);
  REQUIRE(v.is_exact());
  CHECK(v.exact_value() == rat(4, 3));

  v = SeshadriValue::root(Rat(8), 6);  // 8^(1/6) = 2^(1/2)
  REQUIRE(v.is_root());
  CHECK(v.root_value().radicand == 2);
  CHECK(v.root_value().index == 2);

  v = SeshadriValue::root(Rat(2), 4);  // stays a fourth root
  REQUIRE(v.is_root());
  CHECK(v.root_value().index == 4);

  v = SeshadriValue::root(Rat(0), 3);
  REQUIRE(v.is_exact());
  CHECK(v.exact_value() == 0);

  CHECK_THROWS_AS(SeshadriValue::root(Rat(-1), 2), DomainError);
  CHECK_THROWS_AS(SeshadriValue::root(Rat(2), 0), DomainError);
}

TEST_CASE("intervals order their endpoints and pinch when equal") {
  SeshadriValue lo = SeshadriValue::exact(Rat(1), "floor");
  SeshadriValue hi = SeshadriValue::root(Rat(2), 2, "ceiling");
  SeshadriValue iv = SeshadriValue::interval(lo, hi);
  REQUIRE(iv.is_interval());
  CHECK(value_eq(iv.lower(), lo));
  CHECK(value_eq(iv.upper(), hi));

  SeshadriValue pinched = SeshadriValue::interval(
      SeshadriValue::exact(rat(4, 3)), SeshadriValue::root(rat(16, 9), 2));
  CHECK(pinched.is_exact());
  CHECK(pinched.exact_value() == rat(4, 3));

  CHECK_THROWS_AS(SeshadriValue::interval(hi, lo), InconsistencyError);
}

TEST_CASE("value arithmetic: scale, pow, min, max") {
  SeshadriValue r2 = SeshadriValue::root(Rat(2), 2);
  SeshadriValue scaled = value_scale(r2, rat(3, 2));  // (9/4 * 2)^(1/2)
  REQUIRE(scaled.is_root());
  CHECK(scaled.root_value().radicand == rat(9, 2));

  SeshadriValue sq = value_pow(r2, 2);
  REQUIRE(sq.is_exact());
  CHECK(sq.exact_value() == 2);

  CHECK(value_eq(value_min(r2, SeshadriValue::exact(Rat(2))), r2));
  CHECK(value_eq(value_max(r2, SeshadriValue::exact(Rat(2))),
                 SeshadriValue::exact(Rat(2))));

  SeshadriValue iv = SeshadriValue::interval(SeshadriValue::exact(Rat(1)),
                                             SeshadriValue::exact(Rat(3)));
  SeshadriValue m = value_min(iv, SeshadriValue::exact(Rat(2)));
  REQUIRE(m.is_interval());
  CHECK(m.lower().exact_value() == 1);
  CHECK(m.upper().exact_value() == 2);
}

TEST_CASE("decimal rendering matches the printed table style") {
  CHECK(decimal_string(rat(313, 990), 10) == "0.3161616162");
  CHECK(decimal_string(SeshadriValue::root(rat(1, 10), 2), 10) ==
        "0.3162277660");
  CHECK(decimal_string(rat(1, 2), 3) == "0.500");
  CHECK(decimal_string(Rat(-3), 2) == "-3.00");
  CHECK(decimal_string(SeshadriValue::root(Rat(2), 2), 5) == "1.41421");
  CHECK(rat_from_decimal("0.3161616162") == rat(3161616162L, 10000000000L));
  CHECK(rat_from_decimal("-2.5") == rat(-5, 2));
  CHECK_THROWS_AS(rat_from_decimal("1.2.3"), DomainError);
}

TEST_CASE("sqrt enclosures are certified") {
  Rat lo, hi;
  sqrt_enclosure(Rat(13), 30, lo, hi);
  CHECK(lo * lo <= 13);
  CHECK(hi * hi >= 13);
  CHECK(hi - lo == rat(Int(1), int_pow(Int(10), 30)));
}
