#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ck/arith.hpp"

using namespace ck;

TEST_CASE("floor division and mod") {
  CHECK(floordiv(7, 3) == 2);
  CHECK(floordiv(-7, 3) == -3);
  CHECK(floordiv(-6, 3) == -2);
  CHECK(mod(-7, 3) == 2);
  CHECK(mod(-1, 5) == 4);
  CHECK(mod(12, 5) == 2);
}

TEST_CASE("fraction normal form") {
  auto f = frac(2, -4);
  CHECK(f.num == -1);
  CHECK(f.den == 2);
  CHECK(frac(0, 7) == frac(0, 3));
  CHECK(frac(6, 4) == frac(3, 2));
  CHECK_THROWS_AS(frac(1, 0), std::invalid_argument);
  CHECK(frac(1, 3) < frac(2, 5));
  CHECK(frac(-1, 2) < frac(0, 1));
}

TEST_CASE("continued fraction normal form") {
  auto cf = continued_fraction(frac(2, 5));
  CHECK(cf.a == std::vector<Z>{0, 2, 2});
  cf = continued_fraction(frac(7, 1));
  CHECK(cf.a == std::vector<Z>{7});
  cf = continued_fraction(frac(1, 2));
  CHECK(cf.a == std::vector<Z>{0, 2});
  cf = continued_fraction(frac(3, 5));
  CHECK(cf.a == std::vector<Z>{0, 1, 1, 2});
  cf = continued_fraction(frac(-7, 5));
  // floor-based: -7/5 = -2 + 3/5
  CHECK(cf.a.front() == -2);
  CHECK(cf_value(cf) == frac(-7, 5));
}

TEST_CASE("continued fraction round trip, denominators up to 500") {
  // exhaustive over a modest window plus negatives
  for (Z den = 1; den <= 120; ++den)
    for (Z num = -2 * den; num <= 2 * den; ++num) {
      auto f = frac(num, den);
      auto cf = continued_fraction(f);
      for (size_t i = 1; i < cf.a.size(); ++i) CHECK(cf.a[i] > 0);
      if (cf.a.size() > 1) CHECK(cf.a.back() > 1);
      CHECK(cf_value(cf) == f);
    }
  for (Z den = 121; den <= 500; ++den) {
    auto f = frac(den / 3 + 1, den);
    CHECK(cf_value(continued_fraction(f)) == f);
  }
}

TEST_CASE("farey sequences") {
  auto f1 = farey_sequence(1);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] == frac(0, 1));
  CHECK(f1[1] == frac(1, 1));
  auto f4 = farey_sequence(4);
  std::vector<Fraction> want = {frac(0, 1), frac(1, 4), frac(1, 3), frac(1, 2),
                                frac(2, 3), frac(3, 4), frac(1, 1)};
  CHECK(f4 == want);
  // neighbor identity bc - ad = 1 for consecutive terms
  for (Z n = 1; n <= 12; ++n) {
    auto fs = farey_sequence(n);
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      CHECK(fs[i + 1].num * fs[i].den - fs[i].num * fs[i + 1].den == 1);
      CHECK(fs[i] < fs[i + 1]);
    }
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 5) == 2);
  CHECK(mod_inverse(1, 1) == 0);
  CHECK(mod_inverse(0, 1) == 0);
  CHECK(mod_inverse(-2, 5) == mod_inverse(3, 5));
  CHECK_THROWS_AS(mod_inverse(2, 4), NotCoprime);
  for (Z p = 2; p <= 60; ++p)
    for (Z q = 1; q < p; ++q) {
      if (gcdz(p, q) != 1) continue;
      Z qi = mod_inverse(q, p);
      CHECK(mod(q * qi, p) == 1);
      CHECK(mod_inverse(qi, p) == q);  // involution
    }
}
