#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ck/twobridge.hpp"

using namespace ck;

static LaurentPoly lp(std::initializer_list<std::pair<Z, Z>> terms) {
  LaurentPoly p;
  for (auto [e, v] : terms) p.add_term(v, e);
  return p;
}

TEST_CASE("parameter normal form") {
  CHECK(two_bridge(5, 8).v == 3);
  CHECK(two_bridge(5, -2).v == 3);
  CHECK(two_bridge(1, 0).v == 0);
  CHECK(two_bridge(1, 1).v == 1);
  CHECK_THROWS_AS(two_bridge(4, 1), InvalidParameters);
  CHECK_THROWS_AS(two_bridge(-3, 1), InvalidParameters);
  CHECK_THROWS_AS(two_bridge(9, 3), InvalidParameters);
  CHECK_THROWS_AS(two_bridge(1, 2), InvalidParameters);
}

TEST_CASE("mirror and derived pair") {
  CHECK(two_bridge_mirror({5, 2}) == TwoBridge{5, 3});
  CHECK(two_bridge_mirror({1, 0}) == TwoBridge{1, 1});
  CHECK(two_bridge_mirror({1, 1}) == TwoBridge{1, 0});
  CHECK(derived_two_bridge({7, 3}) == TwoBridge{1, 0});
  CHECK(derived_two_bridge({9, 2}) == TwoBridge{5, 2});
  CHECK(derived_two_bridge({5, 1}) == TwoBridge{3, 1});
  CHECK(derived_two_bridge({1, 0}) == TwoBridge{1, 0});
  CHECK_THROWS_AS(derived_two_bridge({5, 3}), InvalidParameters);
}

TEST_CASE("equivalence: equal u and v up to inverse mod u") {
  CHECK(two_bridge_equivalent({7, 3}, {7, 5}));   // 3 * 5 = 15 = 1 mod 7
  CHECK(two_bridge_equivalent({7, 3}, {7, 3}));
  CHECK_FALSE(two_bridge_equivalent({7, 3}, {7, 2}));
  CHECK_FALSE(two_bridge_equivalent({7, 3}, {5, 3}));
  CHECK(two_bridge_equivalent({1, 0}, {1, 1}));   // both unknot
  CHECK(two_bridge_equivalent({5, 2}, {5, 3}));   // figure-8 is amphichiral
}

TEST_CASE("signature") {
  CHECK(two_bridge_signature({1, 0}) == 0);
  CHECK(two_bridge_signature({3, 1}) == 2);   // right trefoil convention
  CHECK(two_bridge_signature({5, 1}) == 4);
  CHECK(two_bridge_signature({5, 2}) == 0);   // figure-8
  CHECK(two_bridge_signature({5, 3}) == 0);
  CHECK(two_bridge_signature({7, 3}) == 2);
  // mirror negates the signature
  for (Z u = 3; u <= 25; u += 2)
    for (Z v = 1; v < u; ++v) {
      if (gcdz(u, v) != 1) continue;
      TwoBridge k{u, v};
      CHECK(two_bridge_signature(two_bridge_mirror(k)) ==
            -two_bridge_signature(k));
    }
}

TEST_CASE("Alexander polynomial, frozen small cases") {
  CHECK(alexander_two_bridge({1, 0}) == LaurentPoly::one());
  CHECK(alexander_two_bridge({3, 1}) == lp({{-1, 1}, {0, -1}, {1, 1}}));
  CHECK(alexander_two_bridge({5, 1}) ==
        lp({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
  CHECK(alexander_two_bridge({5, 3}) == lp({{-1, -1}, {0, 3}, {1, -1}}));
  CHECK(alexander_two_bridge({5, 2}) == lp({{-1, -1}, {0, 3}, {1, -1}}));
  CHECK(alexander_two_bridge({7, 3}) == lp({{-1, 2}, {0, -3}, {1, 2}}));
}

TEST_CASE("Alexander polynomial invariants across the range") {
  for (Z u = 1; u <= 49; u += 2)
    for (Z v = (u == 1 ? 0 : 1); v < std::max<Z>(u, 1); ++v) {
      if (u > 1 && gcdz(u, v) != 1) continue;
      auto d = alexander_two_bridge({u, v});
      CAPTURE(u);
      CAPTURE(v);
      CHECK(d.symmetric());
      CHECK(d.eval(1) == 1);
      Z m = d.eval(-1);
      CHECK((m < 0 ? -m : m) == u);
      // total coefficient mass is u: no cross-sign collisions happened
      Z mass = 0;
      for (auto& [e, c] : d.c) mass += c < 0 ? -c : c;
      CHECK(mass == u);
      // inverse parameter gives the same knot, same polynomial
      if (u > 1)
        CHECK(alexander_two_bridge({u, mod_inverse(v, u)}) == d);
      // mirror has the same polynomial (t -> 1/t fixes symmetric reps)
      CHECK(alexander_two_bridge(two_bridge_mirror({u, v})) == d);
    }
}

TEST_CASE("epsilon sequence") {
  CHECK(epsilon_sequence(5, 2, 5) == std::vector<int>{1, 1, -1, -1, 1});
  CHECK(epsilon_sequence(3, 1, 6) == std::vector<int>{1, 1, -1, -1, -1, 1});
  CHECK(epsilon_sequence(1, 0, 3) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(epsilon_sequence(4, 1, 2), InvalidParameters);
  // shifting i by u flips the sign exactly when v is odd
  for (Z u = 3; u <= 15; u += 2)
    for (Z v = 1; v < u; ++v) {
      if (gcdz(u, v) != 1) continue;
      auto e = epsilon_sequence(u, v, 2 * u);
      for (Z i = 1; i <= u; ++i)
        CHECK(e[size_t(i + u - 1)] == (v % 2 == 0 ? e[size_t(i - 1)]
                                                  : -e[size_t(i - 1)]));
    }
}

TEST_CASE("signature drop to the derived pair") {
  // sigma b(u, v) = sigma b(u - 2v, v') + 2 exactly when v is odd
  for (Z u = 3; u <= 99; u += 2)
    for (Z v = 1; 2 * v < u; ++v) {
      if (gcdz(u, v) != 1) continue;
      TwoBridge k{u, v};
      auto d = derived_two_bridge(k);
      CAPTURE(u);
      CAPTURE(v);
      CHECK(two_bridge_signature(k) ==
            two_bridge_signature(d) + (v % 2 != 0 ? 2 : 0));
    }
}
