#include <doctest.h>

#include "braids/ttk.hpp"

using namespace braids;

TEST_CASE("canonical words") {
  CHECK(to_text(canonical_word(TTKParams(5, 3, 2, -1))) == "2 1 2 1 2 1 2 1 2 1 -1 -1");
  CHECK(to_text(canonical_word(TTKParams(3, 2, 2, 1))) == "1 1 1 1 1");
  CHECK(to_text(canonical_word(TTKParams(1, 2, 1, -1))) == "1");
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(TTKParams(4, 2, 1, -1), InvalidParams);  // gcd
  CHECK_THROWS_AS(TTKParams(5, 3, 4, -1), RTooLarge);      // r > q, swap hint
  CHECK_THROWS_AS(TTKParams(5, 3, 2, 0), InvalidParams);   // n = 0
  try {
    TTKParams(5, 3, 4, -1);
  } catch (const RTooLarge& e) {
    CHECK(std::string(e.what()).find("swap") != std::string::npos);
  }
  const TTKParams p(5, 3, 2, -2);
  CHECK(p.k == 1);
  CHECK(p.e == 2);
}

TEST_CASE("exponent sum and knot-ness of canonical words") {
  for (long long q = 2; q <= 6; ++q)
    for (long long p = 1; p <= 13; ++p) {
      if (gcd_ll(p, q) != 1) continue;
      for (long long r = 1; r <= q; ++r)
        for (long long n : {-2LL, -1LL, 1LL}) {
          const TTKParams params(p, q, r, n);
          const BraidWord w = canonical_word(params);
          CHECK(exponent_sum(w) == p * (q - 1) + n * r * (r - 1));
          CHECK(is_single_cycle(permutation(w)));
        }
    }
  // the worked value: K(5,3,2,-2) has exponent sum 6
  CHECK(exponent_sum(canonical_word(TTKParams(5, 3, 2, -2))) == 6);
}

TEST_CASE("h1 classes") {
  CHECK(h1_class(TTKParams(4, 3, 1, -1)) == H1Class{3, -1, -4, -1});
  CHECK(h1_class(TTKParams(5, 3, 2, -1)) == H1Class{3, -2, -5, -2});
}

TEST_CASE("family construction") {
  const FamilyPair f = make_family(1, 3, 1);
  CHECK(f.k1.p == 4);
  CHECK(f.k1.r == 1);
  CHECK(f.k2.p == 5);
  CHECK(f.k2.r == 2);
  const FamilyPair g = make_family(0, 3, 1);
  CHECK(g.k1.p == 1);
  CHECK(g.k2.p == 2);
  CHECK_THROWS_AS(make_family(0, 2, 1), InvalidParams);
  CHECK_THROWS_AS(make_family(0, 4, 2), InvalidParams);  // gcd(q, m) != 1
}

TEST_CASE("surface slope") {
  CHECK(surface_slope(make_family(0, 3, 1)) == 2);
  CHECK(surface_slope(make_family(1, 3, 1)) == 11);
  CHECK(surface_slope(make_family(2, 5, 2)) == 56);
}

TEST_CASE("slope identities across the family grid") {
  for (long long k = 0; k <= 2; ++k)
    for (long long q = 3; q <= 12; ++q)
      for (long long m = 1; m < q; ++m) {
        if (gcd_ll(q, m) != 1) continue;
        const FamilyPair f = make_family(k, q, m);
        const long long slope = surface_slope(f);
        // the general formula specializes correctly on both members
        CHECK(slope_general(f.k1) == slope);
        CHECK(slope_general(f.k2) == slope);
        // symmetry under m -> q - m with the members swapped
        const FamilyPair g = make_family(k, q, q - m);
        CHECK(surface_slope(g) == slope);
      }
}
