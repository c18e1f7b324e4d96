#pragma once

#include <array>

#include "braids/braid_word.hpp"

namespace braids {

// Homology class on the genus-two splitting surface, in the ordered basis
// (a, x, b, y): both meridians before their duals.
using H1Class = std::array<long long, 4>;

// Twisted torus knot parameters: the torus knot T(p,q) with n full twists
// on the first r strands.  k and e are the quotient/remainder of p by q.
struct TTKParams {
  long long p = 2, q = 3, r = 2, n = -1;
  long long k = 0, e = 0;  // p == k*q + e, 0 <= e < q

  TTKParams() = default;
  TTKParams(long long p, long long q, long long r, long long n);
};

long long gcd_ll(long long a, long long b);

// Canonical braid word on q strands: p ascending partial twists followed
// by r*n twist generators on the first r strands.
BraidWord canonical_word(const TTKParams& params);

// (q, n*r, -p, -r).
H1Class h1_class(const TTKParams& params);

// p*q + n*r^2.  Validated against the family formula on every family
// pair, but not otherwise relied on.
long long slope_general(const TTKParams& params);

// The two-member family at (k, q, m): both members are isotopic knots
// with the same surface slope.
struct FamilyPair {
  long long k = 0, q = 3, m = 1;
  TTKParams k1, k2;
};

FamilyPair make_family(long long k, long long q, long long m);

// k*q^2 + q*m - m^2; equal for both members of the pair.
long long surface_slope(const FamilyPair& pair);

}  // namespace braids
