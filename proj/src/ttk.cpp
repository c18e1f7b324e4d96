#include "braids/ttk.hpp"

#include <cstdlib>
#include <string>

namespace braids {

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

TTKParams::TTKParams(long long p_, long long q_, long long r_, long long n_) : p(p_), q(q_), r(r_), n(n_) {
  if (p < 1 || q < 1) throw InvalidParams("twisted torus knot needs p, q >= 1");
  if (gcd_ll(p, q) != 1)
    throw InvalidParams("p and q must be coprime, got gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                        ") = " + std::to_string(gcd_ll(p, q)));
  if (r < 1) throw InvalidParams("twist strand count r must be >= 1");
  if (r > q)
    throw RTooLarge("r = " + std::to_string(r) + " exceeds q = " + std::to_string(q) +
                    "; K(p,q,r,n) and K(q,p,r,n) are isotopic for r < min(p,q), so swap p and q instead");
  if (n == 0) throw InvalidParams("twist count n must be nonzero (n = 0 is the plain torus knot)");
  k = p / q;
  e = p - k * q;
}

BraidWord canonical_word(const TTKParams& params) {
  const int q = static_cast<int>(params.q);
  std::vector<int> ls;
  const auto twist = block_letters({1, q - 1});
  for (long long c = 0; c < params.p; ++c) ls.insert(ls.end(), twist.begin(), twist.end());
  const auto sub = block_letters({1, static_cast<int>(params.r) - 1});
  if (params.n > 0) {
    for (long long c = 0; c < params.n * params.r; ++c) ls.insert(ls.end(), sub.begin(), sub.end());
  } else {
    std::vector<int> inv(sub.rbegin(), sub.rend());
    for (int& x : inv) x = -x;
    for (long long c = 0; c < -params.n * params.r; ++c) ls.insert(ls.end(), inv.begin(), inv.end());
  }
  return BraidWord(q, std::move(ls));
}

H1Class h1_class(const TTKParams& params) { return {params.q, params.n * params.r, -params.p, -params.r}; }

long long slope_general(const TTKParams& params) { return params.p * params.q + params.n * params.r * params.r; }

FamilyPair make_family(long long k, long long q, long long m) {
  if (q <= 2) throw InvalidParams("family needs q > 2, got q = " + std::to_string(q));
  if (m < 1 || m >= q) throw InvalidParams("family needs 1 <= m < q");
  if (gcd_ll(q, m) != 1) throw InvalidParams("family needs gcd(q, m) = 1");
  if (k < 0) throw InvalidParams("family needs k >= 0");
  FamilyPair pair;
  pair.k = k;
  pair.q = q;
  pair.m = m;
  pair.k1 = TTKParams(k * q + m, q, m, -1);
  pair.k2 = TTKParams(k * q + q - m, q, q - m, -1);
  return pair;
}

long long surface_slope(const FamilyPair& pair) { return pair.k * pair.q * pair.q + pair.q * pair.m - pair.m * pair.m; }

}  // namespace braids
