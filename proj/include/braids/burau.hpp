#pragma once

#include <vector>

#include "braids/braid_word.hpp"
#include "braids/laurent.hpp"

namespace braids {

// Square matrix over the Laurent ring, row-major.
struct LaurentMatrix {
  int n = 0;
  std::vector<LaurentPoly> a;

  static LaurentMatrix identity(int n);
  LaurentPoly& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const LaurentPoly& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const LaurentMatrix& o) const = default;
};

LaurentMatrix mat_mul(const LaurentMatrix& x, const LaurentMatrix& y);

// Division-free determinant (Laplace DP over column subsets); suited to
// the small matrices that arise here.
LaurentPoly mat_det(const LaurentMatrix& m);

// Reduced Burau image of a single generator of B_strands: the identity
// except row |i|, which carries (t, -t, 1) at columns |i|-1, |i|, |i|+1
// (clipped at the edges); negative letters use the exact inverse block.
LaurentMatrix burau_letter(int letter, int strands);

// Product of the letter images in word order; multiplicative over concat.
LaurentMatrix burau_reduced(const BraidWord& u);

// Alexander polynomial of the closure of u (which must be a knot):
// det(I - burau_reduced(u)) * (1-t)/(1-t^m), normalized so the lowest
// exponent is 0 and the constant term is positive.
LaurentPoly alexander_of_closure(const BraidWord& u);

}  // namespace braids
