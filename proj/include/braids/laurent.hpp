#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braids/errors.hpp"

namespace braids {

// Laurent polynomial in one variable t with exact int64 coefficients.
// Stored as (exponent, coefficient) pairs sorted by exponent; zero
// coefficients are never kept.  All arithmetic is overflow-checked.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long long constant);
  static LaurentPoly monomial(long long coeff, int exp);
  static LaurentPoly one() { return LaurentPoly(1); }

  bool is_zero() const { return terms_.empty(); }
  int min_exp() const;  // throws on zero polynomial
  int max_exp() const;
  long long coeff(int exp) const;
  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly shifted(int dexp) const;  // multiply by t^dexp

  bool operator==(const LaurentPoly& o) const = default;

  // Exact division; throws Error if the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Human-readable rendering, e.g. "t^2 - t + 1"; "0" for zero.
  std::string to_text() const;

 private:
  std::vector<std::pair<int, long long>> terms_;
  void push_term(int exp, long long c);
};

// 1 + t + ... + t^{n-1}.
LaurentPoly geometric_sum(int n);

}  // namespace braids
