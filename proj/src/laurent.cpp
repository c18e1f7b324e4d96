#include "braids/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace braids {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

void LaurentPoly::push_term(int exp, long long c) {
  if (c != 0) terms_.push_back({exp, c});
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw Error("min_exp of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw Error("max_exp of zero polynomial");
  return terms_.back().first;
}

long long LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const auto& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == exp) ? it->second : 0;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      out.push_term(terms_[i].first, checked_add(terms_[i].second, o.terms_[j].second));
      ++i, ++j;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  if (terms_.empty() || o.terms_.empty()) return out;
  const int lo = min_exp() + o.min_exp();
  const int hi = max_exp() + o.max_exp();
  std::vector<long long> acc(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  for (int e = lo; e <= hi; ++e) out.push_term(e, acc[static_cast<std::size_t>(e - lo)]);
  return out;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += dexp;
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  // Work from the lowest exponent upward.  For an exact quotient the term
  // exponents stay within [min-min, max-max] of the operands.
  const int top = max_exp() - divisor.max_exp();
  const long long low = divisor.terms_.front().second;
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const int e = rem.min_exp() - divisor.min_exp();
    const long long c = rem.terms_.front().second;
    if (c % low != 0 || e > top) throw Error("inexact polynomial division");
    LaurentPoly term = LaurentPoly::monomial(c / low, e);
    quot = quot + term;
    rem = rem - term * divisor;
  }
  return quot;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const long long a = std::llabs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentPoly geometric_sum(int n) {
  LaurentPoly p;
  for (int e = 0; e < n; ++e) p = p + LaurentPoly::monomial(1, e);
  return p;
}

}  // namespace braids
