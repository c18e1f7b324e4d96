#pragma once

#include <stdexcept>
#include <string>

namespace braids {

// Base class for all engine errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two words live in braid groups with different strand counts.
struct StrandMismatch : Error {
  using Error::Error;
};

// A generator index does not fit in the declared braid group.
struct IndexOutOfRange : Error {
  using Error::Error;
};

// A rewrite rule was applied at a position whose letters do not match
// the rule's left-hand side.
struct PatternMismatch : Error {
  using Error::Error;
};

// Parameter validation failure (gcd, ranges, ...).  CLI exit code 2.
struct InvalidParams : Error {
  using Error::Error;
};

// r > q: the braid construction needs r <= q.  The isotopy K(p,q,r,n) ~
// K(q,p,r,n) for r < min(p,q) lets the caller swap p and q instead; the
// swap is never performed silently.
struct RTooLarge : InvalidParams {
  using InvalidParams::InvalidParams;
};

// The positivization theorem's hypotheses fail for these parameters.
// CLI exit code 3.
struct NotApplicable : Error {
  using Error::Error;
};

// Closure of the braid has more than one component.
struct NotAKnot : Error {
  using Error::Error;
};

// realize_block needs det = +/-1.
struct NotUnimodular : Error {
  using Error::Error;
};

// Primitivity test only covers |n| = 1.
struct NotDecidedByDean : Error {
  using Error::Error;
};

// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace braids
