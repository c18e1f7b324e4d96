#pragma once

#include <cstdint>
#include <optional>

#include "braids/braid_word.hpp"

namespace braids {

// Every oracle run either terminates within budget or reports
// BudgetExceeded; it never returns a wrong answer.
struct OracleBudget {
  long long max_steps = 10'000'000;
  std::optional<long long> max_word_length;
};

enum class Triviality { Trivial, NonTrivial, BudgetExceeded };
enum class Equality { Equal, NotEqual, BudgetExceeded };

struct ReductionResult {
  Triviality verdict = Triviality::BudgetExceeded;
  BraidWord reduced;        // handle-free word, valid when verdict != BudgetExceeded
  long long steps_used = 0;
};

// Handle reduction with a deterministic selection rule: always the first
// handle in reading order (leftmost closing letter), which never contains
// a nested handle.  A handle is a subword s_i^e ... s_i^{-e} whose
// interior contains only generators of index > i; reducing it deletes the
// pair and conjugates each interior s_{i+1}^d into s_{i+1}^{-e} s_i^d
// s_{i+1}^e.  The empty word is reached iff the input represents the
// identity of B_m.
ReductionResult handle_reduce(const BraidWord& u, const OracleBudget& budget);

// Decides u == v in B_m via handle_reduce(u v^{-1}).  Fast-fail
// pre-screens: unequal exponent sums or unequal permutations return
// NotEqual without running reduction.
Equality words_equal(const BraidWord& u, const BraidWord& v, const OracleBudget& budget);

}  // namespace braids
