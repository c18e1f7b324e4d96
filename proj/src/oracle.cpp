#include "braids/oracle.hpp"

#include <cstdlib>

namespace braids {

namespace {

struct Handle {
  int start;
  int end;
};

// First handle in reading order (smallest closing position).  A handle is
// a pair of opposite letters of one index with only larger indices in
// between; taking the first-closing one guarantees its interior holds no
// nested handle, which is what makes iterated reduction terminate.
std::optional<Handle> find_handle(const std::vector<int>& w, int strands) {
  const int n = static_cast<int>(w.size());
  std::vector<int> lastpos(static_cast<std::size_t>(strands), -1);
  std::vector<char> blocked(static_cast<std::size_t>(strands), 0);
  for (int t = 0; t < n; ++t) {
    const int h = std::abs(w[t]);
    if (lastpos[h] >= 0 && !blocked[h] && w[lastpos[h]] == -w[t]) return Handle{lastpos[h], t};
    for (int g = h + 1; g < strands; ++g) blocked[g] = 1;
    lastpos[h] = t;
    blocked[h] = 0;
  }
  return std::nullopt;
}

}  // namespace

ReductionResult handle_reduce(const BraidWord& u, const OracleBudget& budget) {
  ReductionResult res;
  std::vector<int> w = u.letters;
  std::vector<int> next;
  while (true) {
    auto h = find_handle(w, u.strands);
    if (!h) break;
    if (res.steps_used >= budget.max_steps) return res;  // verdict stays BudgetExceeded
    ++res.steps_used;

    const int i = std::abs(w[h->start]);
    const int e = (w[h->start] > 0) ? 1 : -1;
    next.clear();
    next.reserve(w.size() + 16);
    next.insert(next.end(), w.begin(), w.begin() + h->start);
    for (int p = h->start + 1; p < h->end; ++p) {
      const int x = w[p];
      if (std::abs(x) == i + 1) {
        const int d = (x > 0) ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(x);
      }
    }
    next.insert(next.end(), w.begin() + h->end + 1, w.end());
    w.swap(next);
    if (budget.max_word_length && static_cast<long long>(w.size()) > *budget.max_word_length)
      return res;
  }
  res.reduced = BraidWord(u.strands, std::move(w));
  res.verdict = res.reduced.letters.empty() ? Triviality::Trivial : Triviality::NonTrivial;
  return res;
}

Equality words_equal(const BraidWord& u, const BraidWord& v, const OracleBudget& budget) {
  if (u.strands != v.strands)
    throw StrandMismatch("words_equal needs words in the same braid group: B_" + std::to_string(u.strands) +
                         " vs B_" + std::to_string(v.strands));
  if (exponent_sum(u) != exponent_sum(v)) return Equality::NotEqual;
  if (permutation(u) != permutation(v)) return Equality::NotEqual;
  const auto r = handle_reduce(concat(u, inverse(v)), budget);
  switch (r.verdict) {
    case Triviality::Trivial:
      return Equality::Equal;
    case Triviality::NonTrivial:
      return Equality::NotEqual;
    default:
      return Equality::BudgetExceeded;
  }
}

}  // namespace braids
