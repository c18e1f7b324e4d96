#pragma once

#include <string>
#include <vector>

#include "braids/errors.hpp"

namespace braids {

// A word in the braid group B_m.  Letters are signed generator indices:
// letter i > 0 is sigma_i, letter i < 0 is sigma_{|i|}^{-1}.  The strand
// count m is carried alongside the letter sequence; two words are
// structurally equal iff both coincide.  No operation here performs any
// implicit simplification.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int m, std::vector<int> ls);

  std::size_t size() const { return letters.size(); }

  bool operator==(const BraidWord& o) const = default;
};

// Descending generator product: lo <= hi denotes
// sigma_hi sigma_{hi-1} ... sigma_lo; lo > hi denotes the empty word.
struct ProductBlock {
  int lo = 1;
  int hi = 0;

  int length() const { return hi < lo ? 0 : hi - lo + 1; }
};

// Literal expansion of a product block in B_strands.
BraidWord expand(ProductBlock block, int strands);

// Letter sequence of a product block (no strand count attached).
std::vector<int> block_letters(ProductBlock block);

// Concatenation; strand counts must agree.
BraidWord concat(const BraidWord& u, const BraidWord& v);

// Reverse the letters and flip every sign.
BraidWord inverse(const BraidWord& u);

// Delete adjacent (i, -i) pairs until none remain.
BraidWord free_reduce(const BraidWord& u);

// Sum of letter signs.
long long exponent_sum(const BraidWord& u);

// Image of the word in the symmetric group.  Entry perm[j] (0-based) is
// the 0-based top position of the strand that exits at bottom position j,
// i.e. the crossings are applied in word order to the tuple (1, ..., m).
using Perm = std::vector<int>;
Perm permutation(const BraidWord& u);

Perm identity_perm(int m);

// compose(a, b)[j] == a[b[j]]: "a then b" in word order.
Perm compose(const Perm& a, const Perm& b);

bool is_single_cycle(const Perm& p);

// True iff every letter is positive (the empty word counts as positive).
bool is_positive(const BraidWord& u);

// Whitespace-separated signed decimal letters, e.g. "2 1 2 1 -1 -1".
std::string to_text(const BraidWord& u);
BraidWord parse_word(const std::string& text, int strands);

}  // namespace braids
