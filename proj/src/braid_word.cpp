#include "braids/braid_word.hpp"

#include <cstdlib>
#include <sstream>

namespace braids {

BraidWord::BraidWord(int m, std::vector<int> ls) : strands(m), letters(std::move(ls)) {
  if (strands < 1) throw InvalidParams("strand count must be >= 1, got " + std::to_string(strands));
  for (int x : letters) {
    if (x == 0) throw IndexOutOfRange("letter 0 is not a generator");
    if (std::abs(x) > strands - 1)
      throw IndexOutOfRange("letter " + std::to_string(x) + " does not fit in B_" + std::to_string(strands));
  }
}

std::vector<int> block_letters(ProductBlock block) {
  std::vector<int> out;
  for (int i = block.hi; i >= block.lo; --i) out.push_back(i);
  return out;
}

BraidWord expand(ProductBlock block, int strands) {
  if (block.length() > 0 && block.hi >= strands)
    throw IndexOutOfRange("product block top index " + std::to_string(block.hi) + " needs at least " +
                          std::to_string(block.hi + 1) + " strands, got " + std::to_string(strands));
  if (block.length() > 0 && block.lo < 1) throw IndexOutOfRange("product block bottom index must be >= 1");
  return BraidWord(strands, block_letters(block));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands)
    throw StrandMismatch("cannot concatenate words in B_" + std::to_string(u.strands) + " and B_" +
                         std::to_string(v.strands));
  std::vector<int> ls = u.letters;
  ls.insert(ls.end(), v.letters.begin(), v.letters.end());
  return BraidWord(u.strands, std::move(ls));
}

BraidWord inverse(const BraidWord& u) {
  std::vector<int> ls(u.letters.rbegin(), u.letters.rend());
  for (int& x : ls) x = -x;
  return BraidWord(u.strands, std::move(ls));
}

BraidWord free_reduce(const BraidWord& u) {
  std::vector<int> stack;
  stack.reserve(u.letters.size());
  for (int x : u.letters) {
    if (!stack.empty() && stack.back() == -x)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return BraidWord(u.strands, std::move(stack));
}

long long exponent_sum(const BraidWord& u) {
  long long s = 0;
  for (int x : u.letters) s += (x > 0) ? 1 : -1;
  return s;
}

Perm identity_perm(int m) {
  Perm p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return p;
}

Perm permutation(const BraidWord& u) {
  Perm p = identity_perm(u.strands);
  for (int x : u.letters) {
    int i = std::abs(x) - 1;
    std::swap(p[i], p[i + 1]);
  }
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = a[b[j]];
  return out;
}

bool is_single_cycle(const Perm& p) {
  const int m = static_cast<int>(p.size());
  int seen = 0, at = 0;
  do {
    at = p[at];
    ++seen;
  } while (at != 0 && seen <= m);
  return seen == m;
}

bool is_positive(const BraidWord& u) {
  for (int x : u.letters)
    if (x < 0) return false;
  return true;
}

std::string to_text(const BraidWord& u) {
  std::ostringstream os;
  for (std::size_t i = 0; i < u.letters.size(); ++i) {
    if (i) os << ' ';
    os << u.letters[i];
  }
  return os.str();
}

BraidWord parse_word(const std::string& text, int strands) {
  std::istringstream is(text);
  std::vector<int> ls;
  long long x;
  while (is >> x) ls.push_back(static_cast<int>(x));
  if (!is.eof()) throw InvalidParams("malformed braid word text: '" + text + "'");
  return BraidWord(strands, std::move(ls));
}

}  // namespace braids
