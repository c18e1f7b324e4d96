#include <doctest.h>

#include <random>

#include "braids/oracle.hpp"
#include "brute_force.hpp"

using namespace braids;

namespace {

const OracleBudget kBudget{10'000'000, std::nullopt};

BraidWord b3(const brute::Word& w) { return BraidWord(3, w); }

}  // namespace

TEST_CASE("handle reduction decides the word problem on small cases") {
  CHECK(handle_reduce(parse_word("1 -1", 2), kBudget).verdict == Triviality::Trivial);
  CHECK(handle_reduce(parse_word("1 2 1 -2 -1 -2", 3), kBudget).verdict == Triviality::Trivial);
  CHECK(handle_reduce(parse_word("1", 2), kBudget).verdict == Triviality::NonTrivial);
  CHECK(handle_reduce(parse_word("", 5), kBudget).verdict == Triviality::Trivial);
}

TEST_CASE("budget exhaustion is reported, never a wrong answer") {
  const BraidWord w = parse_word("1 2 1 -2 -1 -2 1 2 1 -2 -1 -2", 3);
  CHECK(handle_reduce(w, OracleBudget{1, std::nullopt}).verdict == Triviality::BudgetExceeded);
  CHECK(words_equal(parse_word("1 2 1", 3), parse_word("2 1 2", 3), OracleBudget{0, std::nullopt}) ==
        Equality::BudgetExceeded);
  // the optional word-length cap also falls back to BudgetExceeded
  CHECK(handle_reduce(w, OracleBudget{1000, 4}).verdict == Triviality::BudgetExceeded);
  CHECK(handle_reduce(w, kBudget).verdict == Triviality::Trivial);
}

TEST_CASE("words_equal on the stated examples") {
  CHECK(words_equal(parse_word("1 2 1", 3), parse_word("2 1 2", 3), kBudget) == Equality::Equal);
  CHECK(words_equal(parse_word("2 1 2 1 -1 -1", 3), parse_word("1 2", 3), kBudget) == Equality::Equal);
  CHECK(words_equal(parse_word("1", 3), parse_word("2", 3), kBudget) == Equality::NotEqual);
  CHECK_THROWS_AS(words_equal(parse_word("1", 2), parse_word("1", 3), kBudget), StrandMismatch);
}

TEST_CASE("soundness against brute-force closure in B3") {
  // Equivalence classes of all B3 words of length <= 8 under free
  // insertion/deletion and braid-relation rewrites.
  brute::B3Classes classes(8);

  // Exhaustive check on short words: every pair up to length 3.
  std::vector<brute::Word> shorts;
  for (const auto& w : classes.words)
    if (w.size() <= 3) shorts.push_back(w);
  for (const auto& u : shorts)
    for (const auto& v : shorts) {
      const bool brute_eq = classes.equal(u, v);
      const Equality oracle_eq = words_equal(b3(u), b3(v), kBudget);
      REQUIRE(oracle_eq != Equality::BudgetExceeded);
      CHECK((oracle_eq == Equality::Equal) == brute_eq);
    }

  // Random pairs up to length 6.
  std::mt19937 rng(7);
  std::vector<brute::Word> mediums;
  for (const auto& w : classes.words)
    if (w.size() <= 6) mediums.push_back(w);
  std::uniform_int_distribution<std::size_t> pick(0, mediums.size() - 1);
  for (int trial = 0; trial < 4000; ++trial) {
    const auto& u = mediums[pick(rng)];
    const auto& v = mediums[pick(rng)];
    const bool brute_eq = classes.equal(u, v);
    const Equality oracle_eq = words_equal(b3(u), b3(v), kBudget);
    REQUIRE(oracle_eq != Equality::BudgetExceeded);
    CHECK((oracle_eq == Equality::Equal) == brute_eq);
  }
}

TEST_CASE("words_equal behaves as an equivalence relation on a sample") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> gen(1, 3), sign(0, 1), len(0, 8);
  auto rand_word = [&]() {
    std::vector<int> ls;
    const int L = len(rng);
    for (int i = 0; i < L; ++i) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(4, std::move(ls));
  };
  std::vector<BraidWord> sample;
  for (int i = 0; i < 24; ++i) sample.push_back(rand_word());
  for (const auto& u : sample) CHECK(words_equal(u, u, kBudget) == Equality::Equal);
  for (const auto& u : sample)
    for (const auto& v : sample) CHECK(words_equal(u, v, kBudget) == words_equal(v, u, kBudget));
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j)
      for (std::size_t k = 0; k < sample.size(); k += 5) {
        const auto ij = words_equal(sample[i], sample[j], kBudget);
        const auto jk = words_equal(sample[j], sample[k], kBudget);
        if (ij == Equality::Equal && jk == Equality::Equal)
          CHECK(words_equal(sample[i], sample[k], kBudget) == Equality::Equal);
      }
}

TEST_CASE("handle-free outputs stay within the same braid") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> gen(1, 4), sign(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> ls;
    for (int i = 0; i < 14; ++i) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
    const BraidWord w(5, ls);
    const auto res = handle_reduce(w, kBudget);
    REQUIRE(res.verdict != Triviality::BudgetExceeded);
    CHECK(exponent_sum(res.reduced) == exponent_sum(w));
    CHECK(permutation(res.reduced) == permutation(w));
    CHECK(words_equal(res.reduced, w, kBudget) == Equality::Equal);
  }
}
