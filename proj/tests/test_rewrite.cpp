#include <doctest.h>

#include "braids/rewrite.hpp"

using namespace braids;

namespace {

const OracleBudget kBudget{10'000'000, std::nullopt};

// Applies the step to a word consisting exactly of its left side and
// checks the rewrite both structurally and against the oracle.
void check_step(const RewriteStep& step_at_zero, int strands, const std::string& lhs_text,
                const std::string& rhs_text) {
  const BraidWord lhs = parse_word(lhs_text, strands);
  const BraidWord rhs = parse_word(rhs_text, strands);
  const BraidWord got = apply_step(lhs, step_at_zero);
  CHECK(got == rhs);
  CHECK(words_equal(lhs, rhs, kBudget) == Equality::Equal);
}

}  // namespace

TEST_CASE("glesser rule instances") {
  check_step(make_glesser(1, 1, 1, 0), 3, "1 2 1", "2 1 2");
  check_step(make_glesser(1, 2, 1, 0), 4, "2 1 3 2 1", "3 2 1 3 2");
  check_step(make_glesser(1, 2, -1, 0), 4, "2 1 3 2 -1", "-3 2 1 3 2");
  // right-to-left direction inverts the rewrite
  const BraidWord back = rw_glesser(parse_word("3 2 1 3 2", 4), 1, 2, 1, 0, kR2L);
  CHECK(to_text(back) == "2 1 3 2 1");
  CHECK_THROWS_AS(rw_glesser(parse_word("1 2 2", 3), 1, 1, 1, 0), PatternMismatch);
  CHECK_THROWS_AS(rw_glesser(parse_word("1 2 1", 3), 2, 1, 1, 0), PatternMismatch);  // a > b
}

TEST_CASE("sigma backward instances") {
  check_step(make_sigma_backward(1, 2, 1, 1, 0), 3, "1 2 1", "2 1 2");
  check_step(make_sigma_backward(2, 2, 1, 1, 0), 4, "2 1 3 2 1", "3 2 1 3 2");
  // a=2, b=3, i=2, sign=-1 in B5: ten-letter staircase instance
  {
    RewriteStep s = make_sigma_backward(2, 3, 2, -1, 0);
    const StepSides sides = step_sides(s, {});
    const BraidWord lhs(6, sides.lhs), rhs(6, sides.rhs);
    CHECK(lhs.letters.front() == 2);
    CHECK(rhs.letters.front() == -4);
    CHECK(words_equal(lhs, rhs, kBudget) == Equality::Equal);
  }
  CHECK_THROWS_AS(rw_sigma_backward(parse_word("1 2 1", 3), 1, 2, 2, 1, 0), PatternMismatch);  // i > b-1
}

TEST_CASE("shift bottom-left to top-right, both forms") {
  check_step(make_shift_bltr(1, 1, 1, 0, 1), 3, "1 2 1", "2 1 2");
  check_step(make_shift_bltr(1, 2, 1, 0, 2), 4, "2 1 3 2 1", "3 2 1 3 2");
  // a=1, b=2, n=2 in B5, form i: prefix becomes P(3,4)
  {
    RewriteStep s = make_shift_bltr(1, 2, 2, 0, 1);
    const StepSides sides = step_sides(s, {});
    const BraidWord lhs(5, sides.lhs), rhs(5, sides.rhs);
    CHECK(rhs.letters[0] == 4);
    CHECK(rhs.letters[1] == 3);
    CHECK(words_equal(lhs, rhs, kBudget) == Equality::Equal);
  }
  CHECK_THROWS_AS(rw_shift_bltr(parse_word("1 2 1", 3), 1, 1, 1, 1, 1), PatternMismatch);
}

TEST_CASE("rework 3.4 instances") {
  check_step(make_rework34(1, 2, 2, 1, 0), 3, "2 1 2", "1 2 1");
  check_step(make_rework34(1, 3, 2, 1, 0), 4, "3 2 1 2", "1 3 2 1");
  check_step(make_rework34(2, 4, 4, -1, 0), 6, "4 3 2 -4", "-3 4 3 2");
  CHECK_THROWS_AS(rw_rework34(parse_word("2 1 2", 3), 1, 2, 1, 1, 0), PatternMismatch);  // t <= l
}

TEST_CASE("sigma forward instances") {
  check_step(make_sigma_forward(2, 1, 2, 1, 0), 3, "2 1 2", "1 2 1");
  // a=2, b=2, i=3 in B5: P(1,2) P(2,3) s3 -> s1 P(1,2) P(2,3)
  check_step(make_sigma_forward(2, 2, 3, 1, 0), 5, "2 1 3 2 3", "1 2 1 3 2");
  // a=3, b=2, i=4, sign=-1 in B6
  {
    RewriteStep s = make_sigma_forward(3, 2, 4, -1, 0);
    const StepSides sides = step_sides(s, {});
    const BraidWord lhs(6, sides.lhs), rhs(6, sides.rhs);
    CHECK(rhs.letters.front() == -2);
    CHECK(words_equal(lhs, rhs, kBudget) == Equality::Equal);
  }
  // b = 1 makes the index window empty unless a >= 2
  CHECK_THROWS_AS(rw_sigma_forward(parse_word("1 2", 3), 1, 1, 2, 1, 0), PatternMismatch);
}

TEST_CASE("full twist factorization") {
  check_step(make_full_twist(3, 2, 0, kL2R), 3, "2 1 2 1 2 1", "2 1 1 2 1 1");
  check_step(make_full_twist(3, 1, 0, kL2R), 3, "2 1 2 1 2 1", "1 2 2 1 2 2");
  check_step(make_full_twist(2, 1, 0, kL2R), 2, "1 1", "1 1");
  // collapse: the reverse rewrite
  const BraidWord collapsed = rw_full_twist_factor(parse_word("2 1 1 2 1 1", 3), 3, 2, 0, kR2L);
  CHECK(to_text(collapsed) == "2 1 2 1 2 1");
  CHECK_THROWS_AS(rw_full_twist_factor(parse_word("1 1", 2), 2, 2, 0, kL2R), PatternMismatch);  // r = q
}

TEST_CASE("full twist inner block: adopted form vs the rejected variant") {
  // The factorization's third block is (P(r+1, q-1))^{q-r}.  A tempting
  // variant (P(q-r, q-1))^{q-r} coincides with it only when q = 2r + 1;
  // elsewhere it is not even length-preserving, and the oracle refuses it.
  auto push_block = [](std::vector<int>& out, int lo, int hi) {
    for (int i = hi; i >= lo; --i) out.push_back(i);
  };
  for (int q = 3; q <= 6; ++q)
    for (int r = 1; r < q; ++r) {
      std::vector<int> adopted, variant;
      auto blocks = [&](std::vector<int>& out, int lo) {
        for (int j = 1; j <= q - r; ++j) push_block(out, j, r + j - 1);
        for (int j = 1; j <= r; ++j) push_block(out, j, q - r + j - 1);
        for (int c = 0; c < q - r; ++c) push_block(out, lo, q - 1);
        for (int c = 0; c < r; ++c) push_block(out, 1, r - 1);
      };
      blocks(adopted, r + 1);
      blocks(variant, q - r);
      std::vector<int> full;
      for (int c = 0; c < q; ++c) push_block(full, 1, q - 1);
      CHECK(words_equal(BraidWord(q, full), BraidWord(q, adopted), kBudget) == Equality::Equal);
      if (q != 2 * r + 1)
        CHECK(words_equal(BraidWord(q, full), BraidWord(q, variant), kBudget) == Equality::NotEqual);
      else
        CHECK(adopted == variant);
    }
}

TEST_CASE("pi relation instances") {
  check_step(make_pi_relation(3, 2, 0), 3, "2 1 2 1 -1 -1", "1 2");
  check_step(make_pi_relation(4, 1, 0), 4, "3 2 1", "3 2 1");
  check_step(make_pi_relation(4, 2, 0), 4, "3 2 1 3 2 1 -1 -1", "2 1 3 2");
}

TEST_CASE("commute and free cancel micro-steps") {
  CHECK(to_text(apply_step(parse_word("1 3", 4), make_commute(0))) == "3 1");
  CHECK_THROWS_AS(apply_step(parse_word("1 2", 3), make_commute(0)), PatternMismatch);
  CHECK(to_text(apply_step(parse_word("2 1 -1 2", 3), make_free_cancel(1))) == "2 2");
  CHECK_THROWS_AS(apply_step(parse_word("1 1", 2), make_free_cancel(0)), PatternMismatch);
}

TEST_CASE("rewrites apply at interior positions and keep surroundings") {
  // embed "1 2 1" -> "2 1 2" inside a longer word
  const BraidWord w = parse_word("3 1 2 1 -3", 4);
  const BraidWord got = rw_glesser(w, 1, 1, 1, 1);
  CHECK(to_text(got) == "3 2 1 2 -3");
}

TEST_CASE("every rule preserves exponent sum and permutation by construction") {
  for (const auto& step : {make_glesser(2, 3, -1, 0), make_sigma_backward(2, 3, 1, -1, 0),
                           make_shift_bltr(2, 3, 2, 0, 1), make_shift_bltr(2, 3, 2, 0, 2),
                           make_rework34(1, 4, 3, 1, 0), make_sigma_forward(3, 2, 4, 1, 0),
                           make_full_twist(5, 3, 0, kL2R), make_pi_relation(5, 3, 0)}) {
    const StepSides sides = step_sides(step, {});
    const BraidWord lhs(8, sides.lhs), rhs(8, sides.rhs);
    CHECK(exponent_sum(lhs) == exponent_sum(rhs));
    CHECK(permutation(lhs) == permutation(rhs));
  }
}

TEST_CASE("replay validates and localizes failures") {
  // A two-step certificate by hand: "1 2 1 -1" -> "1 2" -> "2 1 2" is wrong;
  // build a correct one instead and then corrupt it.
  RewriteCertificate cert;
  cert.source = parse_word("1 2 1", 3);
  cert.steps.push_back(make_glesser(1, 1, 1, 0));
  cert.target = parse_word("2 1 2", 3);
  CHECK(replay(cert, kBudget).valid);

  SUBCASE("empty certificate with source == target") {
    RewriteCertificate trivial;
    trivial.source = trivial.target = parse_word("1 2", 3);
    CHECK(replay(trivial, kBudget).valid);
  }
  SUBCASE("flipped target letter is caught") {
    cert.target = parse_word("2 1 -2", 3);
    const ReplayResult res = replay(cert, kBudget);
    CHECK_FALSE(res.valid);
    CHECK(res.failed_step == 1);
  }
  SUBCASE("wrong span is caught at its step index") {
    cert.steps[0].pos = 1;
    const ReplayResult res = replay(cert, kBudget);
    CHECK_FALSE(res.valid);
    CHECK(res.failed_step == 0);
  }
  SUBCASE("oracle-checked replay") {
    ReplayOptions opts;
    opts.oracle_check_steps = true;
    CHECK(replay(cert, kBudget, opts).valid);
  }
}
