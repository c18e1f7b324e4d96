#include <doctest.h>

#include "braids/rewrite.hpp"

using namespace braids;

namespace {

const OracleBudget kBudget{10'000'000, std::nullopt};

void check_positivize(long long p, long long q, long long r, long long nu) {
  const TTKParams params(p, q, r, -nu);
  const PositivizeResult res = positivize(params, kBudget);
  const BraidWord canonical = canonical_word(params);

  CAPTURE(p);
  CAPTURE(q);
  CAPTURE(r);
  CAPTURE(nu);
  CHECK(res.fibered);
  CHECK(is_positive(res.word));
  CHECK(static_cast<long long>(res.word.size()) == p * (q - 1) - nu * r * (r - 1));
  CHECK(permutation(res.word) == permutation(canonical));
  CHECK(res.certificate.source == canonical);
  CHECK(res.certificate.target == res.word);
  CHECK(replay(res.certificate, kBudget).valid);
  CHECK(words_equal(canonical, res.word, kBudget) == Equality::Equal);
}

}  // namespace

TEST_CASE("the worked example K(5,3,2,-2)") {
  const PositivizeResult res = positivize(TTKParams(5, 3, 2, -2), kBudget);
  CHECK(to_text(res.word) == "1 2 2 1 1 2");
  CHECK(res.word.size() == 6);
  CHECK(res.fibered);
  CHECK(to_text(res.certificate.source) == "2 1 2 1 2 1 2 1 2 1 -1 -1 -1 -1");
  CHECK(replay(res.certificate, kBudget).valid);
  ReplayOptions deep;
  deep.oracle_check_steps = true;
  CHECK(replay(res.certificate, kBudget, deep).valid);
}

TEST_CASE("certificates are deterministic: golden step sequence for K(5,3,2,-2)") {
  const PositivizeResult res = positivize(TTKParams(5, 3, 2, -2), kBudget);
  const std::vector<std::tuple<RuleKind, int, int>> want = {
      {RuleKind::FullTwistFactor, 4, 6}, {RuleKind::FreeCancel, 9, 2},   {RuleKind::FreeCancel, 8, 2},
      {RuleKind::SigmaBackward, 6, 3},   {RuleKind::SigmaBackward, 7, 3}, {RuleKind::SigmaForward, 4, 3},
      {RuleKind::SigmaForward, 5, 3},    {RuleKind::PiRelation, 0, 6},
  };
  REQUIRE(res.certificate.steps.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(res.certificate.steps[i].rule == std::get<0>(want[i]));
    CHECK(res.certificate.steps[i].pos == std::get<1>(want[i]));
    CHECK(res.certificate.steps[i].len == std::get<2>(want[i]));
  }
}

TEST_CASE("K(7,3,2,-2): below the boundary case") {
  const PositivizeResult res = positivize(TTKParams(7, 3, 2, -2), kBudget);
  CHECK(res.word.size() == 10);
  CHECK(is_positive(res.word));
  CHECK(words_equal(canonical_word(TTKParams(7, 3, 2, -2)), res.word, kBudget) == Equality::Equal);
}

TEST_CASE("negative control K(4,3,2,-2)") {
  CHECK_THROWS_AS(positivize(TTKParams(4, 3, 2, -2), kBudget), NotApplicable);
  try {
    positivize(TTKParams(4, 3, 2, -2), kBudget);
  } catch (const NotApplicable& e) {
    const std::string msg = e.what();
    CHECK(msg.find("K(4,3,2,-2)") != std::string::npos);
  }
}

TEST_CASE("rejections and degenerate acceptances") {
  CHECK_THROWS_AS(positivize(TTKParams(5, 3, 2, -3), kBudget), NotApplicable);  // nu > k+1
  CHECK_THROWS_AS(positivize(TTKParams(5, 3, 2, 2), kBudget), InvalidParams);   // n > 0
  CHECK_THROWS_AS(positivize(TTKParams(3, 5, 4, -1), kBudget), NotApplicable);  // k=0, r > e
  // r = 1: empty twist block, the canonical word is already positive
  const PositivizeResult triv = positivize(TTKParams(4, 3, 1, -5), kBudget);
  CHECK(triv.word == canonical_word(TTKParams(4, 3, 1, -5)));
  CHECK(triv.certificate.steps.empty());
  // r = q with nu <= k: pure cancellation
  const PositivizeResult rq = positivize(TTKParams(7, 3, 3, -2), kBudget);
  CHECK(is_positive(rq.word));
  CHECK(rq.word.size() == 7 * 2 - 2 * 3 * 2);
  CHECK(replay(rq.certificate, kBudget).valid);
  // r = q with nu = k+1 is out of reach
  CHECK_THROWS_AS(positivize(TTKParams(7, 3, 3, -3), kBudget), NotApplicable);
}

TEST_CASE("k=0 boundary instance") {
  // p < q, nu = 1 = k+1, r <= e = p
  check_positivize(3, 5, 2, 1);
  check_positivize(3, 5, 3, 1);
}

TEST_CASE("positivize is total on its precondition set and refuses its complement") {
  for (long long q = 2; q <= 4; ++q)
    for (long long p = 2; p <= 13; ++p) {
      if (gcd_ll(p, q) != 1) continue;
      const long long k = p / q, e = p % q;
      for (long long r = 2; r <= q; ++r)
        for (long long nu = 1; nu <= k + 3; ++nu) {
          CAPTURE(p);
          CAPTURE(q);
          CAPTURE(r);
          CAPTURE(nu);
          const bool applicable = (nu <= k) || (nu == k + 1 && r <= e);
          if (applicable)
            CHECK_NOTHROW(positivize(TTKParams(p, q, r, -nu), kBudget));
          else
            CHECK_THROWS_AS(positivize(TTKParams(p, q, r, -nu), kBudget), NotApplicable);
        }
    }
}

TEST_CASE("multi-iteration pipeline instances") {
  check_positivize(7, 3, 2, 1);
  check_positivize(7, 3, 2, 2);
  check_positivize(8, 3, 2, 3);   // nu = k+1 with e = 2
  check_positivize(11, 4, 3, 2);  // k=2, e=3, nu=2
  check_positivize(11, 4, 3, 3);  // nu = k+1, r <= e
  check_positivize(9, 5, 4, 2);   // nu = k+1 = 2, e = 4
  check_positivize(13, 6, 2, 2);  // wider braid group
  check_positivize(25, 6, 5, 4);  // largest sweep-scale instance
}
