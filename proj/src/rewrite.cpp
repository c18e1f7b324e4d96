#include "braids/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace braids {

namespace {

void append_block(std::vector<int>& out, int lo, int hi) {
  for (int i = hi; i >= lo; --i) out.push_back(i);
}

// Inverse of a descending product: ascending negative letters.
void append_block_inverse(std::vector<int>& out, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) out.push_back(-i);
}

// Staircase P(1,a) P(2,a+1) ... P(b,a+b-1): the b-factor block both sigma
// slide rules act on.
void append_staircase(std::vector<int>& out, int a, int b) {
  for (int j = 1; j <= b; ++j) append_block(out, j, a + j - 1);
}

std::string render(const std::vector<int>& ls) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) os << ' ';
    os << ls[i];
  }
  os << ']';
  return os.str();
}

[[noreturn]] void bad_params(RuleKind kind, const std::string& why) {
  throw PatternMismatch(std::string(rule_name(kind)) + ": no matching instance (" + why + ")");
}

StepSides oriented(std::vector<int> lhs, std::vector<int> rhs, long long dir) {
  if (dir == kR2L) lhs.swap(rhs);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace

const char* rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::Glesser: return "Glesser";
    case RuleKind::SigmaBackward: return "SigmaBackward";
    case RuleKind::ShiftBLTR_i: return "ShiftBLTR_i";
    case RuleKind::ShiftBLTR_ii: return "ShiftBLTR_ii";
    case RuleKind::Rework34: return "Rework34";
    case RuleKind::SigmaForward: return "SigmaForward";
    case RuleKind::FullTwistFactor: return "FullTwistFactor";
    case RuleKind::PiRelation: return "PiRelation";
    case RuleKind::Commute: return "Commute";
    case RuleKind::FreeCancel: return "FreeCancel";
  }
  throw Error("unknown rule kind");
}

RuleKind rule_from_name(const std::string& name) {
  for (RuleKind k : {RuleKind::Glesser, RuleKind::SigmaBackward, RuleKind::ShiftBLTR_i, RuleKind::ShiftBLTR_ii,
                     RuleKind::Rework34, RuleKind::SigmaForward, RuleKind::FullTwistFactor, RuleKind::PiRelation,
                     RuleKind::Commute, RuleKind::FreeCancel})
    if (name == rule_name(k)) return k;
  throw InvalidParams("unknown rewrite rule name: '" + name + "'");
}

long long RewriteStep::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    throw InvalidParams(std::string(rule_name(rule)) + " step is missing parameter '" + key + "'");
  return it->second;
}

StepSides step_sides(const RewriteStep& step, const std::vector<int>& context) {
  switch (step.rule) {
    case RuleKind::Glesser: {
      const int a = static_cast<int>(step.param("a"));
      const int b = static_cast<int>(step.param("b"));
      const int sign = static_cast<int>(step.param("sign"));
      if (a < 1 || a > b) bad_params(step.rule, "needs 1 <= a <= b");
      if (sign != 1 && sign != -1) bad_params(step.rule, "sign must be +-1");
      std::vector<int> lhs, rhs;
      append_block(lhs, a, b);
      append_block(lhs, a + 1, b + 1);
      lhs.push_back(sign * a);
      rhs.push_back(sign * (b + 1));
      append_block(rhs, a, b);
      append_block(rhs, a + 1, b + 1);
      return oriented(std::move(lhs), std::move(rhs), step.param("dir"));
    }
    case RuleKind::SigmaBackward: {
      const int a = static_cast<int>(step.param("a"));
      const int b = static_cast<int>(step.param("b"));
      const int i = static_cast<int>(step.param("i"));
      const int sign = static_cast<int>(step.param("sign"));
      if (a < 1 || b < 1) bad_params(step.rule, "needs a, b >= 1");
      if (i < 1 || i > b - 1) bad_params(step.rule, "needs 1 <= i <= b-1");
      if (sign != 1 && sign != -1) bad_params(step.rule, "sign must be +-1");
      std::vector<int> lhs, rhs;
      append_staircase(lhs, a, b);
      lhs.push_back(sign * i);
      rhs.push_back(sign * (i + a));
      append_staircase(rhs, a, b);
      return {std::move(lhs), std::move(rhs)};
    }
    case RuleKind::SigmaForward: {
      const int a = static_cast<int>(step.param("a"));
      const int b = static_cast<int>(step.param("b"));
      const int i = static_cast<int>(step.param("i"));
      const int sign = static_cast<int>(step.param("sign"));
      if (a < 1 || b < 1) bad_params(step.rule, "needs a, b >= 1");
      if (i < b + 1 || i > a + b - 1) bad_params(step.rule, "needs b+1 <= i <= a+b-1");
      if (sign != 1 && sign != -1) bad_params(step.rule, "sign must be +-1");
      std::vector<int> lhs, rhs;
      append_staircase(lhs, a, b);
      lhs.push_back(sign * i);
      rhs.push_back(sign * (i - b));
      append_staircase(rhs, a, b);
      return {std::move(lhs), std::move(rhs)};
    }
    case RuleKind::ShiftBLTR_i:
    case RuleKind::ShiftBLTR_ii: {
      const int a = static_cast<int>(step.param("a"));
      const int b = static_cast<int>(step.param("b"));
      const int n = static_cast<int>(step.param("n"));
      if (a < 1 || a > b) bad_params(step.rule, "needs 1 <= a <= b");
      if (n < 1) bad_params(step.rule, "needs n >= 1");
      std::vector<int> lhs, rhs;
      for (int j = 0; j <= n; ++j) append_block(lhs, a + j, b + j);
      append_block(lhs, a, a + n - 1);
      if (step.rule == RuleKind::ShiftBLTR_i) {
        append_block(rhs, b + 1, b + n);
        for (int j = 0; j <= n; ++j) append_block(rhs, a + j, b + j);
      } else {
        append_block(rhs, a, b + n);
        for (int j = 1; j <= n; ++j) append_block(rhs, a + j, b + j);
      }
      return {std::move(lhs), std::move(rhs)};
    }
    case RuleKind::Rework34: {
      const int l = static_cast<int>(step.param("l"));
      const int s = static_cast<int>(step.param("s"));
      const int t = static_cast<int>(step.param("t"));
      const int sign = static_cast<int>(step.param("sign"));
      if (l < 1 || !(l < t && t <= s)) bad_params(step.rule, "needs 1 <= l < t <= s");
      if (sign != 1 && sign != -1) bad_params(step.rule, "sign must be +-1");
      std::vector<int> lhs, rhs;
      append_block(lhs, l, s);
      lhs.push_back(sign * t);
      rhs.push_back(sign * (t - 1));
      append_block(rhs, l, s);
      return {std::move(lhs), std::move(rhs)};
    }
    case RuleKind::FullTwistFactor: {
      const int q = static_cast<int>(step.param("q"));
      const int r = static_cast<int>(step.param("r"));
      if (r < 1 || r >= q) bad_params(step.rule, "needs 1 <= r < q");
      std::vector<int> lhs, rhs;
      for (int c = 0; c < q; ++c) append_block(lhs, 1, q - 1);
      for (int j = 1; j <= q - r; ++j) append_block(rhs, j, r + j - 1);
      for (int j = 1; j <= r; ++j) append_block(rhs, j, q - r + j - 1);
      // Inner twist on the last q-r strands is (P(r+1, q-1))^{q-r}; the
      // variant starting at q-r instead of r+1 only agrees when
      // q = 2r + 1 and fails the oracle otherwise.
      for (int c = 0; c < q - r; ++c) append_block(rhs, r + 1, q - 1);
      for (int c = 0; c < r; ++c) append_block(rhs, 1, r - 1);
      return oriented(std::move(lhs), std::move(rhs), step.param("dir"));
    }
    case RuleKind::PiRelation: {
      const int q = static_cast<int>(step.param("q"));
      const int r = static_cast<int>(step.param("r"));
      if (r < 1 || r >= q) bad_params(step.rule, "needs 1 <= r < q");
      std::vector<int> lhs, rhs;
      for (int c = 0; c < r; ++c) append_block(lhs, 1, q - 1);
      for (int c = 0; c < r; ++c) append_block_inverse(lhs, 1, r - 1);
      for (int j = 1; j <= r; ++j) append_block(rhs, j, q - r + j - 1);
      return {std::move(lhs), std::move(rhs)};
    }
    case RuleKind::Commute: {
      if (context.size() != 2) bad_params(step.rule, "span must cover exactly two letters");
      const int x = context[0], y = context[1];
      if (std::abs(std::abs(x) - std::abs(y)) < 2)
        throw PatternMismatch("Commute: letters " + std::to_string(x) + " and " + std::to_string(y) +
                              " are not far commuting");
      return {{x, y}, {y, x}};
    }
    case RuleKind::FreeCancel: {
      if (context.size() != 2) bad_params(step.rule, "span must cover exactly two letters");
      const int x = context[0], y = context[1];
      if (y != -x)
        throw PatternMismatch("FreeCancel: letters " + std::to_string(x) + " and " + std::to_string(y) +
                              " are not an inverse pair");
      return {{x, y}, {}};
    }
  }
  throw Error("unknown rule kind");
}

BraidWord apply_step(const BraidWord& w, const RewriteStep& step) {
  const int n = static_cast<int>(w.letters.size());
  if (step.pos < 0 || step.len < 0 || step.pos + step.len > n)
    throw PatternMismatch(std::string(rule_name(step.rule)) + ": span [" + std::to_string(step.pos) + ", +" +
                          std::to_string(step.len) + ") outside word of length " + std::to_string(n));
  std::vector<int> context(w.letters.begin() + step.pos, w.letters.begin() + step.pos + step.len);
  StepSides sides = step_sides(step, context);
  if (static_cast<int>(sides.lhs.size()) != step.len || sides.lhs != context)
    throw PatternMismatch(std::string(rule_name(step.rule)) + " at position " + std::to_string(step.pos) +
                          ": expected " + render(sides.lhs) + ", found " + render(context));
  for (int x : sides.rhs)
    if (std::abs(x) > w.strands - 1)
      throw IndexOutOfRange(std::string(rule_name(step.rule)) + ": replacement letter " + std::to_string(x) +
                            " does not fit in B_" + std::to_string(w.strands));
  // Conservation guard: both sides must agree in exponent sum and image
  // in the symmetric group.
  const BraidWord lhs_w(w.strands, sides.lhs), rhs_w(w.strands, sides.rhs);
  if (exponent_sum(lhs_w) != exponent_sum(rhs_w) || permutation(lhs_w) != permutation(rhs_w))
    throw Error(std::string(rule_name(step.rule)) + ": sides are not conservative, lhs " + render(sides.lhs) +
                " rhs " + render(sides.rhs));
  std::vector<int> out;
  out.reserve(w.letters.size() - sides.lhs.size() + sides.rhs.size());
  out.insert(out.end(), w.letters.begin(), w.letters.begin() + step.pos);
  out.insert(out.end(), sides.rhs.begin(), sides.rhs.end());
  out.insert(out.end(), w.letters.begin() + step.pos + step.len, w.letters.end());
  return BraidWord(w.strands, std::move(out));
}

namespace {

RewriteStep finish(RewriteStep step, const std::vector<int>& probe_context) {
  StepSides sides = step_sides(step, probe_context);
  step.len = static_cast<int>(sides.lhs.size());
  return step;
}

}  // namespace

RewriteStep make_glesser(int a, int b, int sign, int pos, long long dir) {
  RewriteStep s{RuleKind::Glesser, {{"a", a}, {"b", b}, {"sign", sign}, {"dir", dir}}, pos, 0};
  return finish(s, {});
}
RewriteStep make_sigma_backward(int a, int b, int i, int sign, int pos) {
  RewriteStep s{RuleKind::SigmaBackward, {{"a", a}, {"b", b}, {"i", i}, {"sign", sign}}, pos, 0};
  return finish(s, {});
}
RewriteStep make_shift_bltr(int a, int b, int n, int pos, int form, long long dir) {
  RewriteStep s{form == 1 ? RuleKind::ShiftBLTR_i : RuleKind::ShiftBLTR_ii,
                {{"a", a}, {"b", b}, {"n", n}},
                pos,
                0};
  (void)dir;
  return finish(s, {});
}
RewriteStep make_rework34(int l, int s_, int t, int sign, int pos) {
  RewriteStep s{RuleKind::Rework34, {{"l", l}, {"s", s_}, {"t", t}, {"sign", sign}}, pos, 0};
  return finish(s, {});
}
RewriteStep make_sigma_forward(int a, int b, int i, int sign, int pos) {
  RewriteStep s{RuleKind::SigmaForward, {{"a", a}, {"b", b}, {"i", i}, {"sign", sign}}, pos, 0};
  return finish(s, {});
}
RewriteStep make_full_twist(int q, int r, int pos, long long dir) {
  RewriteStep s{RuleKind::FullTwistFactor, {{"q", q}, {"r", r}, {"dir", dir}}, pos, 0};
  return finish(s, {});
}
RewriteStep make_pi_relation(int q, int r, int pos) {
  RewriteStep s{RuleKind::PiRelation, {{"q", q}, {"r", r}}, pos, 0};
  return finish(s, {});
}
RewriteStep make_commute(int pos) { return RewriteStep{RuleKind::Commute, {}, pos, 2}; }
RewriteStep make_free_cancel(int pos) { return RewriteStep{RuleKind::FreeCancel, {}, pos, 2}; }

BraidWord rw_glesser(const BraidWord& w, int a, int b, int sign, int pos, long long dir) {
  return apply_step(w, make_glesser(a, b, sign, pos, dir));
}
BraidWord rw_sigma_backward(const BraidWord& w, int a, int b, int i, int sign, int pos) {
  return apply_step(w, make_sigma_backward(a, b, i, sign, pos));
}
BraidWord rw_shift_bltr(const BraidWord& w, int a, int b, int n, int pos, int form) {
  return apply_step(w, make_shift_bltr(a, b, n, pos, form, kL2R));
}
BraidWord rw_rework34(const BraidWord& w, int l, int s, int t, int sign, int pos) {
  return apply_step(w, make_rework34(l, s, t, sign, pos));
}
BraidWord rw_sigma_forward(const BraidWord& w, int a, int b, int i, int sign, int pos) {
  return apply_step(w, make_sigma_forward(a, b, i, sign, pos));
}
BraidWord rw_full_twist_factor(const BraidWord& w, int q, int r, int pos, long long dir) {
  return apply_step(w, make_full_twist(q, r, pos, dir));
}
BraidWord rw_pi_relation(const BraidWord& w, int q, int r, int pos) {
  return apply_step(w, make_pi_relation(q, r, pos));
}

ReplayResult replay(const RewriteCertificate& cert, const OracleBudget& budget, ReplayOptions opts) {
  BraidWord w = cert.source;
  for (std::size_t idx = 0; idx < cert.steps.size(); ++idx) {
    const RewriteStep& step = cert.steps[idx];
    BraidWord next;
    try {
      next = apply_step(w, step);
    } catch (const Error& e) {
      return {false, static_cast<int>(idx), e.what()};
    }
    if (opts.oracle_check_steps && step.len <= opts.oracle_span_limit) {
      std::vector<int> context(w.letters.begin() + step.pos, w.letters.begin() + step.pos + step.len);
      StepSides sides = step_sides(step, context);
      if (static_cast<int>(sides.rhs.size()) <= opts.oracle_span_limit) {
        const auto eq = words_equal(BraidWord(w.strands, sides.lhs), BraidWord(w.strands, sides.rhs), budget);
        if (eq == Equality::BudgetExceeded)
          return {false, static_cast<int>(idx), "oracle budget exceeded while checking step"};
        if (eq == Equality::NotEqual)
          return {false, static_cast<int>(idx), std::string(rule_name(step.rule)) + ": sides are not oracle-equal"};
      }
    }
    w = std::move(next);
  }
  if (!(w == cert.target)) {
    std::ostringstream os;
    os << "replayed word differs from target: got [" << to_text(w) << "], target [" << to_text(cert.target) << "]";
    return {false, static_cast<int>(cert.steps.size()), os.str()};
  }
  return {true, -1, ""};
}

namespace {

// Appends `step` to the certificate and applies it.
void push(BraidWord& w, RewriteCertificate& cert, RewriteStep step) {
  w = apply_step(w, step);
  cert.steps.push_back(std::move(step));
}

// Cancels `pairs` adjacent inverse pairs at a junction whose left part
// ends at position `junction` - 1.
void cancel_junction(BraidWord& w, RewriteCertificate& cert, int junction, long long pairs) {
  for (long long c = 0; c < pairs; ++c) push(w, cert, make_free_cancel(static_cast<int>(junction - 1 - c)));
}

}  // namespace

PositivizeResult positivize(const TTKParams& params, const OracleBudget& budget) {
  (void)budget;  // the pipeline is deterministic and oracle-free
  if (params.n > 0)
    throw InvalidParams("positivization applies to negative twisting; for n > 0 the canonical word is already positive");
  const long long q = params.q, r = params.r, k = params.k, e = params.e;
  const long long nu = -params.n;

  PositivizeResult result;
  result.certificate.source = canonical_word(params);
  result.word = result.certificate.source;
  result.fibered = true;

  if (r == 1) {  // empty twist block: the canonical word is the positive torus word
    result.certificate.target = result.word;
    return result;
  }

  if (nu > k + 1)
    throw NotApplicable("nu = " + std::to_string(nu) + " exceeds k + 1 = " + std::to_string(k + 1) +
                        ": too much negative twisting");
  if (nu == k + 1 && r > e)
    throw NotApplicable("nu = k + 1 needs r <= e, got r = " + std::to_string(r) + " > e = " + std::to_string(e) +
                        "; compare K(4,3,2,-2), which has no positive representative (it is not fibered)");

  if (r == q) {
    // The twist block consists of whole inverse partial twists; nu <= k
    // holds here, so nu of the p twists cancel it letter by letter.
    const long long junction = params.p * (q - 1);
    cancel_junction(result.word, result.certificate, static_cast<int>(junction), nu * q * (q - 1));
    result.certificate.target = result.word;
    return result;
  }

  const long long lpt = q - 1;            // partial twist length
  const long long la = r * (q - r);       // wrap block A
  const long long lb = r * (q - r);       // wrap block B
  const long long lt = (q - r) * (q - r - 1);  // inner twist on the last q-r strands
  const long long lp = r * (r - 1);       // inner twist on the first r strands

  const long long iterations = std::min(nu, k);
  for (long long j = 1; j <= iterations; ++j) {
    // Word: e + (k-j+1) full twists | (nu-j+1)*r inverse sub-twists | alpha^{j-1}
    const long long pos_ft = (e + (k - j) * q) * lpt;
    push(result.word, result.certificate,
         make_full_twist(static_cast<int>(q), static_cast<int>(r), static_cast<int>(pos_ft), kL2R));
    // The factorization's trailing inner twist cancels r inverse sub-twists.
    const long long pos_neg = pos_ft + q * lpt;
    cancel_junction(result.word, result.certificate, static_cast<int>(pos_neg), lp);

    const long long rem = (nu - j) * r * (r - 1);  // letters still to move left
    if (rem == 0) continue;
    // Move each inverse letter across the inner twist block (far
    // commutation), then over B (index up by q-r), then under A (back
    // down by q-r).
    const long long pos_t = pos_ft + la + lb;
    for (long long i = 0; i < rem; ++i) {
      for (long long x = pos_t + i + lt - 1; x >= pos_t + i; --x)
        push(result.word, result.certificate, make_commute(static_cast<int>(x)));
    }
    const long long pos_b = pos_ft + la;
    for (long long i = 0; i < rem; ++i) {
      const int letter = std::abs(result.word.letters[pos_b + i + lb]);
      push(result.word, result.certificate,
           make_sigma_backward(static_cast<int>(q - r), static_cast<int>(r), letter, -1,
                               static_cast<int>(pos_b + i)));
    }
    for (long long i = 0; i < rem; ++i) {
      const int letter = std::abs(result.word.letters[pos_ft + i + la]);
      push(result.word, result.certificate,
           make_sigma_forward(static_cast<int>(r), static_cast<int>(q - r), letter, -1,
                              static_cast<int>(pos_ft + i)));
    }
  }

  if (nu == k + 1) {
    // Residual r inverse sub-twists cancel against the last r partial
    // twists of the leading block.
    const long long pos_pi = (e - r) * lpt;
    push(result.word, result.certificate,
         make_pi_relation(static_cast<int>(q), static_cast<int>(r), static_cast<int>(pos_pi)));
  }

  if (!is_positive(result.word)) throw Error("positivization pipeline left a negative letter");
  const long long want = params.p * (q - 1) + params.n * r * (r - 1);
  if (static_cast<long long>(result.word.size()) != want)
    throw Error("positivization output length " + std::to_string(result.word.size()) + " != expected " +
                std::to_string(want));
  result.certificate.target = result.word;
  return result;
}

}  // namespace braids
