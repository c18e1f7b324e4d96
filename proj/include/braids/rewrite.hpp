#pragma once

#include <map>
#include <string>
#include <vector>

#include "braids/braid_word.hpp"
#include "braids/oracle.hpp"
#include "braids/ttk.hpp"

namespace braids {

// Named rewrite rules.  Each one replaces a matched sub-word by an equal
// word in B_m; the span and parameters make every step positional and
// replayable.
enum class RuleKind {
  Glesser,          // ladder block absorbs a crossing: P(a,b) P(a+1,b+1) s_a^e  <->  s_{b+1}^e P(a,b) P(a+1,b+1)
  SigmaBackward,    // crossing slides over a staircase block, index up by a
  ShiftBLTR_i,      // bottom-left product climbs to the top right, shifted indices
  ShiftBLTR_ii,     // same move, leading blocks merged instead
  Rework34,         // single descending block absorbs a crossing, index down by 1
  SigmaForward,     // crossing slides under a staircase block, index down by b
  FullTwistFactor,  // full twist  <->  wrap blocks + inner full twists factorization
  PiRelation,       // r partial twists swallow r inverse sub-twists
  Commute,          // swap two adjacent far-apart letters
  FreeCancel,       // delete an adjacent (x, -x) pair
};

const char* rule_name(RuleKind k);
RuleKind rule_from_name(const std::string& name);

// Directions: 0 applies the rule left-to-right as listed above (expand
// for FullTwistFactor); 1 applies it right-to-left (collapse).
inline constexpr long long kL2R = 0;
inline constexpr long long kR2L = 1;

struct RewriteStep {
  RuleKind rule = RuleKind::FreeCancel;
  std::map<std::string, long long> params;
  int pos = 0;  // start of the matched sub-word
  int len = 0;  // length of the matched sub-word

  long long param(const std::string& key) const;
};

// Matched side and replacement side of a step.  For Commute/FreeCancel
// the sides depend on the word; pass the concrete letters via `context`.
struct StepSides {
  std::vector<int> lhs;
  std::vector<int> rhs;
};
StepSides step_sides(const RewriteStep& step, const std::vector<int>& context);

// Applies a step; throws PatternMismatch when the word does not carry the
// step's left-hand side at step.pos, IndexOutOfRange when the replacement
// does not fit in B_m.  Every application checks conservation of exponent
// sum and permutation.
BraidWord apply_step(const BraidWord& w, const RewriteStep& step);

// Rule wrappers mirroring the one-step operations.
BraidWord rw_glesser(const BraidWord& w, int a, int b, int sign, int pos, long long dir = kL2R);
BraidWord rw_sigma_backward(const BraidWord& w, int a, int b, int i, int sign, int pos);
BraidWord rw_shift_bltr(const BraidWord& w, int a, int b, int n, int pos, int form);
BraidWord rw_rework34(const BraidWord& w, int l, int s, int t, int sign, int pos);
BraidWord rw_sigma_forward(const BraidWord& w, int a, int b, int i, int sign, int pos);
BraidWord rw_full_twist_factor(const BraidWord& w, int q, int r, int pos, long long dir = kL2R);
BraidWord rw_pi_relation(const BraidWord& w, int q, int r, int pos);

// Step constructors (used by the pipeline and by tests).
RewriteStep make_glesser(int a, int b, int sign, int pos, long long dir = kL2R);
RewriteStep make_sigma_backward(int a, int b, int i, int sign, int pos);
RewriteStep make_shift_bltr(int a, int b, int n, int pos, int form, long long dir = kL2R);
RewriteStep make_rework34(int l, int s, int t, int sign, int pos);
RewriteStep make_sigma_forward(int a, int b, int i, int sign, int pos);
RewriteStep make_full_twist(int q, int r, int pos, long long dir);
RewriteStep make_pi_relation(int q, int r, int pos);
RewriteStep make_commute(int pos);
RewriteStep make_free_cancel(int pos);

// Ordered list of steps carrying a source word to a target word.
struct RewriteCertificate {
  BraidWord source;
  BraidWord target;
  std::vector<RewriteStep> steps;
};

struct ReplayOptions {
  bool oracle_check_steps = false;  // also words_equal each step's sides
  int oracle_span_limit = 64;       // only for matched spans up to this size
};

struct ReplayResult {
  bool valid = false;
  int failed_step = -1;  // -1 when valid
  std::string message;
};

// Re-executes every step, checking the pattern match and conservation of
// exponent sum and permutation, and finally structural equality with the
// target.
ReplayResult replay(const RewriteCertificate& cert, const OracleBudget& budget, ReplayOptions opts = {});

struct PositivizeResult {
  BraidWord word;
  RewriteCertificate certificate;
  bool fibered = true;  // closures of positive braids fiber
};

// Rewrites the canonical word of K(p, q, r, n), n = -nu < 0, into an
// all-positive word of length p(q-1) - nu*r(r-1).  Applicable when
// nu <= k, or nu == k+1 and r <= e; otherwise throws NotApplicable.
PositivizeResult positivize(const TTKParams& params, const OracleBudget& budget);

}  // namespace braids
