#include "braids/dean.hpp"

#include <cstdlib>

namespace braids {

long long least_abs_residue(long long x, long long p) {
  if (p < 1) throw InvalidParams("residue modulus must be >= 1");
  long long r = x % p;
  if (r < 0) r += p;
  // r in [0, p); fold the upper half down, keeping +p/2 on a tie.
  if (2 * r > p) r -= p;
  return r;
}

DeanWordParams reduce_word(const DeanWordParams& wp) {
  DeanWordParams out = wp;
  out.q = least_abs_residue(wp.q, wp.p);
  out.r = least_abs_residue(wp.r, wp.p);
  return out;
}

namespace {

bool congruent(long long a, long long b, long long p) { return (a - b) % p == 0; }

}  // namespace

bool is_primitive(const TTKParams& params, HandlebodySide side) {
  if (params.n != 1 && params.n != -1)
    throw NotDecidedByDean("primitivity test covers |n| = 1 only, got n = " + std::to_string(params.n));
  const long long P = (side == HandlebodySide::H) ? params.p : params.q;
  const long long Q = (side == HandlebodySide::H) ? params.q : params.p;
  const long long r = params.r;
  if (P == 1) return true;
  return congruent(r, 1, P) || congruent(r, -1, P) || congruent(r, Q, P) || congruent(r, -Q, P);
}

namespace {

std::string side_label(const SideVerdict& h, const SideVerdict& hp) {
  if (h.primitive && hp.primitive) return "p/p";
  if (h.primitive) return "primitive w.r.t. H only";
  if (hp.primitive) return "primitive w.r.t. H' only";
  return "not primitive w.r.t. either handlebody";
}

KnotVerdicts verdicts_for(const TTKParams& params) {
  KnotVerdicts v;
  v.params = params;
  v.side_h.primitive = is_primitive(params, HandlebodySide::H);
  v.side_hprime.primitive = is_primitive(params, HandlebodySide::Hprime);
  v.label = side_label(v.side_h, v.side_hprime);
  return v;
}

}  // namespace

ClassificationReport classify_theorem3(const FamilyPair& pair) {
  ClassificationReport rep;
  rep.pair = pair;
  rep.k1 = verdicts_for(pair.k1);
  rep.k2 = verdicts_for(pair.k2);

  if (pair.k == 0) {
    rep.theorem_case = (pair.m == 1) ? "(i)(a)" : "(i)(b)";
    // Recorded conclusions for the non-primitive sides: the word reduces
    // to an r == 0 form, which is neither primitive nor HEM-Seifert.  The
    // reduction argument presumes the side's first parameter exceeds 1.
    if (pair.m == 1) {
      rep.k2.side_h.hem = HemStatus::AssertedFalse;
    } else {
      rep.k1.side_h.hem = HemStatus::AssertedFalse;
      if (pair.q - pair.m > 1) rep.k2.side_h.hem = HemStatus::AssertedFalse;
    }
  } else if (pair.k == 1) {
    rep.theorem_case = "(ii)";
  } else {
    rep.theorem_case = "prior-work";
  }
  return rep;
}

}  // namespace braids
