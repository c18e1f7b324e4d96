#pragma once

#include <string>

#include "braids/ttk.hpp"

namespace braids {

// Subscript parameters of the conjugacy-class word a twisted torus knot
// represents in the fundamental group of one handlebody.  Reductions only
// ever change q and r modulo p, up to sign.
struct DeanWordParams {
  long long p = 1, q = 0, r = 0;
  long long m = 1, n = 1;  // trailing subscripts; always {1, -1} here

  bool operator==(const DeanWordParams& o) const = default;
};

// Least-absolute-value residue in (-p/2, p/2], ties toward +p/2.
long long least_abs_residue(long long x, long long p);

// Replaces q and r by their least absolute residues mod p.  Idempotent;
// preserves the primitivity verdict.
DeanWordParams reduce_word(const DeanWordParams& wp);

enum class HandlebodySide { H, Hprime };

// Primitivity of the knot's word with respect to one handlebody.  With
// (P, Q) = (p, q) for side H and (q, p) for side H': true iff P == 1, or
// r == +-1 (mod P), or r == +-Q (mod P).  Only decided for |n| = 1.
bool is_primitive(const TTKParams& params, HandlebodySide side);

enum class HemStatus { NotStated, AssertedFalse };

struct SideVerdict {
  bool primitive = false;   // computed from the residue test
  HemStatus hem = HemStatus::NotStated;  // recorded conclusion, never computed
};

struct KnotVerdicts {
  TTKParams params;
  SideVerdict side_h;
  SideVerdict side_hprime;
  std::string label;  // "p/p", "primitive w.r.t. H only", ...
};

struct ClassificationReport {
  FamilyPair pair;
  KnotVerdicts k1;
  KnotVerdicts k2;
  std::string theorem_case;  // "(i)(a)", "(i)(b)", "(ii)", or "prior-work" for k >= 2
};

ClassificationReport classify_theorem3(const FamilyPair& pair);

}  // namespace braids
