#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braids/ttk.hpp"

namespace braids {

// 2x2 and 4x4 integer matrices, row-major.
struct Mat2 {
  std::array<long long, 4> a{1, 0, 0, 1};

  long long& at(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }
  long long det() const { return a[0] * a[3] - a[1] * a[2]; }
  bool operator==(const Mat2& o) const = default;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y);

struct IntMatrix4 {
  std::array<long long, 16> a{};

  static IntMatrix4 identity();
  long long& at(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(4 * i + j)]; }
  bool operator==(const IntMatrix4& o) const = default;
};

IntMatrix4 mat4_mul(const IntMatrix4& x, const IntMatrix4& y);
H1Class mat4_apply(const IntMatrix4& m, const H1Class& v);

// blockdiag(C, (C^T)^{-1}); requires det C = +-1.
IntMatrix4 block_diag_pair(const Mat2& c);

// Generators of the extended Goeritz group's action on H_1 of the
// genus-two surface.
enum class GoeritzGen { Alpha, Beta, Gamma, Delta, DeltaInv, Epsilon };

const char* gen_name(GoeritzGen g);            // "alpha", ..., "delta^-1"
GoeritzGen gen_from_name(const std::string&);  // accepts the same spellings

using GoeritzWord = std::vector<GoeritzGen>;

std::string goeritz_word_text(const GoeritzWord& w);  // e.g. "alpha beta epsilon gamma delta^-1 gamma delta delta"

IntMatrix4 gen_matrix(GoeritzGen g);

// Product of generator matrices in word order; the rightmost generator
// acts first on vectors.
IntMatrix4 word_matrix(const GoeritzWord& w);

// Normal shape alpha^h beta^j epsilon^k gamma^l delta^{m1} gamma
// delta^{m2} ... gamma delta^{mn}, with h, j, k, l in {0,1} and the inner
// delta exponents nonzero.
struct GoeritzNormalForm {
  bool h = false, j = false, k = false, l = false;
  std::vector<long long> delta_exps;  // m_1 ... m_n; only m_n may be zero

  GoeritzWord to_word() const;
  bool operator==(const GoeritzNormalForm& o) const = default;
};

GoeritzNormalForm normal_form_view(const GoeritzWord& w);
GoeritzWord normal_form(const GoeritzWord& w);

// BlockForm iff m == blockdiag(C, (C^T)^{-1}) with det C = +-1.
std::optional<Mat2> check_block_form(const IntMatrix4& m);

// A gamma/delta word whose block equals C (alternating Euclidean
// decomposition over the elementary blocks); requires det C = +-1.
GoeritzWord realize_block(const Mat2& c);

// One prefix branch of the obstruction solver: the unique rational
// candidate for (s, t, u, v), scaled by the surface slope.
struct PrefixEvidence {
  int h = 0, j = 0, k = 0;     // the alpha/beta/epsilon prefix applied to [K2]
  int det_sign = 1;            // assumed determinant of the C block
  H1Class target{};            // alpha^h beta^j epsilon^k [K2]
  long long denom = 1;         // the shared determinant (the surface slope)
  std::array<long long, 4> numerators{};  // s, t, u, v times denom
  bool integral = false;
  bool unimodular = false;     // s v - t u == det_sign
};

struct ObstructionOutcome {
  enum class Kind { Obstructed, Witness, Unknown } kind = Kind::Unknown;
  std::vector<PrefixEvidence> evidence;       // every branch examined, in order
  std::optional<GoeritzWord> witness;          // normal form, present iff Witness
  std::optional<Mat2> witness_block;
  std::string convention;  // composition convention the witness matched
};

// Decides whether some extended Goeritz element takes [K1] to [K2] on
// homology.  A Witness certifies the induced map on homology exists; it
// does not certify a homeomorphism carrying K1 to K2.
ObstructionOutcome obstruction(const FamilyPair& pair);

}  // namespace braids
