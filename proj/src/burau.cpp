#include "braids/burau.hpp"

#include <bit>
#include <cstdlib>

namespace braids {

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, LaurentPoly());
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

LaurentMatrix mat_mul(const LaurentMatrix& x, const LaurentMatrix& y) {
  LaurentMatrix out;
  out.n = x.n;
  out.a.assign(static_cast<std::size_t>(x.n) * x.n, LaurentPoly());
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < x.n; ++j)
        if (!y.at(k, j).is_zero()) out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
    }
  return out;
}

LaurentPoly mat_det(const LaurentMatrix& m) {
  const int n = m.n;
  if (n == 0) return LaurentPoly::one();
  // dp[mask] = signed minor of the first popcount(mask) rows on the column
  // set mask; extending row popcount(mask) by column j picks up the parity
  // of the columns of mask below j.
  std::vector<LaurentPoly> dp(std::size_t{1} << n);
  dp[0] = LaurentPoly::one();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (dp[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    if (row == n) continue;
    int parity = 0;
    for (int j = n - 1; j >= 0; --j) {
      if (mask & (1u << j)) {
        ++parity;
        continue;
      }
      if (m.at(row, j).is_zero()) continue;
      const unsigned next = mask | (1u << j);
      const LaurentPoly term = dp[mask] * m.at(row, j);
      dp[next] = (parity % 2 == 0) ? dp[next] + term : dp[next] - term;
    }
  }
  return dp[(std::size_t{1} << n) - 1];
}

LaurentMatrix burau_letter(int letter, int strands) {
  const int n = strands - 1;
  const int i = std::abs(letter);
  if (i < 1 || i > n) throw IndexOutOfRange("letter " + std::to_string(letter) + " outside B_" + std::to_string(strands));
  LaurentMatrix m = LaurentMatrix::identity(n);
  const int r = i - 1;  // 0-based row
  if (letter > 0) {
    m.at(r, r) = LaurentPoly::monomial(-1, 1);
    if (r > 0) m.at(r, r - 1) = LaurentPoly::monomial(1, 1);
    if (r + 1 < n) m.at(r, r + 1) = LaurentPoly::one();
  } else {
    m.at(r, r) = LaurentPoly::monomial(-1, -1);
    if (r > 0) m.at(r, r - 1) = LaurentPoly::one();
    if (r + 1 < n) m.at(r, r + 1) = LaurentPoly::monomial(1, -1);
  }
  return m;
}

LaurentMatrix burau_reduced(const BraidWord& u) {
  const int n = u.strands - 1;
  LaurentMatrix m = LaurentMatrix::identity(n);
  // Right-multiplying by a letter image touches at most three columns.
  for (int letter : u.letters) {
    const int i = std::abs(letter);
    const int c = i - 1;
    std::vector<LaurentPoly> col_c(n), col_l(n), col_r(n);
    const LaurentPoly t1 = LaurentPoly::monomial(1, 1);
    const LaurentPoly tm1 = LaurentPoly::monomial(1, -1);
    for (int row = 0; row < n; ++row) {
      const LaurentPoly& mc = m.at(row, c);
      if (letter > 0) {
        // column c-1 += t * col c; column c *= -t; column c+1 += col c
        if (c > 0) col_l[row] = m.at(row, c - 1) + t1 * mc;
        col_c[row] = LaurentPoly::monomial(-1, 1) * mc;
        if (c + 1 < n) col_r[row] = m.at(row, c + 1) + mc;
      } else {
        if (c > 0) col_l[row] = m.at(row, c - 1) + mc;
        col_c[row] = LaurentPoly::monomial(-1, -1) * mc;
        if (c + 1 < n) col_r[row] = m.at(row, c + 1) + tm1 * mc;
      }
    }
    for (int row = 0; row < n; ++row) {
      if (c > 0) m.at(row, c - 1) = std::move(col_l[row]);
      m.at(row, c) = std::move(col_c[row]);
      if (c + 1 < n) m.at(row, c + 1) = std::move(col_r[row]);
    }
  }
  return m;
}

LaurentPoly alexander_of_closure(const BraidWord& u) {
  if (!is_single_cycle(permutation(u)))
    throw NotAKnot("closure has more than one component; Alexander polynomial needs a knot");
  const int n = u.strands - 1;
  LaurentMatrix b = burau_reduced(u);
  LaurentMatrix id = LaurentMatrix::identity(n);
  LaurentMatrix diff;
  diff.n = n;
  diff.a.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) diff.at(i, j) = id.at(i, j) - b.at(i, j);
  LaurentPoly det = mat_det(diff);
  if (det.is_zero()) throw Error("vanishing Burau determinant for a knot closure");
  // det * (1-t)/(1-t^m) == det / (1 + t + ... + t^{m-1})
  LaurentPoly alex = det.divide_exact(geometric_sum(u.strands));
  alex = alex.shifted(-alex.min_exp());
  if (alex.coeff(0) < 0) alex = -alex;
  return alex;
}

}  // namespace braids
