#include "braids/goeritz.hpp"

#include <cstdlib>

namespace braids {

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
  return out;
}

IntMatrix4 IntMatrix4::identity() {
  IntMatrix4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix4 mat4_mul(const IntMatrix4& x, const IntMatrix4& y) {
  IntMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long long s = 0;
      for (int k = 0; k < 4; ++k) s += x.at(i, k) * y.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

H1Class mat4_apply(const IntMatrix4& m, const H1Class& v) {
  H1Class out{};
  for (int i = 0; i < 4; ++i) {
    long long s = 0;
    for (int j = 0; j < 4; ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

IntMatrix4 block_diag_pair(const Mat2& c) {
  const long long d = c.det();
  if (d != 1 && d != -1) throw NotUnimodular("block must have determinant +-1, got " + std::to_string(d));
  // (C^T)^{-1} = (1/det) [[v, -u], [-t, s]]
  Mat2 dual;
  dual.at(0, 0) = d * c.at(1, 1);
  dual.at(0, 1) = -d * c.at(1, 0);
  dual.at(1, 0) = -d * c.at(0, 1);
  dual.at(1, 1) = d * c.at(0, 0);
  IntMatrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = c.at(i, j);
      m.at(i + 2, j + 2) = dual.at(i, j);
    }
  return m;
}

const char* gen_name(GoeritzGen g) {
  switch (g) {
    case GoeritzGen::Alpha: return "alpha";
    case GoeritzGen::Beta: return "beta";
    case GoeritzGen::Gamma: return "gamma";
    case GoeritzGen::Delta: return "delta";
    case GoeritzGen::DeltaInv: return "delta^-1";
    case GoeritzGen::Epsilon: return "epsilon";
  }
  throw Error("unknown generator");
}

GoeritzGen gen_from_name(const std::string& s) {
  for (GoeritzGen g : {GoeritzGen::Alpha, GoeritzGen::Beta, GoeritzGen::Gamma, GoeritzGen::Delta,
                       GoeritzGen::DeltaInv, GoeritzGen::Epsilon})
    if (s == gen_name(g)) return g;
  throw InvalidParams("unknown generator name: '" + s + "'");
}

std::string goeritz_word_text(const GoeritzWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += gen_name(w[i]);
  }
  return out;
}

IntMatrix4 gen_matrix(GoeritzGen g) {
  IntMatrix4 m;
  switch (g) {
    case GoeritzGen::Alpha:
      for (int i = 0; i < 4; ++i) m.at(i, i) = -1;
      return m;
    case GoeritzGen::Beta:
      m.at(0, 0) = 1, m.at(1, 1) = -1, m.at(2, 2) = 1, m.at(3, 3) = -1;
      return m;
    case GoeritzGen::Gamma:
      m.at(0, 1) = -1, m.at(1, 0) = -1, m.at(2, 3) = -1, m.at(3, 2) = -1;
      return m;
    case GoeritzGen::Delta:
      // a -> a + x, x -> x, b -> b, y -> y - b
      m.at(0, 0) = 1, m.at(1, 0) = 1, m.at(1, 1) = 1, m.at(2, 2) = 1, m.at(2, 3) = -1, m.at(3, 3) = 1;
      return m;
    case GoeritzGen::DeltaInv:
      m.at(0, 0) = 1, m.at(1, 0) = -1, m.at(1, 1) = 1, m.at(2, 2) = 1, m.at(2, 3) = 1, m.at(3, 3) = 1;
      return m;
    case GoeritzGen::Epsilon:
      // image coordinates (a', x', b', y') = (y, b, x, a)
      m.at(0, 3) = 1, m.at(1, 2) = 1, m.at(2, 1) = 1, m.at(3, 0) = 1;
      return m;
  }
  throw Error("unknown generator");
}

IntMatrix4 word_matrix(const GoeritzWord& w) {
  IntMatrix4 m = IntMatrix4::identity();
  for (GoeritzGen g : w) m = mat4_mul(m, gen_matrix(g));
  return m;
}

GoeritzWord GoeritzNormalForm::to_word() const {
  GoeritzWord w;
  if (h) w.push_back(GoeritzGen::Alpha);
  if (j) w.push_back(GoeritzGen::Beta);
  if (k) w.push_back(GoeritzGen::Epsilon);
  if (l) w.push_back(GoeritzGen::Gamma);
  for (std::size_t i = 0; i < delta_exps.size(); ++i) {
    if (i) w.push_back(GoeritzGen::Gamma);
    const long long m = delta_exps[i];
    for (long long c = 0; c < std::llabs(m); ++c)
      w.push_back(m > 0 ? GoeritzGen::Delta : GoeritzGen::DeltaInv);
  }
  return w;
}

GoeritzNormalForm normal_form_view(const GoeritzWord& w) {
  // Scan left to right, holding the processed prefix in normal shape.
  // Each alpha/beta/epsilon letter filters leftward through the
  // gamma/delta tail using the listed relations; gamma and delta letters
  // extend the tail.
  GoeritzNormalForm nf;
  auto gamma_count = [&nf]() -> long long {
    long long c = nf.l ? 1 : 0;
    if (!nf.delta_exps.empty()) c += static_cast<long long>(nf.delta_exps.size()) - 1;
    return c;
  };
  auto flip_deltas = [&nf]() {
    for (auto& m : nf.delta_exps) m = -m;
  };
  for (GoeritzGen g : w) {
    switch (g) {
      case GoeritzGen::Alpha:
        nf.h = !nf.h;  // central
        break;
      case GoeritzGen::Beta:
        // Crossing delta^m flips it; crossing gamma emits a central alpha.
        flip_deltas();
        if (gamma_count() % 2 != 0) nf.h = !nf.h;
        if (nf.k) nf.h = !nf.h;  // epsilon beta = alpha beta epsilon
        nf.j = !nf.j;
        break;
      case GoeritzGen::Epsilon:
        // Crossing delta^m flips it; gamma commutes.
        flip_deltas();
        nf.k = !nf.k;
        break;
      case GoeritzGen::Gamma:
        if (nf.delta_exps.empty()) {
          nf.l = !nf.l;
        } else if (nf.delta_exps.back() == 0) {
          nf.delta_exps.pop_back();  // trailing gamma cancels
          if (nf.delta_exps.empty()) nf.l = !nf.l;  // tail was "gamma delta^0"
        } else {
          nf.delta_exps.push_back(0);
        }
        break;
      case GoeritzGen::Delta:
      case GoeritzGen::DeltaInv: {
        const long long d = (g == GoeritzGen::Delta) ? 1 : -1;
        if (nf.delta_exps.empty())
          nf.delta_exps.push_back(d);
        else
          nf.delta_exps.back() += d;
        break;
      }
    }
  }
  // Drop a trivial trailing exponent so the empty tail renders empty.
  if (nf.delta_exps.size() == 1 && nf.delta_exps[0] == 0) nf.delta_exps.clear();
  return nf;
}

GoeritzWord normal_form(const GoeritzWord& w) { return normal_form_view(w).to_word(); }

std::optional<Mat2> check_block_form(const IntMatrix4& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j)
      if (m.at(i, j) != 0 || m.at(j, i) != 0) return std::nullopt;
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.at(i, j) = m.at(i, j);
  if (c.det() != 1 && c.det() != -1) return std::nullopt;
  if (!(block_diag_pair(c) == m)) return std::nullopt;
  return c;
}

namespace {

// Letters for the elementary blocks: delta^m is lower, gamma delta^m
// gamma is upper.
void emit_lower(GoeritzWord& w, long long m) {
  for (long long c = 0; c < std::llabs(m); ++c) w.push_back(m > 0 ? GoeritzGen::Delta : GoeritzGen::DeltaInv);
}

void emit_upper(GoeritzWord& w, long long m) {
  if (m == 0) return;
  w.push_back(GoeritzGen::Gamma);
  emit_lower(w, m);
  w.push_back(GoeritzGen::Gamma);
}

// Removes adjacent gamma gamma pairs produced by the emission.
GoeritzWord squash_gammas(const GoeritzWord& w) {
  GoeritzWord out;
  for (GoeritzGen g : w) {
    if (g == GoeritzGen::Gamma && !out.empty() && out.back() == GoeritzGen::Gamma)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

}  // namespace

GoeritzWord realize_block(const Mat2& c0) {
  const long long d = c0.det();
  if (d != 1 && d != -1) throw NotUnimodular("realize_block needs determinant +-1, got " + std::to_string(d));
  GoeritzWord out;
  Mat2 c = c0;

  // Half-turn rotation, used for the residual -I and antidiagonal cases.
  auto emit_quarter_turn = [](GoeritzWord& w, int dir) {
    // dir=+1: [[0,1],[-1,0]] = U L^{-1} U; dir=-1 its inverse.
    emit_upper(w, dir);
    emit_lower(w, -dir);
    emit_upper(w, dir);
  };

  // Peel elementary column operations from the right until the remainder
  // is one of finitely many base matrices.
  std::vector<GoeritzWord> chunks;  // chunks[0] is the rightmost factor
  while (true) {
    long long s = c.at(0, 0), t = c.at(0, 1), u = c.at(1, 0), v = c.at(1, 1);
    if (u == 0 || v == 0) break;
    GoeritzWord chunk;
    if (std::llabs(v) <= std::llabs(u)) {
      // strip delta^m: column 1 -= m * column 2
      long long m = u / v;
      if (std::llabs(u - m * v) * 2 > std::llabs(v)) m += (u * v > 0) ? 1 : -1;
      emit_lower(chunk, m);
      c.at(0, 0) = s - m * t;
      c.at(1, 0) = u - m * v;
    } else {
      // strip (gamma delta^m gamma): column 2 -= m * column 1
      long long m = v / u;
      if (std::llabs(v - m * u) * 2 > std::llabs(u)) m += (u * v > 0) ? 1 : -1;
      emit_upper(chunk, m);
      c.at(0, 1) = t - m * s;
      c.at(1, 1) = v - m * u;
    }
    chunks.push_back(std::move(chunk));
  }

  // Base cases: u == 0 or v == 0 forces the off-zero entries into {+-1}.
  GoeritzWord base;
  const long long s = c.at(0, 0), t = c.at(0, 1), u = c.at(1, 0), v = c.at(1, 1);
  if (u == 0) {
    // [[s, t], [0, v]], s v = +-1
    if (s == 1 && v == 1) {
      emit_upper(base, t);
    } else if (s == -1 && v == -1) {
      emit_quarter_turn(base, 1);
      emit_quarter_turn(base, 1);
      emit_upper(base, -t);
    } else if (s == 1 && v == -1) {
      // [[1, t], [0, -1]] = U^{-t} . diag(1,-1), and diag(1,-1) = S^{-1} Gamma
      emit_upper(base, -t);
      emit_quarter_turn(base, -1);
      base.push_back(GoeritzGen::Gamma);
    } else {  // s == -1 && v == 1
      // [[-1, t], [0, 1]] = U^t . diag(-1,1), and diag(-1,1) = Gamma S^{-1}
      emit_upper(base, t);
      base.push_back(GoeritzGen::Gamma);
      emit_quarter_turn(base, -1);
    }
  } else {
    // [[s, t], [u, 0]], t u = -+1
    if (t == -1 && u == 1) {
      // [[s,-1],[1,0]] = U^s . S^{-1}
      emit_upper(base, s);
      emit_quarter_turn(base, -1);
    } else if (t == 1 && u == -1) {
      // [[s,1],[-1,0]] = U^{-s} . S
      emit_upper(base, -s);
      emit_quarter_turn(base, 1);
    } else if (t == 1 && u == 1) {
      // [[s,1],[1,0]] = U^s . [[0,1],[1,0]] and [[0,1],[1,0]] = S^2 Gamma
      emit_upper(base, s);
      emit_quarter_turn(base, 1);
      emit_quarter_turn(base, 1);
      base.push_back(GoeritzGen::Gamma);
    } else {  // t == -1 && u == -1
      // [[s,-1],[-1,0]] = U^{-s} Gamma
      emit_upper(base, -s);
      base.push_back(GoeritzGen::Gamma);
    }
  }

  out = base;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  out = squash_gammas(out);

  // The decomposition is verified, not trusted.
  auto back = check_block_form(word_matrix(out));
  if (!back || !(*back == c0)) throw Error("block decomposition failed verification");
  return out;
}

namespace {

IntMatrix4 prefix_matrix(int h, int j, int k) {
  IntMatrix4 m = IntMatrix4::identity();
  if (h) m = mat4_mul(m, gen_matrix(GoeritzGen::Alpha));
  if (j) m = mat4_mul(m, gen_matrix(GoeritzGen::Beta));
  if (k) m = mat4_mul(m, gen_matrix(GoeritzGen::Epsilon));
  return m;
}

GoeritzWord prefix_inverse_letters(int h, int j, int k) {
  // (alpha^h beta^j epsilon^k)^{-1} = alpha^{h + jk} beta^j epsilon^k.
  GoeritzWord w;
  if ((h + j * k) % 2) w.push_back(GoeritzGen::Alpha);
  if (j) w.push_back(GoeritzGen::Beta);
  if (k) w.push_back(GoeritzGen::Epsilon);
  return w;
}

}  // namespace

ObstructionOutcome obstruction(const FamilyPair& pair) {
  const H1Class v1 = h1_class(pair.k1);
  const H1Class v2 = h1_class(pair.k2);
  const long long q = pair.q, m = pair.m, kk = pair.k;
  const long long denom = surface_slope(pair);  // shared determinant of both 2x2 systems
  if (denom == 0) throw Error("degenerate surface slope");

  ObstructionOutcome out;
  for (int det_sign : {1, -1}) {
    for (int h = 0; h < 2; ++h)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          PrefixEvidence ev;
          ev.h = h, ev.j = j, ev.k = k, ev.det_sign = det_sign;
          ev.denom = denom;
          ev.target = mat4_apply(prefix_matrix(h, j, k), v2);
          const long long x1 = ev.target[0], x2 = ev.target[1];
          const long long x3 = det_sign * ev.target[2], x4 = det_sign * ev.target[3];
          // (s,t) solves  q s - m t = x1, -m s + (kq+m) t = x4;
          // (u,v) solves  q u - m v = x2,  m u - (kq+m) v = x3.
          ev.numerators[0] = (kk * q + m) * x1 + m * x4;          // s * denom
          ev.numerators[1] = m * x1 + q * x4;                     // t * denom
          ev.numerators[2] = (kk * q + m) * x2 - m * x3;          // u * denom
          ev.numerators[3] = m * x2 - q * x3;                     // v * denom
          ev.integral = true;
          for (long long num : ev.numerators) ev.integral = ev.integral && (num % denom == 0);
          if (ev.integral) {
            const long long s = ev.numerators[0] / denom, t = ev.numerators[1] / denom;
            const long long u = ev.numerators[2] / denom, v = ev.numerators[3] / denom;
            ev.unimodular = (s * v - t * u == det_sign);
            if (ev.unimodular) {
              Mat2 c;
              c.at(0, 0) = s, c.at(0, 1) = t, c.at(1, 0) = u, c.at(1, 1) = v;
              const IntMatrix4 block = block_diag_pair(c);
              if (check_block_form(block) && mat4_apply(block, v1) == ev.target) {
                GoeritzWord witness = prefix_inverse_letters(h, j, k);
                const GoeritzWord gd = realize_block(c);
                witness.insert(witness.end(), gd.begin(), gd.end());
                witness = normal_form(witness);
                // The witness must carry [K1] to [K2] exactly, rightmost
                // generator first; record which convention matched.
                if (!(mat4_apply(word_matrix(witness), v1) == v2))
                  throw Error("witness failed verification");
                out.evidence.push_back(ev);
                out.kind = ObstructionOutcome::Kind::Witness;
                out.witness = witness;
                out.witness_block = c;
                out.convention = "rightmost-first";
                {
                  GoeritzWord reversed(witness.rbegin(), witness.rend());
                  if (mat4_apply(word_matrix(reversed), v1) == v2) out.convention = "either";
                }
                return out;
              }
            }
          }
          out.evidence.push_back(ev);
        }
  }
  out.kind = ObstructionOutcome::Kind::Obstructed;
  return out;
}

}  // namespace braids
