#include "gensol/constructive.hpp"

#include <span>
#include <utility>
#include <vector>

#include "gensol/rng.hpp"

namespace gensol {

namespace {

bool nonzero(Fq v) { return !v.is_zero(); }

Matrix transpose(const Matrix& m) { return m.transpose(); }

void require_square(const Matrix& m, Index n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " must be " + std::to_string(n) +
                                                  "x" + std::to_string(n));
}

// Z realised row by row in the coordinates of a basis T: row i of Z is
// `coords.row(i)` followed by zeros, mapped back through T.
Matrix from_quotient_coordinates(const FiniteField& f, const Matrix& coords, const Matrix& t) {
  Matrix padded = zero_matrix(f, coords.rows(), t.rows());
  padded.leftCols(coords.cols()) = coords;
  return padded * t;
}

// Embedding of a 2x2 or 3x3 GF(2) block pair (P, Q) with P - Q = target.
void put_block(Matrix& p, Matrix& q, Index at, const Matrix& bp, const Matrix& bq) {
  p.block(at, at, bp.rows(), bp.cols()) = bp;
  q.block(at, at, bq.rows(), bq.cols()) = bq;
}

}  // namespace

Matrix common_complement(const FiniteField& f, const Matrix& w1, const Matrix& w2, Index ambient) {
  if (w1.cols() != ambient || w2.cols() != ambient)
    throw Error(ErrorCode::DimensionMismatch, "basis vectors must live in F^ambient");
  if (w1.rows() != w2.rows())
    throw Error(ErrorCode::DimensionMismatch, "subspaces must have equal dimension");
  if (rank(w1) != w1.rows() || rank(w2) != w2.rows())
    throw Error(ErrorCode::DimensionMismatch, "basis lists must be independent");

  Matrix s1 = w1.rows() ? w1 : zero_matrix(f, 0, ambient);
  Matrix s2 = w2.rows() ? w2 : zero_matrix(f, 0, ambient);
  Matrix u = zero_matrix(f, 0, ambient);
  const std::uint64_t total = vector_count(f, ambient);
  for (std::uint64_t idx = 1; idx < total && s1.rows() < ambient; ++idx) {
    const RowVector v = vector_at(f, ambient, idx);
    if (in_row_span(s1, v) || in_row_span(s2, v)) continue;
    s1 = vcat(s1, v);
    s2 = vcat(s2, v);
    u = vcat(u, v);
  }
  return u;
}

UnitPair sum_of_two_units(const FiniteField& f, const Matrix& d) {
  if (d.rows() != d.cols()) throw Error(ErrorCode::NotSquare, "sum_of_two_units needs a square matrix");
  const Index n = d.rows();
  if (f.q() == 2 && n == 1)
    throw Error(ErrorCode::PreconditionViolated, "1x1 matrices over GF(2) are not all sums of two units");
  if (n == 0) return {d, d};

  const RankNormalForm nf = rank_normal_form(f, d);
  const Index m = nf.rank;
  Matrix p = identity_matrix(f, n);
  Matrix q = identity_matrix(f, n);

  if (f.q() > 2) {
    // diag(I_m, 0) = c I - diag((c - 1) I_m, c I), c outside {0, 1}.
    const Fq c(f, 2);
    p = identity_matrix(f, n) * c;
    q = identity_matrix(f, n) * c;
    for (Index i = 0; i < m; ++i) q(i, i) = c - Fq(f, 1);
  } else if (m == 1) {
    // diag(1, 0) = [[1,1],[1,0]] - [[0,1],[1,0]]
    put_block(p, q, 0, make_matrix(f, 2, 2, {1, 1, 1, 0}), make_matrix(f, 2, 2, {0, 1, 1, 0}));
  } else {
    // I_2 and I_3 differences of units; P has no eigenvalue in GF(2).
    const Matrix p2 = make_matrix(f, 2, 2, {0, 1, 1, 1});
    const Matrix p3 = make_matrix(f, 3, 3, {0, 1, 0, 0, 0, 1, 1, 1, 0});
    Index at = 0;
    while (at < m) {
      const Index left = m - at;
      const Matrix& bp = (left == 3) ? p3 : p2;
      const Matrix bq = bp - identity_matrix(f, bp.rows());
      put_block(p, q, at, bp, bq);
      at += bp.rows();
    }
  }

  const Matrix xinv = inverse(f, nf.X);
  const Matrix yinv = inverse(f, nf.Y);
  UnitPair out{xinv * p * yinv, xinv * q * yinv};
  if (!nonzero(det(out.U)) || !nonzero(det(out.V)) || !(Matrix(out.U - out.V) == d))
    throw Error(ErrorCode::CertificationFailed, "sum_of_two_units produced an invalid pair");
  return out;
}

Matrix double_basis_shift(const FiniteField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "double_basis_shift needs two n x n matrices");
  const UnitPair uv = sum_of_two_units(f, a - b);
  return uv.U - a;
}

Matrix full_rank_shift(const FiniteField& f, const Matrix& r, const Matrix& s) {
  const Index rows = r.rows();
  const Index n = r.cols();
  if (s.rows() != rows || s.cols() != rows)
    throw Error(ErrorCode::DimensionMismatch, "S must be r x r");
  if (rows > n) throw Error(ErrorCode::RankHypothesisFailed, "need r <= n");
  if (rows == 0) return zero_matrix(f, 0, n);
  if (rank(hcat(r, s)) != rows) throw Error(ErrorCode::RankHypothesisFailed, "rank(R | S) < r");

  // X S Y = diag(I_m, 0); with R' = X R and Z' = Y^{-1} Z the target becomes
  // rows v_i + z'_i (i < m) together with v_m, ..., v_{r-1} independent.
  const RankNormalForm nf = rank_normal_form(f, s);
  const Index m = nf.rank;
  const Matrix rx = nf.X * r;
  const Matrix targets = basis_extension(f, rx.bottomRows(rows - m), n);
  Matrix zp = zero_matrix(f, rows, n);
  for (Index i = 0; i < m; ++i) zp.row(i) = targets.row(i) - rx.row(i);
  return nf.Y * zp;
}

Rational prs_bound(int r, int n, int q) {
  if (r > n) throw Error(ErrorCode::PreconditionViolated, "need r <= n");
  BigInt qr = 1;
  BigInt qn = 1;
  for (int i = 0; i < r; ++i) qr *= q;
  for (int i = 0; i < n; ++i) qn *= q;
  return Rational(1) - Rational(qr, qn * (q - 1));
}

namespace {
void check_prs_hypothesis(const Matrix& r, const Matrix& s) {
  if (s.rows() != r.rows() || s.cols() != r.rows())
    throw Error(ErrorCode::DimensionMismatch, "S must be r x r");
  if (r.rows() > r.cols()) throw Error(ErrorCode::RankHypothesisFailed, "need r <= n");
  if (r.rows() && rank(hcat(r, s)) != r.rows())
    throw Error(ErrorCode::RankHypothesisFailed, "rank(R | S) < r");
}
}  // namespace

Rational prs_exact(const FiniteField& f, const Matrix& r, const Matrix& s) {
  check_prs_hypothesis(r, s);
  const Index rows = r.rows();
  const Index n = r.cols();
  const std::uint64_t total = vector_count(f, rows * n);
  if (rows * n > 40 || total > (std::uint64_t{1} << 22))
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration exceeds 2^22 matrices");
  std::uint64_t good = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const RowVector flat = vector_at(f, rows * n, idx);
    Matrix z(rows, n);
    for (Index i = 0; i < rows; ++i) z.row(i) = flat.segment(i * n, n);
    if (rank(r + s * z) == rows) ++good;
  }
  return Rational(BigInt(good), BigInt(total));
}

Rational prs_monte_carlo(const FiniteField& f, const Matrix& r, const Matrix& s,
                         std::uint64_t trials, std::uint64_t seed) {
  check_prs_hypothesis(r, s);
  if (trials == 0) throw Error(ErrorCode::PreconditionViolated, "need at least one trial");
  auto rng = task_rng(seed, 0);
  std::uint64_t good = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Matrix z = random_matrix(f, r.rows(), r.cols(), rng);
    if (rank(r + s * z) == r.rows()) ++good;
  }
  return Rational(BigInt(good), BigInt(trials));
}

bool que_hypotheses_hold(const QueInstance& inst) {
  const Index n = inst.n();
  for (const Matrix* m : {&inst.A, &inst.B1, &inst.B2, &inst.D1, &inst.D2})
    if (m->rows() != n || m->cols() != n) return false;
  return rank(hcat(inst.A, inst.B1)) == n && rank(hcat(inst.A, inst.B2)) == n &&
         rank(vcat(inst.B1, inst.D1)) == n && rank(vcat(inst.B2, inst.D2)) == n;
}

bool que_condition_holds(const FiniteField& f, const QueInstance& inst) {
  if (f.q() > 2) return true;
  if (!nonzero(det(inst.A))) return true;
  return inst.n() >= 2 && (nonzero(det(inst.B1)) || nonzero(det(inst.B2)));
}

namespace {

// Rows of Z with R1 + S1 Z and R2 + S2 Z both invertible, for q = 2, S1
// invertible and rank(R2 | S2) = n.
Matrix invertible_pair_shift(const FiniteField& f, const Matrix& r1, const Matrix& s1,
                             const Matrix& r2, const Matrix& s2) {
  const Index n = r1.rows();
  const RankNormalForm nf = rank_normal_form(f, s2);
  const Index m = nf.rank;
  const Matrix& y = nf.Y;
  const Matrix yinv = inverse(f, y);
  // Replace R1 by (S1 Y)^{-1} R1 Y, R2 by X R2 Y and Z by Y^{-1} Z Y: S1
  // becomes I and S2 becomes diag(I_m, 0).
  const Matrix v = inverse(f, s1 * y) * r1 * y;
  const Matrix w = nf.X * r2 * y;
  Matrix z = zero_matrix(f, n, n);

  if (m != 1) {
    for (Index j = m; j < n; ++j) z.row(j) = w.row(j) - v.row(j);
    if (m > 0) {
      // Work modulo W = <w_m, ..., w_{n-1}> through a basis T whose last rows span W.
      const Matrix wrows = w.bottomRows(n - m);
      const Matrix t = vcat(basis_extension(f, wrows, n), wrows);
      const Matrix tinv = inverse(f, t);
      const Matrix vq = (v.topRows(m) * tinv).leftCols(m);
      const Matrix wq = (w.topRows(m) * tinv).leftCols(m);
      const Matrix cq = double_basis_shift(f, vq, wq);
      z.topRows(m) = from_quotient_coordinates(f, cq, t);
    }
  } else {
    for (Index j = 2; j < n; ++j) z.row(j) = w.row(j) - v.row(j);
    const Matrix wspan = w.bottomRows(n - 2);
    const Matrix w1span = vcat(w.row(1), wspan);
    const std::uint64_t total = vector_count(f, n);
    bool found = false;
    for (std::uint64_t idx = 0; idx < total && !found; ++idx) {
      const RowVector z0 = vector_at(f, n, idx);
      if (in_row_span(w1span, w.row(0) + z0)) continue;
      if (in_row_span(wspan, v.row(0) + z0)) continue;
      z.row(0) = z0;
      found = true;
    }
    const Matrix v0span = vcat(RowVector(v.row(0) + z.row(0)), wspan);
    bool found2 = false;
    for (std::uint64_t idx = 0; idx < total && found && !found2; ++idx) {
      const RowVector z1 = vector_at(f, n, idx);
      if (in_row_span(v0span, v.row(1) + z1)) continue;
      z.row(1) = z1;
      found2 = true;
    }
    if (!found || !found2)
      throw Error(ErrorCode::CertificationFailed, "no shift vector found in the m = 1 case");
  }
  return y * z * yinv;
}

bool both_full_rank(const Matrix& z, std::span<const Matrix> rs, std::span<const Matrix> ss) {
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rank(rs[i] + ss[i] * z) != rs[i].rows()) return false;
  return true;
}

// Z with rank(R_i + S_i Z) = r for every i, when such a Z is guaranteed to be
// plentiful (each constraint holds with probability > 1/2).
Matrix common_full_rank_shift(const FiniteField& f, std::span<const Matrix> rs,
                              std::span<const Matrix> ss) {
  const Index r = rs[0].rows();
  const Index n = rs[0].cols();
  std::vector<Matrix> candidates{zero_matrix(f, r, n)};
  for (std::size_t i = 0; i < rs.size(); ++i) candidates.push_back(full_rank_shift(f, rs[i], ss[i]));
  for (const Matrix& z : candidates)
    if (both_full_rank(z, rs, ss)) return z;

  std::mt19937_64 rng(splitmix64(0x71756eULL + static_cast<std::uint64_t>(r * 131 + n)));
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const Matrix z = random_matrix(f, r, n, rng);
    if (both_full_rank(z, rs, ss)) return z;
  }
  const std::uint64_t total = vector_count(f, r * n);
  if (r * n <= 40 && total <= (std::uint64_t{1} << 22)) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const RowVector flat = vector_at(f, r * n, idx);
      Matrix z(r, n);
      for (Index i = 0; i < r; ++i) z.row(i) = flat.segment(i * n, n);
      if (both_full_rank(z, rs, ss)) return z;
    }
  }
  throw Error(ErrorCode::CertificationFailed, "no common full-rank shift found");
}

// Core of the block completion: C with det [[A, B_i], [C, D_i]] != 0 for all i.
// `pair_mode` selects the argument used when two constraints meet q = 2 and
// invertible A.
Matrix solve_completion(const FiniteField& f, const Matrix& a, std::span<const Matrix> bs,
                        std::span<const Matrix> ds) {
  const Index n = a.rows();
  const RankNormalForm anf = rank_normal_form(f, a);
  const Index r = anf.rank;

  // Normalise A to diag(I_r, 0) and each B_i to [[B*_i1, B*_i2], [0, I_{n-r}]].
  std::vector<Matrix> rs, ss;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const Matrix xb = anf.X * bs[i];
    const Matrix lower = xb.bottomRows(n - r);
    const Matrix upper = basis_extension(f, lower, n);
    if (upper.rows() != r) throw Error(ErrorCode::HypothesisFailed, "rank(A | B) < n");
    const Matrix zi = inverse(f, vcat(upper, lower));
    const Matrix bstar = (xb * zi).topLeftCorner(r, r);
    const Matrix di1 = (ds[i] * zi).leftCols(r);
    rs.push_back(transpose(di1));
    ss.push_back(transpose(bstar));
  }

  Matrix z;
  if (r == 0) {
    z = zero_matrix(f, 0, n);
  } else if (bs.size() == 1) {
    z = full_rank_shift(f, rs[0], ss[0]);
  } else if (f.q() > 2 || r < n) {
    z = common_full_rank_shift(f, rs, ss);
  } else {
    // q = 2 and A invertible: B*_i1 = X B_i, so S_i is invertible iff B_i is.
    if (nonzero(det(ss[0])))
      z = invertible_pair_shift(f, rs[0], ss[0], rs[1], ss[1]);
    else if (nonzero(det(ss[1])))
      z = invertible_pair_shift(f, rs[1], ss[1], rs[0], ss[0]);
    else
      throw Error(ErrorCode::ConditionFailed, "q = 2, A invertible and both B_i singular");
  }

  // C1 = -Z^T; the columns of D_i1 - C1 B*_i1 span W_i, and C2 spans a common
  // complement of W_1, W_2.
  const Matrix c1 = -transpose(z);
  const Matrix w1 = rs[0] + ss[0] * z;
  const Matrix w2 = rs.size() > 1 ? Matrix(rs[1] + ss[1] * z) : w1;
  const Matrix u = common_complement(f, w1, w2, n);
  Matrix cprime = zero_matrix(f, n, n);
  cprime.leftCols(r) = c1;
  cprime.rightCols(n - r) = transpose(u);
  return cprime * inverse(f, anf.Y);
}

void certify(const Matrix& a, std::span<const Matrix> bs, std::span<const Matrix> ds, const Matrix& c) {
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (!nonzero(det(block2x2(a, bs[i], c, ds[i]))))
      throw Error(ErrorCode::CertificationFailed, "block completion failed certification");
}

}  // namespace

Matrix lemma_que_solve(const FiniteField& f, const QueInstance& inst) {
  const Index n = inst.n();
  require_square(inst.A, n, "A");
  for (const Matrix* m : {&inst.B1, &inst.B2, &inst.D1, &inst.D2}) require_square(*m, n, "block");
  if (!que_hypotheses_hold(inst)) throw Error(ErrorCode::HypothesisFailed, "rank hypotheses fail");
  if (!que_condition_holds(f, inst))
    throw Error(ErrorCode::ConditionFailed,
                "q = 2, det A != 0 and not (n >= 2 and some det B_i != 0)");
  if (n == 0) return zero_matrix(f, 0, 0);
  const std::array<Matrix, 2> bs{inst.B1, inst.B2};
  const std::array<Matrix, 2> ds{inst.D1, inst.D2};
  Matrix c = solve_completion(f, inst.A, bs, ds);
  certify(inst.A, bs, ds, c);
  return c;
}

ExhaustiveQue lemma_que_exhaustive(const FiniteField& f, const QueInstance& inst, std::uint64_t limit) {
  const Index n = inst.n();
  const std::uint64_t total = vector_count(f, n * n);
  if (n * n > 40 || total > limit) throw Error(ErrorCode::TooLarge, "candidate space too large");
  ExhaustiveQue out;
  out.candidates = total;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const RowVector flat = vector_at(f, n * n, idx);
    Matrix c(n, n);
    for (Index i = 0; i < n; ++i) c.row(i) = flat.segment(i * n, n);
    if (nonzero(det(block2x2(inst.A, inst.B1, c, inst.D1))) &&
        nonzero(det(block2x2(inst.A, inst.B2, c, inst.D2)))) {
      out.solution = c;
      return out;
    }
  }
  return out;
}

Matrix complete_block(const FiniteField& f, const Matrix& a, const Matrix& b, const Matrix& d) {
  const Index n = a.rows();
  require_square(a, n, "A");
  require_square(b, n, "B");
  require_square(d, n, "D");
  if (rank(hcat(a, b)) != n || rank(vcat(b, d)) != n)
    throw Error(ErrorCode::HypothesisFailed, "rank(A | B) and rank(B over D) must be n");
  if (n == 0) return zero_matrix(f, 0, 0);
  const std::array<Matrix, 1> bs{b};
  const std::array<Matrix, 1> ds{d};
  Matrix c = solve_completion(f, a, bs, ds);
  certify(a, bs, ds, c);
  return c;
}

bool chain_hypotheses_hold(const ChainInstance& inst) {
  const Index n = inst.n();
  for (const Matrix* m : {&inst.A0, &inst.A1, &inst.A2, &inst.A3, &inst.B0, &inst.B3})
    if (m->rows() != n || m->cols() != n) return false;
  return rank(hcat(inst.A0, inst.A1)) == n && rank(hcat(inst.A1, inst.A2)) == n &&
         rank(hcat(inst.A2, inst.A3)) == n && rank(vcat(inst.A0, inst.B0)) == n &&
         rank(vcat(inst.A3, inst.B3)) == n;
}

ChainSolution chain_completion(const FiniteField& f, const ChainInstance& inst) {
  const Index n = inst.n();
  if (!chain_hypotheses_hold(inst)) throw Error(ErrorCode::HypothesisFailed, "chain rank hypotheses fail");
  if (n < 2 && f.q() == 2) throw Error(ErrorCode::PreconditionViolated, "need n >= 2 or q > 2");

  // det [[P, Q], [R, S]] = +-det [[Q, P], [S, R]], so a block whose unknown
  // sits bottom-right is solved as a completion with the unknown bottom-left.
  ChainSolution sol;
  const bool first = f.q() > 2 || !nonzero(det(inst.A1));
  if (first) {
    // det [[A2, A3], [B2, B3]] != 0 <=> det [[B3^T, A3^T], [B2^T, A2^T]] != 0.
    sol.B2 = transpose(complete_block(f, transpose(inst.B3), transpose(inst.A3), transpose(inst.A2)));
    const QueInstance que{inst.A1, inst.A0, inst.A2, inst.B0, sol.B2};
    sol.B1 = lemma_que_solve(f, que);
  } else {
    sol.B1 = complete_block(f, inst.A1, inst.A0, inst.B0);
    const QueInstance que{inst.A2, inst.A1, inst.A3, sol.B1, inst.B3};
    sol.B2 = lemma_que_solve(f, que);
  }
  for (Fq d : chain_determinants(inst, sol))
    if (!nonzero(d)) throw Error(ErrorCode::CertificationFailed, "chain completion failed certification");
  return sol;
}

std::array<Fq, 3> chain_determinants(const ChainInstance& inst, const ChainSolution& sol) {
  return {det(block2x2(inst.A0, inst.A1, inst.B0, sol.B1)),
          det(block2x2(inst.A1, inst.A2, sol.B1, sol.B2)),
          det(block2x2(inst.A2, inst.A3, sol.B2, inst.B3))};
}

Matrix random_matrix(const FiniteField& f, Index rows, Index cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, f.q() - 1);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Fq(f, dist(rng));
  return m;
}

QueInstance random_que_instance(const FiniteField& f, Index n, std::mt19937_64& rng) {
  for (;;) {
    QueInstance inst{random_matrix(f, n, n, rng), random_matrix(f, n, n, rng), random_matrix(f, n, n, rng),
                     random_matrix(f, n, n, rng), random_matrix(f, n, n, rng)};
    if (que_hypotheses_hold(inst) && que_condition_holds(f, inst)) return inst;
  }
}

ChainInstance random_chain_instance(const FiniteField& f, Index n, std::mt19937_64& rng) {
  for (;;) {
    ChainInstance inst{random_matrix(f, n, n, rng), random_matrix(f, n, n, rng), random_matrix(f, n, n, rng),
                       random_matrix(f, n, n, rng), random_matrix(f, n, n, rng), random_matrix(f, n, n, rng)};
    if (chain_hypotheses_hold(inst)) return inst;
  }
}

}  // namespace gensol
