#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "gensol/matrix.hpp"
#include "gensol/rational.hpp"

namespace gensol {

/// Rows of a basis U with span(W1) + U = span(W2) + U = F^ambient, both sums
/// direct. W1 and W2 are given as independent rows of equal count. Vectors are
/// chosen greedily in lexicographic order.
Matrix common_complement(const FiniteField& f, const Matrix& w1, const Matrix& w2, Index ambient);

struct UnitPair {
  Matrix U;
  Matrix V;
};

/// D = U - V with U and V invertible. Needs q > 2 or n >= 2.
UnitPair sum_of_two_units(const FiniteField& f, const Matrix& d);

/// C with A + C and B + C both invertible; C = U - A where A - B = U - V.
Matrix double_basis_shift(const FiniteField& f, const Matrix& a, const Matrix& b);

/// For R (r x n) and S (r x r) with rank(R | S) = r and r <= n, returns Z
/// (r x n) with rank(R + S Z) = r.
Matrix full_rank_shift(const FiniteField& f, const Matrix& r, const Matrix& s);

/// 1 - q^r / (q^n (q - 1)).
Rational prs_bound(int r, int n, int q);
/// Exact fraction of Z in M_{r x n}(F) with rank(R + S Z) = r, by enumeration.
Rational prs_exact(const FiniteField& f, const Matrix& r, const Matrix& s);
/// Fraction of `trials` uniform samples Z with rank(R + S Z) = r.
Rational prs_monte_carlo(const FiniteField& f, const Matrix& r, const Matrix& s,
                         std::uint64_t trials, std::uint64_t seed);

/// Block completion problem: find C with det [[A, B_i], [C, D_i]] != 0 for
/// i = 1, 2.
struct QueInstance {
  Matrix A, B1, B2, D1, D2;
  Index n() const { return A.rows(); }
};

/// rank(A | B_i) = rank(B_i over D_i) = n for both i.
bool que_hypotheses_hold(const QueInstance& inst);
/// q > 2, or det A = 0, or n >= 2 with det B1, det B2 not both zero.
bool que_condition_holds(const FiniteField& f, const QueInstance& inst);

/// Constructive solver. Throws HypothesisFailed if the rank hypotheses fail and
/// ConditionFailed if none of the three side conditions holds. The returned C
/// is certified by recomputing both determinants.
Matrix lemma_que_solve(const FiniteField& f, const QueInstance& inst);

struct ExhaustiveQue {
  std::optional<Matrix> solution;  // least C in lexicographic order of codes
  std::uint64_t candidates = 0;
};
/// Tries every C; refuses (TooLarge) when q^(n^2) > limit.
ExhaustiveQue lemma_que_exhaustive(const FiniteField& f, const QueInstance& inst,
                                   std::uint64_t limit = std::uint64_t{1} << 20);

/// Single-constraint version: C with det [[A, B], [C, D]] != 0, given
/// rank(A | B) = rank(B over D) = n. Always solvable.
Matrix complete_block(const FiniteField& f, const Matrix& a, const Matrix& b, const Matrix& d);

struct ChainInstance {
  Matrix A0, A1, A2, A3, B0, B3;
  Index n() const { return A0.rows(); }
};

struct ChainSolution {
  Matrix B1, B2;
};

bool chain_hypotheses_hold(const ChainInstance& inst);

/// B1, B2 making det [[A0, A1], [B0, B1]], det [[A1, A2], [B1, B2]] and
/// det [[A2, A3], [B2, B3]] nonzero. Requires all rank conditions at full rank n
/// and n >= 2 or q > 2.
ChainSolution chain_completion(const FiniteField& f, const ChainInstance& inst);

/// The three chain determinants, in order.
std::array<Fq, 3> chain_determinants(const ChainInstance& inst, const ChainSolution& sol);

Matrix random_matrix(const FiniteField& f, Index rows, Index cols, std::mt19937_64& rng);
/// Uniformly sampled instance satisfying the hypotheses and side condition.
QueInstance random_que_instance(const FiniteField& f, Index n, std::mt19937_64& rng);
ChainInstance random_chain_instance(const FiniteField& f, Index n, std::mt19937_64& rng);

}  // namespace gensol
