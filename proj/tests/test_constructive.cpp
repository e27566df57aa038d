#include <doctest.h>

#include <cmath>

#include "gensol/constructive.hpp"
#include "gensol/rng.hpp"
#include "oracles.hpp"

using namespace gensol;

namespace {

const FiniteField& F2 = FiniteField::get(2);
const FiniteField& F3 = FiniteField::get(3);
const FiniteField& F4 = FiniteField::get(2, 2);

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;  // sentinel: nothing thrown
}

bool direct_sum_is_whole(const FiniteField& f, const Matrix& w, const Matrix& u, Index ambient) {
  const Matrix both = u.rows() ? (w.rows() ? vcat(w, u) : u) : w;
  return both.rows() == ambient && oracle::span_rank(f, both) == ambient;
}

bool que_solved(const QueInstance& inst, const Matrix& c) {
  return !oracle::leibniz_det(*field_of(inst.A), block2x2(inst.A, inst.B1, c, inst.D1)).is_zero() &&
         !oracle::leibniz_det(*field_of(inst.A), block2x2(inst.A, inst.B2, c, inst.D2)).is_zero();
}

}  // namespace

TEST_CASE("common complement examples") {
  const Matrix e1 = make_matrix(F2, 1, 2, {1, 0}), e2 = make_matrix(F2, 1, 2, {0, 1});
  const Matrix u11 = common_complement(F2, e1, e1, 2);
  CHECK(u11.rows() == 1);
  CHECK(direct_sum_is_whole(F2, e1, u11, 2));

  // The only line complementing both <e1> and <e2> is <e1 + e2>.
  const Matrix u12 = common_complement(F2, e1, e2, 2);
  CHECK(u12 == make_matrix(F2, 1, 2, {1, 1}));

  const Matrix full = identity_matrix(F2, 2);
  CHECK(common_complement(F2, full, full, 2).rows() == 0);

  CHECK(error_of([&] { common_complement(F2, e1, full, 2); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("common complement on random subspaces") {
  std::mt19937_64 rng = task_rng(21, 0);
  for (const FiniteField* f : {&F2, &F3, &F4}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Index ambient = 2 + trial % 3, dim = trial % (ambient + 1);
      Matrix w1, w2;
      do w1 = random_matrix(*f, dim, ambient, rng);
      while (rank(w1) != dim);
      do w2 = random_matrix(*f, dim, ambient, rng);
      while (rank(w2) != dim);
      const Matrix u = common_complement(*f, w1, w2, ambient);
      CHECK(direct_sum_is_whole(*f, w1, u, ambient));
      CHECK(direct_sum_is_whole(*f, w2, u, ambient));
    }
  }
}

TEST_CASE("sum of two units") {
  SUBCASE("zero") {
    const UnitPair p = sum_of_two_units(F2, zero_matrix(F2, 2, 2));
    CHECK(stamp(F2, p.U - p.V) == zero_matrix(F2, 2, 2));
    CHECK(is_invertible(p.U));
    CHECK(is_invertible(p.V));
  }
  SUBCASE("identity over GF(3)") {
    const UnitPair p = sum_of_two_units(F3, identity_matrix(F3, 1));
    CHECK(stamp(F3, p.U - p.V) == identity_matrix(F3, 1));
    CHECK_FALSE(p.U(0, 0).is_zero());
    CHECK_FALSE(p.V(0, 0).is_zero());
  }
  SUBCASE("q = 2, n = 1 is refused") {
    CHECK(error_of([] { sum_of_two_units(F2, identity_matrix(F2, 1)); }) == ErrorCode::PreconditionViolated);
  }
  SUBCASE("every 2x2 matrix over GF(2)") {
    for (const Matrix& d : oracle::all_matrices(F2, 2, 2)) {
      const UnitPair p = sum_of_two_units(F2, d);
      CHECK(stamp(F2, p.U - p.V) == d);
      CHECK(oracle::nonzero(oracle::leibniz_det(F2, p.U)));
      CHECK(oracle::nonzero(oracle::leibniz_det(F2, p.V)));
    }
  }
  SUBCASE("every 3x3 matrix over GF(2)") {
    int bad = 0;
    for (const Matrix& d : oracle::all_matrices(F2, 3, 3)) {
      const UnitPair p = sum_of_two_units(F2, d);
      if (stamp(F2, p.U - p.V) != d || det(p.U).is_zero() || det(p.V).is_zero()) ++bad;
    }
    CHECK(bad == 0);
  }
  SUBCASE("every 1x1 matrix over GF(3), GF(4), GF(5)") {
    for (const FiniteField* f : {&F3, &F4, &FiniteField::get(5)})
      for (const Matrix& d : oracle::all_matrices(*f, 1, 1)) {
        const UnitPair p = sum_of_two_units(*f, d);
        CHECK(stamp(*f, p.U - p.V) == d);
        CHECK_FALSE(p.U(0, 0).is_zero());
        CHECK_FALSE(p.V(0, 0).is_zero());
      }
  }
}

TEST_CASE("double basis shift") {
  const Matrix c0 = double_basis_shift(F2, zero_matrix(F2, 2, 2), zero_matrix(F2, 2, 2));
  CHECK(is_invertible(c0));

  const Matrix c1 = double_basis_shift(F3, zero_matrix(F3, 1, 1), identity_matrix(F3, 1));
  CHECK_FALSE(c1(0, 0).is_zero());
  CHECK_FALSE((c1(0, 0) + Fq(F3, 1)).is_zero());

  std::mt19937_64 rng = task_rng(8, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_matrix(F4, 3, 3, rng), b = random_matrix(F4, 3, 3, rng);
    const Matrix c = double_basis_shift(F4, a, b);
    CHECK(oracle::nonzero(oracle::leibniz_det(F4, stamp(F4, a + c))));
    CHECK(oracle::nonzero(oracle::leibniz_det(F4, stamp(F4, b + c))));
  }
}

TEST_CASE("full rank shift") {
  const Matrix z0 = full_rank_shift(F2, zero_matrix(F2, 2, 2), identity_matrix(F2, 2));
  CHECK(rank(z0) == 2);

  const Matrix r = make_matrix(F2, 1, 2, {1, 1});
  const Matrix z1 = full_rank_shift(F2, r, zero_matrix(F2, 1, 1));
  CHECK(oracle::span_rank(F2, stamp(F2, r + zero_matrix(F2, 1, 1) * z1)) == 1);

  CHECK(error_of([] { full_rank_shift(F2, zero_matrix(F2, 1, 2), zero_matrix(F2, 1, 1)); }) ==
        ErrorCode::RankHypothesisFailed);

  std::mt19937_64 rng = task_rng(12, 0);
  int tested = 0;
  while (tested < 50) {
    const Matrix rr = random_matrix(F3, 2, 3, rng), s = random_matrix(F3, 2, 2, rng);
    if (rank(hcat(rr, s)) != 2) continue;
    ++tested;
    const Matrix z = full_rank_shift(F3, rr, s);
    CHECK(oracle::span_rank(F3, stamp(F3, rr + s * z)) == 2);
  }
}

TEST_CASE("prs bound and exact probabilities") {
  CHECK(prs_bound(1, 1, 3) == Rational(1, 2));
  CHECK(prs_bound(1, 2, 2) == Rational(1, 2));
  CHECK(prs_bound(0, 2, 3) == 1 - Rational(1, 18));

  const Matrix zero1 = zero_matrix(F3, 1, 1);
  CHECK(prs_exact(F3, zero1, identity_matrix(F3, 1)) == Rational(2, 3));
  CHECK(prs_exact(F2, zero_matrix(F2, 1, 2), identity_matrix(F2, 1)) == Rational(3, 4));

  const Matrix r = make_matrix(F3, 1, 2, {1, 2});
  CHECK(prs_monte_carlo(F3, r, zero1, 200, 1) == 1);
  CHECK(error_of([&] { prs_monte_carlo(F3, zero_matrix(F3, 1, 2), zero1, 10, 1); }) ==
        ErrorCode::RankHypothesisFailed);

  // Deterministic given the seed.
  CHECK(prs_monte_carlo(F3, zero1, identity_matrix(F3, 1), 500, 4) ==
        prs_monte_carlo(F3, zero1, identity_matrix(F3, 1), 500, 4));
  const double est = static_cast<double>(prs_monte_carlo(F3, zero1, identity_matrix(F3, 1), 3000, 4));
  CHECK(std::abs(est - 2.0 / 3.0) < 3 * std::sqrt(2.0 / 9.0 / 3000) + 1e-9);
}

TEST_CASE("lemma que examples") {
  SUBCASE("A = B = I, D = 0 over GF(2)") {
    const QueInstance inst{identity_matrix(F2, 2), identity_matrix(F2, 2), identity_matrix(F2, 2),
                           zero_matrix(F2, 2, 2), zero_matrix(F2, 2, 2)};
    CHECK(que_solved(inst, lemma_que_solve(F2, inst)));
  }
  SUBCASE("the impossible instance is refused and unsolvable") {
    const QueInstance inst{make_matrix(F2, 2, 2, {0, 1, 1, 1}), make_matrix(F2, 2, 2, {0, 0, 1, 0}),
                           make_matrix(F2, 2, 2, {0, 0, 1, 0}), make_matrix(F2, 2, 2, {0, 0, 0, 1}),
                           identity_matrix(F2, 2)};
    CHECK(que_hypotheses_hold(inst));
    CHECK(error_of([&] { lemma_que_solve(F2, inst); }) == ErrorCode::ConditionFailed);
    const ExhaustiveQue ex = lemma_que_exhaustive(F2, inst);
    CHECK_FALSE(ex.solution.has_value());
    CHECK(ex.candidates == 16);
    for (const Matrix& c : oracle::all_matrices(F2, 2, 2)) CHECK_FALSE(que_solved(inst, c));
  }
  SUBCASE("n = 1 over GF(3)") {
    const QueInstance inst{zero_matrix(F3, 1, 1), identity_matrix(F3, 1), identity_matrix(F3, 1),
                           identity_matrix(F3, 1), make_matrix(F3, 1, 1, {2})};
    CHECK(que_solved(inst, lemma_que_solve(F3, inst)));
  }
  SUBCASE("broken rank hypotheses") {
    const QueInstance inst{zero_matrix(F2, 2, 2), zero_matrix(F2, 2, 2), identity_matrix(F2, 2),
                           identity_matrix(F2, 2), identity_matrix(F2, 2)};
    CHECK(error_of([&] { lemma_que_solve(F2, inst); }) == ErrorCode::HypothesisFailed);
  }
}

TEST_CASE("lemma que over GF(2), n = 2: solver matches exhaustive search") {
  // Sweep a deterministic sample of the 16^5 instances.
  const std::vector<Matrix> all = oracle::all_matrices(F2, 2, 2);
  std::mt19937_64 rng = task_rng(30, 0);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  int valid = 0, refused = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const QueInstance inst{all[pick(rng)], all[pick(rng)], all[pick(rng)], all[pick(rng)], all[pick(rng)]};
    if (!que_hypotheses_hold(inst)) continue;
    ++valid;
    const ExhaustiveQue ex = lemma_que_exhaustive(F2, inst);
    if (que_condition_holds(F2, inst)) {
      const Matrix c = lemma_que_solve(F2, inst);
      CHECK(que_solved(inst, c));
      CHECK(ex.solution.has_value());
    } else {
      ++refused;
      CHECK(error_of([&] { lemma_que_solve(F2, inst); }) == ErrorCode::ConditionFailed);
    }
  }
  CHECK(valid > 500);
  CHECK(refused > 0);
}

TEST_CASE("lemma que on random instances") {
  for (const FiniteField* f : {&F2, &F3, &F4, &FiniteField::get(5)})
    for (Index n = 1; n <= 3; ++n) {
      std::mt19937_64 rng = task_rng(40, f->q() * 10 + n);
      for (int trial = 0; trial < 25; ++trial) {
        const QueInstance inst = random_que_instance(*f, n, rng);
        CHECK(que_solved(inst, lemma_que_solve(*f, inst)));
      }
    }
}

TEST_CASE("chain completion") {
  auto verify = [](const FiniteField& f, const ChainInstance& inst, const ChainSolution& s) {
    CHECK(oracle::nonzero(oracle::leibniz_det(f, block2x2(inst.A0, inst.A1, inst.B0, s.B1))));
    CHECK(oracle::nonzero(oracle::leibniz_det(f, block2x2(inst.A1, inst.A2, s.B1, s.B2))));
    CHECK(oracle::nonzero(oracle::leibniz_det(f, block2x2(inst.A2, inst.A3, s.B2, inst.B3))));
  };
  SUBCASE("identities over GF(2)") {
    const Matrix i = identity_matrix(F2, 2), z = zero_matrix(F2, 2, 2);
    const ChainInstance inst{i, i, i, i, z, z};
    verify(F2, inst, chain_completion(F2, inst));
  }
  SUBCASE("n = 1 over GF(3)") {
    const Matrix one = identity_matrix(F3, 1);
    const ChainInstance inst{one, one, one, one, one, one};
    verify(F3, inst, chain_completion(F3, inst));
  }
  SUBCASE("rank(A3 over B3) < n") {
    const Matrix i = identity_matrix(F2, 2), z = zero_matrix(F2, 2, 2);
    const ChainInstance inst{i, i, i, z, i, z};
    CHECK(error_of([&] { chain_completion(F2, inst); }) == ErrorCode::HypothesisFailed);
  }
  SUBCASE("random") {
    for (const FiniteField* f : {&F2, &F3, &F4})
      for (Index n = 1; n <= 3; ++n) {
        if (n == 1 && f->q() == 2) continue;
        std::mt19937_64 rng = task_rng(50, f->q() * 10 + n);
        for (int trial = 0; trial < 15; ++trial) {
          const ChainInstance inst = random_chain_instance(*f, n, rng);
          verify(*f, inst, chain_completion(*f, inst));
        }
      }
  }
}
