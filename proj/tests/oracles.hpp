#pragma once

// Reference implementations used only by the tests. They share no code with
// the elimination routines they check.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "gensol/matrix.hpp"

namespace oracle {

using gensol::Fq;
using gensol::Index;
using gensol::Matrix;

/// Leibniz expansion over all permutations.
inline Fq leibniz_det(const gensol::FiniteField& f, const Matrix& m) {
  const Index n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Fq total(f, 0);
  do {
    int inversions = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Fq term(f, 1);
    for (Index i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = (inversions % 2) ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// log_q of the number of distinct vectors in the row span, by enumerating
/// every linear combination of the rows.
inline int span_rank(const gensol::FiniteField& f, const Matrix& m) {
  const Index r = m.rows(), c = m.cols();
  std::set<std::vector<int>> span;
  std::vector<int> coeff(r, 0);
  for (;;) {
    std::vector<int> v(c);
    for (Index j = 0; j < c; ++j) {
      Fq s(f, 0);
      for (Index i = 0; i < r; ++i) s = s + Fq(f, coeff[i]) * m(i, j);
      v[j] = s.code;
    }
    span.insert(v);
    Index i = 0;
    while (i < r && ++coeff[i] == f.q()) coeff[i++] = 0;
    if (i == r) break;
  }
  int rank = 0;
  for (std::size_t size = span.size(); size > 1; size /= f.q()) ++rank;
  return rank;
}

/// Every matrix of the given shape, in lexicographic order of codes.
inline std::vector<Matrix> all_matrices(const gensol::FiniteField& f, Index rows, Index cols) {
  std::vector<Matrix> out;
  const Index cells = rows * cols;
  std::vector<int> c(cells, 0);
  for (;;) {
    Matrix m = gensol::zero_matrix(f, rows, cols);
    for (Index k = 0; k < cells; ++k) m(k / cols, k % cols) = Fq(f, c[k]);
    out.push_back(m);
    Index k = cells;
    while (k > 0 && ++c[k - 1] == f.q()) c[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline bool nonzero(Fq a) { return !a.is_zero(); }

}  // namespace oracle
