#include "gensol/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace gensol {

Matrix zero_matrix(const FiniteField& f, Index rows, Index cols) {
  return Matrix::Constant(rows, cols, Fq(f, 0));
}

Matrix identity_matrix(const FiniteField& f, Index n) {
  Matrix m = zero_matrix(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Fq(f, 1);
  return m;
}

Matrix make_matrix(const FiniteField& f, Index rows, Index cols, std::initializer_list<int> codes) {
  if (static_cast<Index>(codes.size()) != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  Matrix m(rows, cols);
  auto it = codes.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      if (*it < 0 || *it >= f.q()) throw Error(ErrorCode::ParseError, "entry out of range");
      m(i, j) = Fq(f, *it++);
    }
  return m;
}

Matrix make_matrix(const FiniteField& f, const std::vector<std::vector<int>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.front().size()) : 0;
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (Index j = 0; j < c; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v >= f.q()) throw Error(ErrorCode::ParseError, "entry out of range");
      m(i, j) = Fq(f, v);
    }
  }
  return m;
}

RowVector make_row(const FiniteField& f, std::initializer_list<int> codes) {
  RowVector v(static_cast<Index>(codes.size()));
  Index j = 0;
  for (int c : codes) v(j++) = Fq(f, c);
  return v;
}

Matrix stamp(const FiniteField& f, Matrix m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j).field = f.id();
  return m;
}

const FiniteField* field_of(const Matrix& m) {
  for (Index i = 0; i < m.size(); ++i)
    if (m.data()[i].field) return m.data()[i].field_ptr();
  return nullptr;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hcat row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(b.cols()) = b;
  return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vcat column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.topRows(a.rows()) = a;
  m.bottomRows(b.rows()) = b;
  return m;
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  return vcat(hcat(a, b), hcat(c, d));
}

Matrix rref(const Matrix& input, std::vector<Index>* pivots) {
  Matrix m = input;
  if (pivots) pivots->clear();
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.row(row).swap(m.row(piv));
    const Fq scale = inverse(m(row, col));
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= scale;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Fq factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

Index rank(const Matrix& input) {
  Matrix m = input;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.row(row).swap(m.row(piv));
    const Fq scale = inverse(m(row, col));
    for (Index i = row + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Fq factor = m(i, col) * scale;
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    ++row;
  }
  return row;
}

Fq det(const Matrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  const Index n = input.rows();
  if (n == 0) return Fq(1);
  Matrix m = input;
  const FiniteField* f = field_of(input);
  Fq result = f ? Fq(*f, 1) : Fq(1);
  for (Index col = 0; col < n; ++col) {
    Index piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return f ? Fq(*f, 0) : Fq(0);
    if (piv != col) {
      m.row(col).swap(m.row(piv));
      result = -result;
    }
    result *= m(col, col);
    const Fq scale = inverse(m(col, col));
    for (Index i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Fq factor = m(i, col) * scale;
      for (Index j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return result;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const FiniteField& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  const Index n = m.rows();
  std::vector<Index> pivots;
  const Matrix r = rref(hcat(stamp(f, m), identity_matrix(f, n)), &pivots);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n))
    throw Error(ErrorCode::PreconditionViolated, "matrix is singular");
  return r.rightCols(n);
}

RankNormalForm rank_normal_form(const FiniteField& f, const Matrix& input) {
  const Index r = input.rows();
  const Index c = input.cols();
  const Matrix m = stamp(f, input);

  // Row reduction recorded on an identity block: [m | I] -> [E | X].
  std::vector<Index> pivots;
  const Matrix aug = rref(hcat(m, identity_matrix(f, r)), &pivots);
  // Pivots that fall into the identity block belong to zero rows of E.
  Index rk = 0;
  while (rk < static_cast<Index>(pivots.size()) && pivots[rk] < c) ++rk;

  RankNormalForm out;
  out.rank = rk;
  out.X = aug.rightCols(r);
  Matrix e = aug.leftCols(c);
  Matrix y = identity_matrix(f, c);

  // Clear the non-pivot entries of each pivot row with column operations.
  for (Index i = 0; i < rk; ++i) {
    const Index p = pivots[i];
    for (Index j = 0; j < c; ++j) {
      if (j == p || e(i, j).is_zero()) continue;
      const Fq factor = e(i, j);
      e.col(j) -= factor * e.col(p);
      y.col(j) -= factor * y.col(p);
    }
  }
  // Move pivot columns to the front, preserving order.
  std::vector<Index> order(pivots.begin(), pivots.begin() + rk);
  for (Index j = 0; j < c; ++j) {
    bool is_pivot = false;
    for (Index i = 0; i < rk; ++i) is_pivot = is_pivot || pivots[i] == j;
    if (!is_pivot) order.push_back(j);
  }
  out.Y = Matrix(c, c);
  for (Index j = 0; j < c; ++j) out.Y.col(j) = y.col(order[j]);
  return out;
}

std::uint64_t vector_count(const FiniteField& f, Index n) {
  std::uint64_t total = 1;
  for (Index i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(f.q());
  return total;
}

RowVector vector_at(const FiniteField& f, Index n, std::uint64_t index) {
  RowVector v(n);
  for (Index j = n - 1; j >= 0; --j) {
    v(j) = Fq(f, static_cast<int>(index % f.q()));
    index /= f.q();
  }
  return v;
}

bool in_row_span(const Matrix& rows, const RowVector& v) {
  if (rows.rows() == 0) {
    for (Index j = 0; j < v.size(); ++j)
      if (!v(j).is_zero()) return false;
    return true;
  }
  Matrix stacked(rows.rows() + 1, rows.cols());
  stacked.topRows(rows.rows()) = rows;
  stacked.row(rows.rows()) = v;
  return rank(stacked) == rank(rows);
}

Matrix basis_extension(const FiniteField& f, const Matrix& rows, Index n) {
  Matrix current = rows.rows() ? rows : zero_matrix(f, 0, n);
  Index rk = rank(current);
  Matrix extra = zero_matrix(f, 0, n);
  for (Index j = 0; j < n && rk < n; ++j) {
    RowVector e = zero_matrix(f, 1, n);
    e(j) = Fq(f, 1);
    Matrix trial = vcat(current, e);
    if (rank(trial) > rk) {
      current = std::move(trial);
      extra = vcat(extra, e);
      ++rk;
    }
  }
  return extra;
}

std::string field_label(const FiniteField& f) {
  if (f.e() == 1) return std::to_string(f.p());
  return std::to_string(f.p()) + "^" + std::to_string(f.e());
}

const FiniteField& parse_field_label(const std::string& label) {
  const auto caret = label.find('^');
  try {
    std::size_t used = 0;
    if (caret == std::string::npos) {
      const int q = std::stoi(label, &used);
      if (used != label.size()) throw Error(ErrorCode::ParseError, "bad field order '" + label + "'");
      return FiniteField::by_order(q);
    }
    const std::string ps = label.substr(0, caret);
    const std::string es = label.substr(caret + 1);
    const int p = std::stoi(ps, &used);
    if (used != ps.size()) throw Error(ErrorCode::ParseError, "bad field order '" + label + "'");
    const int e = std::stoi(es, &used);
    if (used != es.size()) throw Error(ErrorCode::ParseError, "bad field order '" + label + "'");
    return FiniteField::get(p, e);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad field order '" + label + "'");
  }
}

TextMatrix read_matrix(std::istream& in) {
  std::string q_label;
  long long r = -1;
  long long c = -1;
  if (!(in >> q_label >> r >> c) || r < 0 || c < 0)
    throw Error(ErrorCode::ParseError, "expected matrix header 'q r c'");
  TextMatrix out;
  out.field = &parse_field_label(q_label);
  out.value = zero_matrix(*out.field, r, c);
  for (long long i = 0; i < r; ++i)
    for (long long j = 0; j < c; ++j) {
      long long v = -1;
      if (!(in >> v)) throw Error(ErrorCode::ParseError, "truncated matrix body");
      if (v < 0 || v >= out.field->q()) throw Error(ErrorCode::ParseError, "entry out of range");
      out.value(i, j) = Fq(*out.field, static_cast<int>(v));
    }
  return out;
}

void write_matrix(std::ostream& out, const FiniteField& f, const Matrix& m) {
  out << field_label(f) << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << static_cast<int>(m(i, j).code);
    }
    out << '\n';
  }
}

std::vector<int> codes(const Matrix& m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j).code);
  return out;
}

}  // namespace gensol
