#include "gensol/gf2.hpp"

#include <array>
#include <utility>

namespace gensol {

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(rows, 0) {
  if (cols > 64) throw Error(ErrorCode::TooLarge, "Gf2Matrix supports at most 64 columns");
}

Gf2Matrix::Gf2Matrix(int rows, int cols, std::vector<std::uint64_t> row_bits)
    : rows_(rows), cols_(cols), bits_(std::move(row_bits)) {
  if (cols > 64) throw Error(ErrorCode::TooLarge, "Gf2Matrix supports at most 64 columns");
  if (static_cast<int>(bits_.size()) != rows) throw Error(ErrorCode::DimensionMismatch, "row count");
}

Gf2Matrix Gf2Matrix::from(const Matrix& m) {
  const FiniteField* f = field_of(m);
  if (f && f->q() != 2) throw Error(ErrorCode::FieldMismatch, "Gf2Matrix needs GF(2) entries");
  Gf2Matrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).code > 1) throw Error(ErrorCode::FieldMismatch, "entry is not in GF(2)");
      out.set(static_cast<int>(i), static_cast<int>(j), m(i, j).code == 1);
    }
  return out;
}

void Gf2Matrix::set(int i, int j, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << j;
  bits_[i] = v ? (bits_[i] | mask) : (bits_[i] & ~mask);
}

int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t pivot = rows[i];
    if (!pivot) continue;
    ++rank;
    const std::uint64_t low = pivot & (~pivot + 1);
    for (std::size_t k = i + 1; k < rows.size(); ++k)
      if (rows[k] & low) rows[k] ^= pivot;
  }
  return rank;
}

int Gf2Matrix::rank() const { return gf2_rank(bits_); }

int Gf2Matrix::det() const {
  if (rows_ != cols_) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  return rank() == rows_ ? 1 : 0;
}

Matrix Gf2Matrix::to_matrix() const {
  const FiniteField& f = FiniteField::get(2);
  Matrix m = zero_matrix(f, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j)) m(i, j) = Fq(f, 1);
  return m;
}

int gf2_det4(std::uint16_t key) {
  static const std::array<std::uint8_t, 65536> table = [] {
    std::array<std::uint8_t, 65536> t{};
    for (std::uint32_t k = 0; k < 65536; ++k) {
      std::vector<std::uint64_t> rows{k & 15U, (k >> 4) & 15U, (k >> 8) & 15U, (k >> 12) & 15U};
      t[k] = gf2_rank(std::move(rows)) == 4 ? 1 : 0;
    }
    return t;
  }();
  return table[key];
}

}  // namespace gensol
