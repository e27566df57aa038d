#pragma once

#include <cstdint>
#include <vector>

#include "gensol/matrix.hpp"

namespace gensol {

/// Bit-packed GF(2) matrix with at most 64 columns; row i is a word whose bit j
/// is entry (i, j).
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols);
  Gf2Matrix(int rows, int cols, std::vector<std::uint64_t> row_bits);
  /// Requires every entry of `m` to be 0 or 1 over GF(2).
  static Gf2Matrix from(const Matrix& m);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::uint64_t row(int i) const { return bits_[i]; }
  bool at(int i, int j) const { return (bits_[i] >> j) & 1U; }
  void set(int i, int j, bool v);

  int rank() const;
  /// 1 or 0; requires a square matrix.
  int det() const;

  Matrix to_matrix() const;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint64_t> bits_;
};

/// Rank of at most 64 row words over GF(2), destroying nothing.
int gf2_rank(std::vector<std::uint64_t> rows);

/// 4x4 GF(2) determinant of the matrix whose rows are the four nibbles of
/// `key` (row 0 in bits 0..3, bit j of a nibble = column j).
int gf2_det4(std::uint16_t key);

}  // namespace gensol
