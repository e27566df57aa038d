#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gensol/field.hpp"

namespace gensol {

using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Fq, Eigen::Dynamic, Eigen::Dynamic>;
using RowVector = Eigen::Matrix<Fq, 1, Eigen::Dynamic>;

// Construction. Every entry carries the field id, so results stay typed under
// all Eigen expressions.
Matrix zero_matrix(const FiniteField& f, Index rows, Index cols);
Matrix identity_matrix(const FiniteField& f, Index n);
/// Row-major list of field codes.
Matrix make_matrix(const FiniteField& f, Index rows, Index cols, std::initializer_list<int> codes);
Matrix make_matrix(const FiniteField& f, const std::vector<std::vector<int>>& rows);
RowVector make_row(const FiniteField& f, std::initializer_list<int> codes);
/// Re-tags untyped literal entries with `f`.
Matrix stamp(const FiniteField& f, Matrix m);

/// First field found among the entries, or nullptr if all entries are untyped.
const FiniteField* field_of(const Matrix& m);

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
/// [[a, b], [c, d]]
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

Fq det(const Matrix& m);
Index rank(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const FiniteField& f, const Matrix& m);

struct RankNormalForm {
  Matrix X;  // invertible, rows x rows
  Matrix Y;  // invertible, cols x cols
  Index rank = 0;
};

/// X * m * Y == diag(I_rank, 0).
RankNormalForm rank_normal_form(const FiniteField& f, const Matrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
Matrix rref(const Matrix& m, std::vector<Index>* pivots = nullptr);

/// Vector number `index` in lexicographic order of F^n (first coordinate most
/// significant).
RowVector vector_at(const FiniteField& f, Index n, std::uint64_t index);
std::uint64_t vector_count(const FiniteField& f, Index n);

/// True if v lies in the row span of `rows`.
bool in_row_span(const Matrix& rows, const RowVector& v);
/// Rows to append to the independent rows of `rows` (n columns) to obtain a
/// basis of F^n, picked greedily from the standard basis e_1, ..., e_n.
Matrix basis_extension(const FiniteField& f, const Matrix& rows, Index n);

/// Matrix text format: "q r c" then r lines of c integers. q is written as
/// "p^e" for extension fields and as a plain integer for prime fields.
struct TextMatrix {
  const FiniteField* field = nullptr;
  Matrix value;
};
TextMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const FiniteField& f, const Matrix& m);
std::string field_label(const FiniteField& f);
const FiniteField& parse_field_label(const std::string& label);

/// Integer codes, row-major, for JSON and hashing.
std::vector<int> codes(const Matrix& m);

}  // namespace gensol
