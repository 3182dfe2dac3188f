#ifndef JTYPE_MATRIX_HPP
#define JTYPE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "jtype/field.hpp"

namespace jtype {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
bool is_zero_vector(const Vector& v);

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  /// Every row must have `cols` entries.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Gauss-Jordan elimination with first-nonzero pivot selection.
EchelonForm row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Incremental echelon basis of span(generators) inside K^n. Generators
/// are scanned in order; the ones that enlarge the span are "independent"
/// and serve as the coordinate basis.
class SpanSolver {
 public:
  SpanSolver(Field field, std::size_t ambient, const std::vector<Vector>& generators);

  std::size_t rank() const noexcept { return independent_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& independent() const noexcept { return independent_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  /// Remainder of v after elimination; zero at every pivot column.
  Vector reduce(Vector v) const;
  /// Coefficients of v over the independent generators, if v lies in the span.
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;        // echelon rows, pivot entry 1
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;      // rows_[j] = sum combos_[j][i] * independent generator i
  std::vector<std::size_t> independent_;
};

}  // namespace jtype

#endif
