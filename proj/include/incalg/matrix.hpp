#ifndef INCALG_MATRIX_HPP
#define INCALG_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "incalg/scalar.hpp"

namespace incalg {

using Vector = std::vector<Scalar>;

/// Dense matrix over a Field. A linear map is stored with column j holding
/// the image of basis vector j.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& k) const;
  Matrix transpose() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;

  std::size_t rank() const;
  /// Some x with A x = b, or nullopt when inconsistent.
  std::optional<Vector> solve(const Vector& b) const;
  /// A basis of the null space.
  std::vector<Vector> kernel() const;
  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Integer matrix with arbitrary-precision entries.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  mpz_class& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Smith normal form S = U A V. Only V is tracked.
struct SmithForm {
  /// One entry per column of A: d_1 | d_2 | ... nonnegative, then zeros for
  /// the columns beyond the rank.
  std::vector<mpz_class> diagonal;
  IntMatrix v;  // cols x cols, unimodular
};

SmithForm smith_normal_form(IntMatrix a);

}  // namespace incalg

#endif
