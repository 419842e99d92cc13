#include "incalg/matrix.hpp"

#include <utility>

namespace incalg {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorKind::ContextMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(ErrorKind::ContextMismatch, "vector length mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::ContextMismatch, "matrix shapes do not compose");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ContextMismatch, "matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ContextMismatch, "matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& k) const {
  Matrix out = *this;
  for (auto& s : out.data_) s *= k;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorKind::ContextMismatch, "block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorKind::ContextMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && (*this)(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
    Scalar inv = (*this)(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      Scalar f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
  if (b.size() != rows_) fail(ErrorKind::ContextMismatch, "right-hand side length mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  aug.set_block(0, 0, *this);
  for (std::size_t i = 0; i < rows_; ++i) aug(i, cols_) = b[i];
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vector x(cols_, field_.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
  return x;
}

std::vector<Vector> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_, field_.zero());
    v[free] = field_.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  aug.set_block(0, 0, *this);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = field_.one();
  auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols; ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows; ++r) std::swap(a(r, i), a(r, j));
}

// col_j -= q * col_i
void sub_col(IntMatrix& a, std::size_t j, std::size_t i, const mpz_class& q) {
  for (std::size_t r = 0; r < a.rows; ++r)
    if (a(r, i) != 0) a(r, j) -= q * a(r, i);
}

void sub_row(IntMatrix& a, std::size_t j, std::size_t i, const mpz_class& q) {
  for (std::size_t c = 0; c < a.cols; ++c)
    if (a(i, c) != 0) a(j, c) -= q * a(i, c);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows, n = a.cols;
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Pivot: entry of least absolute value in the trailing block.
    for (;;) {
      std::size_t pr = m, pc = n;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (a(r, c) != 0 && (pr == m || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == m) goto done;
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        sub_row(a, r, t, q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a(t, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        sub_col(a, c, t, q);
        sub_col(v, c, t, q);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into row t and go again.
      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == m) break;
      sub_row(a, t, bad, mpz_class(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
    }
  }
done:
  SmithForm out;
  out.diagonal.assign(n, 0);
  for (std::size_t i = 0; i < std::min(m, n); ++i) out.diagonal[i] = a(i, i);
  out.v = std::move(v);
  return out;
}

}  // namespace incalg
