#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nilcohom/scalar.hpp"

namespace nilcohom {

/// Dense matrix of Gaussian rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in +");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in -");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix out = m;
    for (auto& v : out.data_) v *= c;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Conjugate transpose.
  Matrix adjoint_transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
  }

  Matrix conj() const {
    Matrix out = *this;
    for (auto& v : out.data_) v = v.conj();
    return out;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix: apply size");
    std::vector<Scalar> y(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  std::vector<Scalar> row(int r) const {
    std::vector<Scalar> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
    return out;
  }
  std::vector<Scalar> col(int c) const {
    std::vector<Scalar> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
  }

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols)
        throw std::invalid_argument("Matrix: ragged rows");
      for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
  }

  /// Vertical stack [this; other].
  Matrix stack(const Matrix& other) const {
    if (cols_ != other.cols_ && other.rows_ != 0 && rows_ != 0)
      throw std::invalid_argument("Matrix: stack width mismatch");
    const int w = rows_ == 0 ? other.cols_ : cols_;
    Matrix out(rows_ + other.rows_, w);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (int i = 0; i < other.rows_; ++i)
      for (int j = 0; j < other.cols_; ++j) out(rows_ + i, j) = other(i, j);
    return out;
  }

  /// Horizontal concatenation [this | other].
  Matrix concat(const Matrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("Matrix: concat height mismatch");
    Matrix out(rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
      for (int j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/// Result of reduced row-echelon elimination.
struct Echelon {
  Matrix rref;                  // nonzero rows only, pivots normalized to 1
  std::vector<int> pivot_cols;  // strictly increasing
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

namespace detail {

// Clears denominators row-wise so every entry is a Gaussian integer.
inline void clear_row_denominators(std::vector<std::vector<Scalar>>& rows) {
  for (auto& row : rows) {
    Integer l = 1;
    for (const auto& v : row) {
      l = lcm(l, denominator(v.re));
      l = lcm(l, denominator(v.im));
    }
    if (l == 1) continue;
    const Scalar f{Rational(l)};
    for (auto& v : row) v *= f;
  }
}

}  // namespace detail

/// Reduced row echelon form via fraction-free (Bareiss) forward elimination
/// over Gaussian integers, with a single rational normalization pass at the
/// end. The RREF of a matrix is unique, so Subspace equality reduces to
/// matrix equality.
inline Echelon rref(const Matrix& m) {
  const int nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Scalar>> rows(nr);
  for (int i = 0; i < nr; ++i) rows[i] = m.row(i);
  detail::clear_row_denominators(rows);

  std::vector<int> pivots;
  Scalar prev_pivot(1);
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int sel = -1;
    for (int i = r; i < nr; ++i) {
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar pivot = rows[r][c];
    for (int i = r + 1; i < nr; ++i) {
      const Scalar f = rows[i][c];
      for (int j = 0; j < nc; ++j) {
        // Bareiss one-step: exact division by the previous pivot
        rows[i][j] = (pivot * rows[i][j] - f * rows[r][j]) / prev_pivot;
      }
    }
    prev_pivot = pivot;
    pivots.push_back(c);
    ++r;
  }

  const int rank = static_cast<int>(pivots.size());
  // back-substitute and normalize pivots to 1
  for (int i = rank - 1; i >= 0; --i) {
    const int pc = pivots[i];
    const Scalar inv = Scalar(1) / rows[i][pc];
    for (int j = 0; j < nc; ++j) rows[i][j] *= inv;
    for (int k = 0; k < i; ++k) {
      const Scalar f = rows[k][pc];
      if (f.is_zero()) continue;
      for (int j = 0; j < nc; ++j) rows[k][j] -= f * rows[i][j];
    }
  }

  Echelon out;
  out.pivot_cols = pivots;
  out.rref = Matrix(rank, nc);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < nc; ++j) out.rref(i, j) = rows[i][j];
  return out;
}

inline int rank(const Matrix& m) { return rref(m).rank(); }

/// Exact determinant by fraction-free elimination.
inline Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  const int n = m.rows();
  if (n == 0) return Scalar(1);
  std::vector<std::vector<Scalar>> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = m.row(i);
  Scalar prev(1);
  Scalar sign(1);
  for (int c = 0; c < n - 1; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Scalar(0);
    if (sel != c) {
      std::swap(rows[sel], rows[c]);
      sign = -sign;
    }
    const Scalar pivot = rows[c][c];
    for (int i = c + 1; i < n; ++i) {
      const Scalar f = rows[i][c];
      for (int j = c; j < n; ++j) rows[i][j] = (pivot * rows[i][j] - f * rows[c][j]) / prev;
    }
    prev = pivot;
  }
  return sign * rows[n - 1][n - 1];
}

/// Canonical subspace of an ambient coordinate space: the spanning set is
/// stored in reduced echelon form, so equal subspaces have equal
/// representations.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `vectors`.
  static Subspace span_rows(const Matrix& vectors, int ambient) {
    if (vectors.rows() > 0 && vectors.cols() != ambient)
      throw std::invalid_argument("Subspace: ambient mismatch");
    Subspace s(ambient);
    s.basis_ = rref(vectors).rref;
    return s;
  }

  /// Span of the columns of `m` (the image of the operator m).
  static Subspace span_cols(const Matrix& m) { return span_rows(m.transpose(), m.rows()); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  /// Basis rows in reduced echelon form.
  const Matrix& basis() const { return basis_; }

  std::vector<int> pivot_cols() const {
    std::vector<int> out;
    for (int i = 0; i < basis_.rows(); ++i)
      for (int j = 0; j < basis_.cols(); ++j)
        if (!basis_(i, j).is_zero()) {
          out.push_back(j);
          break;
        }
    return out;
  }

  bool contains(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("Subspace: vector ambient mismatch");
    std::vector<Scalar> w = v;
    // reduce against the echelon basis
    for (int i = 0; i < basis_.rows(); ++i) {
      int pc = -1;
      for (int j = 0; j < ambient_; ++j)
        if (!basis_(i, j).is_zero()) {
          pc = j;
          break;
        }
      if (pc < 0) continue;
      const Scalar f = w[pc];
      if (f.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_(i, j);
    }
    for (const auto& x : w)
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (int i = 0; i < other.basis_.rows(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    return span_rows(a.basis_.stack(b.basis_), a.ambient_);
  }

  /// Zassenhaus: row-reduce [A | A; B | 0]; rows with zero left half carry
  /// an intersection basis in the right half.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    const int n = a.ambient_;
    const Matrix top = a.basis_.concat(a.basis_);
    const Matrix bottom = b.basis_.concat(Matrix(b.basis_.rows(), n));
    const Echelon e = rref(top.stack(bottom));
    std::vector<std::vector<Scalar>> inter_rows;
    for (int i = 0; i < e.rref.rows(); ++i) {
      bool left_zero = true;
      for (int j = 0; j < n; ++j)
        if (!e.rref(i, j).is_zero()) {
          left_zero = false;
          break;
        }
      if (!left_zero) continue;
      std::vector<Scalar> v(n);
      for (int j = 0; j < n; ++j) v[j] = e.rref(i, n + j);
      inter_rows.push_back(std::move(v));
    }
    return span_rows(Matrix::from_rows(inter_rows, n), n);
  }

 private:
  int ambient_;
  Matrix basis_;
};

/// dim U - dim V for V a verified subspace of U.
inline int quotient_dim(const Subspace& U, const Subspace& V) {
  if (!U.contains(V)) throw std::invalid_argument("quotient_dim: V is not contained in U");
  return U.dim() - V.dim();
}

inline Subspace kernel(const Matrix& m) {
  const Echelon e = rref(m);
  const int nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> rows;
  for (int c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(nc);
    v[c] = Scalar(1);
    for (int i = 0; i < e.rank(); ++i) v[e.pivot_cols[i]] = -e.rref(i, c);
    rows.push_back(std::move(v));
  }
  return Subspace::span_rows(Matrix::from_rows(rows, nc), nc);
}

inline Subspace image(const Matrix& m) { return Subspace::span_cols(m); }

/// Solves A x = b exactly; nullopt when inconsistent. When the system is
/// underdetermined the free variables are set to zero.
inline std::optional<std::vector<Scalar>> solve(const Matrix& A, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix aug = A.concat(Matrix::from_rows({b}, A.rows()).transpose());
  const Echelon e = rref(aug);
  const int n = A.cols();
  std::vector<Scalar> x(n);
  for (int i = 0; i < e.rank(); ++i) {
    const int pc = e.pivot_cols[i];
    if (pc == n) return std::nullopt;  // pivot in the augmented column
    x[pc] = e.rref(i, n);
  }
  return x;
}

/// Exact inverse; throws on singular input.
inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  const int n = m.rows();
  const Echelon e = rref(m.concat(Matrix::identity(n)));
  if (e.rank() != n || e.pivot_cols != [&] {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return v;
      }())
    throw std::invalid_argument("inverse: singular matrix");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = e.rref(i, n + j);
  return out;
}

}  // namespace nilcohom
