#pragma once

// Small dense real linear algebra. Matrices here are at most a few dozen
// rows, so everything is plain row-major storage and O(n^3) algorithms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pingpong/error.hpp"

namespace pingpong::numkit {

inline constexpr double kDefaultTol = 1e-9;

template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  BasicMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::InputError, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  template <class U>
  static BasicMatrix from(const BasicMatrix<U>& other) {
    BasicMatrix out(other.rows(), other.cols());
    for (std::size_t i = 0; i < other.rows(); ++i)
      for (std::size_t j = 0; j < other.cols(); ++j) out(i, j) = T(other(i, j));
    return out;
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  void set_col(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  BasicMatrix transpose() const {
    BasicMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Columns [first, first + count).
  BasicMatrix cols_slice(std::size_t first, std::size_t count) const {
    BasicMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  BasicMatrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(BasicMatrix a, const T& s) { return a *= s; }
  friend BasicMatrix operator*(const T& s, BasicMatrix a) { return a *= s; }
  friend BasicMatrix operator-(BasicMatrix a) { return a *= T(-1); }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InputError, "matrix product shape mismatch");
    BasicMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const BasicMatrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error(ErrorCode::InputError, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

 private:
  void check_same(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::InputError, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using Vector = std::vector<double>;

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InputError, "dot: dimension mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T norm(const std::vector<T>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

template <class T>
T frobenius_norm(const BasicMatrix<T>& m) {
  using std::sqrt;
  T s(0);
  for (const auto& x : m.data()) s += x * x;
  return sqrt(s);
}

template <class T>
T max_abs(const BasicMatrix<T>& m) {
  using std::abs;
  T s(0);
  for (const auto& x : m.data()) s = std::max<T>(s, abs(x));
  return s;
}

/// [a | b]
template <class T>
BasicMatrix<T> hcat(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InputError, "hcat: row mismatch");
  BasicMatrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

template <class T>
BasicMatrix<T> from_columns(const std::vector<std::vector<T>>& columns) {
  if (columns.empty()) return {};
  BasicMatrix<T> out(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) out.set_col(j, columns[j]);
  return out;
}

/// LU factorization with partial pivoting; templated so the extended
/// precision orbit code can share it.
template <class T>
class LU {
 public:
  explicit LU(BasicMatrix<T> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    using std::abs;
    if (!lu_.square()) throw Error(ErrorCode::InputError, "LU of non-square matrix");
    const std::size_t n = lu_.rows();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    T scale = max_abs(lu_);
    if (scale == T(0)) throw Error(ErrorCode::Singular, "zero matrix");
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (abs(lu_(i, k)) > abs(lu_(p, k))) p = i;
      if (abs(lu_(p, k)) <= scale * T(1e-14)) throw Error(ErrorCode::Singular, "matrix is singular");
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
        std::swap(perm_[p], perm_[k]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        lu_(i, k) /= lu_(k, k);
        const T f = lu_(i, k);
        if (f == T(0)) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  std::vector<T> solve(const std::vector<T>& b) const {
    const std::size_t n = lu_.rows();
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_(ii, j) * x[j];
      x[ii] /= lu_(ii, ii);
    }
    return x;
  }

  BasicMatrix<T> solve(const BasicMatrix<T>& b) const {
    BasicMatrix<T> out(b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) out.set_col(j, solve(b.col(j)));
    return out;
  }

  BasicMatrix<T> inverse() const { return solve(BasicMatrix<T>::identity(lu_.rows())); }

 private:
  BasicMatrix<T> lu_;
  std::vector<std::size_t> perm_;
};

template <class T>
BasicMatrix<T> inverse(const BasicMatrix<T>& a) {
  return LU<T>(a).inverse();
}

/// Modified Gram-Schmidt on the columns, run twice for stability. Columns
/// must be linearly independent.
template <class T>
BasicMatrix<T> orthonormalize_columns(const BasicMatrix<T>& a) {
  BasicMatrix<T> q = a;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < q.cols(); ++j) {
      auto v = q.col(j);
      for (std::size_t k = 0; k < j; ++k) {
        const auto u = q.col(k);
        const T c = dot(u, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
      const T nv = norm(v);
      if (nv == T(0)) throw Error(ErrorCode::NotASubspaceBasis, "dependent columns");
      for (auto& x : v) x /= nv;
      q.set_col(j, v);
    }
  }
  return q;
}

// ---------------------------------------------------------------------------
// Symmetric matrices.

class SymMatrix {
 public:
  SymMatrix() = default;
  /// Symmetrizes the input: entries become (A + A^T) / 2.
  explicit SymMatrix(const Matrix& a);
  static SymMatrix zeros(std::size_t n) { return SymMatrix(Matrix(n, n)); }
  static SymMatrix diagonal(const std::vector<double>& d);

  std::size_t n() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.m_ - b.m_); }
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.m_ + b.m_); }

 private:
  Matrix m_;
};

/// Congruence A^T S A.
SymMatrix congruence(const SymMatrix& s, const Matrix& a);

struct Signature {
  int pos = 0;
  int zero = 0;
  int neg = 0;
  int k() const noexcept { return pos - neg; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Eigensystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column i pairs with values[i]
};

Eigensystem sym_eig(const SymMatrix& s);

Signature signature(const SymMatrix& s, double tol = kDefaultTol);

/// Numerical rank from Householder QR with column pivoting; a diagonal entry
/// of R counts when it exceeds tol * max(1, ||M||_F).
int rank(const Matrix& m, double tol = kDefaultTol);

/// Orthonormal basis of the column span (rank decided as in rank()).
Matrix column_space(const Matrix& m, double tol = kDefaultTol);

/// Orthonormal basis of {x : M x = 0}.
Matrix null_space(const Matrix& m, double tol = kDefaultTol);

/// Lower-triangular L with L L^T = S; throws NotPositiveDefinite.
Matrix cholesky(const SymMatrix& s);

/// Eigenvalues (ascending) of A x = lambda B x for B positive definite.
std::vector<double> generalized_sym_eigenvalues(const SymMatrix& a, const SymMatrix& b);

void require_finite(const Matrix& m, const char* what);

}  // namespace pingpong::numkit
