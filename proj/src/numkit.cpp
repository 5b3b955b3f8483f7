#include "pingpong/numkit.hpp"

#include <numeric>

namespace pingpong {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InputError: return "InputError";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotASubspaceBasis: return "NotASubspaceBasis";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::DegenerateDifference: return "DegenerateDifference";
    case ErrorCode::NonPositiveLine: return "NonPositiveLine";
    case ErrorCode::NotInInterval: return "NotInInterval";
    case ErrorCode::NonReducedWord: return "NonReducedWord";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ContractionViolation: return "ContractionViolation";
    case ErrorCode::NeedLongerPrefix: return "NeedLongerPrefix";
    case ErrorCode::InvalidDomainData: return "InvalidDomainData";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace pingpong

namespace pingpong::numkit {

void require_finite(const Matrix& m, const char* what) {
  for (double x : m.data())
    if (!std::isfinite(x)) throw Error(ErrorCode::InputError, std::string(what) + ": non-finite entry");
}

SymMatrix::SymMatrix(const Matrix& a) : m_(a) {
  if (!a.square()) throw Error(ErrorCode::InputError, "symmetric matrix must be square");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      m_(i, j) = avg;
      m_(j, i) = avg;
    }
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymMatrix(m);
}

SymMatrix congruence(const SymMatrix& s, const Matrix& a) {
  return SymMatrix(a.transpose() * s.matrix() * a);
}

Eigensystem sym_eig(const SymMatrix& s) {
  const std::size_t n = s.n();
  if (n == 0) throw Error(ErrorCode::InputError, "sym_eig of empty matrix");
  require_finite(s.matrix(), "sym_eig");

  Matrix a = s.matrix();
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);

  // Cyclic Jacobi sweeps until the off-diagonal norm is negligible.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= 1e-12 * scale || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Eigensystem out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Signature signature(const SymMatrix& s, double tol) {
  const auto eig = sym_eig(s);
  double spectral = 0.0;
  for (double x : eig.values) spectral = std::max(spectral, std::abs(x));
  const double thresh = tol * std::max(1.0, spectral);
  Signature sig;
  for (double x : eig.values) {
    if (x > thresh) ++sig.pos;
    else if (x < -thresh) ++sig.neg;
    else ++sig.zero;
  }
  return sig;
}

namespace {

struct PivotedQR {
  Matrix q;                      // m x m orthogonal
  Matrix r;                      // m x n upper triangular (after pivoting)
  std::vector<std::size_t> piv;  // column permutation
};

PivotedQR householder_qr(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  PivotedQR out{Matrix::identity(rows), m, std::vector<std::size_t>(cols)};
  std::iota(out.piv.begin(), out.piv.end(), 0);
  Matrix& r = out.r;
  Matrix& q = out.q;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t best = k;
    double best_norm = -1.0;
    for (std::size_t j = k; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < rows; ++i) s += r(i, j) * r(i, j);
      if (s > best_norm) {
        best_norm = s;
        best = j;
      }
    }
    if (best != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(r(i, best), r(i, k));
      std::swap(out.piv[best], out.piv[k]);
    }

    std::vector<double> v(rows - k);
    for (std::size_t i = k; i < rows; ++i) v[i - k] = r(i, k);
    const double alpha = norm(v);
    if (alpha == 0.0) continue;
    v[0] += (v[0] >= 0 ? alpha : -alpha);
    const double vnorm2 = dot(v, v);
    if (vnorm2 == 0.0) continue;

    for (std::size_t j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < rows; ++i) s += v[i - k] * r(i, j);
      s = 2.0 * s / vnorm2;
      for (std::size_t i = k; i < rows; ++i) r(i, j) -= s * v[i - k];
    }
    // Accumulate Q = H_0 H_1 ... by applying H_k on the right.
    for (std::size_t i = 0; i < rows; ++i) {
      double s = 0.0;
      for (std::size_t l = k; l < rows; ++l) s += q(i, l) * v[l - k];
      s = 2.0 * s / vnorm2;
      for (std::size_t l = k; l < rows; ++l) q(i, l) -= s * v[l - k];
    }
  }
  return out;
}

int rank_from_r(const Matrix& r, double thresh) {
  int rk = 0;
  const std::size_t steps = std::min(r.rows(), r.cols());
  for (std::size_t k = 0; k < steps; ++k)
    if (std::abs(r(k, k)) > thresh) ++rk;
  return rk;
}

}  // namespace

int rank(const Matrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  require_finite(m, "rank");
  const auto qr = householder_qr(m);
  return rank_from_r(qr.r, tol * std::max(1.0, frobenius_norm(m)));
}

Matrix column_space(const Matrix& m, double tol) {
  require_finite(m, "column_space");
  const auto qr = householder_qr(m);
  const int rk = rank_from_r(qr.r, tol * std::max(1.0, frobenius_norm(m)));
  return qr.q.cols_slice(0, static_cast<std::size_t>(rk));
}

Matrix null_space(const Matrix& m, double tol) {
  require_finite(m, "null_space");
  // null(M) is the orthogonal complement of range(M^T).
  const Matrix mt = m.transpose();
  const auto qr = householder_qr(mt);
  const int rk = rank_from_r(qr.r, tol * std::max(1.0, frobenius_norm(m)));
  return qr.q.cols_slice(static_cast<std::size_t>(rk), mt.rows() - static_cast<std::size_t>(rk));
}

Matrix cholesky(const SymMatrix& s) {
  const std::size_t n = s.n();
  require_finite(s.matrix(), "cholesky");
  Matrix l(n, n);
  const double scale = std::max(1.0, max_abs(s.matrix()));
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 1e-14 * scale)) throw Error(ErrorCode::NotPositiveDefinite, "cholesky pivot not positive");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double x = s(i, j);
      for (std::size_t k = 0; k < j; ++k) x -= l(i, k) * l(j, k);
      l(i, j) = x / l(j, j);
    }
  }
  return l;
}

std::vector<double> generalized_sym_eigenvalues(const SymMatrix& a, const SymMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::InputError, "generalized eigenproblem: size mismatch");
  const Matrix l = cholesky(b);
  const Matrix linv = inverse(l);
  return sym_eig(SymMatrix(linv * a.matrix() * linv.transpose())).values;
}

}  // namespace pingpong::numkit
