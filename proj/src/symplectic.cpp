#include "pingpong/symplectic.hpp"

#include <cmath>

namespace pingpong::symp {

using numkit::frobenius_norm;
using numkit::max_abs;

Matrix omega_matrix(std::size_t n) {
  Matrix w(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, n + i) = 1.0;
    w(n + i, i) = -1.0;
  }
  return w;
}

Matrix complex_structure(std::size_t n) { return omega_matrix(n).transpose(); }

double omega(const Vector& u, const Vector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw Error(ErrorCode::InputError, "omega: vectors must share an even dimension");
  const std::size_t n = u.size() / 2;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += u[i] * v[n + i] - u[n + i] * v[i];
  return s;
}

// Lagrangian ------------------------------------------------------------------

Lagrangian Lagrangian::from_matrix(const Matrix& m, double tol) {
  if (m.rows() != 2 * m.cols() || m.cols() == 0)
    throw Error(ErrorCode::InputError, "Lagrangian basis must be 2n x n");
  numkit::require_finite(m, "Lagrangian basis");
  const std::size_t n = m.cols();
  Matrix q = numkit::column_space(m, tol);
  if (q.cols() != n)
    throw Error(ErrorCode::NotASubspaceBasis, "basis has rank " + std::to_string(q.cols()) + " < " + std::to_string(n));
  const double iso = max_abs(Matrix(q.transpose() * omega_matrix(n) * q));
  if (iso > kIsotropyTol)
    throw Error(ErrorCode::NotIsotropic, "|B^T Omega B| = " + std::to_string(iso));
  return Lagrangian(std::move(q));
}

Lagrangian Lagrangian::p0(std::size_t n) {
  Matrix b(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) b(i, i) = 1.0;
  return Lagrangian(std::move(b));
}

Lagrangian Lagrangian::q_inf(std::size_t n) {
  Matrix b(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) b(n + i, i) = 1.0;
  return Lagrangian(std::move(b));
}

Lagrangian Lagrangian::trusted(Matrix orthonormal_basis) { return Lagrangian(std::move(orthonormal_basis)); }

Matrix Lagrangian::projector() const { return basis_ * basis_.transpose(); }

double grassmann_gap(const Lagrangian& a, const Lagrangian& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::InputError, "grassmann_gap: dimension mismatch");
  return frobenius_norm(Matrix(a.projector() - b.projector())) / std::sqrt(2.0);
}

// Symplectic maps -------------------------------------------------------------

std::optional<MapKind> classify_map(const Matrix& m, double tol) {
  if (!m.square() || m.rows() % 2 != 0) return std::nullopt;
  for (double x : m.data())
    if (!std::isfinite(x)) return std::nullopt;
  const std::size_t n = m.rows() / 2;
  const Matrix w = omega_matrix(n);
  const Matrix pull = m.transpose() * w * m;
  const double scale = tol * std::max(1.0, max_abs(m) * max_abs(m));
  if (max_abs(Matrix(pull - w)) <= scale) return MapKind::Symplectic;
  if (max_abs(Matrix(pull + w)) <= scale) return MapKind::Antisymplectic;
  return std::nullopt;
}

SymplecticMap SymplecticMap::from_matrix(const Matrix& m, double tol) {
  const auto kind = classify_map(m, tol);
  if (!kind) throw Error(ErrorCode::InputError, "matrix neither preserves nor negates omega");
  return SymplecticMap(m, numkit::inverse(m), *kind);
}

SymplecticMap SymplecticMap::identity(std::size_t n) {
  return SymplecticMap(Matrix::identity(2 * n), Matrix::identity(2 * n), MapKind::Symplectic);
}

SymplecticMap SymplecticMap::unchecked(const Matrix& m, MapKind kind) {
  if (!m.square() || m.rows() % 2 != 0) throw Error(ErrorCode::InputError, "map must be 2n x 2n");
  return SymplecticMap(m, numkit::inverse(m), kind);
}

SymplecticMap SymplecticMap::inverse() const { return SymplecticMap(inv_, m_, kind_); }

SymplecticMap SymplecticMap::compose(const SymplecticMap& right) const {
  const MapKind k = (kind_ == right.kind_) ? MapKind::Symplectic : MapKind::Antisymplectic;
  return SymplecticMap(m_ * right.m_, right.inv_ * inv_, k);
}

Lagrangian SymplecticMap::apply(const Lagrangian& l) const {
  return Lagrangian::trusted(numkit::orthonormalize_columns(Matrix(m_ * l.basis())));
}

Lagrangian SymplecticMap::apply_inverse(const Lagrangian& l) const {
  return Lagrangian::trusted(numkit::orthonormalize_columns(Matrix(inv_ * l.basis())));
}

// Pairs, reflections and forms ----------------------------------------------

bool is_transverse(const Lagrangian& a, const Lagrangian& b, double tol) {
  if (a.n() != b.n()) return false;
  return numkit::rank(numkit::hcat(a.basis(), b.basis()), tol) == static_cast<int>(2 * a.n());
}

LagInterval LagInterval::make(Lagrangian p, Lagrangian q) {
  if (!is_transverse(p, q)) throw Error(ErrorCode::NotTransverse, "interval endpoints must be transverse");
  return {std::move(p), std::move(q)};
}

SymplecticMap reflection(const Lagrangian& p, const Lagrangian& q) {
  if (!is_transverse(p, q)) throw Error(ErrorCode::NotTransverse, "reflection needs a transverse pair");
  const std::size_t n = p.n();
  const Matrix frame = numkit::hcat(p.basis(), q.basis());
  Matrix d = Matrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = -1.0;
  const Matrix r = frame * d * numkit::inverse(frame);
  return SymplecticMap::unchecked(r, MapKind::Antisymplectic);
}

double BForm::evaluate(const Vector& v, const Vector& w) const {
  return numkit::dot(v, g_.matrix() * w);
}

BForm bform(const Lagrangian& p, const Lagrangian& q) {
  const auto r = reflection(p, q);
  return BForm(SymMatrix(omega_matrix(p.n()) * r.matrix()));
}

int maslov(const Lagrangian& p, const Matrix& v_basis, const Lagrangian& q, double tol) {
  if (v_basis.rows() != 2 * p.n()) throw Error(ErrorCode::InputError, "maslov: subspace dimension mismatch");
  const BForm b = bform(p, q);
  const Matrix v_orth = numkit::column_space(v_basis, tol);
  const auto sig = numkit::signature(b.restrict_to(v_orth), tol);
  if (sig.zero > 0) throw Error(ErrorCode::DegenerateRestriction, "B restricted to V is degenerate");
  return sig.k();
}

int maslov(const Lagrangian& p, const Lagrangian& v, const Lagrangian& q, double tol) {
  const BForm b = bform(p, q);
  const auto sig = numkit::signature(b.restrict_to(v.basis()), tol);
  if (sig.zero > 0) throw Error(ErrorCode::DegenerateRestriction, "B restricted to V is degenerate");
  return sig.k();
}

bool cyclic_lag(const Lagrangian& p, const Lagrangian& v, const Lagrangian& q, double tol) {
  if (p.n() != v.n() || v.n() != q.n()) return false;
  if (!is_transverse(p, v, tol) || !is_transverse(v, q, tol) || !is_transverse(p, q, tol)) return false;
  try {
    return maslov(p, v, q, tol) == static_cast<int>(p.n());
  } catch (const Error&) {
    return false;
  }
}

// Charts ------------------------------------------------------------------------

Matrix adapted_frame(const Lagrangian& p, const Lagrangian& q) {
  if (!is_transverse(p, q)) throw Error(ErrorCode::NotTransverse, "chart base pair must be transverse");
  const std::size_t n = p.n();
  const Matrix pairing = p.basis().transpose() * omega_matrix(n) * q.basis();
  const Matrix q_dual = q.basis() * numkit::inverse(pairing);
  return numkit::hcat(p.basis(), q_dual);
}

namespace {

Matrix graph_basis(const SymMatrix& s) {
  const std::size_t n = s.n();
  Matrix b(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) b(n + i, j) = s(i, j);
  }
  return b;
}

SymMatrix chart_of_coordinates(const Matrix& coords) {
  const std::size_t n = coords.cols();
  Matrix x(n, n), y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = coords(i, j);
      y(i, j) = coords(n + i, j);
    }
  try {
    return SymMatrix(y * numkit::inverse(x));
  } catch (const Error&) {
    throw Error(ErrorCode::NotTransverse, "Lagrangian meets the chart's point at infinity");
  }
}

// E^{-1} = -Omega E^T Omega for symplectic E.
Matrix symplectic_inverse(const Matrix& e) {
  const Matrix w = omega_matrix(e.rows() / 2);
  return -(w * e.transpose() * w);
}

}  // namespace

Lagrangian chart_to_lagrangian(const SymMatrix& s) {
  numkit::require_finite(s.matrix(), "chart point");
  return Lagrangian::trusted(numkit::orthonormalize_columns(graph_basis(s)));
}

Lagrangian chart_to_lagrangian(const SymMatrix& s, const LagInterval& base) {
  numkit::require_finite(s.matrix(), "chart point");
  const Matrix e = adapted_frame(base.p, base.q);
  return Lagrangian::trusted(numkit::orthonormalize_columns(Matrix(e * graph_basis(s))));
}

SymMatrix lagrangian_to_chart(const Lagrangian& l) {
  if (!is_transverse(l, Lagrangian::q_inf(l.n())))
    throw Error(ErrorCode::NotTransverse, "Lagrangian meets the chart's point at infinity");
  return chart_of_coordinates(l.basis());
}

SymMatrix lagrangian_to_chart(const Lagrangian& l, const LagInterval& base) {
  if (!is_transverse(l, base.q)) throw Error(ErrorCode::NotTransverse, "Lagrangian meets the chart's point at infinity");
  const Matrix e = adapted_frame(base.p, base.q);
  return chart_of_coordinates(symplectic_inverse(e) * l.basis());
}

int maslov_via_chart(const SymMatrix& sx, const SymMatrix& sy, double tol) {
  const auto sig = numkit::signature(sy - sx, tol);
  if (sig.zero > 0) throw Error(ErrorCode::DegenerateDifference, "S_y - S_x is degenerate");
  return sig.k();
}

Lagrangian interval_closure_point(const LagInterval& base, const Matrix& rotation, const std::vector<double>& phi) {
  const std::size_t n = base.p.n();
  if (rotation.rows() != n || rotation.cols() != n || phi.size() != n)
    throw Error(ErrorCode::InputError, "interval_closure_point: shape mismatch");
  const Matrix e = adapted_frame(base.p, base.q);
  Matrix b(2 * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = std::cos(phi[j]), s = std::sin(phi[j]);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      double x = 0.0;
      for (std::size_t k = 0; k < n; ++k) x += (c * e(i, k) + s * e(i, n + k)) * rotation(k, j);
      b(i, j) = x;
    }
  }
  return Lagrangian::trusted(numkit::orthonormalize_columns(b));
}

Lagrangian complete_positive_line(const Lagrangian& p, const Lagrangian& q, const Vector& v, double tol) {
  const std::size_t n = p.n();
  if (v.size() != 2 * n) throw Error(ErrorCode::InputError, "complete_positive_line: dimension mismatch");
  const double nv = numkit::norm(v);
  if (nv == 0.0) throw Error(ErrorCode::InputError, "zero vector does not define a line");
  Vector u = v;
  for (auto& x : u) x /= nv;

  const auto r = reflection(p, q);
  const BForm b(SymMatrix(omega_matrix(n) * r.matrix()));
  const double scale = std::max(1.0, max_abs(b.gram().matrix()));
  if (b.evaluate(u) <= tol * scale) throw Error(ErrorCode::NonPositiveLine, "B(v, v) is not positive");

  const Matrix w = omega_matrix(n);
  std::vector<Vector> chosen{u};
  std::vector<Vector> constraints{u, r.apply(u)};
  while (chosen.size() < n) {
    // Complement of span(constraints) for omega; it equals the B-orthogonal.
    const Matrix c = numkit::from_columns(constraints);
    const Matrix comp = numkit::null_space(Matrix(c.transpose() * w), tol);
    const auto eig = numkit::sym_eig(b.restrict_to(comp));
    if (eig.values.back() <= tol * scale)
      throw Error(ErrorCode::NonPositiveLine, "no positive direction left in the omega-complement");
    Vector next = comp * eig.vectors.col(eig.vectors.cols() - 1);
    const double nn = numkit::norm(next);
    for (auto& x : next) x /= nn;
    chosen.push_back(next);
    constraints.push_back(next);
    constraints.push_back(r.apply(next));
  }
  return Lagrangian::from_matrix(numkit::from_columns(chosen));
}

double interval_distance(const LagInterval& base, const Lagrangian& l1, const Lagrangian& l2) {
  SymMatrix s1, s2;
  try {
    s1 = lagrangian_to_chart(l1, base);
    s2 = lagrangian_to_chart(l2, base);
  } catch (const Error&) {
    throw Error(ErrorCode::NotInInterval, "point is not transverse to the interval's far end");
  }
  std::vector<double> lambda;
  try {
    (void)numkit::cholesky(s2);
    lambda = numkit::generalized_sym_eigenvalues(s2, s1);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositiveDefinite) throw Error(ErrorCode::NotInInterval, "chart form is not positive definite");
    throw;
  }
  double acc = 0.0;
  for (double x : lambda) {
    if (!(x > 0.0)) throw Error(ErrorCode::NotInInterval, "non-positive generalized eigenvalue");
    acc += std::log(x) * std::log(x);
  }
  return std::sqrt(acc);
}

// Sampling -----------------------------------------------------------------------

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = g(rng);
  return SymMatrix(m);
}

Matrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g(rng);
  return numkit::orthonormalize_columns(m);
}

SymMatrix random_positive_definite(std::size_t n, std::mt19937_64& rng, double spread) {
  std::uniform_real_distribution<double> t(-spread, spread);
  const Matrix u = random_orthogonal(n, rng);
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::exp(t(rng));
  return SymMatrix(u * d * u.transpose());
}

SymplecticMap random_symplectic(std::size_t n, std::mt19937_64& rng, double scale) {
  // A = U diag(e^t) V is invertible with condition number at most e^{2 scale}.
  std::uniform_real_distribution<double> e(-scale, scale);
  Matrix d(n, n), d_inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = std::exp(e(rng));
    d_inv(i, i) = 1.0 / d(i, i);
  }
  const Matrix u = random_orthogonal(n, rng), v = random_orthogonal(n, rng);
  const Matrix a = u * d * v;
  const Matrix a_inv_t = u * d_inv * v;
  const SymMatrix s = random_symmetric(n, rng, scale);
  const SymMatrix t = random_symmetric(n, rng, scale);

  Matrix block_a(2 * n, 2 * n), upper = Matrix::identity(2 * n), lower = Matrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block_a(i, j) = a(i, j);
      block_a(n + i, n + j) = a_inv_t(i, j);
      upper(i, n + j) = s(i, j);
      lower(n + i, j) = t(i, j);
    }
  return SymplecticMap::from_matrix(block_a * upper * lower);
}

Lagrangian random_lagrangian(std::size_t n, std::mt19937_64& rng) {
  const auto g = random_symplectic(n, rng, 0.7);
  return g.apply(chart_to_lagrangian(random_symmetric(n, rng)));
}

Vector random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(dim);
  for (auto& x : v) x = g(rng);
  return v;
}

}  // namespace pingpong::symp
