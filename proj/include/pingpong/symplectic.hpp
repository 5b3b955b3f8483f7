#pragma once

// The Lagrangian Grassmannian of R^{2n} with its Maslov-index cyclic order.
//
// Conventions, used everywhere in the library: coordinates are
// (x_1..x_n, y_1..y_n). The complex structure is J = [[0, -I], [I, 0]], so
// J e_i = e_{n+i} and J e_{n+i} = -e_i, and the symplectic form is
// omega(u, v) = <J u, v> = u^T Omega v with Omega = J^T = [[0, I], [-I, 0]].
// In particular omega(e_i, e_{n+i}) = 1.

#include <optional>
#include <random>
#include <vector>

#include "pingpong/numkit.hpp"

namespace pingpong::symp {

using numkit::Matrix;
using numkit::SymMatrix;
using numkit::Vector;

inline constexpr double kLagEqualGap = 1e-8;
inline constexpr double kIsotropyTol = 1e-9;
inline constexpr double kSymplecticTol = 1e-8;

Matrix omega_matrix(std::size_t n);
Matrix complex_structure(std::size_t n);
double omega(const Vector& u, const Vector& v);

class Lagrangian {
 public:
  /// Orthonormalizes span(M) and checks it is an omega-isotropic n-plane.
  static Lagrangian from_matrix(const Matrix& m, double tol = numkit::kDefaultTol);
  /// First coordinate plane span(e_1..e_n).
  static Lagrangian p0(std::size_t n);
  /// Last coordinate plane span(e_{n+1}..e_{2n}); the chart's point at infinity.
  static Lagrangian q_inf(std::size_t n);
  /// Skips the isotropy check; m must already be an orthonormal Lagrangian basis.
  static Lagrangian trusted(Matrix orthonormal_basis);

  std::size_t n() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }
  Matrix projector() const;

 private:
  explicit Lagrangian(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

double grassmann_gap(const Lagrangian& a, const Lagrangian& b);
inline bool same_lagrangian(const Lagrangian& a, const Lagrangian& b, double gap = kLagEqualGap) {
  return grassmann_gap(a, b) < gap;
}

enum class MapKind { Symplectic, Antisymplectic };

/// Returns the kind when M^T Omega M = +-Omega holds within tol * max(1, |M|^2).
std::optional<MapKind> classify_map(const Matrix& m, double tol = kSymplecticTol);

class SymplecticMap {
 public:
  /// Throws InputError if m neither preserves nor negates omega.
  static SymplecticMap from_matrix(const Matrix& m, double tol = kSymplecticTol);
  static SymplecticMap identity(std::size_t n);
  /// No structural check; used for fault injection and for inputs that
  /// validation reports on separately.
  static SymplecticMap unchecked(const Matrix& m, MapKind kind = MapKind::Symplectic);

  std::size_t n() const noexcept { return m_.rows() / 2; }
  MapKind kind() const noexcept { return kind_; }
  const Matrix& matrix() const noexcept { return m_; }
  const Matrix& inverse_matrix() const noexcept { return inv_; }

  SymplecticMap inverse() const;
  SymplecticMap compose(const SymplecticMap& right) const;  // this o right

  Vector apply(const Vector& v) const { return m_ * v; }
  Lagrangian apply(const Lagrangian& l) const;
  Lagrangian apply_inverse(const Lagrangian& l) const;

 private:
  SymplecticMap(Matrix m, Matrix inv, MapKind kind) : m_(std::move(m)), inv_(std::move(inv)), kind_(kind) {}
  Matrix m_;
  Matrix inv_;
  MapKind kind_;
};

bool is_transverse(const Lagrangian& a, const Lagrangian& b, double tol = numkit::kDefaultTol);

struct LagInterval {
  Lagrangian p;
  Lagrangian q;
  /// Throws NotTransverse.
  static LagInterval make(Lagrangian p, Lagrangian q);
  LagInterval opposite() const { return {q, p}; }
};

/// Antisymplectic involution acting as -1 on P and +1 on Q.
SymplecticMap reflection(const Lagrangian& p, const Lagrangian& q);

/// B_{P,Q}(v, w) = omega(v, R_{P,Q} w), stored as its Gram matrix G = Omega R.
class BForm {
 public:
  explicit BForm(SymMatrix gram) : g_(std::move(gram)) {}
  const SymMatrix& gram() const noexcept { return g_; }
  double evaluate(const Vector& v, const Vector& w) const;
  double evaluate(const Vector& v) const { return evaluate(v, v); }
  /// Restriction to span(basis): basis^T G basis.
  SymMatrix restrict_to(const Matrix& basis) const { return numkit::congruence(g_, basis); }

 private:
  SymMatrix g_;
};

BForm bform(const Lagrangian& p, const Lagrangian& q);

/// Signature k of B_{P,Q} restricted to V. V may be any subspace basis.
int maslov(const Lagrangian& p, const Matrix& v_basis, const Lagrangian& q, double tol = numkit::kDefaultTol);
int maslov(const Lagrangian& p, const Lagrangian& v, const Lagrangian& q, double tol = numkit::kDefaultTol);

/// <P, V, Q>: pairwise transverse with maximal Maslov index n. Never throws.
bool cyclic_lag(const Lagrangian& p, const Lagrangian& v, const Lagrangian& q, double tol = numkit::kDefaultTol);

// Charts --------------------------------------------------------------------

/// Symplectic frame E with E(P0) = P and E(Q_inf) = Q for a transverse pair:
/// E = [P_b | Q_b (P_b^T Omega Q_b)^{-1}].
Matrix adapted_frame(const Lagrangian& p, const Lagrangian& q);

/// graph {(x, S x)} over P0, transverse to Q_inf.
Lagrangian chart_to_lagrangian(const SymMatrix& s);
/// E(graph S) for the frame adapted to the base pair.
Lagrangian chart_to_lagrangian(const SymMatrix& s, const LagInterval& base);
/// Inverse of the chart; throws NotTransverse if L meets the base's Q.
SymMatrix lagrangian_to_chart(const Lagrangian& l);
SymMatrix lagrangian_to_chart(const Lagrangian& l, const LagInterval& base);

/// M(x, y, infinity) = k(S_y - S_x); throws DegenerateDifference.
int maslov_via_chart(const SymMatrix& sx, const SymMatrix& sy, double tol = numkit::kDefaultTol);

/// Point of the closed interval [P, Q]: columns cos(phi_i) E U_i + sin(phi_i) E' U_i,
/// i.e. chart value U diag(tan phi) U^T; phi_i in (0, pi/2) stays inside.
Lagrangian interval_closure_point(const LagInterval& base, const Matrix& rotation, const std::vector<double>& phi);

/// Lagrangian containing v inside (P, Q); requires B_{P,Q}(v, v) > 0.
Lagrangian complete_positive_line(const Lagrangian& p, const Lagrangian& q, const Vector& v,
                                  double tol = numkit::kDefaultTol);

/// Symmetric-space distance on the interval: chart forms b_1, b_2 over (P, Q)
/// and sqrt(sum log^2) of the generalized eigenvalues of (b_2, b_1).
double interval_distance(const LagInterval& base, const Lagrangian& l1, const Lagrangian& l2);

// Random sampling (used by tests, acceptance and the axioms command) ------

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng, double scale = 1.0);
SymMatrix random_positive_definite(std::size_t n, std::mt19937_64& rng, double spread = 1.0);
Matrix random_orthogonal(std::size_t n, std::mt19937_64& rng);
SymplecticMap random_symplectic(std::size_t n, std::mt19937_64& rng, double scale = 0.5);
Lagrangian random_lagrangian(std::size_t n, std::mt19937_64& rng);
Vector random_vector(std::size_t dim, std::mt19937_64& rng);

}  // namespace pingpong::symp
