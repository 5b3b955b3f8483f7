#pragma once

// Positive halfspaces H_{P,Q} = { [v] : B_{P,Q}(v, v) > 0 } in RP^{2n-1}, the
// fundamental domain D (the complement of the 2g defining halfspaces), and
// descent of points into D.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pingpong/precise.hpp"
#include "pingpong/schottky.hpp"

namespace pingpong::domains {

using numkit::Matrix;
using numkit::SymMatrix;
using numkit::Vector;
using schottky::Letter;
using schottky::ReducedWord;
using symp::LagInterval;
using symp::Lagrangian;

inline constexpr double kBoundaryTol = 1e-9;

class ProjectivePoint {
 public:
  /// Unit length, first nonzero coordinate positive. Throws on zero/non-finite.
  static ProjectivePoint from_vector(const Vector& v);
  const Vector& v() const noexcept { return v_; }
  std::size_t dim() const noexcept { return v_.size(); }

 private:
  explicit ProjectivePoint(Vector v) : v_(std::move(v)) {}
  Vector v_;
};

/// Projective distance sin(angle) between two lines.
double projective_gap(const Vector& a, const Vector& b);

class Halfspace {
 public:
  static Halfspace make(const LagInterval& iv);
  const LagInterval& interval() const noexcept { return iv_; }
  const SymMatrix& form() const noexcept { return form_; }
  /// max(1, max |G_ij|): the scale the boundary tolerance is relative to.
  double scale() const noexcept { return scale_; }

  double value(const Vector& v) const;
  template <class T>
  T value_t(const std::vector<T>& v) const {
    T acc(0);
    const Matrix& g = form_.matrix();
    for (std::size_t i = 0; i < v.size(); ++i) {
      T row(0);
      for (std::size_t j = 0; j < v.size(); ++j) row += T(g(i, j)) * v[j];
      acc += v[i] * row;
    }
    return acc;
  }

 private:
  Halfspace(LagInterval iv, SymMatrix form);
  LagInterval iv_;
  SymMatrix form_;
  double scale_;
};

struct HalfspaceValue {
  double value;   // B(v, v) for the unit representative
  bool inside;    // value > tol * scale
  bool boundary;  // |value| <= tol * scale
};

HalfspaceValue halfspace_contains(const Halfspace& h, const ProjectivePoint& p, double tol = kBoundaryTol);

// Sampling checks of the halfspace propositions ---------------------------------

struct ComplementReport {
  std::size_t samples = 0;
  std::size_t sign_violations = 0;       // sign(B_{Q,P}) != -sign(B_{P,Q})
  std::size_t reflection_violations = 0;  // R maps an inside point somewhere other than outside
  double max_flip_error = 0.0;           // |B_{Q,P} + B_{P,Q}| / scale
  bool ok() const { return sign_violations == 0 && reflection_violations == 0; }
};

ComplementReport complement_identities_check(const Halfspace& h, std::size_t samples, std::uint64_t seed);

struct ProjectivisationReport {
  std::size_t inside = 0;
  std::size_t completed = 0;  // completion succeeded, contains v and has maslov n
  std::size_t outside = 0;
  std::size_t rejected = 0;   // NonPositiveLine raised
  bool ok() const { return completed == inside && rejected == outside; }
};

/// Samples both random lines and lines of random Lagrangians inside (P, Q).
ProjectivisationReport projectivisation_check(const Halfspace& h, std::size_t samples, std::uint64_t seed);

struct DisjointnessReport {
  std::size_t samples = 0;
  std::size_t inside_first = 0;  // samples with B_{P,Q} > 0
  std::size_t violations = 0;    // of those, samples with B_{R,S} >= 0
  bool ok() const { return violations == 0; }
};

/// Requires <P, Q, R, S> to be a cycle; throws NotACycle otherwise.
DisjointnessReport disjointness_check(const Lagrangian& p, const Lagrangian& q, const Lagrangian& r,
                                      const Lagrangian& s, std::size_t samples, std::uint64_t seed);

// The fundamental domain ------------------------------------------------------------

enum class Region { InDomain, InHalfspace, Boundary };

struct Classification {
  Region region = Region::InDomain;
  Letter letter{};   // meaningful for InHalfspace
  double max_value;  // largest normalized form value
};

std::string to_string(const Classification& c);

class FundamentalDomain {
 public:
  explicit FundamentalDomain(const schottky::SchottkyData& data);

  const schottky::SchottkyData& data() const noexcept { return *data_; }
  const Halfspace& halfspace(Letter x) const { return halfspaces_[x.index()]; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  const precise::PreciseGroup& group() const noexcept { return group_; }

 private:
  const schottky::SchottkyData* data_;
  std::vector<Halfspace> halfspaces_;  // indexed by Letter::index()
  precise::PreciseGroup group_;
};

template <class T>
Classification classify_t(const FundamentalDomain& fd, const std::vector<T>& v, double tol = kBoundaryTol) {
  using std::sqrt;
  T nn(0);
  for (const auto& x : v) nn += x * x;
  Classification out;
  out.max_value = -1e300;
  int positives = 0;
  for (std::size_t i = 0; i < fd.halfspaces().size(); ++i) {
    const auto& h = fd.halfspaces()[i];
    const double val = static_cast<double>(h.value_t(v) / nn) / h.scale();
    if (val > out.max_value) out.max_value = val;
    if (val > tol) {
      ++positives;
      out.letter = Letter::from_index(i);
    }
  }
  if (positives > 1) throw Error(ErrorCode::InvalidDomainData, "point lies in two defining halfspaces");
  if (positives == 1) out.region = Region::InHalfspace;
  else if (out.max_value >= -tol) out.region = Region::Boundary;
  else out.region = Region::InDomain;
  return out;
}

Classification classify(const FundamentalDomain& fd, const ProjectivePoint& p, double tol = kBoundaryTol);

enum class DescentStatus { Reached, LimitProximal };

struct DescentResult {
  DescentStatus status;
  ReducedWord word;        // image = rho(word) p
  precise::RVector image;  // unit vector
  Classification final;
  std::size_t steps = 0;
};

/// Pulls p back by the generator whose halfspace contains it until it lands
/// in D (or on its boundary). Carried out in extended precision.
DescentResult descend(const FundamentalDomain& fd, const precise::RVector& p, std::size_t max_steps,
                      double tol = kBoundaryTol);
DescentResult descend(const FundamentalDomain& fd, const ProjectivePoint& p, std::size_t max_steps,
                      double tol = kBoundaryTol);

// Geometry export -----------------------------------------------------------------------

struct QuadricSample {
  std::string kind;  // "null-points" (n = 1), "surface" (n = 2), "sign-grid" (n >= 3)
  std::size_t chart_index = 0;
  std::vector<Vector> points;        // unit homogeneous vectors on B = 0 (or slice samples)
  std::vector<Vector> chart_points;  // affine coordinates; for sign grids (x, y, sign)
  std::string notice;
};

/// Samples {B = 0} along projective lines through a point inside H. Without
/// an explicit chart the last coordinate is used, falling back to whichever
/// coordinate keeps the most points.
QuadricSample quadric_export(const Halfspace& h, std::size_t resolution,
                             std::optional<std::size_t> chart_index = std::nullopt);

/// Affine coordinates v / v_c without entry c; nullopt near the hyperplane v_c = 0.
std::optional<Vector> affine_chart(const Vector& v, std::size_t c, double clip = 1e3);

struct LegendrianSample {
  ReducedWord word;
  std::vector<precise::RVector> points;  // unit vectors spanning P(L)
};

/// Projective points of each limit Lagrangian, computed in extended precision.
/// n = 1 gives the point itself; n = 2 a circle of points_per_line samples of
/// the projective line; n >= 3 points on a grid of the unit sphere of L.
std::vector<LegendrianSample> legendrian_export(const FundamentalDomain& fd, const std::vector<ReducedWord>& words,
                                                std::size_t points_per_line);

}  // namespace pingpong::domains
