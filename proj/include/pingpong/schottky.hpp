#pragma once

// Schottky data over Lag(2n): a circle model with 2g intervals, their images
// as Lagrangian intervals, and generators pairing them.
//
// Endpoint layout, both for angles and for Lagrangians: generator i owns the
// four entries [4i .. 4i+3] = (a_i^+, b_i^+, a_i^-, b_i^-). The letter (i, +)
// names J_i^+ = (a_i^+, b_i^+) and acts by h_i; (i, -) names J_i^- and acts
// by h_i^{-1}. Pairing: h_i(b_i^-) = a_i^+ and h_i(a_i^-) = b_i^+.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pingpong/symplectic.hpp"
#include "pingpong/words.hpp"

namespace pingpong::schottky {

using numkit::Matrix;
using symp::LagInterval;
using symp::Lagrangian;
using symp::SymplecticMap;

inline constexpr std::size_t kDefaultWordBudget = 200000;

enum class Flavor { Disjoint, Shared };

struct CircleModel {
  int g = 0;
  std::vector<double> endpoints;  // 4g angles in [0, 1)
  Flavor flavor = Flavor::Disjoint;

  double a(Letter x) const { return endpoints[4 * x.gen + (x.sign > 0 ? 0 : 2)]; }
  double b(Letter x) const { return endpoints[4 * x.gen + (x.sign > 0 ? 1 : 3)]; }
  /// The 2g letters sorted counterclockwise by interval start.
  std::vector<Letter> letters_in_circle_order() const;
};

struct SchottkyData {
  CircleModel model;
  std::size_t n = 0;
  std::vector<Lagrangian> endpoint_images;  // 4g, same layout as the angles
  std::vector<SymplecticMap> generators;    // g
  /// Optional SL(2, R) matrices acting on the circle model (theta <-> line at
  /// angle pi * theta). Derived from the endpoints when absent.
  std::vector<Matrix> circle_generators;

  int g() const { return model.g; }
  const Lagrangian& a(Letter x) const { return endpoint_images[4 * x.gen + (x.sign > 0 ? 0 : 2)]; }
  const Lagrangian& b(Letter x) const { return endpoint_images[4 * x.gen + (x.sign > 0 ? 1 : 3)]; }
  LagInterval interval(Letter x) const { return {a(x), b(x)}; }
  /// h_i for (i, +), h_i^{-1} for (i, -).
  SymplecticMap letter_map(Letter x) const;
};

// Words -------------------------------------------------------------------

/// Reduced words of length exactly k, in the cyclic order of their intervals.
/// The order is decided combinatorially from the circle model.
std::vector<ReducedWord> enumerate_words(const CircleModel& model, std::size_t k,
                                         std::size_t budget = kDefaultWordBudget);

/// The letters that may follow x, in the order their subintervals appear in J_x.
std::vector<Letter> successors(const CircleModel& model, Letter x);

/// Image of the first-order interval of the last letter under the prefix.
LagInterval word_interval(const SchottkyData& data, const ReducedWord& w);

SymplecticMap word_map(const SchottkyData& data, const ReducedWord& w);
Lagrangian act(const SchottkyData& data, const ReducedWord& w, const Lagrangian& l);

// Circle-side action ----------------------------------------------------------

/// 2x2 matrices realizing the pairing on the circle (supplied or derived).
std::vector<Matrix> circle_generators(const SchottkyData& data);
double circle_act(const std::vector<Matrix>& gens, const ReducedWord& w, double theta);
/// RP^1 point at angle pi * theta, i.e. the Lagrangian spanned by (cos, sin).
Lagrangian circle_point(double theta);

// Validation ----------------------------------------------------------------

struct Failure {
  std::string check;
  std::string witness;
};

struct ValidationReport {
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate(const SchottkyData& data, double tol = symp::kLagEqualGap);

/// Point of the gap between the end of one interval and the start of the next
/// (counted in circle order), taken as the chart midpoint S = I.
Lagrangian basepoint(const SchottkyData& data, std::size_t gap = 0);

struct PingPongReport {
  std::size_t depth = 0;
  std::vector<std::size_t> words_per_length;  // index k-1 for length k
  std::size_t words_checked = 0;
  std::vector<std::string> violations;  // words not landing in their first-letter interval
  std::vector<std::string> fixed;       // words fixing the basepoint
  bool ok() const { return violations.empty() && fixed.empty(); }
};

/// Checks every reduced word of length 1..depth.
PingPongReport ping_pong_check(const SchottkyData& data, std::size_t depth,
                               std::size_t budget = kDefaultWordBudget);

// Contraction and the limit map ----------------------------------------------

/// Largest sampled ratio d_target(TX, TY) / d_source(X, Y) over nearby and
/// distant pairs spread across the source interval.
double sampled_ratio(const SymplecticMap& t, const LagInterval& source, const LagInterval& target, int samples,
                     std::uint64_t seed);

/// sampled_ratio, throwing ContractionViolation when it reaches 1.
double contraction_ratio(const SymplecticMap& t, const LagInterval& source, const LagInterval& target,
                         int samples, std::uint64_t seed);

/// Max over letters x and intervals K != J_{x^{-1}} of the sampled ratio of
/// the map x : K -> J_x.
double contraction_constant(const SchottkyData& data, int samples = 150, std::uint64_t seed = 0);

/// Deterministic point set in the closure of an interval, shared by every
/// diameter measurement.
class ClosureSampler {
 public:
  explicit ClosureSampler(std::size_t n, std::uint64_t seed = 0);
  std::vector<Lagrangian> sample(const LagInterval& iv) const;

 private:
  std::vector<Matrix> rotations_;
  std::vector<std::vector<double>> phis_;
};

/// Diameter of I_W measured in d_{J_{w_1}}; |W| >= 2.
double word_diameter(const SchottkyData& data, const ReducedWord& w, const ClosureSampler& sampler);

/// Max diameter over all second-order intervals.
double second_order_diameter(const SchottkyData& data, const ClosureSampler& sampler);

/// Attracting fixed Lagrangian of a letter's map.
Lagrangian attracting_lagrangian(const SchottkyData& data, Letter x);

struct EtaValue {
  Lagrangian point;
  double bound;  // M C^{k-2}, in the metric of the first-letter interval
};

struct LimitEntry {
  ReducedWord word;
  Lagrangian point;
  double bound;
};

class LimitMap {
 public:
  /// Measures C and M; requires disjoint closures.
  explicit LimitMap(const SchottkyData& data, int samples = 150, std::uint64_t seed = 0);
  /// Same, with a caller-chosen basepoint.
  LimitMap(const SchottkyData& data, Lagrangian base, int samples = 150, std::uint64_t seed = 0);

  double contraction() const noexcept { return c_; }
  double diameter_bound() const noexcept { return m_; }
  const Lagrangian& basepoint() const noexcept { return base_; }
  double bound(std::size_t k) const;

  /// act(prefix, basepoint) with its error bound; prefix length >= 2.
  EtaValue eta(const ReducedWord& prefix) const;

  /// One entry per word of length depth: the limit point of the infinite word
  /// W x x x ... (x the last letter), which lies in the closure of I_W.
  std::vector<LimitEntry> limit_set(std::size_t depth, std::size_t budget = kDefaultWordBudget) const;

 private:
  const SchottkyData* data_;
  Lagrangian base_;
  double c_ = 0.0;
  double m_ = 0.0;
  std::vector<Lagrangian> attractors_;  // per letter index
};

// Constructors ----------------------------------------------------------------

struct FuchsianData {
  int g = 0;
  std::vector<double> endpoints;  // 4g angles, same layout
  std::vector<Matrix> matrices;   // g hyperbolic SL(2, R) matrices
};

/// n copies of each 2x2 generator acting diagonally on (x_1..x_n, y_1..y_n);
/// endpoint line (p, q) becomes span of [p I; q I].
SchottkyData embed_diagonal_sl2(const FuchsianData& fuchsian, std::size_t n);

/// Fuchsian data with g = 2: diag(lambda, 1/lambda) and its conjugate by the
/// rotation through pi/4, intervals centred on their attracting points.
FuchsianData standard_fuchsian_g2(double lambda);

// The extended endpoint map -----------------------------------------------------

struct XiEntry {
  double angle;
  ReducedWord word;  // the interval I_W this point bounds
  bool start;        // true for the first endpoint of I_W
  Lagrangian point;
};

/// Endpoints of the order-k intervals (or of all orders <= k), sorted by angle.
std::vector<XiEntry> xi_endpoints(const SchottkyData& data, std::size_t k, bool cumulative = false);

struct EquivarianceReport {
  std::size_t checked = 0;
  double max_gap = 0.0;
};

/// xi(gamma x) against rho(gamma) xi(x) for random words gamma and table
/// entries x whose image is again in the table.
EquivarianceReport xi_equivariance_check(const SchottkyData& data, const std::vector<XiEntry>& table,
                                         std::size_t samples, std::uint64_t seed);

}  // namespace pingpong::schottky
