#pragma once

// Partial cyclic orders: a ternary relation that is cyclic, asymmetric and
// transitive. A model bundles a point type with its relation oracle.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pingpong/error.hpp"

namespace pingpong::pco {

template <class Point>
struct PcoModel {
  using point_type = Point;
  std::string name;
  std::function<bool(const Point&, const Point&, const Point&)> triple;
  /// Optional: draws a point of the interval (a, b) from a seed value in [0, 1).
  std::function<std::optional<Point>(const Point&, const Point&, double)> sampler;
};

template <class Point>
struct Interval {
  Point a;
  Point b;
  Interval opposite() const { return {b, a}; }
};

template <class Model>
bool triple(const Model& model, const typename Model::point_type& a,
            const typename Model::point_type& b, const typename Model::point_type& c) {
  return model.triple(a, b, c);
}

/// True iff every index-ordered triple i < j < k is in the relation.
template <class Model>
bool is_cycle(const Model& model, const std::vector<typename Model::point_type>& pts) {
  if (pts.size() < 3) throw Error(ErrorCode::InputError, "is_cycle needs at least 3 points");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (!model.triple(pts[i], pts[j], pts[k])) return false;
  return true;
}

template <class Model>
bool is_increasing_sequence(const Model& model, const std::vector<typename Model::point_type>& pts) {
  if (pts.size() < 3) throw Error(ErrorCode::InputError, "increasing sequence needs at least 3 points");
  return is_cycle(model, pts);
}

template <class Model>
bool interval_contains(const Model& model, const Interval<typename Model::point_type>& iv,
                       const typename Model::point_type& x) {
  return model.triple(iv.a, x, iv.b);
}

enum class Axiom { Cyclicity, Asymmetry, Transitivity, Totality };

std::string to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<std::size_t> witness;  // sample indices
};

struct AxiomReport {
  std::size_t sample_size = 0;
  std::size_t cyclicity = 0;
  std::size_t asymmetry = 0;
  std::size_t transitivity = 0;
  std::optional<std::size_t> totality;  // set only when totality was tested
  std::vector<AxiomViolation> witnesses;  // first witness per violated axiom

  bool pco_ok() const { return cyclicity == 0 && asymmetry == 0 && transitivity == 0; }
  bool total() const { return totality.has_value() && *totality == 0; }
};

/// Dense relation table over a sample; the relation is evaluated exactly
/// once per ordered triple.
class RelationTable {
 public:
  template <class Model>
  RelationTable(const Model& model, const std::vector<typename Model::point_type>& pts)
      : m_(pts.size()), bits_(m_ * m_ * m_, 0) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < m_; ++k)
          bits_[(i * m_ + j) * m_ + k] = model.triple(pts[i], pts[j], pts[k]) ? 1 : 0;
  }

  std::size_t size() const noexcept { return m_; }
  bool operator()(std::size_t i, std::size_t j, std::size_t k) const { return bits_[(i * m_ + j) * m_ + k] != 0; }

 private:
  std::size_t m_;
  std::vector<unsigned char> bits_;
};

AxiomReport axiom_check(const RelationTable& rel, bool test_totality);

/// Exhaustive check of the axioms over all triples and quadruples of the
/// sample. The sample is assumed to consist of distinct points.
template <class Model>
AxiomReport axiom_check(const Model& model, const std::vector<typename Model::point_type>& pts,
                        bool test_totality = false) {
  if (pts.size() < 4) throw Error(ErrorCode::InputError, "axiom_check needs at least 4 sample points");
  return axiom_check(RelationTable(model, pts), test_totality);
}

/// Randomized variant for samples too large for the exhaustive check. Half of
/// the draws take four increasing indices from the first chain_len points
/// (which the caller arranges as an increasing sequence, so the transitivity
/// premise actually fires); the rest are arbitrary distinct indices.
template <class Model, class Rng>
AxiomReport sampled_axiom_check(const Model& model, const std::vector<typename Model::point_type>& pool,
                                std::size_t chain_len, std::size_t draws, Rng& rng, bool test_totality = false) {
  const std::size_t m = pool.size();
  if (m < 4) throw Error(ErrorCode::InputError, "axiom_check needs at least 4 sample points");
  AxiomReport rep;
  rep.sample_size = draws;
  std::size_t incomparable = 0;
  bool seen[4] = {false, false, false, false};
  auto note = [&](Axiom ax, std::size_t& counter, std::vector<std::size_t> w) {
    ++counter;
    if (!seen[static_cast<int>(ax)]) {
      seen[static_cast<int>(ax)] = true;
      rep.witnesses.push_back({ax, std::move(w)});
    }
  };
  std::size_t totality_dummy = 0;
  for (std::size_t t = 0; t < draws; ++t) {
    std::size_t idx[4];
    const std::size_t range = (t % 2 == 0 && chain_len >= 4) ? std::min(chain_len, m) : m;
    std::uniform_int_distribution<std::size_t> pick(0, range - 1);
    for (int k = 0; k < 4; ++k) {
      bool fresh;
      do {
        idx[k] = pick(rng);
        fresh = true;
        for (int l = 0; l < k; ++l) fresh = fresh && idx[l] != idx[k];
      } while (!fresh);
    }
    if (range != m) std::sort(idx, idx + 4);
    const auto& a = pool[idx[0]];
    const auto& b = pool[idx[1]];
    const auto& c = pool[idx[2]];
    const auto& d = pool[idx[3]];
    const bool abc = model.triple(a, b, c);
    if (abc && !model.triple(b, c, a)) note(Axiom::Cyclicity, rep.cyclicity, {idx[0], idx[1], idx[2]});
    if (abc && model.triple(c, b, a)) note(Axiom::Asymmetry, rep.asymmetry, {idx[0], idx[1], idx[2]});
    if (abc && model.triple(a, c, d) && !model.triple(a, b, d))
      note(Axiom::Transitivity, rep.transitivity, {idx[0], idx[1], idx[2], idx[3]});
    if (test_totality && !abc && !model.triple(c, b, a)) {
      note(Axiom::Totality, totality_dummy, {idx[0], idx[1], idx[2]});
      ++incomparable;
    }
  }
  if (test_totality) rep.totality = incomparable;
  return rep;
}

// Reference models -----------------------------------------------------------

/// Angles in [0, 1), counterclockwise. Angles closer than 1e-12 count as equal.
using CirclePoint = double;
PcoModel<CirclePoint> circle_model();
bool circle_triple(double a, double b, double c);

using TorusPoint = std::array<double, 2>;
/// Product order: both coordinates must be counterclockwise.
PcoModel<TorusPoint> torus_model();

/// Integers with the order induced by <: a<b<c, b<c<a or c<a<b.
PcoModel<long> induced_linear_model();

}  // namespace pingpong::pco
