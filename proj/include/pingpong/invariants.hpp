#pragma once

// Lag(2n) as a PCO model, and sampled checks of the Maslov index identities.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pingpong/pco.hpp"
#include "pingpong/symplectic.hpp"

namespace pingpong::symp {

/// triple(P, V, Q) = cyclic_lag(P, V, Q).
pco::PcoModel<Lagrangian> lagrangian_model();

/// chain_len graphs of an increasing chain S_1 < S_2 < ... followed by
/// random points, all moved by one random symplectic map.
std::vector<Lagrangian> chart_sample(std::size_t n, std::size_t chain_len, std::size_t random_count,
                                     std::mt19937_64& rng);

/// Four pairwise transverse random Lagrangians.
std::vector<Lagrangian> transverse_tuple(std::size_t n, std::size_t count, std::mt19937_64& rng);

struct MaslovSuiteReport {
  std::size_t n = 0;
  std::size_t quadruples = 0;
  std::size_t cocycle_violations = 0;
  std::size_t skew_violations = 0;
  std::size_t bound_violations = 0;       // |M| > n or wrong parity
  std::size_t invariance_checks = 0;
  std::size_t invariance_violations = 0;
  std::size_t chart_checks = 0;
  std::size_t chart_violations = 0;
  std::size_t reflection_checks = 0;
  std::size_t reflection_violations = 0;
  std::set<int> orbit_values;             // all Maslov values observed
  bool orbit_values_exact() const;        // exactly {-n, -n+2, ..., n}
  bool ok() const;
  std::string summary() const;
};

/// quadruples random transverse quadruples with conjugations symplectic maps
/// each, plus chart and reflection checks on the same number of triples.
MaslovSuiteReport maslov_suite(std::size_t n, std::size_t quadruples, std::size_t conjugations, std::uint64_t seed);

}  // namespace pingpong::symp
