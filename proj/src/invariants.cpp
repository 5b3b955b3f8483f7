#include "pingpong/invariants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pingpong::symp {

pco::PcoModel<Lagrangian> lagrangian_model() {
  pco::PcoModel<Lagrangian> m;
  m.name = "lag";
  m.triple = [](const Lagrangian& a, const Lagrangian& b, const Lagrangian& c) { return cyclic_lag(a, b, c); };
  m.sampler = [](const Lagrangian& a, const Lagrangian& b, double u) -> std::optional<Lagrangian> {
    if (!is_transverse(a, b)) return std::nullopt;
    const double t = std::tan(0.5 * std::numbers::pi * (0.01 + 0.98 * u));
    Matrix s = Matrix::identity(a.n());
    s *= t;
    return chart_to_lagrangian(SymMatrix(s), LagInterval{a, b});
  };
  return m;
}

std::vector<Lagrangian> chart_sample(std::size_t n, std::size_t chain_len, std::size_t random_count,
                                     std::mt19937_64& rng) {
  const auto g = random_symplectic(n, rng, 0.4);
  std::vector<Lagrangian> out;
  SymMatrix s = random_symmetric(n, rng);
  for (std::size_t k = 0; k < chain_len; ++k) {
    out.push_back(g.apply(chart_to_lagrangian(s)));
    // Bounded total growth keeps consecutive points well separated relative
    // to their size, so the relative eigenvalue threshold stays meaningful.
    SymMatrix step = random_positive_definite(n, rng, 0.5);
    Matrix scaled = step.matrix();
    scaled *= 4.0 / static_cast<double>(chain_len);
    s = s + SymMatrix(scaled);
  }
  for (std::size_t k = 0; k < random_count; ++k) out.push_back(g.apply(random_lagrangian(n, rng)));
  return out;
}

std::vector<Lagrangian> transverse_tuple(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  while (true) {
    std::vector<Lagrangian> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_lagrangian(n, rng));
    bool ok = true;
    for (std::size_t i = 0; i < count && ok; ++i)
      for (std::size_t j = i + 1; j < count && ok; ++j) ok = is_transverse(out[i], out[j], 1e-6);
    if (ok) return out;
  }
}

bool MaslovSuiteReport::orbit_values_exact() const {
  std::set<int> want;
  for (int k = -static_cast<int>(n); k <= static_cast<int>(n); k += 2) want.insert(k);
  return orbit_values == want;
}

bool MaslovSuiteReport::ok() const {
  return cocycle_violations == 0 && skew_violations == 0 && bound_violations == 0 && invariance_violations == 0 &&
         chart_violations == 0 && reflection_violations == 0 && orbit_values_exact();
}

std::string MaslovSuiteReport::summary() const {
  std::ostringstream os;
  os << "n=" << n << " quadruples=" << quadruples << " cocycle=" << cocycle_violations << " skew=" << skew_violations
     << " bound=" << bound_violations << " invariance=" << invariance_violations << "/" << invariance_checks
     << " chart=" << chart_violations << "/" << chart_checks << " reflection=" << reflection_violations << "/"
     << reflection_checks << " values={";
  bool first = true;
  for (int v : orbit_values) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

MaslovSuiteReport maslov_suite(std::size_t n, std::size_t quadruples, std::size_t conjugations, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MaslovSuiteReport rep;
  rep.n = n;
  const int ni = static_cast<int>(n);
  auto record = [&](int m) {
    rep.orbit_values.insert(m);
    if (std::abs(m) > ni || (m + ni) % 2 != 0) ++rep.bound_violations;
    return m;
  };

  for (std::size_t q = 0; q < quadruples; ++q) {
    const auto t = transverse_tuple(n, 4, rng);
    const auto &x = t[0], &y = t[1], &z = t[2], &w = t[3];
    const int yzw = record(maslov(y, z, w)), xzw = record(maslov(x, z, w));
    const int xyw = record(maslov(x, y, w)), xyz = record(maslov(x, y, z));
    ++rep.quadruples;
    if (yzw - xzw + xyw - xyz != 0) ++rep.cocycle_violations;
    if (maslov(z, y, x) != -xyz) ++rep.skew_violations;
    for (std::size_t c = 0; c < conjugations; ++c) {
      const auto g = random_symplectic(n, rng, 0.5);
      ++rep.invariance_checks;
      if (maslov(g.apply(x), g.apply(y), g.apply(z)) != xyz) ++rep.invariance_violations;
    }
  }

  // Triples of every orbit: (0, D, infinity) with D of each signature, moved
  // by a random symplectic map.
  for (std::size_t q = 0; q < quadruples; ++q) {
    const std::size_t pos = q % (n + 1);
    std::vector<double> d(n);
    std::uniform_real_distribution<double> mag(0.2, 3.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = (i < pos ? 1.0 : -1.0) * mag(rng);
    const auto u = random_orthogonal(n, rng);
    const SymMatrix dm(u * SymMatrix::diagonal(d).matrix() * u.transpose());
    const auto g = random_symplectic(n, rng, 0.5);
    record(maslov(g.apply(Lagrangian::p0(n)), g.apply(chart_to_lagrangian(dm)), g.apply(Lagrangian::q_inf(n))));
  }

  for (std::size_t q = 0; q < quadruples; ++q) {
    const SymMatrix sx = random_symmetric(n, rng), sy = random_symmetric(n, rng);
    if (numkit::signature(sy - sx, 1e-6).zero > 0) continue;
    ++rep.chart_checks;
    const int direct = record(maslov(chart_to_lagrangian(sx), chart_to_lagrangian(sy), Lagrangian::q_inf(n)));
    if (direct != maslov_via_chart(sx, sy)) ++rep.chart_violations;
  }

  for (std::size_t q = 0; q < quadruples; ++q) {
    const auto t = transverse_tuple(n, 3, rng);
    const auto r = reflection(t[0], t[2]);
    ++rep.reflection_checks;
    if (maslov(t[0], r.apply(t[1]), t[2]) != -maslov(t[0], t[1], t[2])) ++rep.reflection_violations;
  }
  return rep;
}

}  // namespace pingpong::symp
