#include "pingpong/pco.hpp"

#include <cmath>

namespace pingpong::pco {

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Cyclicity: return "cyclicity";
    case Axiom::Asymmetry: return "asymmetry";
    case Axiom::Transitivity: return "transitivity";
    case Axiom::Totality: return "totality";
  }
  return "?";
}

AxiomReport axiom_check(const RelationTable& rel, bool test_totality) {
  const std::size_t m = rel.size();
  if (m < 4) throw Error(ErrorCode::InputError, "axiom_check needs at least 4 sample points");
  AxiomReport rep;
  rep.sample_size = m;
  bool seen[4] = {false, false, false, false};
  auto witness = [&](Axiom ax, std::vector<std::size_t> w) {
    const int idx = static_cast<int>(ax);
    if (!seen[idx]) {
      seen[idx] = true;
      rep.witnesses.push_back({ax, std::move(w)});
    }
  };

  std::size_t incomparable = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const bool abc = rel(a, b, c);
        if (abc && !rel(b, c, a)) {
          ++rep.cyclicity;
          witness(Axiom::Cyclicity, {a, b, c});
        }
        if (abc && rel(c, b, a)) {
          ++rep.asymmetry;
          witness(Axiom::Asymmetry, {a, b, c});
        }
        if (test_totality && a != b && b != c && a != c && !abc && !rel(c, b, a)) {
          ++incomparable;
          witness(Axiom::Totality, {a, b, c});
        }
        if (!abc) continue;
        for (std::size_t d = 0; d < m; ++d) {
          if (rel(a, c, d) && !rel(a, b, d)) {
            ++rep.transitivity;
            witness(Axiom::Transitivity, {a, b, c, d});
          }
        }
      }
  if (test_totality) rep.totality = incomparable;
  return rep;
}

namespace {

constexpr double kAngleEps = 1e-12;

double wrap(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

bool same_angle(double a, double b) {
  const double d = std::abs(a - b);
  return d < kAngleEps || d > 1.0 - kAngleEps;
}

}  // namespace

bool circle_triple(double a, double b, double c) {
  a = wrap(a);
  b = wrap(b);
  c = wrap(c);
  if (same_angle(a, b) || same_angle(b, c) || same_angle(a, c)) return false;
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

PcoModel<CirclePoint> circle_model() {
  PcoModel<CirclePoint> m;
  m.name = "circle";
  m.triple = [](const double& a, const double& b, const double& c) { return circle_triple(a, b, c); };
  m.sampler = [](const double& a, const double& b, double u) -> std::optional<double> {
    double len = wrap(b - a);
    if (len < kAngleEps) return std::nullopt;
    return wrap(a + len * (0.5 + 0.98 * (u - 0.5)));
  };
  return m;
}

PcoModel<TorusPoint> torus_model() {
  PcoModel<TorusPoint> m;
  m.name = "torus";
  m.triple = [](const TorusPoint& a, const TorusPoint& b, const TorusPoint& c) {
    return circle_triple(a[0], b[0], c[0]) && circle_triple(a[1], b[1], c[1]);
  };
  m.sampler = [](const TorusPoint& a, const TorusPoint& b, double u) -> std::optional<TorusPoint> {
    TorusPoint out{};
    for (int i = 0; i < 2; ++i) {
      const double len = wrap(b[i] - a[i]);
      if (len < kAngleEps) return std::nullopt;
      out[i] = wrap(a[i] + len * (0.5 + 0.98 * (u - 0.5)));
    }
    return out;
  };
  return m;
}

PcoModel<long> induced_linear_model() {
  PcoModel<long> m;
  m.name = "linear";
  m.triple = [](const long& a, const long& b, const long& c) {
    return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
  };
  return m;
}

}  // namespace pingpong::pco
