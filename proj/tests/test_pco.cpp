#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pingpong/invariants.hpp"
#include "pingpong/pco.hpp"

using namespace pingpong;
using namespace pingpong::pco;

TEST_CASE("circle relation") {
  const auto c = circle_model();
  CHECK(triple(c, 0.0, 1.0 / 3, 2.0 / 3));
  CHECK_FALSE(triple(c, 2.0 / 3, 1.0 / 3, 0.0));
  CHECK(triple(c, 0.9, 0.1, 0.5));
  // Equal angles (to 1e-12) are not distinct.
  CHECK_FALSE(triple(c, 0.0, 1e-13, 0.5));
  CHECK_FALSE(triple(c, 0.0, 0.5, 1.0 - 1e-13));
}

TEST_CASE("torus relation is componentwise") {
  const auto t = torus_model();
  CHECK(triple(t, TorusPoint{0, 0}, TorusPoint{1.0 / 3, 1.0 / 3}, TorusPoint{2.0 / 3, 2.0 / 3}));
  CHECK(triple(t, TorusPoint{0, 0.5}, TorusPoint{1.0 / 3, 0.9}, TorusPoint{2.0 / 3, 0.2}));
  // Second coordinates (0, 2/3, 1/3) run clockwise, so this triple and its
  // reverse are both false: an incomparable triple.
  const TorusPoint a{0, 0}, b{1.0 / 3, 2.0 / 3}, c{2.0 / 3, 1.0 / 3};
  CHECK_FALSE(triple(t, a, b, c));
  CHECK_FALSE(triple(t, c, b, a));
}

TEST_CASE("is_cycle and increasing sequences") {
  const auto c = circle_model();
  CHECK(is_cycle(c, std::vector<double>{0, 0.25, 0.5, 0.75}));
  CHECK_FALSE(is_cycle(c, std::vector<double>{0, 0.5, 0.25}));
  CHECK(is_increasing_sequence(c, std::vector<double>{0, 0.1, 0.2, 0.3}));
  CHECK_FALSE(is_increasing_sequence(c, std::vector<double>{0, 0.2, 0.1}));
  CHECK_THROWS_AS(is_cycle(c, std::vector<double>{0, 0.5}), Error);

  const auto t = torus_model();
  const std::vector<TorusPoint> inc{{0.0, 0.1}, {0.2, 0.3}, {0.4, 0.5}, {0.6, 0.9}};
  CHECK(is_cycle(t, inc));
  CHECK(is_increasing_sequence(t, inc));
}

TEST_CASE("interval membership") {
  const auto c = circle_model();
  const Interval<double> iv{0.0, 0.5};
  CHECK(interval_contains(c, iv, 0.25));
  CHECK_FALSE(interval_contains(c, iv, 0.75));
  CHECK(interval_contains(c, iv.opposite(), 0.75));
}

TEST_CASE("axiom_check on the reference models") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);

  std::vector<double> angles(12);
  for (auto& a : angles) a = u(rng);
  const auto rc = axiom_check(circle_model(), angles, true);
  CHECK(rc.pco_ok());
  CHECK(rc.total());

  std::vector<TorusPoint> pairs(8);
  for (auto& p : pairs) p = {u(rng), u(rng)};
  const auto rt = axiom_check(torus_model(), pairs, true);
  CHECK(rt.pco_ok());
  REQUIRE(rt.totality.has_value());
  CHECK(*rt.totality > 0);
  bool witnessed = false;
  for (const auto& w : rt.witnesses)
    if (w.axiom == Axiom::Totality) {
      witnessed = true;
      const auto &a = pairs[w.witness[0]], &b = pairs[w.witness[1]], &c = pairs[w.witness[2]];
      CHECK_FALSE(torus_model().triple(a, b, c));
      CHECK_FALSE(torus_model().triple(c, b, a));
    }
  CHECK(witnessed);

  std::vector<long> ints{5, -3, 12, 0, 7, 2};
  CHECK(axiom_check(induced_linear_model(), ints).pco_ok());

  CHECK_THROWS_AS(axiom_check(circle_model(), std::vector<double>{0, 0.1, 0.2}), Error);
}

TEST_CASE("a corrupted oracle is caught") {
  auto bad = circle_model();
  const auto good = bad.triple;
  // Flip one triple: (0.1, 0.2, 0.3) in the reversed direction is now true.
  bad.triple = [good](const double& a, const double& b, const double& c) {
    if (a == 0.3 && b == 0.2 && c == 0.1) return true;
    return good(a, b, c);
  };
  const auto rep = axiom_check(bad, std::vector<double>{0.1, 0.2, 0.3, 0.6});
  CHECK_FALSE(rep.pco_ok());
  CHECK(rep.asymmetry + rep.transitivity + rep.cyclicity > 0);
  CHECK_FALSE(rep.witnesses.empty());
}

TEST_CASE("circle relation is total and asymmetric on distinct triples") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 2000; ++t) {
    const double a = u(rng), b = u(rng), c = u(rng);
    CHECK((circle_triple(a, b, c) != circle_triple(c, b, a)));
  }
}

TEST_CASE("cycles have disjoint consecutive intervals") {
  const auto c = circle_model();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  int tested = 0;
  while (tested < 200) {
    const double a = u(rng), b = u(rng), d = u(rng);
    if (!circle_triple(a, b, d)) continue;
    ++tested;
    for (int k = 0; k < 50; ++k) {
      const double x = u(rng);
      CHECK_FALSE((interval_contains(c, Interval<double>{a, b}, x) && interval_contains(c, Interval<double>{b, d}, x)));
    }
  }
}

TEST_CASE("sampled axiom check on a circle chain") {
  std::mt19937_64 rng(2);
  std::vector<double> pool;
  for (int i = 0; i < 20; ++i) pool.push_back(i / 20.0);
  for (int i = 0; i < 20; ++i) pool.push_back(std::uniform_real_distribution<double>(0, 1)(rng));
  const auto rep = sampled_axiom_check(circle_model(), pool, 20, 400, rng, true);
  CHECK(rep.pco_ok());
  CHECK(rep.total());
  CHECK(rep.sample_size == 400);
}

TEST_CASE("Lag(2n) satisfies the PCO axioms on chart samples") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::mt19937_64 rng(100 + n);
    const auto model = symp::lagrangian_model();
    const auto small = symp::chart_sample(n, 6, 6, rng);
    const auto exhaustive = axiom_check(model, small);
    CHECK(exhaustive.pco_ok());
    const auto pool = symp::chart_sample(n, 30, 30, rng);
    const auto sampled = sampled_axiom_check(model, pool, 30, 1000, rng);
    CHECK(sampled.pco_ok());
    // The chain is increasing, so it is a cycle.
    CHECK(is_cycle(model, std::vector<symp::Lagrangian>(pool.begin(), pool.begin() + 8)));
  }
}
