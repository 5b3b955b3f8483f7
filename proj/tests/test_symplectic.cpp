#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pingpong/invariants.hpp"
#include "pingpong/symplectic.hpp"

using namespace pingpong;
using namespace pingpong::symp;

namespace {

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim, 0.0);
  v[i] = 1.0;
  return v;
}

Lagrangian line(double x, double y) { return Lagrangian::from_matrix(Matrix{{x}, {y}}); }

Matrix graph(const Matrix& s) {
  const std::size_t n = s.rows();
  Matrix b(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) b(n + i, j) = s(i, j);
  }
  return b;
}

}  // namespace

TEST_CASE("omega convention") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(omega(unit_vector(2 * n, 0), unit_vector(2 * n, n)) == 1.0);
    CHECK(omega(unit_vector(2 * n, n), unit_vector(2 * n, 0)) == -1.0);
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto u = random_vector(6, rng), v = random_vector(6, rng);
    CHECK(omega(u, u) == doctest::Approx(0.0));
    CHECK(omega(u, v) == doctest::Approx(-omega(v, u)));
  }
  CHECK_THROWS_AS(omega(Vector(4), Vector(6)), Error);
}

TEST_CASE("Lagrangian construction") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK_NOTHROW(Lagrangian::from_matrix(Matrix::identity(2 * n).cols_slice(0, n)));
    std::mt19937_64 rng(n);
    const auto s = random_symmetric(n, rng);
    const auto l = Lagrangian::from_matrix(graph(s.matrix()));
    CHECK(numkit::max_abs(l.basis().transpose() * omega_matrix(n) * l.basis()) < 1e-12);
    CHECK(numkit::max_abs(l.basis().transpose() * l.basis() - Matrix::identity(n)) < 1e-12);
  }
  CHECK_THROWS_AS(Lagrangian::from_matrix(graph(Matrix{{1, 2}, {0, 1}})), Error);
  try {
    Lagrangian::from_matrix(graph(Matrix{{1, 2}, {0, 1}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIsotropic);
  }
  try {
    Lagrangian::from_matrix(Matrix{{1, 2}, {0, 0}, {0, 0}, {0, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubspaceBasis);
  }
}

TEST_CASE("transversality") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(is_transverse(Lagrangian::p0(n), Lagrangian::q_inf(n)));
    CHECK_FALSE(is_transverse(Lagrangian::p0(n), Lagrangian::p0(n)));
    std::mt19937_64 rng(7 + n);
    for (int t = 0; t < 20; ++t)
      CHECK(is_transverse(chart_to_lagrangian(random_symmetric(n, rng, 3.0)), Lagrangian::q_inf(n)));
  }
}

TEST_CASE("reflection") {
  const auto r = reflection(line(1, 0), line(0, 1));
  CHECK(r.kind() == MapKind::Antisymplectic);
  CHECK(numkit::max_abs(r.matrix() - Matrix{{-1, 0}, {0, 1}}) < 1e-14);

  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = transverse_tuple(n, 2, rng);
    const auto rr = reflection(t[0], t[1]);
    CHECK(numkit::max_abs(rr.matrix() * rr.matrix() - Matrix::identity(2 * n)) < 1e-9);
    for (int k = 0; k < 20; ++k) {
      const auto v = random_vector(2 * n, rng), w = random_vector(2 * n, rng);
      CHECK(omega(rr.apply(v), rr.apply(w)) + omega(v, w) == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
    }
    CHECK(same_lagrangian(rr.apply(t[0]), t[0]));
    CHECK(same_lagrangian(rr.apply(t[1]), t[1]));
    // Fixes Q pointwise and negates P.
    const auto q0 = t[1].basis().col(0), p0 = t[0].basis().col(0);
    const auto rq = rr.apply(q0), rp = rr.apply(p0);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      CHECK(rq[i] == doctest::Approx(q0[i]).epsilon(1e-9));
      CHECK(rp[i] == doctest::Approx(-p0[i]).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(reflection(line(1, 0), line(1, 0)), Error);
}

TEST_CASE("the form B") {
  const auto b = bform(line(1, 0), line(0, 1));
  for (double x : {-1.0, 0.5, 2.0})
    for (double y : {-3.0, 0.25, 1.0}) CHECK(b.evaluate({x, y}) == doctest::Approx(2 * x * y));

  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 20; ++t) {
      const auto pq = transverse_tuple(n, 2, rng);
      const auto bpq = bform(pq[0], pq[1]), bqp = bform(pq[1], pq[0]);
      const auto sig = numkit::signature(bpq.gram());
      CHECK(sig == numkit::Signature{static_cast<int>(n), 0, static_cast<int>(n)});
      const auto v = random_vector(2 * n, rng);
      CHECK(bqp.evaluate(v) == doctest::Approx(-bpq.evaluate(v)).epsilon(1e-9));
    }
}

TEST_CASE("maslov and cyclic_lag examples") {
  const auto p = line(1, 0), v = line(1, 1), q = line(0, 1);
  CHECK(maslov(p, v, q) == 1);
  CHECK(maslov(q, v, p) == -1);
  CHECK(cyclic_lag(p, v, q));
  CHECK_FALSE(cyclic_lag(q, v, p));
  CHECK_FALSE(cyclic_lag(p, p, q));
  CHECK_FALSE(cyclic_lag(p, v, v));
  CHECK_THROWS_AS(maslov(p, p, q), Error);
  try {
    maslov(p, q, q);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateRestriction);
  }
  // Any subspace may be used for V.
  CHECK(maslov(p, Matrix{{1}, {1}}, q) == 1);
}

TEST_CASE("Maslov identities on random quadruples") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto rep = maslov_suite(n, 60, 5, 1000 + n);
    INFO(rep.summary());
    CHECK(rep.ok());
    CHECK(rep.quadruples == 60);
    CHECK(rep.invariance_checks == 300);
  }
}

TEST_CASE("charts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(same_lagrangian(chart_to_lagrangian(SymMatrix::zeros(n)), Lagrangian::p0(n)));
    std::mt19937_64 rng(20 + n);
    for (int t = 0; t < 20; ++t) {
      const auto s = random_symmetric(n, rng, 2.0);
      const auto l = chart_to_lagrangian(s);
      CHECK(grassmann_gap(l, chart_to_lagrangian(lagrangian_to_chart(l))) < 1e-9);
      CHECK(numkit::max_abs(lagrangian_to_chart(l).matrix() - s.matrix()) < 1e-9);
    }
    CHECK_THROWS_AS(lagrangian_to_chart(Lagrangian::q_inf(n)), Error);

    // Charts over an arbitrary base pair.
    const auto base = transverse_tuple(n, 2, rng);
    const LagInterval iv{base[0], base[1]};
    CHECK(same_lagrangian(chart_to_lagrangian(SymMatrix::zeros(n), iv), base[0]));
    const auto s = random_symmetric(n, rng);
    const auto l = chart_to_lagrangian(s, iv);
    CHECK(numkit::max_abs(lagrangian_to_chart(l, iv).matrix() - s.matrix()) < 1e-8);
  }
}

TEST_CASE("maslov_via_chart") {
  CHECK(maslov_via_chart(SymMatrix::zeros(1), SymMatrix::diagonal({1})) == 1);
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto sx = random_symmetric(n, rng);
    CHECK(maslov_via_chart(sx, sx + random_positive_definite(n, rng)) == static_cast<int>(n));
    int agreed = 0;
    for (int t = 0; t < 100; ++t) {
      const auto a = random_symmetric(n, rng), b = random_symmetric(n, rng);
      if (numkit::signature(b - a, 1e-6).zero > 0) continue;
      CHECK(maslov(chart_to_lagrangian(a), chart_to_lagrangian(b), Lagrangian::q_inf(n)) == maslov_via_chart(a, b));
      ++agreed;
    }
    CHECK(agreed > 95);
  }
  CHECK_THROWS_AS(maslov_via_chart(SymMatrix::diagonal({1, 2}), SymMatrix::diagonal({1, 3})), Error);
}

TEST_CASE("interval characterization") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto pq = transverse_tuple(n, 2, rng);
    const LagInterval iv{pq[0], pq[1]};
    int inside = 0, outside = 0;
    for (int t = 0; t < 200; ++t) {
      // Random chart values around multiples of I give both outcomes often.
      Matrix m = random_symmetric(n, rng, 0.7).matrix() + Matrix::identity(n) * (t % 4 - 1.0);
      const auto l = t % 5 == 0 ? random_lagrangian(n, rng) : chart_to_lagrangian(SymMatrix(m), iv);
      if (!is_transverse(l, pq[0], 1e-6) || !is_transverse(l, pq[1], 1e-6)) continue;
      const auto sig = numkit::signature(lagrangian_to_chart(l, iv), 1e-9);
      const bool pd = sig.pos == static_cast<int>(n);
      CHECK(cyclic_lag(pq[0], l, pq[1]) == pd);
      (pd ? inside : outside)++;
    }
    CHECK(inside > 0);
    CHECK(outside > 0);
  }
}

TEST_CASE("complete_positive_line") {
  const auto l1 = complete_positive_line(line(1, 0), line(0, 1), {1, 1});
  CHECK(same_lagrangian(l1, line(1, 1)));

  const auto p = Lagrangian::p0(2), q = Lagrangian::q_inf(2);
  const Vector v{1, 0, 1, 0};
  CHECK(bform(p, q).evaluate(v) > 0);
  const auto l2 = complete_positive_line(p, q, v);
  CHECK(maslov(p, l2, q) == 2);
  CHECK(numkit::rank(numkit::hcat(l2.basis(), Matrix{{1}, {0}, {1}, {0}}), 1e-9) == 2);

  CHECK_THROWS_AS(complete_positive_line(p, q, {1, 0, -1, 0}), Error);

  std::mt19937_64 rng(14);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto pq = transverse_tuple(n, 2, rng);
    int done = 0;
    while (done < 30) {
      const auto w = random_vector(2 * n, rng);
      if (bform(pq[0], pq[1]).evaluate(w) <= 1e-3) continue;
      const auto l = complete_positive_line(pq[0], pq[1], w);
      CHECK(cyclic_lag(pq[0], l, pq[1]));
      CHECK(numkit::rank(numkit::hcat(l.basis(), Matrix(numkit::from_columns(std::vector<Vector>{w}))), 1e-8) ==
            static_cast<int>(n));
      ++done;
    }
  }
}

TEST_CASE("interval distance") {
  const auto p = line(1, 0), q = line(0, 1);
  const LagInterval iv{p, q};
  const auto a = chart_to_lagrangian(SymMatrix::diagonal({1}), iv);
  const auto b = chart_to_lagrangian(SymMatrix::diagonal({2}), iv);
  CHECK(interval_distance(iv, a, a) == doctest::Approx(0.0));
  CHECK(interval_distance(iv, a, b) == doctest::Approx(std::log(2.0)));
  CHECK(interval_distance(iv, b, a) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(interval_distance(iv, a, chart_to_lagrangian(SymMatrix::diagonal({-1}), iv)), Error);

  std::mt19937_64 rng(15);
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto pq = transverse_tuple(n, 2, rng);
    const LagInterval base{pq[0], pq[1]};
    for (int t = 0; t < 20; ++t) {
      const auto x = chart_to_lagrangian(random_positive_definite(n, rng), base);
      const auto y = chart_to_lagrangian(random_positive_definite(n, rng), base);
      const auto z = chart_to_lagrangian(random_positive_definite(n, rng), base);
      const double dxy = interval_distance(base, x, y);
      CHECK(dxy == doctest::Approx(interval_distance(base, y, x)).epsilon(1e-8));
      CHECK(interval_distance(base, x, z) <= dxy + interval_distance(base, y, z) + 1e-9);
      // Symplectic maps are isometries between the moved intervals.
      const auto g = random_symplectic(n, rng);
      const LagInterval moved{g.apply(pq[0]), g.apply(pq[1])};
      CHECK(interval_distance(moved, g.apply(x), g.apply(y)) == doctest::Approx(dxy).epsilon(1e-6));
    }
  }
}

TEST_CASE("grassmann gap") {
  const auto p = Lagrangian::p0(1), q = Lagrangian::q_inf(1);
  CHECK(grassmann_gap(p, p) == doctest::Approx(0.0));
  CHECK(grassmann_gap(p, q) == doctest::Approx(1.0));
  std::mt19937_64 rng(16);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_lagrangian(2, rng), b = random_lagrangian(2, rng), c = random_lagrangian(2, rng);
    CHECK(grassmann_gap(a, c) <= grassmann_gap(a, b) + grassmann_gap(b, c) + 1e-12);
    CHECK(grassmann_gap(a, b) <= std::sqrt(2.0) + 1e-12);
  }
}

TEST_CASE("symplectic maps") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto g = random_symplectic(n, rng);
    CHECK(classify_map(g.matrix()) == MapKind::Symplectic);
    CHECK(numkit::max_abs(g.matrix() * g.inverse_matrix() - Matrix::identity(2 * n)) < 1e-9);
    const auto l = random_lagrangian(n, rng);
    CHECK(same_lagrangian(g.apply_inverse(g.apply(l)), l));
  }
  CHECK_THROWS_AS(SymplecticMap::from_matrix(Matrix{{2, 0}, {0, 2}}), Error);
  CHECK(classify_map(Matrix{{-1, 0}, {0, 1}}) == MapKind::Antisymplectic);
}

TEST_CASE("topological properties on chart samples") {
  std::mt19937_64 rng(18);
  for (std::size_t n = 1; n <= 3; ++n) {
    // (a) A bounded increasing chain S_k = S_inf - 2^{-k} I converges.
    const auto s_inf = random_symmetric(n, rng);
    const auto limit = chart_to_lagrangian(s_inf);
    double last = 1.0;
    for (int k = 1; k <= 30; ++k) {
      Matrix s = s_inf.matrix() - Matrix::identity(n) * std::ldexp(1.0, -k);
      const double gap = grassmann_gap(chart_to_lagrangian(SymMatrix(s)), limit);
      CHECK(gap <= last + 1e-15);
      last = gap;
    }
    CHECK(last < 1e-8);

    // (b) The opposite interval is nonempty: reflect an inside point.
    const auto pq = transverse_tuple(n, 2, rng);
    const auto inside = chart_to_lagrangian(random_positive_definite(n, rng), LagInterval{pq[0], pq[1]});
    REQUIRE(cyclic_lag(pq[0], inside, pq[1]));
    CHECK(cyclic_lag(pq[1], reflection(pq[0], pq[1]).apply(inside), pq[0]));

    // (c) Closure points of (x2, x3) lie in (x1, x4) for a chart cycle.
    SymMatrix s = random_symmetric(n, rng);
    std::vector<Lagrangian> xs;
    for (int k = 0; k < 4; ++k) {
      xs.push_back(chart_to_lagrangian(s));
      s = s + random_positive_definite(n, rng);
    }
    const LagInterval inner{xs[1], xs[2]};
    for (int t = 0; t < 10; ++t) {
      std::vector<double> phi(n);
      for (auto& f : phi) f = std::uniform_real_distribution<double>(0.0, std::numbers::pi / 2)(rng);
      if (t == 0) std::fill(phi.begin(), phi.end(), 0.0);
      if (t == 1) std::fill(phi.begin(), phi.end(), std::numbers::pi / 2);
      const auto c = interval_closure_point(inner, random_orthogonal(n, rng), phi);
      CHECK(cyclic_lag(xs[0], c, xs[3]));
    }
  }
}
