#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "pingpong/domains.hpp"
#include "pingpong/pco.hpp"

using namespace pingpong;
using namespace pingpong::domains;
using schottky::SchottkyData;

namespace {

const SchottkyData& sp(std::size_t n) {
  static const auto f = schottky::standard_fuchsian_g2(3.0);
  static const std::array<SchottkyData, 3> d{schottky::embed_diagonal_sl2(f, 1), schottky::embed_diagonal_sl2(f, 2),
                                             schottky::embed_diagonal_sl2(f, 3)};
  return d.at(n - 1);
}

ReducedWord random_word(std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  std::vector<Letter> letters;
  while (letters.size() < k) {
    const auto x = Letter::from_index(pick(rng));
    if (letters.empty() || !(x == letters.back().inverse())) letters.push_back(x);
  }
  return ReducedWord(letters);
}

// Sine of the angle between v and the subspace spanned by an orthonormal basis.
double distance_to_subspace(const Vector& v, const Matrix& basis) {
  Vector r = v;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    const auto c = basis.col(j);
    const double t = numkit::dot(c, v);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= t * c[i];
  }
  return numkit::norm(r) / numkit::norm(v);
}

// Unit vectors of Lagrangians strictly inside the interval, hence in its halfspace.
std::vector<Vector> points_inside(const LagInterval& iv, std::size_t count, std::mt19937_64& rng) {
  std::vector<Vector> out;
  const std::size_t n = iv.p.n();
  while (out.size() < count) {
    const auto l = symp::chart_to_lagrangian(symp::random_positive_definite(n, rng), iv);
    const auto c = symp::random_vector(n, rng);
    out.push_back(l.basis() * c);
  }
  return out;
}

}  // namespace

TEST_CASE("projective points") {
  const auto p = ProjectivePoint::from_vector({-3, 4});
  CHECK(p.v()[0] == doctest::Approx(0.6));
  CHECK(p.v()[1] == doctest::Approx(-0.8));
  CHECK_THROWS_AS(ProjectivePoint::from_vector({0, 0}), Error);
  CHECK_THROWS_AS(ProjectivePoint::from_vector({1, std::nan("")}), Error);
  CHECK(projective_gap({1, 0}, {-2, 0}) < 1e-15);
  CHECK(projective_gap({1, 0}, {0, 1}) == doctest::Approx(1.0));
}

TEST_CASE("halfspace propositions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& d = sp(n);
    const FundamentalDomain fd(d);
    for (const auto& h : fd.halfspaces()) {
      const auto c = complement_identities_check(h, 500, n);
      CHECK(c.ok());
      CHECK(c.max_flip_error <= 1e-12);
      const auto pr = projectivisation_check(h, 200, n + 10);
      CHECK(pr.ok());
      CHECK(pr.inside > 0);
      CHECK(pr.outside > 0);
    }
    // Consecutive intervals in circle order give a cycle <P, Q, R, S>.
    const auto order = d.model.letters_in_circle_order();
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto x = order[i], y = order[(i + 1) % order.size()];
      const auto rep = disjointness_check(d.a(x), d.b(x), d.a(y), d.b(y), 1000, i);
      CHECK(rep.ok());
      CHECK(rep.inside_first > 0);
    }
    CHECK_THROWS_AS(disjointness_check(d.b(order[0]), d.a(order[0]), d.a(order[1]), d.b(order[1]), 10, 0), Error);
  }
}

TEST_CASE("halfspace of a Lagrangian interval contains its interior Lagrangians") {
  std::mt19937_64 rng(3);
  const auto& d = sp(2);
  const auto h = Halfspace::make(d.interval(Letter{1, -1}));
  for (const auto& v : points_inside(h.interval(), 200, rng)) {
    const auto r = halfspace_contains(h, ProjectivePoint::from_vector(v));
    CHECK(r.inside);
  }
  // The opposite interval gives the opposite form.
  const auto op = Halfspace::make(h.interval().opposite());
  CHECK(numkit::max_abs(op.form().matrix() + h.form().matrix()) <= 1e-12 * h.scale());
}

TEST_CASE("classical domain is the complement of the arcs") {
  const auto& d = sp(1);
  const FundamentalDomain fd(d);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  int inside = 0, outside = 0;
  for (int t = 0; t < 4000; ++t) {
    const double theta = u(rng);
    bool near_end = false;
    for (double e : d.model.endpoints) near_end = near_end || std::abs(std::remainder(theta - e, 1.0)) < 1e-6;
    if (near_end) continue;
    const auto c = classify(fd, ProjectivePoint::from_vector({std::cos(M_PI * theta), std::sin(M_PI * theta)}));
    std::optional<Letter> arc;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto x = Letter::from_index(i);
      if (pco::circle_triple(d.model.a(x), theta, d.model.b(x))) arc = x;
    }
    if (arc) {
      ++inside;
      REQUIRE(c.region == Region::InHalfspace);
      CHECK(c.letter == *arc);
    } else {
      ++outside;
      CHECK(c.region == Region::InDomain);
    }
  }
  CHECK(inside > 0);
  CHECK(outside > 0);

  const auto end = classify(fd, ProjectivePoint::from_vector(d.a(Letter{0, 1}).basis().col(0)));
  CHECK(end.region == Region::Boundary);
  CHECK(to_string(end) == "Boundary");
}

TEST_CASE("classification strings") {
  Classification c;
  CHECK(to_string(c) == "InDomain");
  c.region = Region::InHalfspace;
  c.letter = Letter{1, -1};
  CHECK(to_string(c) == "InHalfspace(2,-)");
}

TEST_CASE("tiling round trip") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& d = sp(n);
    const FundamentalDomain fd(d);
    std::mt19937_64 rng(40 + n);
    std::size_t tried = 0;
    while (tried < 60) {
      const auto v = symp::random_vector(2 * n, rng);
      const auto p = ProjectivePoint::from_vector(v);
      if (classify(fd, p).region != Region::InDomain) continue;
      ++tried;
      const auto w = random_word(1 + tried % 6, rng);
      const auto moved = precise::normalized(fd.group().act(w, precise::promote(p.v())));
      const auto r = descend(fd, moved, 60);
      INFO(w.str());
      CHECK(r.status == DescentStatus::Reached);
      CHECK(r.word == w.inverse());
      CHECK(r.steps == w.size());
      CHECK(projective_gap(precise::demote(r.image), p.v()) < 1e-8);
    }
  }
  // A point already in D needs no steps.
  const FundamentalDomain fd(sp(2));
  const auto r = descend(fd, ProjectivePoint::from_vector({0, 0, 0, 1}), 60);
  if (classify(fd, ProjectivePoint::from_vector({0, 0, 0, 1})).region == Region::InDomain) {
    CHECK(r.word.empty());
    CHECK(r.steps == 0);
  }
}

TEST_CASE("limit points are limit-proximal") {
  const auto& d = sp(2);
  const FundamentalDomain fd(d);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t) {
    const auto w = random_word(6, rng);
    const auto basis = fd.group().limit_basis(w);
    precise::RVector v(basis.rows(), precise::Real(0));
    for (std::size_t j = 0; j < basis.cols(); ++j)
      for (std::size_t i = 0; i < basis.rows(); ++i) v[i] += basis(i, j);
    const auto r = descend(fd, precise::normalized(v), 60);
    CHECK(r.status == DescentStatus::LimitProximal);
    CHECK(r.steps == 60);
    // The descent follows the word itself.
    CHECK(r.word.inverse().prefix(6) == w);
  }
}

TEST_CASE("nested halfspaces collapse to the Legendrian") {
  const auto& d = sp(2);
  std::mt19937_64 rng(12);
  const auto w = random_word(9, rng);
  const precise::PreciseGroup group(d);
  const auto limit = precise::demote(group.limit_basis(w));
  double previous = 2.0;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    INFO(k);
    const auto outer = schottky::word_interval(d, w.prefix(k));
    double worst = 0.0;
    for (const auto& v : points_inside(outer, 50, rng)) {
      worst = std::max(worst, distance_to_subspace(v, limit));
      // Each halfspace lies inside the previous one. Deep halfspaces have
      // large forms, so compare signs rather than the scaled tolerance.
      if (k > 1) {
        const auto h = Halfspace::make(schottky::word_interval(d, w.prefix(k - 1)));
        CHECK(halfspace_contains(h, ProjectivePoint::from_vector(v)).value > 0.0);
      }
    }
    CHECK(worst < previous);
    previous = worst;
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("quadric export") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const FundamentalDomain fd(sp(n));
    const auto& h = fd.halfspace(Letter{0, 1});
    const auto q = quadric_export(h, 24);
    CHECK(q.kind == (n == 1 ? "null-points" : n == 2 ? "surface" : "sign-grid"));
    CHECK_FALSE(q.points.empty());
    if (n <= 2) {
      CHECK(q.notice.empty());
      for (const auto& v : q.points) CHECK(std::abs(h.value(v)) <= 1e-8 * h.scale());
    } else {
      CHECK_FALSE(q.notice.empty());
    }
    CHECK_THROWS_AS(quadric_export(h, 0), Error);
  }
  const FundamentalDomain fd(sp(1));
  CHECK(quadric_export(fd.halfspace(Letter{0, 1}), 8).points.size() == 2);
}

TEST_CASE("affine chart") {
  const auto a = affine_chart({1, 2, 4}, 2);
  REQUIRE(a.has_value());
  CHECK(a->size() == 2);
  CHECK((*a)[0] == doctest::Approx(0.25));
  CHECK((*a)[1] == doctest::Approx(0.5));
  CHECK_FALSE(affine_chart({1, 2, 0}, 2).has_value());
}

TEST_CASE("legendrian export lies on the limit Lagrangians") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const FundamentalDomain fd(sp(n));
    const auto words = schottky::enumerate_words(sp(n).model, 2);
    const auto ls = legendrian_export(fd, words, 16);
    REQUIRE(ls.size() == words.size());
    for (const auto& l : ls) {
      CHECK((n == 1 ? l.points.size() == 1 : l.points.size() >= 16));
      const auto basis = precise::demote(fd.group().limit_basis(l.word));
      for (const auto& p : l.points) CHECK(distance_to_subspace(precise::demote(p), basis) < 1e-12);
    }
  }
}
