#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pingpong/numkit.hpp"

using namespace pingpong;
using namespace pingpong::numkit;

namespace {

SymMatrix random_sym(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g(rng);
  return SymMatrix(a);
}

double residual(const SymMatrix& s, const Eigensystem& e) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    const auto v = e.vectors.col(i);
    const auto sv = s.matrix() * v;
    for (std::size_t k = 0; k < v.size(); ++k) worst = std::max(worst, std::abs(sv[k] - e.values[i] * v[k]));
  }
  return worst;
}

double orthonormality(const Matrix& q) {
  return max_abs(q.transpose() * q - Matrix::identity(q.cols()));
}

}  // namespace

TEST_CASE("symmetrization on construction") {
  const SymMatrix s(Matrix{{1, 2}, {4, 3}});
  CHECK(s(0, 1) == s(1, 0));
  CHECK(s(0, 1) == 3.0);
}

TEST_CASE("sym_eig on small cases") {
  const auto id = sym_eig(SymMatrix(Matrix::identity(3)));
  for (double x : id.values) CHECK(x == doctest::Approx(1.0));

  const auto d = sym_eig(SymMatrix::diagonal({2, -3}));
  CHECK(d.values[0] == doctest::Approx(-3.0));
  CHECK(d.values[1] == doctest::Approx(2.0));
}

TEST_CASE("sym_eig residual and orthonormality on random matrices") {
  std::mt19937_64 rng(11);
  double worst_res = 0.0, worst_orth = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 8;
    const auto s = random_sym(n, rng);
    const auto e = sym_eig(s);
    for (std::size_t i = 1; i < n; ++i) REQUIRE(e.values[i - 1] <= e.values[i]);
    worst_res = std::max(worst_res, residual(s, e) / (1.0 + frobenius_norm(s.matrix())));
    worst_orth = std::max(worst_orth, orthonormality(e.vectors));
  }
  CHECK(worst_res <= 1e-10);
  CHECK(worst_orth <= 1e-10);
}

TEST_CASE("sym_eig rejects non-finite input") {
  Matrix m = Matrix::identity(2);
  m(0, 1) = std::nan("");
  CHECK_THROWS_AS(sym_eig(SymMatrix(m)), Error);
}

TEST_CASE("signature examples") {
  CHECK(signature(SymMatrix::diagonal({1, -1})) == Signature{1, 0, 1});
  CHECK(signature(SymMatrix::diagonal({1, -1})).k() == 0);
  const auto s = signature(SymMatrix::diagonal({5, 3, -2}));
  CHECK(s == Signature{2, 0, 1});
  CHECK(s.k() == 1);
  CHECK(signature(SymMatrix::zeros(2)) == Signature{0, 2, 0});
}

TEST_CASE("signature threshold is relative") {
  CHECK(signature(SymMatrix::diagonal({1e12, 1e-2})).zero == 1);
  CHECK(signature(SymMatrix::diagonal({1.0, 1e-8})).zero == 0);
  CHECK(signature(SymMatrix::diagonal({1.0, 1e-10})).zero == 1);
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  int compared = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto s = random_sym(n, rng);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = g(rng);
    const auto before = signature(s, 1e-6);
    const auto after = signature(congruence(s, a), 1e-6);
    if (before.zero > 0 || after.zero > 0) continue;
    ++compared;
    CHECK(before == after);
  }
  CHECK(compared > 450);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(6)) == 6);
  Matrix m{{1, 2, 1}, {3, 4, 3}, {5, 6, 5}};
  CHECK(rank(m) == 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    Matrix pq = Matrix::identity(2 * n);  // [P0 | Q0]
    CHECK(rank(pq) == static_cast<int>(2 * n));
  }
  CHECK(rank(Matrix(3, 2)) == 0);
}

TEST_CASE("column and null spaces") {
  const Matrix m{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
  const auto c = column_space(m);
  CHECK(c.cols() == 2);
  CHECK(orthonormality(c) < 1e-12);
  const auto k = null_space(m);
  REQUIRE(k.cols() == 1);
  const auto mk = m * k.col(0);
  CHECK(norm(mk) < 1e-12);
}

TEST_CASE("LU inverse and singular detection") {
  const Matrix a{{4, 1, 0}, {1, 3, 1}, {0, 1, 2}};
  CHECK(max_abs(a * inverse(a) - Matrix::identity(3)) < 1e-13);
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("cholesky and generalized eigenvalues") {
  const SymMatrix b(Matrix{{4, 1}, {1, 3}});
  const auto l = cholesky(b);
  CHECK(max_abs(l * l.transpose() - b.matrix()) < 1e-13);
  CHECK_THROWS_AS(cholesky(SymMatrix::diagonal({1, -1})), Error);

  // A = 2 B has every generalized eigenvalue equal to 2.
  const SymMatrix a(b.matrix() * 2.0);
  for (double x : generalized_sym_eigenvalues(a, b)) CHECK(x == doctest::Approx(2.0));
}
