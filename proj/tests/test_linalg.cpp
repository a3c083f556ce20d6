#include <random>

#include <catch_amalgamated.hpp>

#include "nilcohom/linalg.hpp"
#include "nilcohom/quotient.hpp"
#include "oracle.hpp"

using namespace nilcohom;

namespace {

Matrix random_matrix(int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Scalar(Rational(num(rng), den(rng)));
  return m;
}

}  // namespace

TEST_CASE("rank agrees with the naive oracle on random matrices") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 40; ++t) {
    const Matrix m = random_matrix(1 + static_cast<int>(rng() % 7),
                                   1 + static_cast<int>(rng() % 7), rng);
    CHECK(rank(m) == oracle::rank(m));
  }
}

TEST_CASE("rref is idempotent and normalized") {
  std::mt19937 rng(7);
  const Matrix m = random_matrix(5, 7, rng);
  const Echelon e = rref(m);
  CHECK(rref(e.rref).rref == e.rref);
  for (int i = 0; i < e.rank(); ++i) CHECK(e.rref(i, e.pivot_cols[i]) == Scalar(1));
}

TEST_CASE("determinant and inverse") {
  Matrix m(3, 3);
  m(0, 0) = Scalar(2); m(0, 1) = Scalar(1); m(0, 2) = Scalar(0);
  m(1, 0) = Scalar(0); m(1, 1) = Scalar(Rational(1, 2)); m(1, 2) = Scalar(3);
  m(2, 0) = Scalar(1); m(2, 1) = Scalar(0); m(2, 2) = Scalar(1);
  // cofactor expansion: 2*(1/2*1 - 3*0) - 1*(0*1 - 3*1) = 1 + 3
  CHECK(determinant(m) == Scalar(4));
  CHECK(inverse(m) * m == Matrix::identity(3));
  Matrix sing(2, 2);
  sing(0, 0) = Scalar(1); sing(0, 1) = Scalar(2);
  sing(1, 0) = Scalar(2); sing(1, 1) = Scalar(4);
  CHECK(determinant(sing) == Scalar(0));
  CHECK_THROWS_AS(inverse(sing), std::invalid_argument);
}

TEST_CASE("kernel and image are exact complements in dimension") {
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(2 + static_cast<int>(rng() % 5),
                                   2 + static_cast<int>(rng() % 5), rng);
    const Subspace k = kernel(m);
    const Subspace im = image(m);
    CHECK(k.dim() + im.dim() == m.cols());  // rank-nullity
    CHECK(im.dim() == oracle::rank(m));
    for (int i = 0; i < k.dim(); ++i) {
      const auto v = m.apply(k.basis().row(i));
      for (const auto& x : v) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("subspace intersection matches the dimension formula") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Subspace u = image(random_matrix(n, 1 + static_cast<int>(rng() % n), rng));
    const Subspace v = image(random_matrix(n, 1 + static_cast<int>(rng() % n), rng));
    const Subspace meet = intersect(u, v);
    const Subspace join = sum(u, v);
    CHECK(meet.dim() == u.dim() + v.dim() - join.dim());
    CHECK(u.contains(meet));
    CHECK(v.contains(meet));
    CHECK(join.contains(u));
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  Matrix a(2, 2);
  a(0, 0) = Scalar(1); a(0, 1) = Scalar(2);
  a(1, 0) = Scalar(3); a(1, 1) = Scalar(4);
  const auto x = solve(a, {Scalar(5), Scalar(11)});
  REQUIRE(x);
  CHECK(a.apply(*x) == std::vector<Scalar>{Scalar(5), Scalar(11)});
  Matrix b(2, 1);
  b(0, 0) = Scalar(1);
  b(1, 0) = Scalar(1);
  CHECK(!solve(b, {Scalar(0), Scalar(1)}));
}

TEST_CASE("quotient presentations have deterministic representatives") {
  // R^3, numerator = all, denominator = span(e1)
  const Subspace num = Subspace::span_rows(Matrix::identity(3), 3);
  const Subspace den = image(Matrix::from_rows({{Scalar(1), Scalar(0), Scalar(0)}}, 3).transpose());
  const QuotientPresentation q(num, den);
  CHECK(q.dim() == 2);
  const auto c = q.coordinates({Scalar(7), Scalar(2), Scalar(-3)});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Scalar(2));
  CHECK(c[1] == Scalar(-3));
  CHECK_THROWS_AS(QuotientPresentation(den, num), std::invalid_argument);
}

TEST_CASE("induced maps reject operators that break the presentation") {
  // quotient R^2 / span(e1); the swap operator does not preserve span(e1)
  const Subspace num = Subspace::span_rows(Matrix::identity(2), 2);
  const Subspace den = image(Matrix::from_rows({{Scalar(1), Scalar(0)}}, 2).transpose());
  const QuotientPresentation q(num, den);
  Matrix swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  CHECK_THROWS_AS(induced_on_quotients(swap, q, q), TheoremTrap);
  CHECK(induced_on_quotients(Matrix::identity(2), q, q) == Matrix::identity(1));
}
