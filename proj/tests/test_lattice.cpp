#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/error.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Gaussian elimination over Q, independent of the integer code paths.
std::size_t rational_rank(const IntegerMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t p = r;
    while (p < a.rows() && m[p][j] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || m[i][j] == 0) continue;
      Rational f = m[i][j] / m[r][j];
      for (std::size_t k = j; k < a.cols(); ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Cofactor expansion.
Integer naive_det(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Integer minor = naive_det(a.select_rows(rows).select_columns(cols));
    s += (j % 2 ? -1 : 1) * a(0, j) * minor;
  }
  return s;
}

bool is_unimodular(const IntegerMatrix& m) {
  Integer d = naive_det(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("vector helpers") {
  CHECK(dot(Vector{1, 2, 3}, Vector{4, -5, 6}) == 12);
  CHECK(gcd_of(Vector{6, -9, 15}) == 3);
  CHECK(primitive(Vector{4, -6}) == Vector{2, -3});
  CHECK(primitive(Vector{0, 0}) == Vector{0, 0});
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor(Rational(-1, 3)) == -1);
  CHECK(ceil(Rational(-1, 3)) == 0);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 5;
    IntegerMatrix a = random_matrix(rng, n, n, 5);
    CHECK(determinant(a) == naive_det(a));
  }
}

TEST_CASE("smith normal form") {
  SUBCASE("known invariant factors") {
    IntegerMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<Integer>{2, 6, 12});
  }
  SUBCASE("random matrices") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
      IntegerMatrix a = random_matrix(rng, r, c, 6);
      SmithForm s = smith_normal_form(a);
      CHECK(s.U * a * s.V == s.D);
      CHECK(is_unimodular(s.U));
      CHECK(is_unimodular(s.V));
      CHECK(s.rank == rational_rank(a));
      auto d = s.diagonal();
      REQUIRE(d.size() == s.rank);
      for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
          if (i != j) CHECK(s.D(i, j) == 0);
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] > 0);
        if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
      }
    }
  }
}

TEST_CASE("hermite form is canonical for the row lattice") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    IntegerMatrix a = random_matrix(rng, 3, 4, 5);
    IntegerMatrix h = hermite_rows(a);
    CHECK(h.rows() == rational_rank(a));
    // an invertible change of rows gives the same form
    IntegerMatrix u{{1, 2, 0}, {0, 1, 0}, {3, 7, 1}};
    CHECK(hermite_rows(u * a) == h);
    std::size_t last = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (h(i, p) == 0) ++p;
      if (i > 0) CHECK(p > last);
      last = p;
      CHECK(h(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h(k, p) >= 0);
        CHECK(h(k, p) < h(i, p));
      }
    }
  }
}

TEST_CASE("rank and kernel") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + t % 3, c = 2 + t % 4;
    IntegerMatrix a = random_matrix(rng, r, c, 4);
    IntegerMatrix k = kernel_basis(a);
    CHECK(rank(a) == rational_rank(a));
    CHECK(k.cols() == c - rational_rank(a));
    CHECK((a * k).is_zero());
    // saturated: the gcd of the maximal minors of the basis is 1
    if (k.cols() > 0) {
      SmithForm s = smith_normal_form(k);
      for (const auto& d : s.diagonal()) CHECK(d == 1);
    }
  }
  IntegerMatrix q{{1, 2}};
  IntegerMatrix k = kernel_basis(q);
  REQUIRE(k.cols() == 1);
  CHECK(primitive(k.column(0)) == k.column(0));
  CHECK((k.column(0) == Vector{2, -1} || k.column(0) == Vector{-2, 1}));
}

TEST_CASE("integral and rational solving") {
  IntegerMatrix a{{2, 0}, {0, 3}};
  CHECK(!solve_integral(a, Vector{1, 0}));
  auto x = solve_integral(a, Vector{4, 9});
  REQUIRE(x);
  CHECK(*x == Vector{2, 3});
  auto y = solve_rational(a, Vector{1, 1});
  REQUIRE(y);
  CHECK((*y)[0] == Rational(1, 2));
  CHECK((*y)[1] == Rational(1, 3));
  CHECK(!solve_rational(IntegerMatrix{{1, 2}, {2, 4}}, Vector{1, 1}));

  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    IntegerMatrix m = random_matrix(rng, 2, 4, 5);
    Vector x0 = random_matrix(rng, 4, 1, 5).column(0);
    Vector b = m * x0;
    auto s = solve_integral(m, b);
    REQUIRE(s);
    CHECK(m * *s == b);
  }
}

TEST_CASE("cokernel") {
  SUBCASE("torsion") {
    auto g = cokernel(IntegerMatrix{{2}, {0}});
    CHECK(g.free_rank == 1);
    CHECK(g.invariant_factors == std::vector<Integer>{2});
  }
  SUBCASE("projection kills the image") {
    IntegerMatrix a{{1, 0}, {0, 1}, {-1, -1}};
    auto g = cokernel(a);
    CHECK(g.free_rank == 1);
    CHECK(g.torsion_free());
    CHECK((g.projection * a).is_zero());
    SmithForm s = smith_normal_form(g.projection);
    CHECK(s.diagonal() == std::vector<Integer>{1});
  }
}

TEST_CASE("column lattices and maps") {
  IntegerMatrix a{{1, 0}, {0, 1}};
  IntegerMatrix b{{1, 1}, {0, 1}};
  IntegerMatrix c{{2, 0}, {0, 1}};
  CHECK(same_column_lattice(a, b));
  CHECK(!same_column_lattice(a, c));
  LatticeMap f(IntegerMatrix{{1, 2}});
  LatticeMap g(IntegerMatrix{{1, 0}, {0, 1}, {1, 1}});
  CHECK(f.source_rank == 2);
  CHECK(f.target_rank == 1);
  CHECK(compose(f, LatticeMap(b)).matrix == IntegerMatrix{{1, 3}});
  CHECK(g(Vector{2, 3}) == Vector{2, 3, 5});
}
