#include <random>  // for mt19937_64
#include <set>     // for set

#include "catch_amalgamated.hpp"

#include "helpers.hpp"

#include "semiforge/errors.hpp"
#include "semiforge/linalg.hpp"
#include "semiforge/matrix.hpp"
#include "semiforge/rational.hpp"

using namespace semiforge;

TEST_CASE("rationals are normalized on parse", "[rational]") {
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("3/6").get_str() == "1/2");
  CHECK_THROWS_AS(parse_rational("-3/-6"), ParseError);
  CHECK(parse_rational("0/7").get_str() == "0");
  CHECK(parse_rational("-5").get_str() == "-5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), ParseError);
}

TEST_CASE("rref examples", "[linalg]") {
  auto r = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(r.rank() == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});

  r = rref(Matrix::identity(2));
  CHECK(r.rank() == 2);
  CHECK(r.reduced == Matrix::identity(2));

  r = rref(Matrix{{0, 1}, {0, 0}});
  CHECK(r.rank() == 1);
  CHECK(r.pivots == std::vector<std::size_t>{1});
  CHECK(r.reduced == Matrix{{0, 1}, {0, 0}});
}

TEST_CASE("image and kernel examples", "[linalg]") {
  Matrix const n{{0, 1}, {0, 0}};
  CHECK(image(n) == Subspace::span(Matrix{{0, 1}}));
  CHECK(kernel(n) == Subspace::span(Matrix{{0, 1}}));
  CHECK(image(Matrix::identity(3)) == Subspace::full(3));
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(image(Matrix::zero(2, 2)).dim() == 0);
  CHECK(kernel(Matrix::zero(2, 2)) == Subspace::full(2));
}

TEST_CASE("products and inverses", "[linalg]") {
  Matrix const n{{0, 1}, {0, 0}};
  CHECK(mat_mul(n, n).is_zero());
  CHECK(n * Matrix::identity(2) == n);
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DimensionMismatch);

  CHECK(inverse(Matrix{{0, 1}, {-1, 0}}) == Matrix{{0, -1}, {1, 0}});
  CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
  CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == -2);
}

TEST_CASE("canonical_key is injective on small 2x2 matrices", "[linalg]") {
  std::vector<Rational> const vals{0, 1, -1, Rational(1, 2), Rational(-1, 2)};
  std::vector<Matrix>         all;
  for (auto const& a : vals) {
    for (auto const& b : vals) {
      for (auto const& c : vals) {
        for (auto const& d : vals) {
          all.push_back(Matrix{{a, b}, {c, d}});
        }
      }
    }
  }
  REQUIRE(all.size() == 625);
  std::set<std::string> keys;
  for (auto const& m : all) {
    keys.insert(canonical_key(m));
  }
  CHECK(keys.size() == 625);
  // Shape is part of the key.
  CHECK(canonical_key(Matrix(1, 4)) != canonical_key(Matrix(2, 2)));
  CHECK(canonical_key(Matrix(4, 1)) != canonical_key(Matrix(1, 4)));
}

TEST_CASE("randomized linear algebra invariants", "[linalg]") {
  std::mt19937_64 rng(17);
  auto const      vals = testing::small_rationals(2, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 1 + trial % 4;
    auto              a = testing::random_matrix(rng, n, n, vals);
    if (trial % 3 == 0 && n > 1) {
      // Force a dependency.
      for (std::size_t j = 0; j < n; ++j) {
        a(n - 1, j) = a(0, j) * 2 - a(1 % n, j);
      }
    }
    auto const img = image(a);
    auto const ker = kernel(a);
    CHECK(img.dim() + ker.dim() == n);
    CHECK(img.dim() == oracle::rank(testing::to_oracle(a)));
    CHECK(rref(rref(a).reduced).reduced == rref(a).reduced);
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      CHECK((ker.basis().row(i) * a).is_zero());
    }
    auto const b = testing::random_matrix(rng, n, n, vals);
    CHECK((canonical_key(a) == canonical_key(b)) == mat_eq(a, b));
    if (auto inv = inverse(a)) {
      CHECK(a * *inv == Matrix::identity(n));
      CHECK(determinant(a) != 0);
    } else {
      CHECK(determinant(a) == 0);
    }
  }
}

TEST_CASE("subspace coordinates", "[linalg]") {
  auto const v = Subspace::span(Matrix{{1, 2, 0}, {0, 1, 1}});
  CHECK(v.dim() == 2);
  auto const c = v.coordinates(Matrix{{2, 5, 1}});
  REQUIRE(c.has_value());
  CHECK(*c * v.basis() == Matrix{{2, 5, 1}});
  CHECK_FALSE(v.contains(Matrix{{0, 0, 1}}));
  CHECK((v + Subspace::span(Matrix{{0, 0, 1}})) == Subspace::full(3));
}

TEST_CASE("integer matrix conversion", "[linalg]") {
  CHECK(to_integer_matrix(Matrix{{1, -2}, {0, 3}}).to_rational() == Matrix{{1, -2}, {0, 3}});
  CHECK_THROWS_AS(to_integer_matrix(Matrix{{Rational(1, 2)}}), Error);
}
