#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"

#include "helpers.hpp"

#include "semiforge/errors.hpp"
#include "semiforge/group_lattice.hpp"
#include "semiforge/linalg.hpp"

using namespace semiforge;

namespace {
  Matrix const rot90{{0, 1}, {-1, 0}};

  IntegerMatrix imat(std::vector<std::vector<long>> const& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return to_integer_matrix(m);
  }

  std::vector<std::vector<oracle::Z>> rows_of(IntegerMatrix const& m) {
    std::vector<std::vector<oracle::Z>> out(m.rows(), std::vector<oracle::Z>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out[i][j] = m(i, j);
      }
    }
    return out;
  }

  bool is_hnf(IntegerMatrix const& h) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      while (col < h.cols() && h(i, col) == 0) {
        for (std::size_t k = i; k < h.rows(); ++k) {
          if (h(k, col) != 0) {
            return false;
          }
        }
        ++col;
      }
      if (col == h.cols() || h(i, col) <= 0) {
        return false;
      }
      for (std::size_t k = 0; k < i; ++k) {
        if (h(k, col) < 0 || h(k, col) >= h(i, col)) {
          return false;
        }
      }
      for (std::size_t k = i + 1; k < h.rows(); ++k) {
        if (h(k, col) != 0) {
          return false;
        }
      }
      ++col;
    }
    return true;
  }

  void check_conjugation(FiniteGroupClosure const& g, Matrix const& c) {
    auto const cinv = inverse(c);
    REQUIRE(cinv.has_value());
    for (auto const& m : g.group.elements) {
      auto const conj = c * m * *cinv;
      CHECK(conj.is_integral());
      CHECK(abs(determinant(conj)) == 1);
    }
  }
}  // namespace

TEST_CASE("group_closure examples", "[group]") {
  auto g = group_closure(MorphismTable(2, {rot90}));
  REQUIRE(g.finite.has_value());
  CHECK(g.finite->order() == 4);

  g = group_closure(MorphismTable(1, {Matrix{{-1}}}));
  REQUIRE(g.finite.has_value());
  CHECK(g.finite->order() == 2);

  g = group_closure(MorphismTable(1, {Matrix{{2}}}));
  CHECK_FALSE(g.finite.has_value());
  CHECK(g.witness.has_value());

  CHECK_THROWS_AS(group_closure(MorphismTable(2, {Matrix{{1, 0}, {0, 0}}})),
                  NonInvertibleGenerator);
}

TEST_CASE("short_product examples", "[group]") {
  auto const g = group_closure(MorphismTable(2, {rot90}));
  REQUIRE(g.finite.has_value());
  auto const& h = g.finite->group;
  CHECK(short_product(h, Matrix{{-1, 0}, {0, -1}})->size() == 2);
  CHECK(short_product(h, Matrix::identity(2)) == Word{});
  CHECK_FALSE(short_product(h, Matrix{{2, 0}, {0, 2}}).has_value());
}

TEST_CASE("signed permutations of dimension 2", "[group]") {
  MorphismTable const t(2, {Matrix{{0, 1}, {1, 0}}, Matrix{{-1, 0}, {0, 1}}});
  auto const          g = group_closure(t);
  REQUIRE(g.finite.has_value());
  auto const& h = g.finite->group;
  CHECK(h.size() == 8);
  CHECK(h.size() == oracle::signed_permutations(2).size());
  // Dihedral of order 8 generated by two reflections: depths 0..4.
  CHECK(h.depth() == 4);
  CHECK(h.level_sizes == std::vector<std::size_t>{1, 2, 2, 2, 1});
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto const w = short_product(h, h.elements[i]);
    REQUIRE(w.has_value());
    CHECK(w->size() <= h.size() - 1);
    CHECK(t.evaluate(*w) == h.elements[i]);
  }
}

TEST_CASE("hnf examples", "[group]") {
  CHECK(hnf(imat({{2, 0}, {0, 2}, {1, 1}})).basis == imat({{1, 1}, {0, 2}}));
  CHECK(hnf(IntegerMatrix::identity(3)).basis == IntegerMatrix::identity(3));
  CHECK(hnf(imat({{0, 3}})).basis == imat({{0, 3}}));
  CHECK(hnf(imat({{0, -3}})).basis == imat({{0, 3}}));
  CHECK(hnf(imat({{0, 0}})).rank() == 0);
}

TEST_CASE("hnf is canonical and preserves the lattice", "[group]") {
  std::mt19937_64                     rng(8);
  std::uniform_int_distribution<long> pick(-4, 4);
  for (int t = 0; t < 60; ++t) {
    std::size_t const                n = 2 + t % 2, rows = 1 + t % 4;
    std::vector<std::vector<long>>   b(rows, std::vector<long>(n));
    for (auto& r : b) {
      for (auto& x : r) {
        x = pick(rng);
      }
    }
    auto const m = imat(b);
    auto const h = hnf(m).basis;
    CHECK(is_hnf(h));
    CHECK(hnf(h).basis == h);
    CHECK(h.rows() == rank(m.to_rational()));
    if (h.rows() > 0) {
      CHECK(oracle::determinantal_divisor(rows_of(m))
            == oracle::determinantal_divisor(rows_of(h)));
      for (auto const& row : rows_of(m)) {
        CHECK(oracle::lattice_member(rows_of(h), row));
      }
      for (auto const& x : oracle::box_points(n, 3)) {
        CHECK(oracle::lattice_member(rows_of(m), x)
              == oracle::lattice_member(rows_of(h), x));
      }
    }
  }
}

TEST_CASE("integerize examples", "[group]") {
  auto g = group_closure(MorphismTable(1, {Matrix{{-1}}}));
  CHECK(integerize(*g.finite) == Matrix{{1}});

  MorphismTable const skew(2, {Matrix{{0, 2}, {Rational(-1, 2), 0}}});
  g = group_closure(skew);
  REQUIRE(g.finite.has_value());
  CHECK(g.finite->order() == 4);
  check_conjugation(*g.finite, integerize(*g.finite));

  g = group_closure(MorphismTable(2, {rot90}));
  check_conjugation(*g.finite, integerize(*g.finite));

  CHECK_THROWS_AS(integerize(MorphismTable(1, {Matrix{{2}}})), GroupNotFinite);
}

TEST_CASE("the lattice of a finite group is invariant", "[group]") {
  std::mt19937_64 rng(13);
  auto const      vals = testing::small_rationals(2, 3);
  MorphismTable   base(3, {Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                           Matrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  for (int t = 0; t < 5; ++t) {
    auto const    p    = testing::random_invertible(rng, 3, vals);
    auto const    pinv = *inverse(p);
    MorphismTable conj(3);
    for (Letter a = 0; a < base.size(); ++a) {
      conj.add(base.name(a), pinv * base[a] * p);
    }
    auto const g = group_closure(conj);
    REQUIRE(g.finite.has_value());
    // Even signed permutations: the 3-cycle and one sign change.
    CHECK(g.finite->order() == 24);
    auto const c = integerize(*g.finite);
    check_conjugation(*g.finite, c);
    // Rows of C span the invariant lattice: C M has the same HNF up to the
    // common denominator.
    Integer d = 1;
    for (auto const& x : c.entries()) {
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    }
    auto const lattice = hnf(to_integer_matrix(Rational(d) * c)).basis;
    for (auto const& m : g.finite->group.elements) {
      CHECK(hnf(to_integer_matrix(Rational(d) * c * m)).basis == lattice);
    }
  }
}
