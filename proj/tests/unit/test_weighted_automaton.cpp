#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"

#include "helpers.hpp"

#include "semiforge/errors.hpp"
#include "semiforge/weighted_automaton.hpp"

using namespace semiforge;

namespace {
  Matrix const rot90{{0, 1}, {-1, 0}};

  WeightedAutomaton make(std::vector<Matrix> gens,
                         std::vector<Rational> alpha,
                         std::vector<Rational> eta) {
    auto const n = alpha.size();
    return WeightedAutomaton(MorphismTable(n, std::move(gens)),
                             Matrix::row_vector(std::move(alpha)),
                             Matrix::row_vector(std::move(eta)));
  }

  void check_same_values(WeightedAutomaton const& a,
                         WeightedAutomaton const& b,
                         std::size_t              max_len) {
    std::size_t const k = a.transitions.size();
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto const& w : testing::all_words(k, len)) {
        CHECK(evaluate(a, w) == evaluate(b, w));
      }
    }
  }
}  // namespace

TEST_CASE("evaluation examples", "[wa]") {
  auto const a = make({Matrix{{0, 1}, {0, 0}}}, {1, 0}, {0, 1});
  CHECK(evaluate(a, Word{0}) == 1);
  CHECK(evaluate(a, Word{}) == 0);
  CHECK(evaluate(a, Word{0, 0}) == 0);
  CHECK_THROWS_AS(evaluate(a, Word{1}), UnknownLetter);

  auto const z = make({rot90}, {0, 0}, {1, 1});
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(evaluate(z, Word(k, 0)) == 0);
  }
  auto const d = make({Matrix{{2}}}, {1}, {1});
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(evaluate(d, Word(k, 0)) == Rational(Integer(1) << k));
  }
  CHECK_THROWS_AS(make({Matrix{{2}}}, {1, 0}, {1}), DimensionMismatch);
}

TEST_CASE("forward and backward spaces", "[wa]") {
  auto const a = make({Matrix{{1, 0}, {0, 2}}}, {1, 0}, {1, 0});
  CHECK(forward_space(a) == Subspace::span(Matrix{{1, 0}}));
  auto const r = make({rot90}, {1, 1}, {1, 0});
  CHECK(forward_space(r) == Subspace::full(2));
  auto const z = make({rot90}, {0, 0}, {1, 0});
  CHECK(forward_space(z).dim() == 0);
  CHECK(reachable_space(Matrix{{1, 0, 0}}, {Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}).rounds <= 3);
}

TEST_CASE("minimize examples", "[wa]") {
  auto const a = make({Matrix{{1, 0}, {0, 2}}}, {1, 0}, {1, 0});
  auto const b = minimize(a);
  CHECK(b.states() == 1);
  CHECK(b.transitions[0] == Matrix{{1}});
  check_same_values(a, b, 5);

  auto const z  = make({Matrix{{2}}}, {0}, {1});
  auto const bz = minimize(z);
  CHECK(bz.states() == 0);
  CHECK(evaluate(bz, Word{0, 0}) == 0);

  auto const full = make({rot90}, {1, 0}, {1, 0});
  auto const bf   = minimize(full);
  CHECK(bf.states() == 2);
  check_same_values(full, bf, 6);
}

TEST_CASE("decide_wa_finiteness examples", "[wa]") {
  CHECK(decide_wa_finiteness(make({Matrix{{2}}}, {1}, {1})).verdict == Verdict::infinite);
  CHECK(decide_wa_finiteness(make({Matrix{{2}}}, {0}, {1})).verdict == Verdict::finite);
  auto const r = make({rot90}, {1, 0}, {1, 0});
  CHECK(decide_wa_finiteness(r).verdict == Verdict::finite);
  auto const values = oracle::automaton_values({1, 0}, {testing::to_oracle(rot90)}, {1, 0}, 8);
  CHECK(values == std::set<oracle::Q>{-1, 0, 1});
  // The transition matrix is infinite but the automaton only sees a
  // bounded part of it.
  auto const hidden = make({Matrix{{1, 0}, {0, 2}}}, {1, 0}, {1, 1});
  CHECK(decide_wa_finiteness(hidden).verdict == Verdict::finite);
}

TEST_CASE("minimization preserves values on random automata", "[wa]") {
  std::mt19937_64             rng(77);
  std::vector<Rational> const vals{0, 0, 1, -1, 2, Rational(1, 2)};
  for (int t = 0; t < 60; ++t) {
    std::size_t const   n = 1 + t % 3, k = 1 + t % 2;
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(testing::random_matrix(rng, n, n, vals));
    }
    WeightedAutomaton const a(MorphismTable(n, gens),
                              testing::random_matrix(rng, 1, n, vals),
                              testing::random_matrix(rng, 1, n, vals));
    auto const b = minimize(a);
    CHECK(b.states() <= n);
    check_same_values(a, b, 6);
    CHECK(minimize(b).states() == b.states());
  }
}

TEST_CASE("finiteness agrees with value enumeration", "[wa]") {
  // Ground truth by construction: finite cases have bounded value sets,
  // infinite cases keep producing new values.
  struct Case {
    WeightedAutomaton a;
    bool              finite;
  };
  std::vector<Case> cases{
      {make({Matrix{{2}}}, {1}, {1}), false},
      {make({Matrix{{Rational(1, 2)}}}, {1}, {1}), false},
      {make({rot90}, {1, 2}, {3, 1}), true},
      {make({Matrix{{1, 1}, {0, 1}}}, {1, 0}, {0, 1}), false},
      {make({Matrix{{1, 1}, {0, 1}}}, {0, 1}, {0, 1}), true},
      {make({Matrix{{0, 1}, {1, 0}}, Matrix{{1, 0}, {0, 0}}}, {1, 1}, {1, 0}), true},
      {make({Matrix{{-1}}}, {3}, {1}), true},
  };
  for (auto const& c : cases) {
    auto const values = oracle::automaton_values(
        {c.a.alpha.entries().begin(), c.a.alpha.entries().end()},
        testing::to_oracle(c.a.transitions.matrices()),
        {c.a.eta.entries().begin(), c.a.eta.entries().end()},
        8);
    auto const verdict = decide_wa_finiteness(c.a).verdict;
    CHECK(verdict == (c.finite ? Verdict::finite : Verdict::infinite));
    if (!c.finite) {
      CHECK(values.size() > 8);
    } else {
      CHECK(values.size() <= 8);
    }
  }
}
