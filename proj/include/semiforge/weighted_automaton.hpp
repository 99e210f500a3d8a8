#ifndef SEMIFORGE_WEIGHTED_AUTOMATON_HPP_
#define SEMIFORGE_WEIGHTED_AUTOMATON_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional

#include "linalg.hpp"
#include "semigroup.hpp"
#include "word.hpp"

namespace semiforge {

  // (n, Sigma, M, alpha, eta) computing |A|(w) = alpha M(w) eta^T. alpha and
  // eta are 1 x n row vectors.
  struct WeightedAutomaton {
    MorphismTable transitions;
    Matrix        alpha;
    Matrix        eta;

    WeightedAutomaton(MorphismTable t, Matrix a, Matrix e);

    std::size_t states() const noexcept {
      return transitions.dim();
    }
  };

  Rational evaluate(WeightedAutomaton const& a, Word const& w);

  struct ReachableSpace {
    Subspace    space;
    // BFS rounds until no new direction appeared (<= n).
    std::size_t rounds = 0;
  };

  // Span of start * M(w) over all words, by breadth-first search over
  // vectors with incremental echelon deduplication.
  ReachableSpace reachable_space(Matrix const&              start,
                                 std::vector<Matrix> const& matrices);

  // span{alpha M(w)}.
  Subspace forward_space(WeightedAutomaton const& a);
  // span{(M(w) eta^T)^T}.
  Subspace backward_space(WeightedAutomaton const& a);

  // Restriction of a to its forward space (states = its dimension), with
  // |result| = |a|.
  WeightedAutomaton restrict_forward(WeightedAutomaton const& a);
  // (M^T, eta, alpha): computes w -> |a|(reverse of w).
  WeightedAutomaton transpose(WeightedAutomaton const& a);

  // Minimal automaton: forward restriction, then backward restriction of the
  // result.
  WeightedAutomaton minimize(WeightedAutomaton const& a);

  struct WaFinitenessResult {
    Verdict             verdict = Verdict::undecided;
    std::size_t         minimal_states = 0;
    // Transition-monoid word of a non-torsion element of the minimal
    // automaton.
    std::optional<Word> witness;
    std::size_t         monoid_size = 0;
  };

  // |A| has finitely many values iff the transition semigroup of the minimal
  // automaton is finite.
  WaFinitenessResult decide_wa_finiteness(
      WeightedAutomaton const&   a,
      std::optional<std::size_t> cap  = std::nullopt,
      ExecutionMode              mode = ExecutionMode::serial);

}  // namespace semiforge

#endif  // SEMIFORGE_WEIGHTED_AUTOMATON_HPP_
