#include "semiforge/weighted_automaton.hpp"

#include <deque>  // for deque

#include "semiforge/errors.hpp"

namespace semiforge {

  WeightedAutomaton::WeightedAutomaton(MorphismTable t, Matrix a, Matrix e)
      : transitions(std::move(t)), alpha(std::move(a)), eta(std::move(e)) {
    auto const n = transitions.dim();
    if (alpha.rows() != 1 || alpha.cols() != n) {
      throw DimensionMismatch("alpha must have " + std::to_string(n)
                              + " entries");
    }
    if (eta.rows() != 1 || eta.cols() != n) {
      throw DimensionMismatch("eta must have " + std::to_string(n)
                              + " entries");
    }
  }

  Rational evaluate(WeightedAutomaton const& a, Word const& w) {
    for (auto x : w) {
      if (x >= a.transitions.size()) {
        throw UnknownLetter("letter index " + std::to_string(x)
                            + " outside the alphabet");
      }
    }
    Matrix v = a.alpha;
    for (auto x : w) {
      v = v * a.transitions[x];
    }
    auto const s = v * a.eta.transpose();
    return s.rows() == 0 || s.cols() == 0 ? Rational(0) : s(0, 0);
  }

  ReachableSpace reachable_space(Matrix const&              start,
                                 std::vector<Matrix> const& matrices) {
    ReachableSpace result{Subspace(start.cols()), 0};
    if (start.is_zero()) {
      return result;
    }
    std::vector<Matrix> level{start};
    result.space = Subspace::span(start);
    while (!level.empty()) {
      std::vector<Matrix> next;
      for (auto const& v : level) {
        for (auto const& m : matrices) {
          auto u = v * m;
          if (!result.space.contains(u)) {
            result.space = Subspace::span(result.space.basis().stack(u));
            next.push_back(std::move(u));
          }
        }
      }
      if (next.empty()) {
        break;
      }
      ++result.rounds;
      level = std::move(next);
    }
    return result;
  }

  Subspace forward_space(WeightedAutomaton const& a) {
    return reachable_space(a.alpha, a.transitions.matrices()).space;
  }

  Subspace backward_space(WeightedAutomaton const& a) {
    std::vector<Matrix> t;
    for (auto const& m : a.transitions.matrices()) {
      t.push_back(m.transpose());
    }
    return reachable_space(a.eta, t).space;
  }

  WeightedAutomaton restrict_forward(WeightedAutomaton const& a) {
    auto const  f = forward_space(a);
    auto const  d = f.dim();
    auto const& F = f.basis();
    // F M(x) = N(x) F since the forward space is invariant; alpha = a' F and
    // the new final vector is F eta^T.
    MorphismTable t(d);
    for (Letter x = 0; x < a.transitions.size(); ++x) {
      auto n = solve_left(F, F * a.transitions[x]);
      SEMIFORGE_ENSURE(n.has_value(), "forward space is invariant");
      t.add(a.transitions.name(x), std::move(*n));
    }
    auto alpha = d == 0 ? Matrix(1, 0) : *solve_left(F, a.alpha);
    auto eta   = (F * a.eta.transpose()).transpose();
    if (d == 0) {
      eta = Matrix(1, 0);
    }
    return WeightedAutomaton(std::move(t), std::move(alpha), std::move(eta));
  }

  WeightedAutomaton transpose(WeightedAutomaton const& a) {
    MorphismTable t(a.states());
    for (Letter x = 0; x < a.transitions.size(); ++x) {
      t.add(a.transitions.name(x), a.transitions[x].transpose());
    }
    return WeightedAutomaton(std::move(t), a.eta, a.alpha);
  }

  WeightedAutomaton minimize(WeightedAutomaton const& a) {
    return transpose(restrict_forward(transpose(restrict_forward(a))));
  }

  WaFinitenessResult decide_wa_finiteness(WeightedAutomaton const&   a,
                                          std::optional<std::size_t> cap,
                                          ExecutionMode              mode) {
    auto const         b = minimize(a);
    WaFinitenessResult r;
    r.minimal_states = b.states();
    auto f           = decide_finiteness(b.transitions, cap, mode);
    r.verdict        = f.verdict;
    r.witness        = f.witness;
    r.monoid_size    = f.closure.size();
    return r;
  }

}  // namespace semiforge
