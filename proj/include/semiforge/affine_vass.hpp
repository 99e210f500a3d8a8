#ifndef SEMIFORGE_AFFINE_VASS_HPP_
#define SEMIFORGE_AFFINE_VASS_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "matrix.hpp"
#include "semigroup.hpp"

namespace semiforge {

  using IntegerVector = std::vector<Integer>;

  // Transition q --(A, b)--> r acting on configurations by v -> A v + b
  // (column convention, as for VASS counters).
  struct AffineTransition {
    std::size_t   from;
    IntegerMatrix A;
    IntegerVector b;
    std::size_t   to;
  };

  struct Configuration {
    std::size_t   state;
    IntegerVector vector;

    friend bool operator==(Configuration const&, Configuration const&) = default;
    friend auto operator<=>(Configuration const&, Configuration const&) = default;
  };

  class AffineVass {
   public:
    AffineVass(std::size_t dim, std::vector<std::string> states);

    // Throws DimensionMismatch for wrongly sized A or b and Error for unknown
    // states.
    void add_transition(AffineTransition t);

    std::size_t dim() const noexcept {
      return _dim;
    }
    std::vector<std::string> const& states() const noexcept {
      return _states;
    }
    std::vector<AffineTransition> const& transitions() const noexcept {
      return _transitions;
    }
    std::size_t state(std::string const& name) const;

    // The distinct transition matrices, as a table with one letter per
    // matrix named after its first transition ("t0", "t1", ...).
    MorphismTable matrix_table() const;

    std::string format(Configuration const& c) const;
    // Inverse of format: "q(1,-2)". Throws ParseError.
    Configuration parse(std::string_view text) const;

   private:
    std::size_t                   _dim;
    std::vector<std::string>      _states;
    std::vector<AffineTransition> _transitions;
  };

  // All one-step successors, sorted and without duplicates.
  std::vector<Configuration> step(AffineVass const& v, Configuration const& c);

  // Finite monoid property: whether the transition matrices generate a
  // finite semigroup.
  FinitenessResult check_fmp(AffineVass const&          v,
                             std::optional<std::size_t> cap = std::nullopt);

  struct ReachResult {
    bool reached = false;
    // Transition indices and the configurations they lead through (starting
    // with from).
    std::vector<std::size_t>   path;
    std::vector<Configuration> configurations;
    std::size_t                expanded = 0;
  };

  // Breadth-first search from `from`, expanding at most budget
  // configurations. Sound but incomplete.
  ReachResult reach_bounded(AffineVass const&    v,
                            Configuration const& from,
                            Configuration const& to,
                            std::size_t          budget);

}  // namespace semiforge

#endif  // SEMIFORGE_AFFINE_VASS_HPP_
