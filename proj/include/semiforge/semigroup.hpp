#ifndef SEMIFORGE_SEMIGROUP_HPP_
#define SEMIFORGE_SEMIGROUP_HPP_

#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "matrix.hpp"
#include "word.hpp"

namespace semiforge {

  // serial is the reference mode. parallel computes each BFS level's products
  // (and torsion tests) with OpenMP and merges them in the serial order, so
  // both modes return identical element lists and witnesses.
  enum class ExecutionMode { serial, parallel };

  enum class ClosureStatus { finite, exceeded_cap };

  // Elements of a finitely generated semigroup (or monoid) in BFS order,
  // each with its length-minimal, lexicographically least witness word.
  struct ClosureResult {
    std::size_t                                  n = 0;
    std::vector<Matrix>                          elements;
    std::vector<Word>                            witnesses;
    std::unordered_map<std::string, std::size_t> index;
    ClosureStatus status = ClosureStatus::finite;
    std::size_t   cap    = 0;
    // Number of elements first reached with witness length 0, 1, 2, ...
    std::vector<std::size_t> level_sizes;

    std::size_t size() const noexcept {
      return elements.size();
    }
    bool finite() const noexcept {
      return status == ClosureStatus::finite;
    }
    std::optional<std::size_t> find(Matrix const& a) const;
    bool contains(Matrix const& a) const {
      return find(a).has_value();
    }
    // Whether I_n is the value of some word (of length >= 1 for a semigroup
    // closure).
    bool contains_identity() const;
    // Longest witness length.
    std::size_t depth() const noexcept {
      return level_sizes.empty() ? 0 : level_sizes.size() - 1;
    }
  };

  inline constexpr std::size_t default_closure_cap = 1'000'000;

  // M(Sigma^+) by breadth-first search from the generators. Stops with
  // exceeded_cap when the element count would exceed cap.
  ClosureResult closure(MorphismTable const&       table,
                        std::optional<std::size_t> cap  = std::nullopt,
                        ExecutionMode              mode = ExecutionMode::serial);

  // M(Sigma^*): as closure, plus the identity with the empty witness.
  ClosureResult monoid_closure(
      MorphismTable const&       table,
      std::optional<std::size_t> cap  = std::nullopt,
      ExecutionMode              mode = ExecutionMode::serial);

  // True iff A^i = A^j for some i < j. Uses the minimal polynomial
  // mu = x^a q(x), q(0) != 0: A is torsion iff q is squarefree and divides
  // x^L - 1 for L = lcm{k : phi(k) <= deg q}.
  bool is_torsion(Matrix const& a);

  // lcm{k >= 1 : phi(k) <= d}.
  Integer torsion_exponent(std::size_t d);
  // Euler's totient.
  std::size_t euler_phi(std::size_t k);

  enum class Verdict { finite, infinite, undecided };

  struct FinitenessResult {
    Verdict verdict = Verdict::undecided;
    // Complete when finite; the part explored so far otherwise.
    ClosureResult closure;
    // Infinite: BFS witness of the first non-torsion element and its value.
    std::optional<Word>   witness;
    std::optional<Matrix> witness_matrix;
  };

  // Runs the closure and tests every new element for torsion. A finitely
  // generated matrix semigroup is infinite iff it has a non-torsion element,
  // so without a cap this always terminates; with one the answer can be
  // undecided.
  FinitenessResult decide_finiteness(
      MorphismTable const&       table,
      std::optional<std::size_t> cap  = std::nullopt,
      ExecutionMode              mode = ExecutionMode::serial);

  // The stored witness of a in a finite closure, std::nullopt if a is not an
  // element.
  std::optional<Word> shortest_word_for(ClosureResult const& c,
                                        Matrix const&        a);

  ////////////////////////////////////////////////////////////////////////
  // Length and size bounds
  ////////////////////////////////////////////////////////////////////////

  struct BoundReport {
    std::size_t n;
    // (2n)!, an upper bound for the largest finite subgroup of GL(n, Q).
    Integer g_upper;
    // 2^(n(2n+3)) * g_upper^(n+1).
    Integer length_bound;
    // 2^n n!, the order of the signed permutation group. Informational: it
    // is the exact maximum only for n outside {2, 4, 6, 7, 8, 9, 10}.
    Integer signed_permutation_order;
    bool    signed_permutation_is_maximum;
  };

  BoundReport length_bound(std::size_t n);

  // sum_{l=1}^{L} m^l with L = length_bound(n): the number of words of
  // length 1..L over m letters. Kept symbolic when too large to expand.
  class SizeBound {
   public:
    SizeBound(std::size_t n, Integer m);

    Integer const& letters() const noexcept {
      return _m;
    }
    Integer const& max_length() const noexcept {
      return _length;
    }
    std::optional<Integer> const& exact() const noexcept {
      return _exact;
    }
    // count <= bound.
    bool admits(Integer const& count) const;
    // Decimal digits when exact, "(m^(L+1)-m)/(m-1)" otherwise.
    std::string to_string() const;

    static constexpr std::size_t max_exact_bits = 1u << 16;

   private:
    Integer                _m;
    Integer                _length;
    std::optional<Integer> _exact;
  };

  inline SizeBound size_bound(std::size_t n, Integer const& m) {
    return SizeBound(n, m);
  }

}  // namespace semiforge

#endif  // SEMIFORGE_SEMIGROUP_HPP_
