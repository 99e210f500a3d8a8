#ifndef SEMIFORGE_GROUP_LATTICE_HPP_
#define SEMIFORGE_GROUP_LATTICE_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "semigroup.hpp"

namespace semiforge {

  // A finite subgroup of GL(n, Q) generated by the letters of a table: the
  // monoid closure (identity first, empty witness) is the group.
  struct FiniteGroupClosure {
    MorphismTable generators;
    ClosureResult group;

    std::size_t order() const noexcept {
      return group.size();
    }
  };

  struct GroupClosureResult {
    std::optional<FiniteGroupClosure> finite;
    // Set when the group is infinite: a non-torsion element, or the first
    // element beyond the (2n)! order bound.
    std::optional<Word> witness;
    bool                order_bound_exceeded = false;
  };

  // Throws NonInvertibleGenerator. The order cap is (2n)!, or the smaller
  // cap when one is given.
  GroupClosureResult group_closure(MorphismTable const&       generators,
                                   std::optional<std::size_t> cap = std::nullopt,
                                   ExecutionMode mode = ExecutionMode::serial);

  // A word of length <= |H| - 1 over the generators of the finite monoid H
  // evaluating to target: the BFS witness. std::nullopt if target is not in
  // H.
  std::optional<Word> short_product(ClosureResult const& h,
                                    Matrix const&        target);

  // Row-style Hermite normal form of the row lattice of b: the nonzero rows
  // of an upper echelon basis with positive pivots and every entry above a
  // pivot reduced into [0, pivot).
  struct IntegerLatticeBasis {
    IntegerMatrix basis;

    std::size_t rank() const noexcept {
      return basis.rows();
    }
  };

  IntegerLatticeBasis hnf(IntegerMatrix const& b);

  // C with C M C^-1 in GL(n, Z) for every M in the group. C's rows are a
  // basis of the lattice spanned by all rows of all group elements.
  Matrix integerize(FiniteGroupClosure const& g);
  // Closes the generators first; throws GroupNotFinite.
  Matrix integerize(MorphismTable const& generators);

}  // namespace semiforge

#endif  // SEMIFORGE_GROUP_LATTICE_HPP_
