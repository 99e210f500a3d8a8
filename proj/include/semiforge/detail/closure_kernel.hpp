#ifndef SEMIFORGE_DETAIL_CLOSURE_KERNEL_HPP_
#define SEMIFORGE_DETAIL_CLOSURE_KERNEL_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional

#include "../semigroup.hpp"

namespace semiforge::detail {

  struct KernelOptions {
    bool                       include_identity = false;
    std::optional<std::size_t> cap;
    bool                       check_torsion = false;
    ExecutionMode              mode          = ExecutionMode::serial;
  };

  struct KernelOutcome {
    ClosureResult closure;
    // Index (into closure.elements) of the first non-torsion element found.
    std::optional<std::size_t> non_torsion;
    // Witness of the candidate that did not fit under the cap.
    std::optional<Word> overflow_witness;
  };

  KernelOutcome run_closure(MorphismTable const& table, KernelOptions const& opts);

}  // namespace semiforge::detail

#endif  // SEMIFORGE_DETAIL_CLOSURE_KERNEL_HPP_
