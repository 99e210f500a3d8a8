#include <omp.h>

#include <utility>  // for move

#include "semiforge/detail/closure_kernel.hpp"
#include "semiforge/semigroup.hpp"

namespace semiforge {

  std::optional<std::size_t> ClosureResult::find(Matrix const& a) const {
    auto it = index.find(a.key());
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool ClosureResult::contains_identity() const {
    return find(Matrix::identity(n)).has_value();
  }

  namespace detail {

    namespace {
      struct Candidate {
        Matrix      value;
        std::string key;
      };

      // Products frontier[i] * M(a) for all i and letters a, in the order
      // (i, a). This is the data-parallel part of each BFS level.
      std::vector<Candidate> expand(std::vector<Matrix> const& frontier,
                                    MorphismTable const&       table,
                                    ExecutionMode              mode) {
        auto const             m     = table.size();
        auto const             total = frontier.size() * m;
        std::vector<Candidate> out(total);
        if (mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
          for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(total);
               ++t) {
            auto const i = static_cast<std::size_t>(t) / m;
            auto const a = static_cast<std::size_t>(t) % m;
            out[t].value = frontier[i] * table[static_cast<Letter>(a)];
            out[t].key   = out[t].value.key();
          }
        } else {
          for (std::size_t t = 0; t < total; ++t) {
            auto const i = t / m;
            auto const a = t % m;
            out[t].value = frontier[i] * table[static_cast<Letter>(a)];
            out[t].key   = out[t].value.key();
          }
        }
        return out;
      }

      // Index of the first non-torsion matrix among elements[first, last).
      std::optional<std::size_t>
      first_non_torsion(std::vector<Matrix> const& elements,
                        std::size_t                first,
                        std::size_t                last,
                        ExecutionMode              mode) {
        auto const        count = last - first;
        std::vector<char> torsion(count, 1);
        if (mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
          for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(count);
               ++t) {
            torsion[t] = is_torsion(elements[first + t]) ? 1 : 0;
          }
        } else {
          for (std::size_t t = 0; t < count; ++t) {
            torsion[t] = is_torsion(elements[first + t]) ? 1 : 0;
            if (!torsion[t]) {
              break;
            }
          }
        }
        for (std::size_t t = 0; t < count; ++t) {
          if (!torsion[t]) {
            return first + t;
          }
        }
        return std::nullopt;
      }
    }  // namespace

    KernelOutcome run_closure(MorphismTable const& table,
                              KernelOptions const& opts) {
      KernelOutcome  out;
      ClosureResult& c = out.closure;
      c.n              = table.dim();
      c.cap            = opts.cap.value_or(0);

      auto const add = [&c](Matrix value, std::string key, Word word) {
        c.index.emplace(std::move(key), c.elements.size());
        c.elements.push_back(std::move(value));
        c.witnesses.push_back(std::move(word));
      };

      // The level being expanded, as a range of c.elements. The semigroup
      // closure starts from the identity without recording it.
      std::vector<Matrix> frontier{Matrix::identity(table.dim())};
      std::size_t         level_first = 0;
      if (opts.include_identity) {
        auto id = Matrix::identity(table.dim());
        add(id, id.key(), Word{});
        c.level_sizes.push_back(1);
        if (opts.check_torsion) {
          out.non_torsion = first_non_torsion(c.elements, 0, 1, opts.mode);
        }
      } else {
        c.level_sizes.push_back(0);
      }
      bool virtual_root = !opts.include_identity;

      while (!out.non_torsion) {
        auto candidates = expand(frontier, table, opts.mode);
        auto const m           = table.size();
        auto const next_first  = c.elements.size();
        for (std::size_t t = 0; t < candidates.size(); ++t) {
          auto& cand = candidates[t];
          if (c.index.contains(cand.key)) {
            continue;
          }
          Word w = virtual_root ? Word{}
                                : c.witnesses[level_first + t / m];
          w.push_back(static_cast<Letter>(t % m));
          if (opts.cap && c.elements.size() >= *opts.cap) {
            c.status             = ClosureStatus::exceeded_cap;
            out.overflow_witness = std::move(w);
            c.level_sizes.push_back(c.elements.size() - next_first);
            if (opts.check_torsion) {
              out.non_torsion = first_non_torsion(
                  c.elements, next_first, c.elements.size(), opts.mode);
            }
            return out;
          }
          add(std::move(cand.value), std::move(cand.key), std::move(w));
        }
        auto const next_last = c.elements.size();
        if (next_last == next_first) {
          break;
        }
        c.level_sizes.push_back(next_last - next_first);
        if (opts.check_torsion) {
          out.non_torsion
              = first_non_torsion(c.elements, next_first, next_last, opts.mode);
        }
        frontier.assign(c.elements.begin() + next_first,
                        c.elements.begin() + next_last);
        level_first  = next_first;
        virtual_root = false;
      }
      return out;
    }

  }  // namespace detail

  ClosureResult closure(MorphismTable const&       table,
                        std::optional<std::size_t> cap,
                        ExecutionMode              mode) {
    return detail::run_closure(table, {false, cap, false, mode}).closure;
  }

  ClosureResult monoid_closure(MorphismTable const&       table,
                               std::optional<std::size_t> cap,
                               ExecutionMode              mode) {
    return detail::run_closure(table, {true, cap, false, mode}).closure;
  }

  FinitenessResult decide_finiteness(MorphismTable const&       table,
                                     std::optional<std::size_t> cap,
                                     ExecutionMode              mode) {
    auto             k = detail::run_closure(table, {false, cap, true, mode});
    FinitenessResult r;
    if (k.non_torsion) {
      r.verdict        = Verdict::infinite;
      r.witness        = k.closure.witnesses[*k.non_torsion];
      r.witness_matrix = k.closure.elements[*k.non_torsion];
    } else if (k.closure.finite()) {
      r.verdict = Verdict::finite;
    } else {
      r.verdict = Verdict::undecided;
    }
    r.closure = std::move(k.closure);
    return r;
  }

  std::optional<Word> shortest_word_for(ClosureResult const& c,
                                        Matrix const&        a) {
    auto i = c.find(a);
    if (!i) {
      return std::nullopt;
    }
    return c.witnesses[*i];
  }

}  // namespace semiforge
