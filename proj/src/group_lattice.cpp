#include "semiforge/group_lattice.hpp"

#include <limits>   // for numeric_limits
#include <utility>  // for swap

#include "semiforge/detail/closure_kernel.hpp"
#include "semiforge/errors.hpp"
#include "semiforge/linalg.hpp"

namespace semiforge {

  GroupClosureResult group_closure(MorphismTable const&       generators,
                                   std::optional<std::size_t> cap,
                                   ExecutionMode              mode) {
    auto const n = generators.dim();
    for (Letter a = 0; a < generators.size(); ++a) {
      if (rank(generators[a]) != n) {
        throw NonInvertibleGenerator("generator \"" + generators.name(a)
                                     + "\" is not invertible");
      }
    }
    // (2n)! overflows size_t from n = 11 on; saturate.
    std::size_t order_bound = 1;
    for (std::size_t k = 2; k <= 2 * n; ++k) {
      if (order_bound > std::numeric_limits<std::size_t>::max() / k) {
        order_bound = std::numeric_limits<std::size_t>::max();
        break;
      }
      order_bound *= k;
    }
    if (cap && *cap < order_bound) {
      order_bound = *cap;
    }

    auto k = detail::run_closure(generators, {true, order_bound, true, mode});
    GroupClosureResult r;
    if (k.non_torsion) {
      r.witness = k.closure.witnesses[*k.non_torsion];
    } else if (!k.closure.finite()) {
      r.witness              = k.overflow_witness;
      r.order_bound_exceeded = true;
    } else {
      r.finite = FiniteGroupClosure{generators, std::move(k.closure)};
    }
    return r;
  }

  std::optional<Word> short_product(ClosureResult const& h,
                                    Matrix const&        target) {
    return shortest_word_for(h, target);
  }

  namespace {
    void swap_rows(IntegerMatrix& a, std::size_t i, std::size_t j) {
      if (i == j) {
        return;
      }
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(i, c), a(j, c));
      }
    }

    // row_i <- row_i - f * row_j
    void sub_multiple(IntegerMatrix&  a,
                      std::size_t     i,
                      std::size_t     j,
                      Integer const&  f,
                      std::size_t     from_col) {
      for (std::size_t c = from_col; c < a.cols(); ++c) {
        a(i, c) -= f * a(j, c);
      }
    }

    // floor(a / b) for b > 0
    Integer floor_div(Integer const& a, Integer const& b) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return q;
    }
  }  // namespace

  IntegerLatticeBasis hnf(IntegerMatrix const& b) {
    IntegerMatrix m   = b;
    std::size_t   row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      // Euclid on column col over rows row.. until only one nonzero entry
      // remains; each step is unimodular, so the lattice is unchanged.
      while (true) {
        std::size_t best = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r) {
          if (sgn(m(r, col)) != 0
              && (best == m.rows() || abs(m(r, col)) < abs(m(best, col)))) {
            best = r;
          }
        }
        if (best == m.rows()) {
          break;
        }
        swap_rows(m, row, best);
        bool done = true;
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
          if (sgn(m(r, col)) != 0) {
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), m(r, col).get_mpz_t(),
                       m(row, col).get_mpz_t());
            sub_multiple(m, r, row, q, col);
            if (sgn(m(r, col)) != 0) {
              done = false;
            }
          }
        }
        if (done) {
          break;
        }
      }
      if (sgn(m(row, col)) == 0) {
        continue;
      }
      if (sgn(m(row, col)) < 0) {
        for (std::size_t c = col; c < m.cols(); ++c) {
          m(row, c) = -m(row, c);
        }
      }
      for (std::size_t r = 0; r < row; ++r) {
        auto const q = floor_div(m(r, col), m(row, col));
        if (sgn(q) != 0) {
          sub_multiple(m, r, row, q, col);
        }
      }
      ++row;
    }
    IntegerLatticeBasis result{IntegerMatrix(row, m.cols())};
    for (std::size_t i = 0; i < row; ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        result.basis(i, j) = m(i, j);
      }
    }
    return result;
  }

  Matrix integerize(FiniteGroupClosure const& g) {
    auto const n = g.generators.dim();
    // Common denominator d of every entry of every element.
    Integer d = 1;
    for (auto const& m : g.group.elements) {
      for (auto const& x : m.entries()) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
      }
    }
    // Lattice d * A, where A is spanned by the rows e_i M of all elements M.
    // Rows are added one element at a time and the running basis is
    // re-reduced, keeping entries small.
    IntegerMatrix basis(0, n);
    for (auto const& m : g.group.elements) {
      IntegerMatrix batch(basis.rows() + n, n);
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          batch(i, j) = basis(i, j);
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Rational x = m(i, j) * d;
          batch(basis.rows() + i, j) = x.get_num();
        }
      }
      basis = hnf(batch).basis;
    }
    if (basis.rows() != n) {
      throw Error("lattice spanned by the group has rank below n");
    }
    Rational inv_d(Integer(1), d);
    inv_d.canonicalize();
    return inv_d * basis.to_rational();
  }

  Matrix integerize(MorphismTable const& generators) {
    auto r = group_closure(generators);
    if (!r.finite) {
      throw GroupNotFinite("the generated group is infinite (witness "
                           + generators.format(*r.witness) + ")");
    }
    return integerize(*r.finite);
  }

}  // namespace semiforge
