#ifndef SEMIFORGE_EXTERIOR_HPP_
#define SEMIFORGE_EXTERIOR_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t
#include <map>      // for map
#include <vector>   // for vector

#include "linalg.hpp"

namespace semiforge {

  // Element of the grade-r part of the exterior algebra of Q^n, stored as
  // coefficients over strictly increasing r-subsets of {0, ..., n-1}
  // (lexicographic order). Absent subsets have coefficient zero.
  class MultiVector {
   public:
    using IndexSet = std::vector<std::uint8_t>;

    MultiVector(std::size_t ambient, std::size_t grade)
        : _ambient(ambient), _grade(grade) {}

    // The grade-0 unit, i.e. the wedge of no vectors.
    static MultiVector unit(std::size_t ambient);
    // Grade-1 multivector of the row vector v (1 x n).
    static MultiVector from_vector(Matrix const& v);
    // The basis vector e_i.
    static MultiVector basis_vector(std::size_t ambient, std::size_t i);

    std::size_t ambient_dim() const noexcept {
      return _ambient;
    }
    std::size_t grade() const noexcept {
      return _grade;
    }
    std::size_t terms() const noexcept {
      return _coeffs.size();
    }
    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    std::map<IndexSet, Rational> const& coefficients() const noexcept {
      return _coeffs;
    }
    // Coefficient of e_{i_1} ^ ... ^ e_{i_r}; indices strictly increasing.
    Rational coefficient(IndexSet const& indices) const;

    // Adds c to the coefficient of indices, dropping it if it becomes zero.
    void add_term(IndexSet const& indices, Rational const& c);

    friend bool operator==(MultiVector const&, MultiVector const&) = default;

   private:
    std::size_t                  _ambient;
    std::size_t                  _grade;
    std::map<IndexSet, Rational> _coeffs;
  };

  // u ^ v. Throws DimensionMismatch for different ambient spaces.
  MultiVector wedge(MultiVector const& u, MultiVector const& v);
  MultiVector operator-(MultiVector const& u);

  // True iff u = c * v for some nonzero rational c (both nonzero).
  bool proportional(MultiVector const& u, MultiVector const& v);

  // Wedge of the canonical basis rows of w in order; the grade-0 unit for the
  // zero subspace.
  MultiVector iota(Subspace const& w);
  // Wedge of the rows of an arbitrary matrix.
  MultiVector wedge_rows(Matrix const& rows);

  // w1 and w2 meet only in 0 iff iota(w1) ^ iota(w2) != 0.
  bool trivial_intersection(Subspace const& w1, Subspace const& w2);

}  // namespace semiforge

#endif  // SEMIFORGE_EXTERIOR_HPP_
