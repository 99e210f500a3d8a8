#ifndef SEMIFORGE_LINALG_HPP_
#define SEMIFORGE_LINALG_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "matrix.hpp"

namespace semiforge {

  struct RrefResult {
    Matrix                   reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept {
      return pivots.size();
    }
  };

  // Reduced row echelon form by Gauss-Jordan elimination: pivot entries 1,
  // zeros above and below every pivot, zero rows at the bottom.
  RrefResult  rref(Matrix const& a);
  std::size_t rank(Matrix const& a);

  // Subspace of Q^n held by its reduced row echelon basis (no zero rows). The
  // basis is unique for the subspace, so equality is entry-wise comparison.
  class Subspace {
   public:
    // Zero subspace of Q^ambient.
    explicit Subspace(std::size_t ambient = 0);

    // Row space of rows.
    static Subspace span(Matrix const& rows);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const noexcept {
      return _basis.cols();
    }
    std::size_t dim() const noexcept {
      return _basis.rows();
    }
    Matrix const& basis() const noexcept {
      return _basis;
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivots;
    }

    // Coefficients c with v = c * basis() when v lies in the subspace.
    // v is a 1 x ambient_dim matrix.
    std::optional<Matrix> coordinates(Matrix const& v) const;
    bool                  contains(Matrix const& v) const;

    std::string key() const {
      return _basis.key();
    }

    friend bool operator==(Subspace const&, Subspace const&) = default;

   private:
    Matrix                   _basis;
    std::vector<std::size_t> _pivots;
  };

  // Row space Q^rows * a.
  Subspace image(Matrix const& a);
  // Left kernel {x : x a = 0}.
  Subspace kernel(Matrix const& a);

  // Sum of two subspaces of the same ambient space.
  Subspace operator+(Subspace const& u, Subspace const& v);

  std::optional<Matrix> inverse(Matrix const& a);
  Rational              determinant(Matrix const& a);

  // X with X * basis = y, for y whose rows lie in the row space of basis
  // (rows of basis linearly independent). std::nullopt otherwise.
  std::optional<Matrix> solve_left(Matrix const& basis, Matrix const& y);

}  // namespace semiforge

#endif  // SEMIFORGE_LINALG_HPP_
