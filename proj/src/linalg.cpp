#include "semiforge/linalg.hpp"

#include <utility>  // for swap

#include "semiforge/errors.hpp"

namespace semiforge {

  namespace {
    void swap_rows(Matrix& a, std::size_t i, std::size_t j) {
      if (i == j) {
        return;
      }
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(i, c), a(j, c));
      }
    }
  }  // namespace

  RrefResult rref(Matrix const& a) {
    RrefResult  result{a, {}};
    Matrix&     m    = result.reduced;
    std::size_t row  = 0;
    Rational    f, t;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t p = row;
      while (p < m.rows() && sgn(m(p, col)) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      swap_rows(m, row, p);
      if (m(row, col) != 1) {
        f = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
          m(row, c) *= f;
        }
      }
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == row || sgn(m(r, col)) == 0) {
          continue;
        }
        f = m(r, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
          if (sgn(m(row, c)) != 0) {
            t = f * m(row, c);
            m(r, c) -= t;
          }
        }
      }
      result.pivots.push_back(col);
      ++row;
    }
    return result;
  }

  std::size_t rank(Matrix const& a) {
    return rref(a).rank();
  }

  Subspace::Subspace(std::size_t ambient) : _basis(0, ambient), _pivots() {}

  Subspace Subspace::span(Matrix const& rows) {
    auto     r = rref(rows);
    Subspace s(rows.cols());
    s._basis  = r.reduced.row_block(0, r.rank());
    s._pivots = std::move(r.pivots);
    return s;
  }

  Subspace Subspace::full(std::size_t ambient) {
    return span(Matrix::identity(ambient));
  }

  std::optional<Matrix> Subspace::coordinates(Matrix const& v) const {
    if (v.rows() != 1 || v.cols() != ambient_dim()) {
      throw DimensionMismatch("coordinates of a vector of the wrong length");
    }
    // Basis row i has a 1 in column pivots[i] and 0 in every other pivot
    // column, so the coefficients can be read off at the pivots.
    Matrix c(1, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      c(0, i) = v(0, _pivots[i]);
    }
    if (!(c * _basis == v)) {
      return std::nullopt;
    }
    return c;
  }

  bool Subspace::contains(Matrix const& v) const {
    return coordinates(v).has_value();
  }

  Subspace image(Matrix const& a) {
    return Subspace::span(a);
  }

  Subspace kernel(Matrix const& a) {
    // x a = 0  <=>  a^T x^T = 0: read the null space off rref(a^T).
    auto const  r    = rref(a.transpose());
    std::size_t n    = a.rows();
    std::size_t nfree = n - r.rank();
    Matrix      k(nfree, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) {
      is_pivot[p] = true;
    }
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      k(out, f) = 1;
      for (std::size_t i = 0; i < r.rank(); ++i) {
        k(out, r.pivots[i]) = -r.reduced(i, f);
      }
      ++out;
    }
    return Subspace::span(k);
  }

  Subspace operator+(Subspace const& u, Subspace const& v) {
    if (u.ambient_dim() != v.ambient_dim()) {
      throw DimensionMismatch("sum of subspaces of different ambient spaces");
    }
    return Subspace::span(u.basis().stack(v.basis()));
  }

  std::optional<Matrix> inverse(Matrix const& a) {
    if (!a.is_square()) {
      throw DimensionMismatch("inverse of a non-square matrix");
    }
    auto const n = a.rows();
    Matrix     aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = a(i, j);
      }
      aug(i, n + i) = 1;
    }
    auto r = rref(aug);
    if (r.rank() < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
      return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inv(i, j) = r.reduced(i, n + j);
      }
    }
    return inv;
  }

  Rational determinant(Matrix const& a) {
    if (!a.is_square()) {
      throw DimensionMismatch("determinant of a non-square matrix");
    }
    Matrix   m = a;
    Rational det(1), f, t;
    for (std::size_t col = 0; col < m.cols(); ++col) {
      std::size_t p = col;
      while (p < m.rows() && sgn(m(p, col)) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        return Rational(0);
      }
      if (p != col) {
        swap_rows(m, p, col);
        det = -det;
      }
      det *= m(col, col);
      for (std::size_t r = col + 1; r < m.rows(); ++r) {
        if (sgn(m(r, col)) == 0) {
          continue;
        }
        f = m(r, col) / m(col, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
          t = f * m(col, c);
          m(r, c) -= t;
        }
      }
    }
    return det;
  }

  std::optional<Matrix> solve_left(Matrix const& basis, Matrix const& y) {
    if (basis.cols() != y.cols()) {
      throw DimensionMismatch("solve_left with mismatched widths");
    }
    auto const s = Subspace::span(basis);
    if (s.dim() != basis.rows()) {
      throw DimensionMismatch("solve_left needs linearly independent rows");
    }
    // Coordinates against the canonical basis, then change of basis
    // basis = T * canonical.
    auto const t = [&]() {
      Matrix m(basis.rows(), s.dim());
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        auto c = s.coordinates(basis.row(i));
        for (std::size_t j = 0; j < s.dim(); ++j) {
          m(i, j) = (*c)(0, j);
        }
      }
      return m;
    }();
    auto const t_inv = inverse(t);
    Matrix     x(y.rows(), basis.rows());
    for (std::size_t i = 0; i < y.rows(); ++i) {
      auto c = s.coordinates(y.row(i));
      if (!c) {
        return std::nullopt;
      }
      auto xi = *c * *t_inv;
      for (std::size_t j = 0; j < basis.rows(); ++j) {
        x(i, j) = xi(0, j);
      }
    }
    return x;
  }

}  // namespace semiforge
