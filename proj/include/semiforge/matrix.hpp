#ifndef SEMIFORGE_MATRIX_HPP_
#define SEMIFORGE_MATRIX_HPP_

#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <string>            // for string
#include <vector>            // for vector

#include "rational.hpp"

namespace semiforge {

  // Dense rows x cols matrix of exact rationals, stored row-major.
  //
  // Vectors are rows throughout the library: a matrix A acts on x by x -> xA,
  // so the image of A is its row space and its kernel is the left kernel.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) {
      return Matrix(rows, cols);
    }
    // 1 x n matrix holding the given row vector.
    static Matrix row_vector(std::vector<Rational> entries);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    std::span<Rational const> entries() const noexcept {
      return _entries;
    }
    std::span<Rational const> row_span(std::size_t i) const {
      return std::span<Rational const>(_entries).subspan(i * _cols, _cols);
    }
    // Row i as a 1 x cols matrix.
    Matrix row(std::size_t i) const;
    // Rows [first, first + count) as a count x cols matrix.
    Matrix row_block(std::size_t first, std::size_t count) const;
    // This matrix on top of other.
    Matrix stack(Matrix const& other) const;

    Matrix transpose() const;
    bool   is_zero() const;
    bool   is_identity() const;
    bool   is_integral() const;

    // Injective byte encoding: equal keys iff equal matrices.
    std::string key() const;

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _entries;
  };

  // Exact product; throws DimensionMismatch when cols(a) != rows(b).
  Matrix operator*(Matrix const& a, Matrix const& b);
  Matrix operator+(Matrix const& a, Matrix const& b);
  Matrix operator-(Matrix const& a, Matrix const& b);
  Matrix operator*(Rational const& s, Matrix const& a);

  inline Matrix mat_mul(Matrix const& a, Matrix const& b) {
    return a * b;
  }
  inline bool mat_eq(Matrix const& a, Matrix const& b) {
    return a == b;
  }
  inline std::string canonical_key(Matrix const& a) {
    return a.key();
  }

  // a^k for square a, k >= 0.
  Matrix power(Matrix const& a, std::size_t k);

  std::string to_string(Matrix const& a);

  // Dense integer matrix, used for lattice bases.
  class IntegerMatrix {
   public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    Integer& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    Matrix to_rational() const;

    friend bool operator==(IntegerMatrix const&, IntegerMatrix const&)
        = default;

   private:
    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _entries;
  };

  // Entry-wise conversion; throws Error if some entry is not an integer.
  IntegerMatrix to_integer_matrix(Matrix const& a);

}  // namespace semiforge

#endif  // SEMIFORGE_MATRIX_HPP_
