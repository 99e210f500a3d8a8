#include "semiforge/matrix.hpp"

#include <sstream>  // for ostringstream
#include <utility>  // for move

#include "semiforge/errors.hpp"

namespace semiforge {

  Rational make_rational(Integer const& p, Integer const& q) {
    if (q == 0) {
      throw ParseError("rational with zero denominator");
    }
    Rational x(p, q);
    x.canonicalize();
    return x;
  }

  Rational parse_rational(std::string_view text) {
    auto const bad = [&text]() {
      return ParseError("malformed rational \"" + std::string(text) + "\"");
    };
    auto const parse_int = [&](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
      }
      if (i == s.size()) {
        throw bad();
      }
      for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') {
          throw bad();
        }
      }
      std::string digits(s.substr(s[0] == '+' ? 1 : 0));
      return Integer(digits, 10);
    };
    auto const slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text, true));
    }
    Integer p = parse_int(text.substr(0, slash), true);
    Integer q = parse_int(text.substr(slash + 1), false);
    return make_rational(p, q);
  }

  std::string to_string(Rational const& x) {
    return x.get_str();
  }

  Matrix::Matrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _entries(rows * cols) {}

  Matrix::Matrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries)
      : _rows(rows), _cols(cols), _entries(std::move(entries)) {
    if (_entries.size() != rows * cols) {
      throw DimensionMismatch("matrix entry count does not match shape");
    }
  }

  Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _entries.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw DimensionMismatch("ragged matrix literal");
      }
      for (auto const& x : r) {
        _entries.push_back(x);
        _entries.back().canonicalize();
      }
    }
  }

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::row_vector(std::vector<Rational> entries) {
    auto const n = entries.size();
    return Matrix(1, n, std::move(entries));
  }

  Matrix Matrix::row(std::size_t i) const {
    return row_block(i, 1);
  }

  Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
    auto const begin = _entries.begin() + first * _cols;
    return Matrix(count,
                  _cols,
                  std::vector<Rational>(begin, begin + count * _cols));
  }

  Matrix Matrix::stack(Matrix const& other) const {
    if (_rows == 0) {
      return other;
    }
    if (other._rows == 0) {
      return *this;
    }
    if (other._cols != _cols) {
      throw DimensionMismatch("cannot stack matrices of different widths");
    }
    std::vector<Rational> e(_entries);
    e.insert(e.end(), other._entries.begin(), other._entries.end());
    return Matrix(_rows + other._rows, _cols, std::move(e));
  }

  Matrix Matrix::transpose() const {
    Matrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool Matrix::is_zero() const {
    for (auto const& x : _entries) {
      if (sgn(x) != 0) {
        return false;
      }
    }
    return true;
  }

  bool Matrix::is_identity() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if ((*this)(i, j) != (i == j ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Matrix::is_integral() const {
    for (auto const& x : _entries) {
      if (x.get_den() != 1) {
        return false;
      }
    }
    return true;
  }

  std::string Matrix::key() const {
    std::string k = std::to_string(_rows);
    k += 'x';
    k += std::to_string(_cols);
    k += ':';
    for (auto const& x : _entries) {
      // base 36 keeps keys short; ',' never occurs inside an entry
      k += x.get_str(36);
      k += ',';
    }
    return k;
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols() != b.rows()) {
      throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x"
                              + std::to_string(a.cols()) + " and "
                              + std::to_string(b.rows()) + "x"
                              + std::to_string(b.cols()) + " matrices");
    }
    Matrix   c(a.rows(), b.cols());
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        auto const& aik = a(i, k);
        if (sgn(aik) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (sgn(b(k, j)) != 0) {
            t = aik * b(k, j);
            c(i, j) += t;
          }
        }
      }
    }
    return c;
  }

  Matrix operator+(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw DimensionMismatch("sum of matrices of different shapes");
    }
    Matrix c(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) += b(i, j);
      }
    }
    return c;
  }

  Matrix operator-(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw DimensionMismatch("difference of matrices of different shapes");
    }
    Matrix c(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) -= b(i, j);
      }
    }
    return c;
  }

  Matrix operator*(Rational const& s, Matrix const& a) {
    Matrix c(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) *= s;
      }
    }
    return c;
  }

  Matrix power(Matrix const& a, std::size_t k) {
    if (!a.is_square()) {
      throw DimensionMismatch("power of a non-square matrix");
    }
    Matrix result = Matrix::identity(a.rows());
    Matrix base   = a;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  std::string to_string(Matrix const& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.rows(); ++i) {
      os << (i == 0 ? "[" : ",[");
      for (std::size_t j = 0; j < a.cols(); ++j) {
        os << (j == 0 ? "" : ",") << a(i, j).get_str();
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  IntegerMatrix::IntegerMatrix(
      std::initializer_list<std::initializer_list<long>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw DimensionMismatch("ragged matrix literal");
      }
      for (long x : r) {
        _entries.emplace_back(x);
      }
    }
  }

  IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix IntegerMatrix::to_rational() const {
    Matrix m(_rows, _cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        m(i, j) = Rational((*this)(i, j));
      }
    }
    return m;
  }

  IntegerMatrix to_integer_matrix(Matrix const& a) {
    IntegerMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).get_den() != 1) {
          throw Error("matrix entry " + a(i, j).get_str()
                      + " is not an integer");
        }
        m(i, j) = a(i, j).get_num();
      }
    }
    return m;
  }

}  // namespace semiforge
