#ifndef SEMIFORGE_TESTS_HELPERS_HPP_
#define SEMIFORGE_TESTS_HELPERS_HPP_

#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64, uniform_int_distribution
#include <vector>   // for vector

#include "oracles.hpp"

#include "semiforge/linalg.hpp"
#include "semiforge/matrix.hpp"
#include "semiforge/word.hpp"

namespace testing {

  using semiforge::Matrix;
  using semiforge::Rational;

  inline oracle::Mat to_oracle(Matrix const& m) {
    auto out = oracle::make(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out[i][j] = m(i, j);
      }
    }
    return out;
  }

  inline Matrix from_oracle(oracle::Mat const& m) {
    std::size_t const r = m.size(), c = r == 0 ? 0 : m[0].size();
    Matrix            out(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        out(i, j) = m[i][j];
      }
    }
    return out;
  }

  inline std::vector<oracle::Mat> to_oracle(std::vector<Matrix> const& ms) {
    std::vector<oracle::Mat> out;
    for (auto const& m : ms) {
      out.push_back(to_oracle(m));
    }
    return out;
  }

  // Matrix with entries drawn uniformly from values.
  inline Matrix random_matrix(std::mt19937_64&             rng,
                              std::size_t                  rows,
                              std::size_t                  cols,
                              std::vector<Rational> const& values) {
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    Matrix                                     m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = values[pick(rng)];
      }
    }
    return m;
  }

  inline Matrix random_invertible(std::mt19937_64&             rng,
                                  std::size_t                  n,
                                  std::vector<Rational> const& values) {
    while (true) {
      auto m = random_matrix(rng, n, n, values);
      if (semiforge::rank(m) == n) {
        return m;
      }
    }
  }

  // Entries p/q with |p| <= num and 1 <= q <= den.
  inline std::vector<Rational> small_rationals(long num, long den) {
    std::vector<Rational> out;
    for (long q = 1; q <= den; ++q) {
      for (long p = -num; p <= num; ++p) {
        Rational x(p, q);
        x.canonicalize();
        if (std::find(out.begin(), out.end(), x) == out.end()) {
          out.push_back(x);
        }
      }
    }
    return out;
  }

  inline semiforge::Word random_word(std::mt19937_64& rng,
                                     std::size_t      letters,
                                     std::size_t      length) {
    std::uniform_int_distribution<semiforge::Letter> pick(
        0, static_cast<semiforge::Letter>(letters - 1));
    semiforge::Word w(length);
    for (auto& a : w) {
      a = pick(rng);
    }
    return w;
  }

  // All words of length len over k letters, in lexicographic order.
  inline std::vector<semiforge::Word> all_words(std::size_t k, std::size_t len) {
    std::vector<semiforge::Word> out;
    semiforge::Word              w(len, 0);
    while (true) {
      out.push_back(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == k) {
        w[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++w[i - 1];
    }
    return out;
  }

}  // namespace testing

#endif  // SEMIFORGE_TESTS_HELPERS_HPP_
