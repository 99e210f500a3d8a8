#ifndef SEMIFORGE_POLYNOMIAL_HPP_
#define SEMIFORGE_POLYNOMIAL_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "matrix.hpp"

namespace semiforge {

  // Univariate polynomial over Q; coefficient i belongs to x^i. The zero
  // polynomial has no coefficients and degree -1.
  class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational const& c);
    static Polynomial monomial(std::size_t degree, Rational const& c = 1);

    long degree() const noexcept {
      return static_cast<long>(_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    Rational coeff(std::size_t i) const {
      return i < _coeffs.size() ? _coeffs[i] : Rational(0);
    }
    Rational const& leading() const {
      return _coeffs.back();
    }
    std::vector<Rational> const& coefficients() const noexcept {
      return _coeffs;
    }

    Polynomial monic() const;
    Polynomial derivative() const;

    friend Polynomial operator+(Polynomial const&, Polynomial const&);
    friend Polynomial operator-(Polynomial const&, Polynomial const&);
    friend Polynomial operator*(Polynomial const&, Polynomial const&);
    friend bool       operator==(Polynomial const&, Polynomial const&)
        = default;

    std::string to_string() const;

   private:
    void                  trim();
    std::vector<Rational> _coeffs;
  };

  // Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(Polynomial const& a,
                                           Polynomial const& b);
  // Monic gcd (zero if both are zero).
  Polynomial gcd(Polynomial const& a, Polynomial const& b);
  // x^e mod m, for m of positive degree.
  Polynomial power_of_x_mod(Integer const& e, Polynomial const& m);

  // Monic minimal polynomial of a square matrix, found as the first linear
  // dependency among I, A, A^2, ...
  Polynomial minimal_polynomial(Matrix const& a);

}  // namespace semiforge

#endif  // SEMIFORGE_POLYNOMIAL_HPP_
