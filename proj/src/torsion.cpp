#include <numeric>  // for lcm

#include "semiforge/polynomial.hpp"
#include "semiforge/semigroup.hpp"

namespace semiforge {

  std::size_t euler_phi(std::size_t k) {
    std::size_t result = k;
    for (std::size_t p = 2; p * p <= k; ++p) {
      if (k % p == 0) {
        while (k % p == 0) {
          k /= p;
        }
        result -= result / p;
      }
    }
    if (k > 1) {
      result -= result / k;
    }
    return result;
  }

  Integer torsion_exponent(std::size_t d) {
    // phi(k) >= sqrt(k / 2), so phi(k) <= d forces k <= 2 d^2.
    Integer L = 1;
    for (std::size_t k = 1; k <= 2 * d * d; ++k) {
      if (euler_phi(k) <= d) {
        mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), k);
      }
    }
    return L;
  }

  bool is_torsion(Matrix const& a) {
    auto const mu = minimal_polynomial(a);
    // Strip the factor x^a.
    std::size_t shift = 0;
    while (sgn(mu.coeff(shift)) == 0) {
      ++shift;
    }
    std::vector<Rational> qc(mu.coefficients().begin() + shift,
                             mu.coefficients().end());
    Polynomial const q(std::move(qc));
    if (q.degree() == 0) {
      // mu = x^a: A is nilpotent, A^a = A^(a+1) = 0.
      return true;
    }
    if (gcd(q, q.derivative()).degree() != 0) {
      return false;
    }
    auto const L = torsion_exponent(static_cast<std::size_t>(q.degree()));
    // q | x^L - 1  <=>  x^L = 1 mod q.
    return power_of_x_mod(L, q) == Polynomial::constant(1);
  }

}  // namespace semiforge
