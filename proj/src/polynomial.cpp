#include "semiforge/polynomial.hpp"

#include <algorithm>  // for max
#include <sstream>    // for ostringstream

#include "semiforge/errors.hpp"
#include "semiforge/linalg.hpp"

namespace semiforge {

  Polynomial::Polynomial(std::vector<Rational> coeffs)
      : _coeffs(std::move(coeffs)) {
    trim();
  }

  void Polynomial::trim() {
    while (!_coeffs.empty() && sgn(_coeffs.back()) == 0) {
      _coeffs.pop_back();
    }
  }

  Polynomial Polynomial::constant(Rational const& c) {
    return Polynomial({c});
  }

  Polynomial Polynomial::monomial(std::size_t degree, Rational const& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  Polynomial Polynomial::monic() const {
    if (is_zero()) {
      return *this;
    }
    Polynomial     p(*this);
    Rational const inv = 1 / leading();
    for (auto& c : p._coeffs) {
      c *= inv;
    }
    return p;
  }

  Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < _coeffs.size(); ++i) {
      d.push_back(_coeffs[i] * static_cast<long>(i));
    }
    return Polynomial(std::move(d));
  }

  Polynomial operator+(Polynomial const& a, Polynomial const& b) {
    std::vector<Rational> c(std::max(a._coeffs.size(), b._coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a.coeff(i) + b.coeff(i);
    }
    return Polynomial(std::move(c));
  }

  Polynomial operator-(Polynomial const& a, Polynomial const& b) {
    std::vector<Rational> c(std::max(a._coeffs.size(), b._coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a.coeff(i) - b.coeff(i);
    }
    return Polynomial(std::move(c));
  }

  Polynomial operator*(Polynomial const& a, Polynomial const& b) {
    if (a.is_zero() || b.is_zero()) {
      return Polynomial();
    }
    std::vector<Rational> c(a._coeffs.size() + b._coeffs.size() - 1);
    for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
      for (std::size_t j = 0; j < b._coeffs.size(); ++j) {
        c[i + j] += a._coeffs[i] * b._coeffs[j];
      }
    }
    return Polynomial(std::move(c));
  }

  std::string Polynomial::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (std::size_t i = _coeffs.size(); i-- > 0;) {
      if (sgn(_coeffs[i]) == 0) {
        continue;
      }
      os << (first ? "" : " + ") << "(" << _coeffs[i].get_str() << ")";
      if (i > 0) {
        os << "x^" << i;
      }
      first = false;
    }
    return os.str();
  }

  std::pair<Polynomial, Polynomial> divmod(Polynomial const& a,
                                           Polynomial const& b) {
    if (b.is_zero()) {
      throw Error("polynomial division by zero");
    }
    std::vector<Rational> rem = a.coefficients();
    auto const            db  = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) {
      return {Polynomial(), a};
    }
    std::vector<Rational> quot(rem.size() - db);
    Rational const        inv = 1 / b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
      if (sgn(rem[i]) == 0) {
        continue;
      }
      Rational const f = rem[i] * inv;
      quot[i - db]     = f;
      for (std::size_t j = 0; j <= db; ++j) {
        rem[i - db + j] -= f * b.coeff(j);
      }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial gcd(Polynomial const& a, Polynomial const& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
      auto r = divmod(x, y).second;
      x      = std::move(y);
      y      = std::move(r);
    }
    return x.monic();
  }

  Polynomial power_of_x_mod(Integer const& e, Polynomial const& m) {
    if (m.degree() < 1) {
      throw Error("power_of_x_mod needs a modulus of positive degree");
    }
    Polynomial result = divmod(Polynomial::constant(1), m).second;
    Polynomial base   = divmod(Polynomial::monomial(1), m).second;
    Integer    k      = e;
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) {
        result = divmod(result * base, m).second;
      }
      k >>= 1;
      if (k > 0) {
        base = divmod(base * base, m).second;
      }
    }
    return result;
  }

  Polynomial minimal_polynomial(Matrix const& a) {
    if (!a.is_square()) {
      throw DimensionMismatch("minimal polynomial of a non-square matrix");
    }
    auto const n  = a.rows();
    auto const nn = n * n;
    // Rows are the flattened powers A^0, A^1, ...; stop at the first power
    // that lies in the span of the earlier ones.
    Matrix powers(0, nn);
    Matrix current = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
      Matrix flat(1, nn, std::vector<Rational>(current.entries().begin(),
                                               current.entries().end()));
      Matrix stacked = powers.stack(flat);
      if (rank(stacked) <= k) {
        // The earlier powers are independent, so the left kernel of the
        // stacked matrix is one-dimensional and its last entry is nonzero.
        auto const           rel = kernel(stacked).basis();
        std::vector<Rational> c(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
          c[i] = rel(0, i);
        }
        return Polynomial(std::move(c)).monic();
      }
      powers  = std::move(stacked);
      current = current * a;
    }
    throw Error("minimal polynomial degree exceeds dimension");
  }

}  // namespace semiforge
