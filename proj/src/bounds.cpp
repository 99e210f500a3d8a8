#include <algorithm>  // for find

#include "semiforge/errors.hpp"
#include "semiforge/semigroup.hpp"

namespace semiforge {

  namespace {
    Integer factorial(std::size_t k) {
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), k);
      return f;
    }

    Integer pow(Integer const& base, unsigned long e) {
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
      return r;
    }
  }  // namespace

  BoundReport length_bound(std::size_t n) {
    if (n == 0) {
      throw Error("length_bound needs n >= 1");
    }
    BoundReport b;
    b.n       = n;
    b.g_upper = factorial(2 * n);
    b.length_bound
        = pow(Integer(2), n * (2 * n + 3)) * pow(b.g_upper, n + 1);
    b.signed_permutation_order = pow(Integer(2), n) * factorial(n);
    constexpr std::size_t exceptional[] = {2, 4, 6, 7, 8, 9, 10};
    b.signed_permutation_is_maximum
        = std::find(std::begin(exceptional), std::end(exceptional), n)
          == std::end(exceptional);
    return b;
  }

  SizeBound::SizeBound(std::size_t n, Integer m)
      : _m(std::move(m)), _length(length_bound(n).length_bound), _exact() {
    if (_m < 1) {
      throw Error("size_bound needs m >= 1");
    }
    if (_m == 1) {
      _exact = _length;
      return;
    }
    // m^L has about L * log2(m) bits.
    auto const bits_per_letter = mpz_sizeinbase(_m.get_mpz_t(), 2);
    if (_length > Integer(max_exact_bits / bits_per_letter)) {
      return;
    }
    auto const L = _length.get_ui();
    // (m^(L+1) - m) / (m - 1)
    _exact = (pow(_m, L + 1) - _m) / (_m - 1);
  }

  bool SizeBound::admits(Integer const& count) const {
    if (_exact) {
      return count <= *_exact;
    }
    // Not expanded. With b = bits(m), 2^(L(b-1)) <= m^L < bound <= 2 m^L
    // <= 2^(Lb+1), which settles every count whose bit length falls
    // outside that window.
    Integer const b    = mpz_sizeinbase(_m.get_mpz_t(), 2);
    Integer const bits = mpz_sizeinbase(count.get_mpz_t(), 2);
    if (count < 1 || bits <= _length * (b - 1)) {
      return true;
    }
    if (bits > _length * b + 1) {
      return false;
    }
    throw Error("size bound comparison with an astronomically large count");
  }

  std::string SizeBound::to_string() const {
    if (_exact) {
      return _exact->get_str();
    }
    auto const m = _m.get_str();
    return "(" + m + "^(" + _length.get_str() + "+1)-" + m + ")/(" + m
           + "-1)";
  }

}  // namespace semiforge
