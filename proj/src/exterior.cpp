#include "semiforge/exterior.hpp"

#include "semiforge/errors.hpp"

namespace semiforge {

  MultiVector MultiVector::unit(std::size_t ambient) {
    MultiVector m(ambient, 0);
    m._coeffs.emplace(IndexSet{}, Rational(1));
    return m;
  }

  MultiVector MultiVector::from_vector(Matrix const& v) {
    if (v.rows() != 1) {
      throw DimensionMismatch("from_vector expects a single row");
    }
    MultiVector m(v.cols(), 1);
    for (std::size_t i = 0; i < v.cols(); ++i) {
      if (sgn(v(0, i)) != 0) {
        m._coeffs.emplace(IndexSet{static_cast<std::uint8_t>(i)}, v(0, i));
      }
    }
    return m;
  }

  MultiVector MultiVector::basis_vector(std::size_t ambient, std::size_t i) {
    MultiVector m(ambient, 1);
    m._coeffs.emplace(IndexSet{static_cast<std::uint8_t>(i)}, Rational(1));
    return m;
  }

  Rational MultiVector::coefficient(IndexSet const& indices) const {
    auto it = _coeffs.find(indices);
    return it == _coeffs.end() ? Rational(0) : it->second;
  }

  void MultiVector::add_term(IndexSet const& indices, Rational const& c) {
    if (sgn(c) == 0) {
      return;
    }
    auto [it, inserted] = _coeffs.try_emplace(indices, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) {
        _coeffs.erase(it);
      }
    }
  }

  MultiVector wedge(MultiVector const& u, MultiVector const& v) {
    if (u.ambient_dim() != v.ambient_dim()) {
      throw DimensionMismatch("wedge of multivectors over different spaces");
    }
    MultiVector result(u.ambient_dim(), u.grade() + v.grade());
    if (result.grade() > result.ambient_dim()) {
      return result;
    }
    MultiVector::IndexSet merged;
    Rational              c;
    for (auto const& [s, a] : u.coefficients()) {
      for (auto const& [t, b] : v.coefficients()) {
        merged.clear();
        // Merge the two sorted index lists; the sign of the sorting
        // permutation is the parity of the inversions between s and t.
        std::size_t i = 0, j = 0, inversions = 0;
        bool        repeated = false;
        while (i < s.size() && j < t.size()) {
          if (s[i] == t[j]) {
            repeated = true;
            break;
          }
          if (s[i] < t[j]) {
            merged.push_back(s[i++]);
          } else {
            inversions += s.size() - i;
            merged.push_back(t[j++]);
          }
        }
        if (repeated) {
          continue;
        }
        merged.insert(merged.end(), s.begin() + i, s.end());
        merged.insert(merged.end(), t.begin() + j, t.end());
        c = a * b;
        if (inversions % 2 == 1) {
          c = -c;
        }
        result.add_term(merged, c);
      }
    }
    return result;
  }

  MultiVector operator-(MultiVector const& u) {
    MultiVector r(u.ambient_dim(), u.grade());
    for (auto const& [s, a] : u.coefficients()) {
      r.add_term(s, -a);
    }
    return r;
  }

  bool proportional(MultiVector const& u, MultiVector const& v) {
    if (u.is_zero() || v.is_zero() || u.grade() != v.grade()
        || u.terms() != v.terms()) {
      return false;
    }
    auto const& [s0, a0] = *u.coefficients().begin();
    auto const  b0       = v.coefficient(s0);
    if (sgn(b0) == 0) {
      return false;
    }
    Rational const ratio = a0 / b0;
    for (auto const& [s, a] : u.coefficients()) {
      if (a != ratio * v.coefficient(s)) {
        return false;
      }
    }
    return true;
  }

  MultiVector wedge_rows(Matrix const& rows) {
    auto acc = MultiVector::unit(rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      acc = wedge(acc, MultiVector::from_vector(rows.row(i)));
      if (acc.is_zero()) {
        break;
      }
    }
    return acc;
  }

  MultiVector iota(Subspace const& w) {
    return wedge_rows(w.basis());
  }

  bool trivial_intersection(Subspace const& w1, Subspace const& w2) {
    if (w1.ambient_dim() != w2.ambient_dim()) {
      throw DimensionMismatch("intersection of subspaces of different spaces");
    }
    if (w1.dim() + w2.dim() > w1.ambient_dim()) {
      return false;
    }
    return !wedge(iota(w1), iota(w2)).is_zero();
  }

}  // namespace semiforge
