#ifndef SEMIFORGE_WORD_HPP_
#define SEMIFORGE_WORD_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "matrix.hpp"

namespace semiforge {

  // Index into an alphabet.
  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  Word concat(Word const& u, Word const& v);
  // u followed by v, in place.
  void append(Word& u, Word const& v);

  // An alphabet together with a map letter -> n x n matrix, extended to
  // words as the monoid morphism with M(empty word) = I_n.
  class MorphismTable {
   public:
    MorphismTable() = default;
    explicit MorphismTable(std::size_t n) : _n(n) {}
    MorphismTable(std::size_t n, std::vector<Matrix> matrices);

    // Appends a letter; names must be distinct and matrices n x n.
    Letter add(std::string name, Matrix m);

    std::size_t dim() const noexcept {
      return _n;
    }
    std::size_t size() const noexcept {
      return _matrices.size();
    }
    Matrix const& operator[](Letter a) const {
      return _matrices[a];
    }
    std::vector<Matrix> const& matrices() const noexcept {
      return _matrices;
    }
    std::string const& name(Letter a) const {
      return _names[a];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    // Throws UnknownLetter.
    Letter letter(std::string_view name) const;

    Matrix evaluate(Word const& w) const;

    // Letters printed back to back when every name is one character,
    // separated by spaces otherwise.
    std::string format(Word const& w) const;
    // Inverse of format; also accepts separators (space, comma) between
    // single-character names. Throws UnknownLetter.
    Word parse(std::string_view text) const;

   private:
    std::size_t              _n = 0;
    std::vector<std::string> _names;
    std::vector<Matrix>      _matrices;
  };

}  // namespace semiforge

#endif  // SEMIFORGE_WORD_HPP_
