#include "semiforge/word.hpp"

#include <algorithm>  // for all_of, find

#include "semiforge/errors.hpp"

namespace semiforge {

  Word concat(Word const& u, Word const& v) {
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
  }

  void append(Word& u, Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
  }

  namespace {
    std::string default_name(std::size_t i) {
      if (i < 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "x" + std::to_string(i);
    }
  }  // namespace

  MorphismTable::MorphismTable(std::size_t n, std::vector<Matrix> matrices)
      : _n(n) {
    for (auto& m : matrices) {
      add(default_name(_matrices.size()), std::move(m));
    }
  }

  Letter MorphismTable::add(std::string name, Matrix m) {
    if (m.rows() != _n || m.cols() != _n) {
      throw DimensionMismatch("matrix for letter \"" + name + "\" is "
                              + std::to_string(m.rows()) + "x"
                              + std::to_string(m.cols()) + ", expected "
                              + std::to_string(_n) + "x" + std::to_string(_n));
    }
    if (std::find(_names.begin(), _names.end(), name) != _names.end()) {
      throw Error("duplicate letter \"" + name + "\"");
    }
    _names.push_back(std::move(name));
    _matrices.push_back(std::move(m));
    return static_cast<Letter>(_matrices.size() - 1);
  }

  Letter MorphismTable::letter(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw UnknownLetter("unknown letter \"" + std::string(name) + "\"");
    }
    return static_cast<Letter>(it - _names.begin());
  }

  Matrix MorphismTable::evaluate(Word const& w) const {
    if (w.empty()) {
      return Matrix::identity(_n);
    }
    Matrix m = _matrices.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      m = m * _matrices.at(w[i]);
    }
    return m;
  }

  std::string MorphismTable::format(Word const& w) const {
    bool const compact = std::all_of(
        _names.begin(), _names.end(), [](auto const& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i > 0) {
        out += ' ';
      }
      out += _names.at(w[i]);
    }
    return out;
  }

  Word MorphismTable::parse(std::string_view text) const {
    bool const compact = std::all_of(
        _names.begin(), _names.end(), [](auto const& s) { return s.size() == 1; });
    auto const is_sep = [](char c) {
      return c == ' ' || c == ',' || c == '\t';
    };
    Word w;
    if (compact) {
      for (char c : text) {
        if (!is_sep(c)) {
          w.push_back(letter(std::string_view(&c, 1)));
        }
      }
      return w;
    }
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) {
        ++j;
      }
      if (j > i) {
        w.push_back(letter(text.substr(i, j - i)));
      }
      i = j;
    }
    return w;
  }

}  // namespace semiforge
