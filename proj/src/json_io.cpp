#include "semiforge/json_io.hpp"

#include <fstream>  // for ifstream
#include <sstream>  // for stringstream

#include "semiforge/errors.hpp"

namespace semiforge::json {

  json parse(std::string_view text) {
    try {
      return json::parse(text.begin(), text.end());
    } catch (nlohmann::json::parse_error const& e) {
      // byte is 1-based and points just past the offending character.
      std::size_t line = 1, col = 1;
      auto const  stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1,
                                              text.size());
      for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw ParseError("JSON syntax error at line " + std::to_string(line)
                       + ", column " + std::to_string(col));
    }
  }

  json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot read \"" + path + "\"");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  Rational rational_from(json const& j) {
    if (j.is_string()) {
      return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
      return Rational(Integer(std::to_string(j.get<long long>())));
    }
    throw ParseError("expected a rational string, got " + j.dump());
  }

  namespace {
    json const& field(json const& j, char const* name, std::string const& what) {
      if (!j.is_object() || !j.contains(name)) {
        throw ParseError(what + ": missing field \"" + name + "\"");
      }
      return j.at(name);
    }

    std::size_t size_field(json const& j, char const* name, std::string const& what) {
      auto const& v = field(j, name, what);
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(what + ": \"" + name + "\" must be a nonnegative integer");
      }
      return v.get<std::size_t>();
    }
  }  // namespace

  Matrix matrix_from(json const& j, std::string const& what) {
    json const& rows = j.is_object() ? field(j, "entries", what) : j;
    if (!rows.is_array()) {
      throw ParseError(what + ": entries must be an array of rows");
    }
    std::size_t const r = rows.size();
    std::size_t const c = r == 0 ? 0 : rows[0].size();
    if (j.is_object() && j.contains("n")) {
      auto const n = size_field(j, "n", what);
      if (r != n || c != n) {
        throw DimensionMismatch(what + ": declared n = " + std::to_string(n)
                                + " but entries are " + std::to_string(r)
                                + "x" + std::to_string(c));
      }
    }
    std::vector<Rational> e;
    e.reserve(r * c);
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != c) {
        throw DimensionMismatch(what + ": ragged rows");
      }
      for (auto const& x : row) {
        try {
          e.push_back(rational_from(x));
        } catch (ParseError const& err) {
          throw ParseError(what + ": " + err.what());
        }
      }
    }
    return Matrix(r, c, std::move(e));
  }

  Matrix vector_from(json const& j, std::string const& what) {
    if (!j.is_array()) {
      throw ParseError(what + " must be an array");
    }
    std::vector<Rational> e;
    for (auto const& x : j) {
      e.push_back(rational_from(x));
    }
    return Matrix::row_vector(std::move(e));
  }

  MorphismTable generators_from(json const& j) {
    auto const  n    = size_field(j, "n", "generators file");
    auto const& gens = field(j, "generators", "generators file");
    if (!gens.is_object()) {
      throw ParseError("\"generators\" must map letters to matrices");
    }
    MorphismTable t(n);
    for (auto const& [name, m] : gens.items()) {
      auto mat = matrix_from(m, "generator \"" + name + "\"");
      if (mat.rows() != n || mat.cols() != n) {
        throw DimensionMismatch("generator \"" + name + "\" is "
                                + std::to_string(mat.rows()) + "x"
                                + std::to_string(mat.cols()) + ", expected "
                                + std::to_string(n) + "x" + std::to_string(n));
      }
      t.add(name, std::move(mat));
    }
    return t;
  }

  WeightedAutomaton automaton_from(json const& j) {
    auto const  n     = size_field(j, "n", "automaton");
    auto const& alpha = field(j, "alphabet", "automaton");
    auto const& trans = field(j, "transitions", "automaton");
    MorphismTable t(n);
    for (auto const& letter : alpha) {
      auto const name = letter.get<std::string>();
      if (!trans.contains(name)) {
        throw ParseError("automaton: no transition matrix for letter \"" + name + "\"");
      }
      auto m = matrix_from(trans.at(name), "transition \"" + name + "\"");
      if (m.rows() != n || m.cols() != n) {
        throw DimensionMismatch("transition \"" + name + "\" is not "
                                + std::to_string(n) + "x" + std::to_string(n));
      }
      t.add(name, std::move(m));
    }
    return WeightedAutomaton(std::move(t),
                             vector_from(field(j, "alpha", "automaton"), "alpha"),
                             vector_from(field(j, "eta", "automaton"), "eta"));
  }

  AffineVass vass_from(json const& j) {
    auto const               d = size_field(j, "d", "vass");
    std::vector<std::string> states;
    for (auto const& s : field(j, "states", "vass")) {
      states.push_back(s.get<std::string>());
    }
    AffineVass v(d, std::move(states));
    std::size_t index = 0;
    for (auto const& t : field(j, "transitions", "vass")) {
      auto const what = "transition " + std::to_string(index++);
      auto const a    = matrix_from(field(t, "A", what), what + " A");
      auto const b    = vector_from(field(t, "b", what), what + " b");
      AffineTransition tr{v.state(field(t, "from", what).get<std::string>()),
                          to_integer_matrix(a),
                          {},
                          v.state(field(t, "to", what).get<std::string>())};
      for (std::size_t i = 0; i < b.cols(); ++i) {
        if (b(0, i).get_den() != 1) {
          throw ParseError(what + ": b must be integral");
        }
        tr.b.push_back(b(0, i).get_num());
      }
      v.add_transition(std::move(tr));
    }
    return v;
  }

  ordered to_json(Matrix const& m) {
    ordered rows = ordered::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ordered row = ordered::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(m(i, j).get_str());
      }
      rows.push_back(std::move(row));
    }
    ordered out;
    out["n"]       = m.rows();
    out["entries"] = std::move(rows);
    return out;
  }

  ordered to_json(MorphismTable const& t) {
    ordered out;
    out["n"] = t.dim();
    ordered gens = ordered::object();
    for (Letter a = 0; a < t.size(); ++a) {
      gens[t.name(a)] = to_json(t[a]);
    }
    out["generators"] = std::move(gens);
    return out;
  }

  ordered vector_to_json(Matrix const& v) {
    ordered out = ordered::array();
    for (std::size_t j = 0; j < v.cols(); ++j) {
      out.push_back(v(0, j).get_str());
    }
    return out;
  }

}  // namespace semiforge::json
