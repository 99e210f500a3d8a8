#ifndef SEMIFORGE_JSON_IO_HPP_
#define SEMIFORGE_JSON_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

#include "json.hpp"  // for nlohmann::json

#include "affine_vass.hpp"
#include "matrix.hpp"
#include "weighted_automaton.hpp"
#include "word.hpp"

// File formats. Rationals and big integers are always strings ("3", "-2/5").
//
//   matrix:     {"n": 2, "entries": [["0", "1"], ["-1", "0"]]}
//   generators: {"n": 2, "generators": {"a": <matrix>, "b": <matrix>}}
//   automaton:  {"n": 2, "alphabet": ["a"], "transitions": {"a": <matrix>},
//                "alpha": ["1", "0"], "eta": ["0", "1"]}
//   vass:       {"d": 1, "states": ["q"], "transitions":
//                  [{"from": "q", "A": [["1"]], "b": ["1"], "to": "q"}]}
//
// A matrix may also be given by its bare entry array. Generators are
// ordered by name.
namespace semiforge::json {

  using nlohmann::json;
  using ordered = nlohmann::ordered_json;

  // Parses text, reporting syntax errors with line and column.
  json parse(std::string_view text);
  json read_file(std::string const& path);

  Rational      rational_from(json const& j);
  Matrix        matrix_from(json const& j, std::string const& what = "matrix");
  Matrix        vector_from(json const& j, std::string const& what);
  MorphismTable generators_from(json const& j);
  WeightedAutomaton automaton_from(json const& j);
  AffineVass    vass_from(json const& j);

  ordered to_json(Matrix const& m);
  ordered to_json(MorphismTable const& t);
  ordered vector_to_json(Matrix const& v);

}  // namespace semiforge::json

#endif  // SEMIFORGE_JSON_IO_HPP_
