#include "semiforge/affine_vass.hpp"

#include <algorithm>  // for find, sort, unique
#include <deque>      // for deque
#include <map>        // for map

#include "semiforge/errors.hpp"

namespace semiforge {

  AffineVass::AffineVass(std::size_t dim, std::vector<std::string> states)
      : _dim(dim), _states(std::move(states)) {}

  std::size_t AffineVass::state(std::string const& name) const {
    auto it = std::find(_states.begin(), _states.end(), name);
    if (it == _states.end()) {
      throw Error("unknown state \"" + name + "\"");
    }
    return static_cast<std::size_t>(it - _states.begin());
  }

  void AffineVass::add_transition(AffineTransition t) {
    if (t.from >= _states.size() || t.to >= _states.size()) {
      throw Error("transition refers to an unknown state");
    }
    if (t.A.rows() != _dim || t.A.cols() != _dim || t.b.size() != _dim) {
      throw DimensionMismatch("transition " + std::to_string(_transitions.size())
                              + " does not have dimension "
                              + std::to_string(_dim));
    }
    _transitions.push_back(std::move(t));
  }

  MorphismTable AffineVass::matrix_table() const {
    MorphismTable table(_dim);
    std::vector<std::string> seen;
    for (std::size_t i = 0; i < _transitions.size(); ++i) {
      auto m = _transitions[i].A.to_rational();
      auto k = m.key();
      if (std::find(seen.begin(), seen.end(), k) != seen.end()) {
        continue;
      }
      seen.push_back(std::move(k));
      table.add("t" + std::to_string(i), std::move(m));
    }
    return table;
  }

  std::string AffineVass::format(Configuration const& c) const {
    std::string s = _states.at(c.state) + "(";
    for (std::size_t i = 0; i < c.vector.size(); ++i) {
      s += (i == 0 ? "" : ",") + c.vector[i].get_str();
    }
    return s + ")";
  }

  Configuration AffineVass::parse(std::string_view text) const {
    auto const open  = text.find('(');
    auto const close = text.rfind(')');
    if (open == std::string_view::npos || close != text.size() - 1
        || close < open) {
      throw ParseError("configuration \"" + std::string(text)
                       + "\" is not of the form state(v1,...,vd)");
    }
    Configuration c{0, {}};
    try {
      c.state = state(std::string(text.substr(0, open)));
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
    auto body = text.substr(open + 1, close - open - 1);
    while (!body.empty()) {
      auto const comma = body.find(',');
      auto const item  = body.substr(0, comma);
      Integer    x;
      if (item.empty() || x.set_str(std::string(item), 10) != 0) {
        throw ParseError("configuration \"" + std::string(text)
                         + "\": bad counter \"" + std::string(item) + "\"");
      }
      c.vector.push_back(x);
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
      if (body.empty()) {
        throw ParseError("configuration \"" + std::string(text)
                         + "\": trailing comma");
      }
    }
    if (c.vector.size() != _dim) {
      throw DimensionMismatch("configuration \"" + std::string(text) + "\" has "
                              + std::to_string(c.vector.size())
                              + " counters, expected " + std::to_string(_dim));
    }
    return c;
  }

  namespace {
    Configuration apply(AffineTransition const& t, IntegerVector const& v) {
      Configuration c{t.to, t.b};
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          c.vector[i] += t.A(i, j) * v[j];
        }
      }
      return c;
    }
  }  // namespace

  std::vector<Configuration> step(AffineVass const& v, Configuration const& c) {
    std::vector<Configuration> out;
    for (auto const& t : v.transitions()) {
      if (t.from == c.state) {
        out.push_back(apply(t, c.vector));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  FinitenessResult check_fmp(AffineVass const& v, std::optional<std::size_t> cap) {
    return decide_finiteness(v.matrix_table(), cap);
  }

  ReachResult reach_bounded(AffineVass const&    v,
                            Configuration const& from,
                            Configuration const& to,
                            std::size_t          budget) {
    ReachResult r;
    if (from == to) {
      r.reached        = true;
      r.configurations = {from};
      return r;
    }
    // parent[c] = (predecessor, transition index)
    std::map<Configuration, std::pair<Configuration, std::size_t>> parent;
    std::deque<Configuration> queue{from};
    parent.emplace(from, std::make_pair(from, std::size_t(-1)));
    while (!queue.empty() && r.expanded < budget) {
      auto const c = queue.front();
      queue.pop_front();
      ++r.expanded;
      for (std::size_t i = 0; i < v.transitions().size(); ++i) {
        auto const& t = v.transitions()[i];
        if (t.from != c.state) {
          continue;
        }
        auto next = apply(t, c.vector);
        if (parent.contains(next)) {
          continue;
        }
        parent.emplace(next, std::make_pair(c, i));
        if (next == to) {
          r.reached = true;
          for (auto cur = next; !(cur == from);) {
            auto const& [pred, idx] = parent.at(cur);
            r.path.push_back(idx);
            r.configurations.push_back(cur);
            cur = pred;
          }
          r.configurations.push_back(from);
          std::reverse(r.path.begin(), r.path.end());
          std::reverse(r.configurations.begin(), r.configurations.end());
          return r;
        }
        queue.push_back(std::move(next));
      }
    }
    return r;
  }

}  // namespace semiforge
