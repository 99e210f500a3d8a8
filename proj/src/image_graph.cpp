#include "semiforge/image_graph.hpp"

#include <algorithm>  // for min, sort, unique
#include <deque>      // for deque
#include <functional> // for function
#include <sstream>    // for ostringstream

#include "semiforge/errors.hpp"
#include "semiforge/exterior.hpp"

namespace semiforge {

  std::size_t binomial(std::size_t n, std::size_t r) {
    if (r > n) {
      return 0;
    }
    std::size_t b = 1;
    for (std::size_t i = 1; i <= r; ++i) {
      b = b * (n - r + i) / i;
    }
    return b;
  }

  ImageGraph::ImageGraph(MorphismTable table) : _table(std::move(table)) {
    auto const m = _table.size();
    if (m == 0) {
      return;
    }
    // Every vertex im w (rk w = r, w nonempty) equals im of the last letter
    // of w, so the vertex set is exactly the set of letter images.
    for (Letter a = 0; a < m; ++a) {
      auto const img = semiforge::image(_table[a]);
      if (a == 0) {
        _rank = img.dim();
      } else if (img.dim() != _rank) {
        throw MixedRankGenerators("letter \"" + _table.name(a) + "\" has rank "
                                  + std::to_string(img.dim()) + ", expected "
                                  + std::to_string(_rank));
      }
      auto v = vertex_of(img);
      if (!v) {
        v = _vertices.size();
        _vertices.push_back(img);
      }
      _image_vertex.push_back(*v);
      _kernels.push_back(semiforge::kernel(_table[a]));
    }
    _adjacent.assign(_vertices.size() * m, 0);
    for (std::size_t v = 0; v < _vertices.size(); ++v) {
      for (Letter a = 0; a < m; ++a) {
        if (trivial_intersection(_vertices[v], _kernels[a])) {
          _adjacent[v * m + a] = 1;
          _edges.push_back({v, a, _image_vertex[a]});
        }
      }
    }
    compute_sccs();
    compute_paths();
  }

  std::optional<std::size_t> ImageGraph::vertex_of(Subspace const& v) const {
    for (std::size_t i = 0; i < _vertices.size(); ++i) {
      if (_vertices[i] == v) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool ImageGraph::has_edge_by_rank(std::size_t v, Letter a) const {
    return semiforge::rank(_vertices[v].basis() * _table[a]) == _rank;
  }

  void ImageGraph::compute_sccs() {
    // Tarjan: components are emitted sinks first.
    auto const               nv = _vertices.size();
    auto const               m  = _table.size();
    constexpr std::size_t    unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(nv, unset), low(nv, 0);
    std::vector<char>        on_stack(nv, 0);
    std::vector<std::size_t> stack;
    std::size_t              counter = 0;
    _scc.assign(nv, unset);

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = 1;
      for (Letter a = 0; a < m; ++a) {
        if (!has_edge(v, a)) {
          continue;
        }
        auto const w = _image_vertex[a];
        if (index[w] == unset) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          _scc[w]     = _scc_count;
        } while (w != v);
        ++_scc_count;
      }
    };
    for (std::size_t v = 0; v < nv; ++v) {
      if (index[v] == unset) {
        visit(v);
      }
    }
  }

  void ImageGraph::compute_paths() {
    auto const nv = _vertices.size();
    auto const m  = _table.size();
    _paths.assign(nv * nv, std::nullopt);
    for (std::size_t s = 0; s < nv; ++s) {
      // BFS with letters in increasing order: the first discovery of a
      // vertex is along its lexicographically least shortest path.
      std::deque<std::size_t> queue{s};
      _paths[s * nv + s] = Word{};
      while (!queue.empty()) {
        auto const v = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < m; ++a) {
          if (!has_edge(v, a)) {
            continue;
          }
          auto const w = _image_vertex[a];
          if (!_paths[s * nv + w]) {
            Word p = *_paths[s * nv + v];
            p.push_back(a);
            _paths[s * nv + w] = std::move(p);
            queue.push_back(w);
          }
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> ImageGraph::condensation() const {
    std::vector<std::vector<std::size_t>> dag(_scc_count);
    for (auto const& e : _edges) {
      if (_scc[e.source] != _scc[e.target]) {
        dag[_scc[e.source]].push_back(_scc[e.target]);
      }
    }
    for (auto& out : dag) {
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return dag;
  }

  std::string ImageGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph image_graph {\n";
    os << "  // rank " << _rank << ", ambient dimension " << ambient_dim()
       << "\n";
    for (std::size_t c = 0; c < _scc_count; ++c) {
      os << "  subgraph cluster_" << c << " {\n";
      os << "    label=\"scc " << c << "\";\n";
      for (std::size_t v = 0; v < _vertices.size(); ++v) {
        if (_scc[v] != c) {
          continue;
        }
        os << "    v" << v << " [label=\"";
        auto const& b = _vertices[v].basis();
        for (std::size_t i = 0; i < b.rows(); ++i) {
          os << (i == 0 ? "" : "\\n") << "(";
          for (std::size_t j = 0; j < b.cols(); ++j) {
            os << (j == 0 ? "" : ", ") << b(i, j).get_str();
          }
          os << ")";
        }
        if (b.rows() == 0) {
          os << "{0}";
        }
        os << "\"];\n";
      }
      os << "  }\n";
    }
    for (auto const& e : _edges) {
      os << "  v" << e.source << " -> v" << e.target << " [label=\""
         << _table.name(e.letter) << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

  Word scc_shortest_path(ImageGraph const& g, std::size_t from, std::size_t to) {
    if (g.scc(from) != g.scc(to)) {
      throw NotSameScc("vertices " + std::to_string(from) + " and "
                       + std::to_string(to) + " lie in different SCCs");
    }
    auto const& p = g.shortest_path(from, to);
    SEMIFORGE_ENSURE(p.has_value(), "SCC members must be mutually reachable");
    SEMIFORGE_ENSURE(p->size() <= binomial(g.ambient_dim(), g.rank()),
                     "shortest path within an SCC exceeds binomial(n, r)");
    return *p;
  }

  std::vector<SccSegment> scc_segment_decompose(ImageGraph const& g,
                                                Word const&       w) {
    if (w.empty()) {
      throw Error("scc_segment_decompose needs a nonempty word");
    }
    std::vector<SccSegment> segments{{w[0], {}}};
    for (std::size_t j = 1; j < w.size(); ++j) {
      auto const prev = g.image_vertex(w[j - 1]);
      if (!g.has_edge(prev, w[j])) {
        throw RankDropped("rank drops below " + std::to_string(g.rank())
                          + " at position " + std::to_string(j));
      }
      if (g.scc(g.image_vertex(w[j])) != g.scc(prev)) {
        segments.push_back({w[j], {}});
      } else {
        segments.back().tail.push_back(w[j]);
      }
    }
    SEMIFORGE_ENSURE(
        segments.size() <= 2 * binomial(g.ambient_dim(), g.rank()),
        "more SCC segments than 2 binomial(n, r)");
    return segments;
  }

}  // namespace semiforge
