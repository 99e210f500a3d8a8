#ifndef SEMIFORGE_IMAGE_GRAPH_HPP_
#define SEMIFORGE_IMAGE_GRAPH_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "linalg.hpp"
#include "word.hpp"

namespace semiforge {

  struct ImageEdge {
    std::size_t source;
    Letter      letter;
    std::size_t target;
  };

  // For a table whose letters all have rank r: the graph whose vertices are
  // the images im w of the words of rank r and whose edges (V, a, im a) are
  // present iff V meets ker a trivially. The target of an edge is determined
  // by its label, so a path is determined by its start and its label word.
  //
  // Strongly connected components are numbered in reverse topological order
  // of the condensation (sink components first).
  class ImageGraph {
   public:
    // Throws MixedRankGenerators unless every letter has the same rank.
    explicit ImageGraph(MorphismTable table);

    MorphismTable const& table() const noexcept {
      return _table;
    }
    std::size_t rank() const noexcept {
      return _rank;
    }
    std::size_t ambient_dim() const noexcept {
      return _table.dim();
    }
    std::vector<Subspace> const& vertices() const noexcept {
      return _vertices;
    }
    std::vector<ImageEdge> const& edges() const noexcept {
      return _edges;
    }
    std::optional<std::size_t> vertex_of(Subspace const& v) const;
    // Vertex im M(a).
    std::size_t image_vertex(Letter a) const {
      return _image_vertex[a];
    }
    Subspace const& kernel(Letter a) const {
      return _kernels[a];
    }
    bool has_edge(std::size_t v, Letter a) const {
      return _adjacent[v * _table.size() + a];
    }
    // The same criterion through ranks: rk(basis(V) M(a)) = r.
    bool has_edge_by_rank(std::size_t v, Letter a) const;

    std::size_t scc(std::size_t v) const {
      return _scc[v];
    }
    std::size_t scc_count() const noexcept {
      return _scc_count;
    }
    // Edges between distinct components, deduplicated.
    std::vector<std::vector<std::size_t>> condensation() const;

    // Lexicographically least shortest label word from one vertex to
    // another, std::nullopt when unreachable.
    std::optional<Word> const& shortest_path(std::size_t from,
                                             std::size_t to) const {
      return _paths[from * _vertices.size() + to];
    }

    // Graphviz rendering; SCCs become clusters.
    std::string to_dot() const;

   private:
    MorphismTable                     _table;
    std::size_t                       _rank = 0;
    std::vector<Subspace>             _vertices;
    std::vector<std::size_t>          _image_vertex;
    std::vector<Subspace>             _kernels;
    std::vector<char>                 _adjacent;
    std::vector<ImageEdge>            _edges;
    std::vector<std::size_t>          _scc;
    std::size_t                       _scc_count = 0;
    std::vector<std::optional<Word>>  _paths;

    void compute_sccs();
    void compute_paths();
  };

  inline ImageGraph build_image_graph(MorphismTable const& table) {
    return ImageGraph(table);
  }

  // binomial(n, r)
  std::size_t binomial(std::size_t n, std::size_t r);

  // Shortest path between two vertices of one SCC; its length is at most
  // binomial(n, r). Throws NotSameScc.
  Word scc_shortest_path(ImageGraph const& g, std::size_t from, std::size_t to);

  // One block a_i w_i of the decomposition w = a_1 w_1 ... a_k w_k.
  struct SccSegment {
    Letter head;
    Word   tail;
  };

  // Splits a word of rank r into maximal blocks staying inside one SCC: im a_i
  // and im(a_1 w_1 ... a_i w_i) share an SCC and consecutive blocks lie in
  // different SCCs. Throws RankDropped when some step is not an edge.
  std::vector<SccSegment> scc_segment_decompose(ImageGraph const& g,
                                                Word const&       w);

}  // namespace semiforge

#endif  // SEMIFORGE_IMAGE_GRAPH_HPP_
