#ifndef SEMIFORGE_SHORTENER_HPP_
#define SEMIFORGE_SHORTENER_HPP_

#include <cstddef>        // for size_t
#include <functional>     // for function
#include <map>            // for map
#include <memory>         // for unique_ptr
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "group_lattice.hpp"
#include "image_graph.hpp"
#include "linalg.hpp"
#include "word.hpp"

namespace semiforge {

  // A base space V = im w0 of dimension r together with the r x n matrix P
  // whose rows are the canonical basis of V.
  struct CycleFrame {
    Subspace base_space;
    Matrix   P;

    explicit CycleFrame(Subspace v) : base_space(std::move(v)), P(base_space.basis()) {}
  };

  // A cycle w around the frame's base space with the unique invertible
  // r x r matrix M' satisfying P M(w) = M' P.
  struct CycleRep {
    Word   word;
    Matrix mprime;
  };

  // Throws NotACycle unless im M(w) = V and V meets ker M(w) trivially.
  CycleRep cycle_rep(MorphismTable const& table,
                     CycleFrame const&    frame,
                     Word const&          w);

  // Multiplicative order of M'. Appending rho copies of the cycle to any
  // word with image V leaves its value unchanged. Throws OrderCapExceeded
  // beyond (2r)!.
  std::size_t rho(CycleRep const& rep);

  // Given cycles w_1..w_k around the frame, returns u_1..u_l (each some w_i,
  // l <= |group generated by the M'(w_i)| - 1) with
  // M(w0 w_1 ... w_k) = M(w0 u_1 ... u_l) whenever im w0 = V.
  // Throws InfiniteSemigroup when the M' generate an infinite group.
  std::vector<Word> reduce_cycles(MorphismTable const&     table,
                                  CycleFrame const&        frame,
                                  std::vector<Word> const& cycles);

  // Hooks for instrumentation; every one is optional.
  struct ShortenObserver {
    std::function<void(ImageGraph const&, Word const&,
                       std::vector<SccSegment> const&)>
        on_segments;
    // Derived alphabet of rank r built by the rank recursion.
    std::function<void(MorphismTable const&, std::size_t)> on_derived_alphabet;
    // A cycle representation around im w0, with w0.
    std::function<void(MorphismTable const&, CycleFrame const&, CycleRep const&,
                       Word const&)>
        on_cycle_rep;
  };

  struct ShortenOptions {
    // Run decide_finiteness first and throw InfiniteSemigroup on an infinite
    // semigroup.
    bool                       check_finite = false;
    std::optional<std::size_t> finiteness_cap;
    ShortenObserver            observer;
  };

  // Rewrites words over a table generating a finite semigroup into words of
  // the same value and bounded length, following the rank-stratified
  // construction: invertible words go through the group closure, words of
  // rank r < n are cut into blocks of rank r whose inner parts are shortened
  // recursively, and the blocks are then shortened as letters of a derived
  // alphabet of rank r via the image graph.
  //
  // Results never exceed the input in length. Graph, group and result
  // caches make repeated calls on one table cheap; the caches are pure, so
  // outputs do not depend on call order.
  class Shortener {
   public:
    explicit Shortener(MorphismTable table, ShortenOptions opts = {});
    ~Shortener();

    Shortener(Shortener const&)            = delete;
    Shortener& operator=(Shortener const&) = delete;

    MorphismTable const& table() const noexcept {
      return _table;
    }

    Word shorten(Word const& w);

   private:
    Word shorten_full_rank(Word const& w);
    Word shorten_below(Word const& w, std::size_t r);

    ImageGraph const&         graph_for(MorphismTable const& t);
    FiniteGroupClosure const& group_for(MorphismTable const& t);

    MorphismTable  _table;
    ShortenOptions _opts;
    std::unordered_map<std::string, std::unique_ptr<ImageGraph>>         _graphs;
    std::unordered_map<std::string, std::unique_ptr<FiniteGroupClosure>> _groups;
    std::map<Word, Word> _memo;
  };

  // u with M(a w) = M(a u) for a path w from im a ending in the SCC of im a.
  Word shorten_within_scc(ImageGraph const&      g,
                          Letter                 a,
                          Word const&            w,
                          ShortenObserver const* observer = nullptr);

  // u with M(u) = M(w) for w of rank r over a table whose letters all have
  // rank r. Throws RankDropped.
  Word shorten_max_rank(ImageGraph const&      g,
                        Word const&            w,
                        ShortenObserver const* observer = nullptr);

  // One-shot convenience wrapper around Shortener.
  Word shorten(MorphismTable const& table, Word const& w, ShortenOptions opts = {});

}  // namespace semiforge

#endif  // SEMIFORGE_SHORTENER_HPP_
