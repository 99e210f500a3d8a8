#include "semiforge/shortener.hpp"

#include <algorithm>  // for max, reverse

#include "semiforge/errors.hpp"
#include "semiforge/exterior.hpp"
#include "semiforge/semigroup.hpp"

namespace semiforge {

  namespace {
    std::size_t factorial_capped(std::size_t k, std::size_t cap) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        if (f > cap / i) {
          return cap;
        }
        f *= i;
      }
      return f;
    }

    std::string alphabet_key(MorphismTable const& t) {
      std::string k = std::to_string(t.dim()) + "|";
      for (auto const& m : t.matrices()) {
        k += m.key();
        k += '|';
      }
      return k;
    }

    Word const& shorter(Word const& computed, Word const& input) {
      return input.size() < computed.size() ? input : computed;
    }
  }  // namespace

  CycleRep cycle_rep(MorphismTable const& table,
                     CycleFrame const&    frame,
                     Word const&          w) {
    auto const m = table.evaluate(w);
    if (!(image(m) == frame.base_space)
        || !trivial_intersection(frame.base_space, kernel(m))) {
      throw NotACycle("word \"" + table.format(w)
                      + "\" is not a cycle around the base space");
    }
    auto const y = frame.P * m;
    auto       x = solve_left(frame.P, y);
    SEMIFORGE_ENSURE(x.has_value(), "P M(w) must lie in the row space of P");
    SEMIFORGE_ENSURE(*x * frame.P == y, "P M(w) = M' P");
    return CycleRep{w, std::move(*x)};
  }

  std::size_t rho(CycleRep const& rep) {
    auto const  r   = rep.mprime.rows();
    auto const  cap = factorial_capped(2 * r, std::size_t(1) << 40);
    Matrix      p   = rep.mprime;
    std::size_t k   = 1;
    while (!p.is_identity()) {
      if (++k > cap) {
        throw OrderCapExceeded("order of M' exceeds (2r)!");
      }
      p = p * rep.mprime;
    }
    return k;
  }

  namespace {
    // Shortest generator word for target in the group generated by the M'
    // of the given cycles, flattened into a word over the table.
    std::vector<Word> reduce_to_target(MorphismTable const&         table,
                                       CycleFrame const&            frame,
                                       std::vector<CycleRep> const& reps,
                                       Matrix const&                target) {
      auto const r = frame.P.rows();
      // One generator per distinct M', represented by its shortest cycle.
      MorphismTable     gens(r);
      std::vector<Word> gen_words;
      std::unordered_map<std::string, std::size_t> seen;
      for (auto const& rep : reps) {
        auto [it, inserted] = seen.try_emplace(rep.mprime.key(), gen_words.size());
        if (inserted) {
          gens.add("g" + std::to_string(gen_words.size()), rep.mprime);
          gen_words.push_back(rep.word);
        } else if (rep.word.size() < gen_words[it->second].size()) {
          gen_words[it->second] = rep.word;
        }
      }
      auto const g = group_closure(gens);
      if (!g.finite) {
        throw InfiniteSemigroup("cycles around a vertex generate an infinite "
                                "group; the semigroup is infinite");
      }
      auto const product = short_product(g.finite->group, target);
      SEMIFORGE_ENSURE(product.has_value(),
                       "target must lie in the group generated by the cycles");
      SEMIFORGE_ENSURE(product->size() + 1 <= std::max<std::size_t>(g.finite->order(), 1),
                       "group word longer than |H| - 1");
      std::vector<Word> out;
      out.reserve(product->size());
      for (auto gi : *product) {
        out.push_back(gen_words[gi]);
      }
      (void) table;
      return out;
    }
  }  // namespace

  std::vector<Word> reduce_cycles(MorphismTable const&     table,
                                  CycleFrame const&        frame,
                                  std::vector<Word> const& cycles) {
    if (cycles.empty()) {
      return {};
    }
    std::vector<CycleRep> reps;
    Matrix                target = Matrix::identity(frame.P.rows());
    for (auto const& c : cycles) {
      reps.push_back(cycle_rep(table, frame, c));
      target = target * reps.back().mprime;
    }
    return reduce_to_target(table, frame, reps, target);
  }

  Word shorten_within_scc(ImageGraph const&      g,
                          Letter                 a,
                          Word const&            w,
                          ShortenObserver const* observer) {
    if (w.empty()) {
      return {};
    }
    auto const& table = g.table();
    auto const  home  = g.image_vertex(a);
    CycleFrame  frame(g.vertices()[home]);
    auto const  r     = frame.P.rows();

    // s(x): shortest path from im a to im x; t(x): from im x back to im a.
    auto const to   = [&](Letter x) { return scc_shortest_path(g, home, g.image_vertex(x)); };
    auto const back = [&](Letter x) { return scc_shortest_path(g, g.image_vertex(x), home); };

    Word const head{a};
    auto const rep_of = [&](Word const& c) {
      if (c.empty()) {
        return CycleRep{c, Matrix::identity(r)};
      }
      auto rep = cycle_rep(table, frame, c);
      if (observer && observer->on_cycle_rep) {
        observer->on_cycle_rep(table, frame, rep, head);
      }
      return rep;
    };

    // The value of a w is that of a w' where w' inserts, after each letter
    // a_i, rho(w_i) copies of the cycle w_i = t(a_i) s(a_i) around im a_i.
    // Regrouped, w' = c_1 v_1^(rho_1 - 1) c_2 ... c_k v_k^(rho_k - 1) s(a_k)
    // with cycles c_i = s(a_{i-1}) a_i t(a_i) and v_i = s(a_i) t(a_i) around
    // im a. rho_i is also the order of M'(v_i), so each v_i^(rho_i - 1) acts
    // as M'(v_i)^-1 and the group element of the cycle part is computed
    // without expanding any power.
    std::vector<CycleRep> reps;
    Matrix                target = Matrix::identity(r);
    Word                  prev_to;  // s(a_0) = s(a) is empty
    for (auto const x : w) {
      Word c = prev_to;
      c.push_back(x);
      append(c, back(x));
      Word v = to(x);
      append(v, back(x));

      auto rc = rep_of(c);
      auto rv = rep_of(v);
      auto const v_inv = inverse(rv.mprime);
      SEMIFORGE_ENSURE(v_inv.has_value(), "M' is invertible");
      target = target * rc.mprime * *v_inv;
      reps.push_back(std::move(rc));
      if (!rv.word.empty()) {
        reps.push_back(std::move(rv));
      }
      prev_to = to(x);
    }

    Word u;
    for (auto const& piece : reduce_to_target(table, frame, reps, target)) {
      append(u, piece);
    }
    append(u, prev_to);

    SEMIFORGE_ENSURE(table.evaluate(concat(head, u)) == table.evaluate(concat(head, w)),
                     "M(a u) = M(a w)");
    return shorter(u, w);
  }

  Word shorten_max_rank(ImageGraph const&      g,
                        Word const&            w,
                        ShortenObserver const* observer) {
    if (w.size() <= 1) {
      return w;
    }
    auto const segments = scc_segment_decompose(g, w);
    if (observer && observer->on_segments) {
      observer->on_segments(g, w, segments);
    }
    Word u;
    for (auto const& s : segments) {
      u.push_back(s.head);
      append(u, shorten_within_scc(g, s.head, s.tail, observer));
    }
    SEMIFORGE_ENSURE(g.table().evaluate(u) == g.table().evaluate(w),
                     "M(u) = M(w) after max-rank shortening");
    return shorter(u, w);
  }

  Shortener::Shortener(MorphismTable table, ShortenOptions opts)
      : _table(std::move(table)), _opts(std::move(opts)) {
    if (_opts.check_finite) {
      auto const f = decide_finiteness(_table, _opts.finiteness_cap);
      if (f.verdict == Verdict::infinite) {
        throw InfiniteSemigroup("the semigroup is infinite (non-torsion "
                                "element "
                                + _table.format(*f.witness) + ")");
      }
      if (f.verdict == Verdict::undecided) {
        throw InfiniteSemigroup("finiteness undecided within the closure cap");
      }
    }
  }

  Shortener::~Shortener() = default;

  ImageGraph const& Shortener::graph_for(MorphismTable const& t) {
    auto& slot = _graphs[alphabet_key(t)];
    if (!slot) {
      slot = std::make_unique<ImageGraph>(t);
    }
    return *slot;
  }

  FiniteGroupClosure const& Shortener::group_for(MorphismTable const& t) {
    auto& slot = _groups[alphabet_key(t)];
    if (!slot) {
      auto g = group_closure(t);
      if (!g.finite) {
        throw InfiniteSemigroup("invertible letters generate an infinite "
                                "group (witness "
                                + t.format(*g.witness) + ")");
      }
      slot = std::make_unique<FiniteGroupClosure>(std::move(*g.finite));
    }
    return *slot;
  }

  Word Shortener::shorten(Word const& w) {
    if (w.empty()) {
      return {};
    }
    if (auto it = _memo.find(w); it != _memo.end()) {
      return it->second;
    }
    auto const r = semiforge::rank(_table.evaluate(w));
    Word       u = r == _table.dim() ? shorten_full_rank(w) : shorten_below(w, r);
    SEMIFORGE_ENSURE(_table.evaluate(u) == _table.evaluate(w), "M(u) = M(w)");
    u = shorter(u, w);
    _memo.emplace(w, u);
    return u;
  }

  Word Shortener::shorten_full_rank(Word const& w) {
    // Every letter of an invertible word is invertible: shortest word in
    // the group they generate.
    std::vector<char> used(_table.size(), 0);
    for (auto x : w) {
      used[x] = 1;
    }
    MorphismTable       sub(_table.dim());
    std::vector<Letter> to_global;
    for (Letter x = 0; x < _table.size(); ++x) {
      if (used[x]) {
        sub.add(_table.name(x), _table[x]);
        to_global.push_back(x);
      }
    }
    auto const& g = group_for(sub);
    auto const  p = short_product(g.group, _table.evaluate(w));
    SEMIFORGE_ENSURE(p.has_value(), "invertible word lies in its group");
    Word u;
    for (auto x : *p) {
      u.push_back(to_global[x]);
    }
    return u;
  }

  Word Shortener::shorten_below(Word const& w, std::size_t r) {
    auto const n = _table.dim();
    // Prefix ranks: rank of M(w[0, i)).
    std::vector<std::size_t> prefix_rank(w.size() + 1);
    {
      Matrix p       = Matrix::identity(n);
      prefix_rank[0] = n;
      for (std::size_t i = 0; i < w.size(); ++i) {
        p                  = p * _table[w[i]];
        prefix_rank[i + 1] = semiforge::rank(p);
      }
    }
    // w = w0 a_1 w_1 ... a_k w_k with rk w0 > r, rk(a_i w_i) = r and
    // rk w_i > r. Peeled from the right: a_k w_k is the shortest suffix of
    // rank r, and so on while the remaining prefix still has rank r.
    struct Block {
      Letter head;
      Word   tail;
    };
    std::vector<Block> blocks;
    std::size_t        end = w.size();
    while (prefix_rank[end] <= r) {
      Matrix      s     = Matrix::identity(n);
      std::size_t start = end;
      do {
        --start;
        s = _table[w[start]] * s;
      } while (semiforge::rank(s) > r);
      blocks.push_back({w[start], Word(w.begin() + start + 1, w.begin() + end)});
      end = start;
    }
    std::reverse(blocks.begin(), blocks.end());
    Word const w0(w.begin(), w.begin() + end);

    // Inner parts have rank > r: shorten them recursively, then treat each
    // a_i u_i as one letter of a derived alphabet of rank r.
    Word const          u0 = shorten(w0);
    MorphismTable       derived(n);
    std::vector<Word>   expansion;
    Word                y;
    std::unordered_map<std::string, Letter> by_value;
    for (auto const& b : blocks) {
      Word block{b.head};
      append(block, shorten(b.tail));
      auto value = _table.evaluate(block);
      SEMIFORGE_ENSURE(semiforge::rank(value) == r, "derived letters have rank r");
      auto [it, inserted] = by_value.try_emplace(value.key(), static_cast<Letter>(expansion.size()));
      if (inserted) {
        derived.add("b" + std::to_string(expansion.size()), std::move(value));
        expansion.push_back(std::move(block));
      }
      y.push_back(it->second);
    }
    if (_opts.observer.on_derived_alphabet) {
      _opts.observer.on_derived_alphabet(derived, r);
    }

    auto const& g = graph_for(derived);
    auto const  x = shorten_max_rank(g, y, &_opts.observer);
    Word        u = u0;
    for (auto b : x) {
      append(u, expansion[b]);
    }
    return u;
  }

  Word shorten(MorphismTable const& table, Word const& w, ShortenOptions opts) {
    Shortener s(table, std::move(opts));
    return s.shorten(w);
  }

}  // namespace semiforge
