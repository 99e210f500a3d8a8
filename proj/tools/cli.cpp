#include "cli.hpp"

#include <cstdlib>   // for getenv
#include <fstream>   // for ofstream
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <string>    // for string

#include "CLI11.hpp"

#include "semiforge/affine_vass.hpp"
#include "semiforge/errors.hpp"
#include "semiforge/group_lattice.hpp"
#include "semiforge/image_graph.hpp"
#include "semiforge/json_io.hpp"
#include "semiforge/semigroup.hpp"
#include "semiforge/shortener.hpp"
#include "semiforge/weighted_automaton.hpp"

#ifndef SEMIFORGE_VERSION
#define SEMIFORGE_VERSION "unknown"
#endif

namespace semiforge::cli {

  namespace {
    using json::ordered;

    struct CapExceeded {
      ordered result;
    };

    char const* to_string(Verdict v) {
      switch (v) {
        case Verdict::finite:
          return "finite";
        case Verdict::infinite:
          return "infinite";
        default:
          return "undecided";
      }
    }

    std::size_t parse_cap(std::string const& text, std::string const& source) {
      std::size_t pos = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(text, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != text.size() || text.empty() || text[0] == '-' || v == 0) {
        throw ParseError(source + " must be a positive integer, got \"" + text + "\"");
      }
      return static_cast<std::size_t>(v);
    }

    struct Common {
      std::string path;
      std::optional<std::size_t> cap_flag;
      bool        parallel = false;

      std::size_t cap() const {
        if (cap_flag) {
          return *cap_flag;
        }
        if (char const* env = std::getenv("SEMIFORGE_CAP")) {
          return parse_cap(env, "SEMIFORGE_CAP");
        }
        return default_closure_cap;
      }
      ExecutionMode mode() const {
        return parallel ? ExecutionMode::parallel : ExecutionMode::serial;
      }
    };

    void add_common(CLI::App* sub, Common& c, bool file = true) {
      if (file) {
        sub->add_option("file", c.path, "input JSON file")->required();
      }
      sub->add_option("--cap", c.cap_flag,
                      "closure element cap (default $SEMIFORGE_CAP or 1000000)");
      sub->add_flag("--parallel", c.parallel, "use the OpenMP closure kernel");
    }

    ordered words_json(MorphismTable const& t, ClosureResult const& c) {
      ordered out = ordered::array();
      for (std::size_t i = 0; i < c.size(); ++i) {
        out.push_back({{"word", t.format(c.witnesses[i])},
                       {"matrix", json::to_json(c.elements[i])}});
      }
      return out;
    }

    ordered cmd_finiteness(Common const& c) {
      auto const t = json::generators_from(json::read_file(c.path));
      auto const r = decide_finiteness(t, c.cap(), c.mode());
      ordered    out;
      out["command"]  = "finiteness";
      out["verdict"]  = to_string(r.verdict);
      out["elements"] = r.closure.size();
      out["cap"]      = c.cap();
      if (r.witness) {
        out["witness"]        = t.format(*r.witness);
        out["witness_matrix"] = json::to_json(*r.witness_matrix);
      }
      if (r.verdict == Verdict::undecided) {
        throw CapExceeded{out};
      }
      return out;
    }

    ordered cmd_closure(Common const& c, bool monoid, bool list) {
      auto const t = json::generators_from(json::read_file(c.path));
      auto const r = monoid ? monoid_closure(t, c.cap(), c.mode())
                            : closure(t, c.cap(), c.mode());
      ordered out;
      out["command"] = "closure";
      out["status"]  = r.finite() ? "finite" : "exceeded_cap";
      out["monoid"]  = monoid;
      out["size"]    = r.size();
      out["depth"]   = r.depth();
      out["level_sizes"] = r.level_sizes;
      if (list) {
        out["elements"] = words_json(t, r);
      }
      if (!r.finite()) {
        throw CapExceeded{out};
      }
      return out;
    }

    ordered cmd_shorten(Common const& c, std::string const& word) {
      auto const t = json::generators_from(json::read_file(c.path));
      auto const w = t.parse(word);
      auto const f = decide_finiteness(t, c.cap(), c.mode());
      if (f.verdict == Verdict::undecided) {
        ordered out;
        out["command"] = "shorten";
        out["error"]   = "finiteness undecided within the closure cap";
        out["cap"]     = c.cap();
        throw CapExceeded{out};
      }
      if (f.verdict == Verdict::infinite) {
        throw InfiniteSemigroup("the semigroup is infinite (non-torsion element "
                                + t.format(*f.witness) + ")");
      }
      auto const u        = shorten(t, w);
      bool const verified = t.evaluate(u) == t.evaluate(w);
      auto const bound    = length_bound(t.dim()).length_bound;
      ordered    out;
      out["command"]       = "shorten";
      out["input_word"]    = t.format(w);
      out["input_length"]  = w.size();
      out["output_word"]   = t.format(u);
      out["output_length"] = u.size();
      out["bound"]         = bound.get_str();
      out["verified"]      = verified && Integer(u.size()) <= bound;
      return out;
    }

    ordered cmd_bound(std::size_t n, std::optional<std::string> const& m) {
      if (n == 0) {
        throw ParseError("--n must be at least 1");
      }
      auto const b = length_bound(n);
      ordered    out;
      out["g_upper"]                       = b.g_upper.get_str();
      out["length_bound"]                  = b.length_bound.get_str();
      out["command"]                       = "bound";
      out["n"]                             = n;
      out["signed_permutation_order"]      = b.signed_permutation_order.get_str();
      out["signed_permutation_is_maximum"] = b.signed_permutation_is_maximum;
      if (m) {
        Integer letters;
        if (letters.set_str(*m, 10) != 0 || letters < 1) {
          throw ParseError("--m must be a positive integer, got \"" + *m + "\"");
        }
        auto const s = size_bound(n, letters);
        out["m"]                = letters.get_str();
        out["size_bound"]       = s.to_string();
        out["size_bound_exact"] = s.exact().has_value();
      }
      return out;
    }

    ordered cmd_integerize(Common const& c) {
      auto const t = json::generators_from(json::read_file(c.path));
      auto const g = group_closure(t, c.cap(), c.mode());
      ordered    out;
      out["command"] = "integerize";
      if (!g.finite) {
        out["verdict"] = "infinite";
        if (g.witness) {
          out["witness"] = t.format(*g.witness);
        }
        out["order_bound_exceeded"] = g.order_bound_exceeded;
        return out;
      }
      auto const cm   = integerize(*g.finite);
      auto const cinv = *inverse(cm);
      MorphismTable conj(t.dim());
      for (Letter a = 0; a < t.size(); ++a) {
        conj.add(t.name(a), cm * t[a] * cinv);
      }
      out["verdict"]     = "finite";
      out["order"]       = g.finite->order();
      out["C"]           = json::to_json(cm);
      out["C_inverse"]   = json::to_json(cinv);
      out["conjugated"]  = json::to_json(conj);
      return out;
    }

    ordered cmd_image_graph(Common const& c, std::string const& dot) {
      auto const    t = json::generators_from(json::read_file(c.path));
      ImageGraph const g(t);
      ordered       out;
      out["command"] = "image-graph";
      out["rank"]    = g.rank();
      ordered vs     = ordered::array();
      for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        auto basis = json::to_json(g.vertices()[v].basis());
        vs.push_back({{"id", v},
                      {"basis", basis["entries"]},
                      {"scc", g.scc(v)}});
      }
      out["vertices"] = std::move(vs);
      ordered es      = ordered::array();
      for (auto const& e : g.edges()) {
        es.push_back({{"from", e.source},
                      {"letter", t.name(e.letter)},
                      {"to", e.target}});
      }
      out["edges"]     = std::move(es);
      out["scc_count"] = g.scc_count();
      if (!dot.empty()) {
        std::ofstream f(dot);
        if (!f) {
          throw ParseError("cannot write \"" + dot + "\"");
        }
        f << g.to_dot();
        out["dot"] = dot;
      }
      return out;
    }

    ordered cmd_wa_finite(Common const& c) {
      auto const a = json::automaton_from(json::read_file(c.path));
      auto const r = decide_wa_finiteness(a, c.cap(), c.mode());
      ordered    out;
      out["command"]        = "wa-finite";
      out["verdict"]        = to_string(r.verdict);
      out["states"]         = a.states();
      out["minimal_states"] = r.minimal_states;
      out["monoid_size"]    = r.monoid_size;
      if (r.witness) {
        // Letters of the minimal automaton are those of the input.
        out["witness"] = a.transitions.format(*r.witness);
      }
      if (r.verdict == Verdict::undecided) {
        throw CapExceeded{out};
      }
      return out;
    }

    ordered cmd_vass_fmp(Common const& c) {
      auto const v = json::vass_from(json::read_file(c.path));
      auto const t = v.matrix_table();
      auto const r = check_fmp(v, c.cap());
      ordered    out;
      out["command"]          = "vass-fmp";
      out["verdict"]          = to_string(r.verdict);
      out["fmp"]              = r.verdict == Verdict::finite;
      out["distinct_matrices"] = t.size();
      out["monoid_size"]      = r.closure.size();
      if (r.witness) {
        out["witness"]        = t.format(*r.witness);
        out["witness_matrix"] = json::to_json(*r.witness_matrix);
      }
      if (r.verdict == Verdict::undecided) {
        throw CapExceeded{out};
      }
      return out;
    }

    ordered cmd_vass_reach(Common const& c,
                           std::string const& from,
                           std::string const& to,
                           std::size_t        budget) {
      auto const v = json::vass_from(json::read_file(c.path));
      auto const s = v.parse(from);
      auto const e = v.parse(to);
      auto const r = reach_bounded(v, s, e, budget);
      ordered    out;
      out["command"]  = "vass-reach";
      out["reached"]  = r.reached;
      out["expanded"] = r.expanded;
      out["budget"]   = budget;
      if (r.reached) {
        out["path"] = r.path;
        ordered cs  = ordered::array();
        for (auto const& x : r.configurations) {
          cs.push_back(v.format(x));
        }
        out["configurations"] = std::move(cs);
        return out;
      }
      // Fewer expansions than the budget means the reachable set was
      // exhausted, which settles non-reachability.
      bool const exhausted = r.expanded < budget;
      out["exhausted"]     = exhausted;
      if (!exhausted) {
        throw CapExceeded{out};
      }
      return out;
    }

    void emit(std::ostream& out, ordered const& j) {
      out << j.dump(2) << '\n';
    }
  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact finiteness decisions and short products for rational "
                 "matrix semigroups",
                 "semiforge"};
    app.set_version_flag("--version", "semiforge " SEMIFORGE_VERSION);
    app.require_subcommand(1, 1);

    Common                     common;
    bool                       monoid = false, list = true;
    std::string                word, dot, from, to, gens;
    std::size_t                n = 0, budget = 0;
    std::optional<std::string> m;

    auto* fin = app.add_subcommand("finiteness", "decide whether the generated "
                                                 "semigroup is finite");
    add_common(fin, common);

    auto* clo = app.add_subcommand("closure", "enumerate the generated semigroup");
    add_common(clo, common);
    clo->add_flag("--monoid", monoid, "include the identity (empty word)");
    clo->add_flag("!--no-elements", list, "omit the element list");

    auto* sho = app.add_subcommand("shorten", "rewrite a word as a short product");
    sho->add_option("file", common.path, "generators JSON file");
    sho->add_option("--generators", gens, "generators JSON file");
    sho->add_option("--word", word, "word over the generator names")->required();
    add_common(sho, common, false);

    auto* bnd = app.add_subcommand("bound", "length and size bounds");
    bnd->add_option("--n", n, "dimension")->required();
    bnd->add_option("--m", m, "number of letters");

    auto* itg = app.add_subcommand("integerize",
                                   "conjugate a finite group into integer matrices");
    add_common(itg, common);

    auto* img = app.add_subcommand("image-graph", "image graph of an equal-rank table");
    img->add_option("file", common.path, "generators JSON file")->required();
    img->add_option("--dot", dot, "write Graphviz output to this file");

    auto* waf = app.add_subcommand("wa-finite", "finiteness of a weighted "
                                                "automaton's value set");
    add_common(waf, common);

    auto* fmp = app.add_subcommand("vass-fmp", "finite monoid property of an "
                                               "affine VASS");
    add_common(fmp, common);

    auto* rch = app.add_subcommand("vass-reach", "bounded reachability in an "
                                                 "affine VASS");
    rch->add_option("file", common.path, "VASS JSON file")->required();
    rch->add_option("--from", from, "start configuration, e.g. q(0,1)")->required();
    rch->add_option("--to", to, "target configuration")->required();
    rch->add_option("--budget", budget, "maximum configurations to expand")
        ->required();

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      // Prints help/version to out with code 0, errors to err.
      return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    try {
      if (common.cap_flag && *common.cap_flag == 0) {
        throw ParseError("--cap must be positive");
      }
      ordered result;
      if (*fin) {
        result = cmd_finiteness(common);
      } else if (*clo) {
        result = cmd_closure(common, monoid, list);
      } else if (*sho) {
        if (gens.empty() == common.path.empty()) {
          throw ParseError("give the generators file either positionally or "
                           "with --generators, not both");
        }
        if (!gens.empty()) {
          common.path = gens;
        }
        result = cmd_shorten(common, word);
      } else if (*bnd) {
        result = cmd_bound(n, m);
      } else if (*itg) {
        result = cmd_integerize(common);
      } else if (*img) {
        result = cmd_image_graph(common, dot);
      } else if (*waf) {
        result = cmd_wa_finite(common);
      } else if (*fmp) {
        result = cmd_vass_fmp(common);
      } else {
        result = cmd_vass_reach(common, from, to, budget);
      }
      emit(out, result);
      return ok;
    } catch (CapExceeded const& e) {
      emit(out, e.result);
      return cap_exceeded;
    } catch (std::exception const& e) {
      ordered j;
      j["error"] = e.what();
      emit(out, j);
      err << "semiforge: " << e.what() << '\n';
      return usage_error;
    }
  }

}  // namespace semiforge::cli
