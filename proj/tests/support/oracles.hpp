#ifndef SEMIFORGE_TESTS_ORACLES_HPP_
#define SEMIFORGE_TESTS_ORACLES_HPP_

// Brute-force reference implementations used only by the tests. They work on
// plain nested vectors and share no code with the library beyond GMP.

#include <algorithm>  // for sort, next_permutation
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <queue>      // for queue
#include <set>        // for set
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

#include <gmpxx.h>

namespace oracle {

  using Q   = mpq_class;
  using Z   = mpz_class;
  using Mat = std::vector<std::vector<Q>>;

  inline Mat make(std::size_t r, std::size_t c) {
    return Mat(r, std::vector<Q>(c, Q(0)));
  }

  inline Mat identity(std::size_t n) {
    auto m = make(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  inline Mat mul(Mat const& a, Mat const& b) {
    std::size_t const r = a.size(), k = b.size(), c = k == 0 ? 0 : b[0].size();
    auto out = make(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < c; ++j) {
          out[i][j] += a[i][l] * b[l][j];
        }
      }
    }
    return out;
  }

  inline std::string text(Mat const& a) {
    std::string s;
    for (auto const& row : a) {
      for (auto const& x : row) {
        s += x.get_str() + ",";
      }
      s += ";";
    }
    return s;
  }

  // Rank by plain Gaussian elimination.
  inline std::size_t rank(Mat a) {
    std::size_t r = 0;
    std::size_t const cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && a[p][c] == 0) {
        ++p;
      }
      if (p == a.size()) {
        continue;
      }
      std::swap(a[p], a[r]);
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] != 0) {
          Q const f = a[i][c] / a[r][c];
          for (std::size_t j = c; j < cols; ++j) {
            a[i][j] -= f * a[r][j];
          }
        }
      }
      ++r;
    }
    return r;
  }

  inline Mat stack(Mat a, Mat const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  // Row spaces of a and b intersect trivially iff stacking adds their ranks.
  inline bool trivial_intersection(Mat const& a, Mat const& b) {
    return rank(stack(a, b)) == rank(a) + rank(b);
  }

  inline bool same_row_space(Mat const& a, Mat const& b) {
    auto const ra = rank(a);
    return ra == rank(b) && rank(stack(a, b)) == ra;
  }

  enum class Torsion { yes, no, unknown };

  // Iterates A, A^2, ... until a power repeats (torsion) or the height
  // max(|p|, q) of some entry p/q exceeds the threshold (classified
  // non-torsion: a torsion matrix has finitely many distinct powers).
  inline Torsion power_iteration(Mat const& a,
                                 Q const&   threshold = Q(1000000),
                                 std::size_t max_power = 20000) {
    std::set<std::string> seen;
    Mat p = a;
    for (std::size_t k = 1; k <= max_power; ++k) {
      if (!seen.insert(text(p)).second) {
        return Torsion::yes;
      }
      for (auto const& row : p) {
        for (auto const& x : row) {
          if (abs(x.get_num()) > threshold || x.get_den() > threshold) {
            return Torsion::no;
          }
        }
      }
      p = mul(p, a);
    }
    return Torsion::unknown;
  }

  // Level-order enumeration of all words over the given matrices: the
  // length of the shortest nonempty word with each value, up to max_len.
  inline std::map<std::string, std::size_t>
  shortest_lengths(std::vector<Mat> const& gens, std::size_t max_len) {
    std::map<std::string, std::size_t> out;
    std::vector<Mat>                   level;
    for (auto const& g : gens) {
      level.push_back(g);
    }
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
      std::vector<Mat> next;
      for (auto const& m : level) {
        if (out.emplace(text(m), len).second) {
          for (auto const& g : gens) {
            next.push_back(mul(m, g));
          }
        }
      }
      level = std::move(next);
    }
    return out;
  }

  // Vertex distances in the graph of images: vertices are the row spaces
  // in `spaces` and V --a--> W iff rank(V M(a)) = rank V, with W the space
  // equal to the row space of V M(a).
  inline std::vector<std::vector<std::optional<std::size_t>>>
  graph_distances(std::vector<Mat> const& spaces, std::vector<Mat> const& gens) {
    std::size_t const nv = spaces.size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      for (auto const& g : gens) {
        auto const img = mul(spaces[v], g);
        if (rank(img) != rank(spaces[v])) {
          continue;
        }
        for (std::size_t w = 0; w < nv; ++w) {
          if (same_row_space(img, spaces[w])) {
            adj[v].push_back(w);
          }
        }
      }
    }
    std::vector<std::vector<std::optional<std::size_t>>> dist(
        nv, std::vector<std::optional<std::size_t>>(nv));
    for (std::size_t s = 0; s < nv; ++s) {
      std::queue<std::size_t> q;
      dist[s][s] = 0;
      q.push(s);
      while (!q.empty()) {
        auto const v = q.front();
        q.pop();
        for (auto w : adj[v]) {
          if (!dist[s][w]) {
            dist[s][w] = *dist[s][v] + 1;
            q.push(w);
          }
        }
      }
    }
    return dist;
  }

  // Determinant by elimination.
  inline Q det(Mat a) {
    Q d = 1;
    for (std::size_t c = 0; c < a.size(); ++c) {
      std::size_t p = c;
      while (p < a.size() && a[p][c] == 0) {
        ++p;
      }
      if (p == a.size()) {
        return 0;
      }
      if (p != c) {
        std::swap(a[p], a[c]);
        d = -d;
      }
      d *= a[c][c];
      for (std::size_t i = c + 1; i < a.size(); ++i) {
        Q const f = a[i][c] / a[c][c];
        for (std::size_t j = c; j < a.size(); ++j) {
          a[i][j] -= f * a[c][j];
        }
      }
    }
    return d;
  }

  inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              s(k);
    for (std::size_t i = 0; i < k; ++i) {
      s[i] = i;
    }
    while (k <= n) {
      out.push_back(s);
      std::size_t i = k;
      while (i > 0 && s[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++s[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        s[j] = s[j - 1] + 1;
      }
    }
    return out;
  }

  // gcd of the r x r minors of the integer rows b, r = rank b. It is
  // invariant under unimodular row operations, so two integer generating
  // sets of the same rank with nested lattices span the same lattice iff
  // their divisors agree.
  inline Z determinantal_divisor(std::vector<std::vector<Z>> const& b) {
    Mat m;
    for (auto const& row : b) {
      m.emplace_back(row.begin(), row.end());
    }
    auto const r = rank(m);
    if (r == 0) {
      return 0;
    }
    Z g = 0;
    for (auto const& rs : subsets(b.size(), r)) {
      for (auto const& cs : subsets(b[0].size(), r)) {
        auto sub = make(r, r);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            sub[i][j] = m[rs[i]][cs[j]];
          }
        }
        Z const d = det(sub).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    return g;
  }

  // x lies in the row lattice of b iff adding it changes neither the rank
  // nor the determinantal divisor.
  inline bool lattice_member(std::vector<std::vector<Z>> const& b,
                             std::vector<Z> const&              x) {
    auto bx = b;
    bx.push_back(x);
    auto const to_mat = [](std::vector<std::vector<Z>> const& rows) {
      Mat m;
      for (auto const& row : rows) {
        m.emplace_back(row.begin(), row.end());
      }
      return m;
    };
    return rank(to_mat(bx)) == rank(to_mat(b))
           && determinantal_divisor(bx) == determinantal_divisor(b);
  }

  // All integer points of [-box, box]^n.
  inline std::vector<std::vector<Z>> box_points(std::size_t n, long box) {
    std::vector<std::vector<Z>> out;
    std::vector<long>           c(n, -box);
    while (true) {
      out.emplace_back(c.begin(), c.end());
      std::size_t i = 0;
      while (i < n && c[i] == box) {
        c[i++] = -box;
      }
      if (i == n) {
        break;
      }
      ++c[i];
    }
    return out;
  }

  // Values alpha M(w) eta^T for all words of length <= max_len.
  inline std::set<Q> automaton_values(std::vector<Q> const&   alpha,
                                      std::vector<Mat> const& gens,
                                      std::vector<Q> const&   eta,
                                      std::size_t             max_len) {
    std::set<Q>      out;
    std::vector<Mat> level{Mat{alpha}};
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<Mat> next;
      for (auto const& v : level) {
        Q x = 0;
        for (std::size_t i = 0; i < eta.size(); ++i) {
          x += v[0][i] * eta[i];
        }
        out.insert(x);
        if (len < max_len) {
          for (auto const& g : gens) {
            next.push_back(mul(v, g));
          }
        }
      }
      level = std::move(next);
    }
    return out;
  }

  // All 2^n n! signed permutation matrices.
  inline std::vector<Mat> signed_permutations(std::size_t n) {
    std::vector<Mat>         out;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    do {
      for (std::size_t signs = 0; signs < (std::size_t(1) << n); ++signs) {
        auto m = make(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          m[i][perm[i]] = (signs >> i) & 1 ? -1 : 1;
        }
        out.push_back(m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

}  // namespace oracle

#endif  // SEMIFORGE_TESTS_ORACLES_HPP_
