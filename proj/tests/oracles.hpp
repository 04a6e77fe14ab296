#pragma once

// Brute-force reference implementations. They share no code with the library beyond the Graph and
// Polynomial value types, and trade every optimization for being obviously right.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "binedge/graph.hpp"
#include "binedge/polynomial.hpp"

namespace oracle {

using binedge::Graph;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> a(n + 1, std::vector<bool>(n + 1, false));
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) a[u][v] = g.has_edge(u, v);
  return a;
}

// Components of the subgraph induced on the vertices with keep[v] set, by repeated flood fill.
inline int components(const Graph& g, const std::vector<bool>& keep) {
  const auto a = adjacency(g);
  const int n = g.vertex_count();
  std::vector<int> label(n + 1, 0);
  int count = 0;
  for (int s = 1; s <= n; ++s) {
    if (!keep[s] || label[s]) continue;
    ++count;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 1; v <= n; ++v)
        if (keep[v] && a[u][v] && !label[v]) {
          label[v] = count;
          stack.push_back(v);
        }
    }
  }
  return count;
}

struct Cut {
  std::set<int> t;
  int c = 0;
  friend bool operator<(const Cut& a, const Cut& b) { return a.t < b.t; }
  friend bool operator==(const Cut&, const Cut&) = default;
};

inline int c_of(const Graph& g, const std::set<int>& t) {
  std::vector<bool> keep(g.vertex_count() + 1, true);
  keep[0] = false;
  for (int v : t) keep[v] = false;
  return components(g, keep);
}

// T is a cut set when removing any single element from T strictly lowers c(T).
inline std::vector<Cut> cutsets(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Cut> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    std::set<int> t;
    for (int v = 1; v <= n; ++v)
      if (m >> (v - 1) & 1U) t.insert(v);
    const int c = c_of(g, t);
    bool ok = true;
    for (int i : t) {
      auto smaller = t;
      smaller.erase(i);
      if (c_of(g, smaller) >= c) ok = false;
    }
    if (ok) out.push_back({t, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool unmixed(const Graph& g) {
  const auto cs = cutsets(g);
  const int h0 = g.vertex_count() - cs.front().c;
  return std::all_of(cs.begin(), cs.end(), [&](const Cut& c) {
    return g.vertex_count() + static_cast<int>(c.t.size()) - c.c == h0;
  });
}

// Upper-triangle adjacency bits in graph6 column order after applying perm[old] = new.
inline std::vector<bool> bits(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> a(n + 1, std::vector<bool>(n + 1, false));
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (g.has_edge(u, v)) a[perm[u]][perm[v]] = true;
  std::vector<bool> out;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) out.push_back(a[i][j]);
  return out;
}

// Lex-least bit string over all n! relabelings.
inline std::vector<bool> certificate(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  auto best = bits(g, p);
  while (std::next_permutation(p.begin() + 1, p.end())) best = std::min(best, bits(g, p));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && certificate(a) == certificate(b);
}

// Isomorphism classes of connected graphs on n vertices: every labeled graph, deduplicated by certificate.
inline std::size_t connected_class_count(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) slots.emplace_back(i, j);
  std::set<std::vector<bool>> seen;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<binedge::Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (m >> k & 1U) edges.push_back({slots[k].first, slots[k].second});
    const Graph g(n, edges);
    std::vector<bool> keep(n + 1, true);
    keep[0] = false;
    if (components(g, keep) != 1) continue;
    seen.insert(certificate(g));
  }
  return seen.size();
}

// Orbits of the automorphism group on vertices, each as a sorted list.
inline std::set<std::vector<int>> vertex_orbits(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  const auto id = bits(g, p);
  std::vector<std::set<int>> orbit(n + 1);
  do {
    if (bits(g, p) == id)
      for (int v = 1; v <= n; ++v) orbit[v].insert(p[v]);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  std::set<std::vector<int>> out;
  for (int v = 1; v <= n; ++v) out.insert({orbit[v].begin(), orbit[v].end()});
  return out;
}

// Free vertex: it lies in exactly one maximal clique, i.e. its closed neighborhood is a clique.
inline bool free_vertex(const Graph& g, int v) {
  std::vector<int> nb;
  for (int u = 1; u <= g.vertex_count(); ++u)
    if (g.has_edge(u, v)) nb.push_back(u);
  for (int a : nb)
    for (int b : nb)
      if (a != b && !g.has_edge(a, b)) return false;
  return true;
}

// Chordal iff no induced cycle of length at least four: no vertex subset of size >= 4 induces a
// connected 2-regular subgraph.
inline bool chordal(const Graph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) < 4) continue;
    std::vector<bool> keep(n + 1, false);
    bool two_regular = true;
    for (int v = 1; v <= n; ++v) keep[v] = m >> (v - 1) & 1U;
    for (int v = 1; v <= n; ++v) {
      if (!keep[v]) continue;
      int d = 0;
      for (int u = 1; u <= n; ++u) d += keep[u] && g.has_edge(u, v);
      if (d != 2) two_regular = false;
    }
    if (two_regular && components(g, keep) == 1) return false;
  }
  return true;
}

using Mask = std::uint64_t;

// Facets of the Stanley-Reisner complex: maximal subsets of [ground] containing no generator.
inline std::set<Mask> sr_facets(const std::vector<Mask>& gens, int ground) {
  std::vector<Mask> faces;
  for (Mask m = 0; m < (Mask{1} << ground); ++m)
    if (std::none_of(gens.begin(), gens.end(), [m](Mask g) { return (g & m) == g; })) faces.push_back(m);
  std::set<Mask> out;
  for (Mask f : faces)
    if (std::none_of(faces.begin(), faces.end(), [f](Mask h) { return h != f && (f & h) == f; })) out.insert(f);
  return out;
}

// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Rank modulo a prime p of an integer matrix.
inline std::size_t rank_mod(std::vector<std::vector<long>> m, long p) {
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inverse = [p](long a) {
    long r = 1;
    for (long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t q = r;
    while (q < m.size() && m[q][c] == 0) ++q;
    if (q == m.size()) continue;
    std::swap(m[q], m[r]);
    const long inv = inverse(m[r][c]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long f = m[i][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Every face of the complex generated by `facets`, grouped by size; size 0 holds the empty face when
// the complex is not void.
inline std::vector<std::vector<Mask>> all_faces(const std::set<Mask>& facets, int ground) {
  std::vector<std::vector<Mask>> out(ground + 2);
  for (Mask m = 0; m < (Mask{1} << ground); ++m)
    if (std::any_of(facets.begin(), facets.end(), [m](Mask f) { return (m & f) == m; }))
      out[static_cast<std::size_t>(std::popcount(m))].push_back(m);
  return out;
}

// Reduced Betti numbers indexed by degree+1, over Q (p = 0) or F_p, from dense boundary matrices.
inline std::vector<std::size_t> betti(const std::set<Mask>& facets, int ground, long p = 0) {
  const auto faces = all_faces(facets, ground);
  auto boundary_rank = [&](std::size_t size) -> std::size_t {
    if (size == 0 || size >= faces.size() || faces[size].empty() || faces[size - 1].empty()) return 0;
    std::map<Mask, std::size_t> row;
    for (std::size_t i = 0; i < faces[size - 1].size(); ++i) row[faces[size - 1][i]] = i;
    std::vector<std::vector<long>> d(faces[size - 1].size(), std::vector<long>(faces[size].size(), 0));
    for (std::size_t j = 0; j < faces[size].size(); ++j) {
      const Mask f = faces[size][j];
      int sign = 1;
      for (int v = 0; v < ground; ++v)
        if (f >> v & 1U) {
          d[row[f & ~(Mask{1} << v)]][j] = sign;
          sign = -sign;
        }
    }
    if (p != 0) return rank_mod(d, p);
    std::vector<std::vector<mpq_class>> q(d.size(), std::vector<mpq_class>(faces[size].size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d[i].size(); ++j) q[i][j] = d[i][j];
    return rank(q);
  };
  std::vector<std::size_t> out;
  for (std::size_t size = 0; size + 1 < faces.size(); ++size)
    out.push_back(faces[size].size() - boundary_rank(size) - boundary_rank(size + 1));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline std::size_t betti_at(const std::vector<std::size_t>& b, int degree) {
  const auto k = static_cast<std::size_t>(degree + 1);
  return k < b.size() ? b[k] : 0;
}

// Projective dimension of S/I from Hochster's formula over every subset W of the ground set.
inline int hochster_pd(const std::vector<Mask>& gens, int ground, long p = 0) {
  const auto facets = sr_facets(gens, ground);
  int pd = 0;
  for (Mask w = 0; w < (Mask{1} << ground); ++w) {
    std::set<Mask> restricted;
    for (Mask f : facets) restricted.insert(f & w);
    std::set<Mask> maximal;
    for (Mask f : restricted)
      if (std::none_of(restricted.begin(), restricted.end(), [f](Mask h) { return h != f && (f & h) == f; }))
        maximal.insert(f);
    const auto b = betti(maximal, ground, p);
    const int size = std::popcount(w);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b[k] != 0) pd = std::max(pd, size - static_cast<int>(k));
  }
  return pd;
}

// Reisner: every link has vanishing reduced homology below its dimension.
inline bool reisner(const std::set<Mask>& facets, int ground, long p = 0) {
  const auto faces = all_faces(facets, ground);
  for (const auto& group : faces)
    for (Mask sigma : group) {
      std::set<Mask> link;
      for (Mask f : facets)
        if ((f & sigma) == sigma) link.insert(f & ~sigma);
      int dim = -1;
      for (Mask f : link) dim = std::max(dim, std::popcount(f) - 1);
      std::set<Mask> maximal;
      for (Mask f : link)
        if (std::none_of(link.begin(), link.end(), [f](Mask h) { return h != f && (f & h) == f; })) maximal.insert(f);
      const auto b = betti(maximal, ground, p);
      for (int d = -1; d < dim; ++d)
        if (betti_at(b, d) != 0) return false;
    }
  return true;
}

}  // namespace oracle
