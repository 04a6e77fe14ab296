#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace binedge {

// Vertices are labeled 1..n; bit (v-1) of a mask stands for vertex v.
using VertexMask = std::uint32_t;
inline constexpr int kMaxVertices = 32;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(VertexMask mask) : mask_(mask) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet range(int n) {
    return VertexSet(n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1);
  }

  constexpr VertexMask mask() const { return mask_; }
  constexpr bool contains(int v) const { return (mask_ >> (v - 1)) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr int min() const { return std::countr_zero(mask_) + 1; }

  void insert(int v) { mask_ |= VertexMask{1} << (v - 1); }
  void erase(int v) { mask_ &= ~(VertexMask{1} << (v - 1)); }

  constexpr VertexSet with(int v) const { return VertexSet(mask_ | (VertexMask{1} << (v - 1))); }
  constexpr VertexSet without(int v) const { return VertexSet(mask_ & ~(VertexMask{1} << (v - 1))); }
  constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> to_vector() const;
  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  // Size first, then lexicographic on the sorted member lists.
  friend bool canonical_less(VertexSet a, VertexSet b);

 private:
  VertexMask mask_ = 0;
};

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v - 1]); }
  int degree(int v) const { return std::popcount(adj_[v - 1]); }
  bool has_edge(int u, int v) const { return u != v && ((adj_[u - 1] >> (v - 1)) & 1U); }

  // Edges {u,v} with u<v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_complete() const { return 2 * edge_count_ == n_ * (n_ - 1); }

  // Number of connected components of the subgraph induced on `s`.
  int component_count(VertexSet s) const;
  // The component of the subgraph induced on `within` that contains `start`.
  VertexSet component_of(int start, VertexSet within) const;
  bool is_clique(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexMask> adj_;
};

// A graph together with the label map old vertex -> new vertex (index 0 unused).
struct Relabeled {
  Graph graph;
  std::vector<int> label_map;
};

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_cut_vertex(const Graph& g, int v);
bool is_tree(const Graph& g);
// Every cycle of length at least four has a chord.
bool is_chordal(const Graph& g);

// Induced subgraph on `s`, relabeled to 1..|s| preserving order. `label_map` is indexed by old labels, 0 if dropped.
Relabeled induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);

// Applies the permutation perm[old] = new (perm[0] unused).
Graph relabel(const Graph& g, const std::vector<int>& perm);

struct CliqueComplex {
  std::vector<VertexSet> facets;
  VertexSet free_vertices;

  // Facets containing v.
  std::vector<VertexSet> facets_containing(int v) const;
};

CliqueComplex clique_complex(const Graph& g);
bool is_free_vertex(const Graph& g, int v);

struct ConeResult {
  Graph graph;
  int apex = 0;
};

// New vertex |V(h)|+1 adjacent to every vertex of h.
ConeResult cone(const Graph& h);

Relabeled disjoint_union(const Graph& g1, const Graph& g2);

struct GlueResult {
  Graph graph;
  std::vector<int> map1;  // labels of g1 -> glued labels
  std::vector<int> map2;  // labels of g2 -> glued labels
  int shared = 0;
};

// Identifies free vertex v1 of g1 with free vertex v2 of g2. The glued graph uses the arrangement
// V(g1) = 1..n1 with the shared vertex at n1, and V(g2) = n1..n1+n2-1 with the shared vertex at n1.
GlueResult glue(const Graph& g1, const Graph& g2, int v1, int v2);

// Parts G_1..G_r of a host graph, given as vertex subsets; each part is the induced subgraph.
struct GluingDecomposition {
  Graph host;
  std::vector<VertexSet> parts;

  Graph part_graph(std::size_t i) const;
  // Checks conditions (1) and (2) plus that the parts cover every edge; returns an empty string when valid.
  std::string validate() const;
};

// Graph on part indices 1..r, with {i,j} an edge when parts i and j share a vertex.
Graph decomposition_graph(const GluingDecomposition& d);

// Chain of cliques K_{m_1}, ..., K_{m_r}, consecutive ones glued at free vertices, with consecutive labels.
GluingDecomposition clique_chain(const std::vector<int>& sizes);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // center is vertex 1
Graph edgeless_graph(int n);

std::string describe(const Graph& g);

}  // namespace binedge
