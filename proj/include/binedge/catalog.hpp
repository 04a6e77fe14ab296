#pragma once

#include <string>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

inline constexpr int kCatalogMaxVertices = 8;

struct CanonicalForm {
  std::string graph6;        // graph6 of the canonically relabeled graph
  std::vector<int> labeling;  // labeling[old] = new, index 0 unused
};

// Lexicographically least upper-triangle bit string (graph6 column order) over all relabelings that
// respect an iterated degree refinement. `root`, when nonzero, is forced to label 1.
CanonicalForm canonical_form(const Graph& g, int root = 0);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

struct GraphCatalog {
  int n_max = 0;
  std::vector<Graph> graphs;  // canonical representatives, by vertex count then graph6 string
};

// One canonical representative per isomorphism class of connected graphs on exactly n vertices.
GraphCatalog enumerate_connected_graphs(int n);
// The union of the censuses for 1..n_max.
GraphCatalog connected_catalog(int n_max);

// One free vertex per automorphism orbit of free vertices, ascending.
std::vector<int> free_vertex_orbit_representatives(const Graph& g);

}  // namespace binedge
