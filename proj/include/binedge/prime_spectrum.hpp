#pragma once

#include <optional>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

struct CutSet {
  VertexSet t;
  int component_count = 0;  // c(T): components of the graph induced on the complement of T

  friend bool operator==(const CutSet&, const CutSet&) = default;
};

// Descriptor of the prime P_T(G): the variables x_i, y_i for i in T plus the 2-minors of the
// complete graphs on the components of G restricted to the complement of T.
struct MinimalPrime {
  CutSet cut_set;
  int height = 0;  // n + |T| - c(T)
  std::vector<VertexSet> components;
};

struct SpectrumSummary {
  std::vector<MinimalPrime> primes;
  int dimension = 0;
  bool unmixed = false;
};

// Every i in t is a cut vertex of the graph induced on (complement of t) + {i}.
bool has_cutpoint_property(const Graph& g, VertexSet t);

// All cut sets of g ordered by size then lexicographically. Works for disconnected graphs as well;
// the connected-only entry points below reject them.
std::vector<CutSet> enumerate_cutsets_any(const Graph& g);

// Requires g connected.
std::vector<CutSet> enumerate_cutsets(const Graph& g);
std::vector<MinimalPrime> minimal_primes(const Graph& g);
int dimension(const Graph& g);
bool is_unmixed(const Graph& g);
SpectrumSummary spectrum(const Graph& g);

// First cut set with c(T) != |T|+1, if any; the search stops there.
std::optional<CutSet> unmixedness_witness(const Graph& g);

int height(const Graph& g, const CutSet& c);

// Inputs for reassembling C(G) of a glued graph from the cut sets of its two halves.
struct GluingData {
  GlueResult glued;
  int v1 = 0;  // shared vertex, g1 label
  int v2 = 0;  // shared vertex, g2 label
  VertexSet facet1;  // the facet of Delta(g1) containing v1
  VertexSet facet2;
};

GluingData make_gluing_data(const Graph& g1, const Graph& g2, int v1, int v2);

// C(G) = A u B for G glued at a free vertex v: A = {T1 u T2}, B = {T1 u T2 u {v} : F_i not in T_i u {v}}.
// Component counts follow c(T1)+c(T2)-1 on A and c(T1)+c(T2) on B.
std::vector<CutSet> cutsets_via_gluing(const std::vector<CutSet>& c1, const std::vector<CutSet>& c2,
                                       const GluingData& data);

enum class Row { X, Y };

// The linear form x_u - x_w (or y_u - y_w).
struct LinearDifference {
  Row row = Row::Y;
  int u = 0;
  int w = 0;
};

// True when the form avoids every minimal prime of J_g. A degree-one element of P_T lies in the span
// of {x_i, y_i : i in T}, so the form is in P_T iff both u and w are in T.
bool linear_form_regular(const Graph& g, const LinearDifference& form);

void sort_cutsets(std::vector<CutSet>& cs);

}  // namespace binedge
