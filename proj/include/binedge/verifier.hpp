#pragma once

#include <string>
#include <vector>

#include "binedge/graph.hpp"
#include "binedge/homology.hpp"

namespace binedge {

struct TheoremCheck {
  std::string theorem_id;
  std::string instance;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Identity of a graph in reports: its graph6 string in the given labeling.
std::string graph_id(const Graph& g);

// Cut sets of the glued graph against the two-part reassembly, the height additivity, and
// unmixed(glued) == unmixed(g1) && unmixed(g2).
TheoremCheck check_gluing_unmixed(const Graph& g1, const Graph& g2, int v1, int v2);

// depth(glued) = depth(g1) + depth(g2) - 2 and CM(glued) == CM(g1) && CM(g2).
TheoremCheck check_depth_gluing(const Graph& g1, const Graph& g2, int v1, int v2, const DepthOptions& options);

// Requires a valid decomposition whose part graph is a tree. Checks the r-part depth formula, the CM
// equivalence, and, when every part is CM, CM == unmixed on the host.
TheoremCheck check_tree_decomposition(const GluingDecomposition& d, const DepthOptions& options);

// Requires g chordal with maximal cliques pairwise sharing at most one vertex. Checks that CM, unmixed
// and "no vertex lies in three maximal cliques" agree.
TheoremCheck check_chordal_corollary(const Graph& g, const DepthOptions& options);

// Cut sets and heights of the cone over a connected h, its dimension, and for unmixed h the
// equivalence unmixed(cone) <=> h complete.
TheoremCheck check_cone_connected(const Graph& h);

// Cut sets and heights of the cone over h1 + h2, its dimension and the unmixedness equivalence. With
// `depth` set, also CM(h1) && CM(h2) => CM(cone).
TheoremCheck check_cone_two_components(const Graph& h1, const Graph& h2, const DepthOptions* depth);

// A cone over a graph with at least three components is never unmixed.
TheoremCheck check_cone_many_components(const Graph& h);

// The admissible-path basis, interreduced, equals the reduced Buchberger basis, with squarefree
// leading terms.
TheoremCheck check_groebner_closed_form(const Graph& g);

// The glued union basis satisfies Buchberger's criterion and its minimal initial generators contain
// y_n and avoid x_n.
TheoremCheck check_glued_basis(const Graph& g1, int v1, const Graph& g2, int v2);

struct VerifyOptions {
  Field field;
  int threads = 1;
  int gluing_depth_max_n = 5;  // gluing pairs with a larger part get the combinatorial check only
};

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  std::vector<TheoremCheck> checks;

  std::size_t failure_count() const;
  bool passed() const { return failure_count() == 0; }
};

// Suites: "gluing", "tree", "cone", "chordal", "groebner", or "all". Catalog graphs have at most
// n_max vertices; each suite raises the depth cap to the largest graph it builds.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, int n_max, const VerifyOptions& options);

struct SweepEntry {
  std::string h;  // graph6 of h
  int n = 0;      // vertices of the cone
  bool complete = false;
  bool unmixed = false;
  bool depth_computed = false;
  int depth = 0;
  int dimension = 0;
  bool cm = false;
  bool h_cm = false;
};

struct SweepReport {
  int n_max = 0;
  std::vector<SweepEntry> entries;
  std::vector<std::string> counterexamples;  // cones that are CM over a non-complete h
  std::vector<std::string> cm_over_non_cm;   // cones that are CM while h is not

  std::size_t unmixed_count() const;
  std::size_t cm_count() const;
};

// Cones over every connected h with 1..n_max vertices. Homology runs only on unmixed cones.
SweepReport conjecture_sweep(int n_max, const VerifyOptions& options);

}  // namespace binedge
