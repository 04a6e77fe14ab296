#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binedge/graph.hpp"
#include "binedge/polynomial.hpp"

namespace binedge {

struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> generators;
};

// f_ij = x_i y_j - x_j y_i, for i < j.
Polynomial edge_binomial(const Ring& ring, int i, int j);

// One f_ij per edge, in edge order.
std::vector<Polynomial> edge_ideal_generators(const Graph& g);

// Remainder of p under full multivariate division. The divisor is always the first generator, in the
// given order, whose leading monomial divides the current term.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Every S-pair reduces to zero modulo `gens`.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& gens);

// The unique reduced monic basis of the ideal generated by a Groebner basis `gb`, sorted by
// decreasing leading monomial.
GroebnerBasis reduce_basis(const Ring& ring, std::vector<Polynomial> gb);

// Buchberger's algorithm with the coprime and chain criteria; returns the reduced monic basis.
GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> gens);

struct AdmissiblePath {
  std::vector<int> vertices;  // i = i_0, ..., i_r = j with i < j
  Monomial multiplier;        // u_pi

  int from() const { return vertices.front(); }
  int to() const { return vertices.back(); }
};

// Checks the three admissibility conditions for a path of g, reading "proper subset" of the interior as
// an order-preserving proper subsequence.
bool is_admissible(const Graph& g, const std::vector<int>& path);
Monomial path_multiplier(const Ring& ring, const std::vector<int>& path);

// All admissible paths ordered by (i, j), then length, then lexicographically.
std::vector<AdmissiblePath> admissible_paths(const Graph& g);

// { u_pi f_ij : pi admissible from i to j }, in admissible_paths order.
GroebnerBasis gb_from_admissible_paths(const Graph& g);

// Basis of J_{G'} + (l_y) for G' = G_1 disjoint G_2', where the first graph is relabeled to 1..n with
// the glue vertex at n and the second to n+1..n+m with its copy of the glue vertex at n+1.
struct GluedUnionBasis {
  GroebnerBasis basis;
  int n = 0;
  int m = 0;
  Graph union_graph;  // G' in the arranged labels
  Polynomial l_x;      // x_n - x_{n+1}
  Polynomial l_y;      // y_n - y_{n+1}
};

GluedUnionBasis glued_union_basis(const Graph& g1, int v1, const Graph& g2, int v2);

// Minimal generators of the ideal of leading monomials, sorted decreasingly.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

bool variable_avoids_initial_generators(const std::vector<Monomial>& ini, int var);

// Checks the shape of the minimal initial generators of a glued union basis: y_n is a generator, no
// generator is divisible by x_n, and the rest are u x_i y_j (j != n) or u x_i y_{n+1} (i < n).
// Returns an empty string on success.
std::string check_glued_initial_shape(const GluedUnionBasis& glued, const std::vector<Monomial>& ini);

}  // namespace binedge
