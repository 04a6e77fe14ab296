#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "binedge/graph.hpp"
#include "binedge/polynomial.hpp"

namespace binedge {

// Coefficient field for homology: characteristic 0 means the rationals, otherwise a prime p.
struct Field {
  long characteristic = 0;

  static Field rationals() { return {}; }
  static Field prime(long p);
  std::string to_string() const;
  friend bool operator==(const Field&, const Field&) = default;
};

// A simplicial complex on vertices 0..ground_size-1, stored by its facets. An empty facet list is the
// void complex; the single facet {} is the complex {emptyset}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  static SimplicialComplex from_facets(int ground_size, std::vector<VarMask> facets);

  int ground_size() const { return ground_size_; }
  const std::vector<VarMask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  int dimension() const;
  bool is_pure() const;
  bool contains(VarMask face) const;

  // faces[s] lists the faces with s vertices, sorted, for s <= max_size.
  std::vector<std::vector<VarMask>> faces_by_size(int max_size) const;
  SimplicialComplex link(VarMask face) const;
  SimplicialComplex restriction(VarMask vertices) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int ground_size_ = 0;
  std::vector<VarMask> facets_;
};

struct HomologyProfile {
  std::map<int, std::size_t> reduced_betti;  // rational ranks, degrees -1..dim
  std::set<long> torsion_primes;

  std::size_t rank(int degree) const;
};

// Diagonal form of an integer matrix under unimodular row and column operations.
struct DiagonalForm {
  std::size_t unit_count = 0;
  std::vector<mpz_class> nonunit;  // remaining nonzero diagonal entries, absolute values > 1

  std::size_t rank() const { return unit_count + nonunit.size(); }
  std::size_t rank_over(Field f) const;
};

// Sparse integer matrix stored column-wise with entries (row, value).
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> columns;
};

// Unit-pivot sparse elimination followed by a dense Smith-style reduction of whatever is left.
DiagonalForm diagonalize(const SparseIntMatrix& m);

// Boundary map from faces with `size` vertices to faces with size-1 vertices (size >= 1).
SparseIntMatrix boundary_matrix(const std::vector<VarMask>& faces, const std::vector<VarMask>& facets_below);

HomologyProfile reduced_homology(const SimplicialComplex& c);
// Reduced Betti numbers over `field`, indexed by degree+1 (so index 0 is degree -1).
std::vector<std::size_t> reduced_betti(const SimplicialComplex& c, Field field);

// For every face (the empty face included) the link has vanishing reduced homology below its dimension.
bool reisner_is_cm(const SimplicialComplex& c, Field field = {});

class SquarefreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Faces are the subsets of the ground set containing no generator support.
SimplicialComplex stanley_reisner_complex(const std::vector<Monomial>& ini, int ground_size);

// A shelling order of the facets of a pure complex, tried in a few fixed facet orders. An empty
// result means none of them shells, not that the complex is unshellable.
std::optional<std::vector<VarMask>> find_pure_shelling(const SimplicialComplex& c);

// Projective dimension of S/I for a squarefree monomial ideal I, from Hochster's formula
// beta_{i,W}(S/I) = dim H~_{|W|-i-1}(Delta_W), scanning the W that are unions of generator supports.
int projective_dimension_hochster(const std::vector<Monomial>& ini, Field field = {});
// `lower_bound` is any known lower bound for the answer; it only prunes the scan.
int projective_dimension_hochster(const std::vector<VarMask>& generators, Field field = {}, int lower_bound = 0);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DepthResult {
  int depth = 0;
  int projective_dimension = 0;
  int dimension = 0;
  bool is_cm = false;
  std::string route = "initial-ideal";
};

struct DepthOptions {
  int max_vertices = 7;
  Field field;
};

// depth S/J_G = 2n - pd(S/in(J_G)), with in(J_G) read off the admissible-path basis in g's labeling.
DepthResult depth_of_quotient(const Graph& g, const DepthOptions& options = {});

}  // namespace binedge
