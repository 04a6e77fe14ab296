#include <gtest/gtest.h>

#include <random>

#include "binedge/catalog.hpp"
#include "binedge/groebner.hpp"
#include "binedge/homology.hpp"
#include "binedge/prime_spectrum.hpp"
#include "oracles.hpp"

using namespace binedge;

namespace {

VarMask bits(std::initializer_list<int> vs) {
  VarMask m = 0;
  for (int v : vs) m |= VarMask{1} << v;
  return m;
}

SimplicialComplex complex(int ground, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<VarMask> fs;
  for (auto f : facets) fs.push_back(bits(f));
  return SimplicialComplex::from_facets(ground, fs);
}

std::set<VarMask> facet_set(const SimplicialComplex& c) { return {c.facets().begin(), c.facets().end()}; }

SimplicialComplex hollow_triangle() { return complex(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  return complex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                     {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

std::vector<VarMask> supports(const std::vector<Monomial>& ms) {
  std::vector<VarMask> out;
  for (const auto& m : ms) out.push_back(m.support());
  return out;
}

std::vector<oracle::Mask> initial_supports(const Graph& g) {
  return supports(initial_ideal(gb_from_admissible_paths(g)));
}

// Shelling by definition: each facet meets the union of the earlier ones in a pure complex of
// codimension one.
bool is_shelling(const std::vector<VarMask>& order) {
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::set<VarMask> meets;
    for (std::size_t j = 0; j < k; ++j) meets.insert(order[k] & order[j]);
    const int want = std::popcount(order[k]) - 1;
    for (VarMask m : meets) {
      const bool inside_ridge = std::any_of(meets.begin(), meets.end(), [&](VarMask r) {
        return std::popcount(r) == want && (m & r) == m;
      });
      if (!inside_ridge) return false;
    }
  }
  return true;
}

std::vector<std::vector<long long>> random_matrix(std::mt19937& rng, int rows, int cols, int spread) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  std::bernoulli_distribution present(0.4);
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
  for (auto& row : m)
    for (auto& x : row)
      if (present(rng)) x = entry(rng);
  return m;
}

SparseIntMatrix sparse(const std::vector<std::vector<long long>>& m) {
  SparseIntMatrix s;
  s.rows = static_cast<int>(m.size());
  s.cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  s.columns.resize(static_cast<std::size_t>(s.cols));
  for (int j = 0; j < s.cols; ++j)
    for (int i = 0; i < s.rows; ++i)
      if (m[i][j] != 0) s.columns[j].emplace_back(i, m[i][j]);
  return s;
}

}  // namespace

TEST(Field, Validation) {
  EXPECT_EQ(Field::rationals().characteristic, 0);
  EXPECT_EQ(Field::prime(7).characteristic, 7);
  EXPECT_THROW(Field::prime(4), std::invalid_argument);
  EXPECT_THROW(Field::prime(1), std::invalid_argument);
  EXPECT_EQ(Field::prime(2).to_string(), "GF(2)");
}

TEST(Diagonalize, SmallExamples) {
  const auto d = diagonalize(sparse({{2, 0}, {0, 3}}));
  EXPECT_EQ(d.rank(), 2U);
  EXPECT_EQ(d.rank_over(Field::prime(2)), 1U);
  EXPECT_EQ(d.rank_over(Field::prime(3)), 1U);
  EXPECT_EQ(d.rank_over(Field::prime(5)), 2U);
  EXPECT_EQ(diagonalize(sparse({{1, 1}, {1, 1}})).rank(), 1U);
  EXPECT_EQ(diagonalize(SparseIntMatrix{3, 0, {}}).rank(), 0U);
}

TEST(Diagonalize, RandomMatricesMatchDenseRank) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + trial % 7;
    const int cols = 1 + (trial / 7) % 8;
    const auto m = random_matrix(rng, rows, cols, trial < 100 ? 3 : 1000000);
    const auto d = diagonalize(sparse(m));
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
    std::vector<std::vector<long>> z(rows, std::vector<long>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        q[i][j] = static_cast<long>(m[i][j]);
        z[i][j] = static_cast<long>(m[i][j]);
      }
    ASSERT_EQ(d.rank(), oracle::rank(q)) << "trial " << trial;
    for (long p : {2L, 3L, 5L, 7L}) ASSERT_EQ(d.rank_over(Field::prime(p)), oracle::rank_mod(z, p)) << "trial " << trial;
  }
}

TEST(Diagonalize, SurvivesCoefficientGrowth) {
  // Entries near the long long range force the arbitrary-precision path.
  const long long big = 3037000493LL;  // prime, big * big fits, sums of products do not
  const auto d = diagonalize(sparse({{big, big - 2, 7}, {big - 4, big, 11}, {13, 17, big}}));
  std::vector<std::vector<mpq_class>> q{{mpq_class(mpz_class("3037000493")), mpq_class(mpz_class("3037000491")), 7},
                                        {mpq_class(mpz_class("3037000489")), mpq_class(mpz_class("3037000493")), 11},
                                        {13, 17, mpq_class(mpz_class("3037000493"))}};
  EXPECT_EQ(d.rank(), oracle::rank(q));
}

TEST(SimplicialComplex, Construction) {
  const auto c = complex(4, {{0, 1}, {0}, {1, 2, 3}});
  EXPECT_EQ(c.facets().size(), 2U);
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_FALSE(c.is_pure());
  EXPECT_TRUE(c.contains(bits({2, 3})));
  EXPECT_FALSE(c.contains(bits({0, 2})));
  EXPECT_TRUE(SimplicialComplex::from_facets(3, {}).is_void());
  EXPECT_EQ(SimplicialComplex::from_facets(3, {0}).dimension(), -1);
  const auto faces = c.faces_by_size(2);
  EXPECT_EQ(faces[0].size(), 1U);
  EXPECT_EQ(faces[1].size(), 4U);
  EXPECT_EQ(faces[2].size(), 4U);
}

TEST(SimplicialComplex, LinkAndRestriction) {
  const auto c = complex(4, {{0, 1, 2}, {0, 3}});
  EXPECT_EQ(facet_set(c.link(bits({0}))), (std::set<VarMask>{bits({1, 2}), bits({3})}));
  EXPECT_EQ(facet_set(c.link(bits({1, 2}))), (std::set<VarMask>{bits({0})}));
  EXPECT_EQ(facet_set(c.restriction(bits({1, 2, 3}))), (std::set<VarMask>{bits({1, 2}), bits({3})}));
}

TEST(Homology, UnitCases) {
  const auto triangle = reduced_homology(hollow_triangle());
  EXPECT_EQ(triangle.rank(1), 1U);
  EXPECT_EQ(triangle.rank(0), 0U);
  EXPECT_EQ(triangle.rank(-1), 0U);
  EXPECT_TRUE(triangle.torsion_primes.empty());

  const auto points = reduced_homology(complex(2, {{0}, {1}}));
  EXPECT_EQ(points.rank(0), 1U);
  EXPECT_EQ(points.rank(-1), 0U);

  const auto empty_face = reduced_homology(SimplicialComplex::from_facets(2, {0}));
  EXPECT_EQ(empty_face.rank(-1), 1U);
}

TEST(Homology, ProjectivePlaneTorsion) {
  const auto rp2 = projective_plane();
  const auto h = reduced_homology(rp2);
  for (int d = -1; d <= 2; ++d) EXPECT_EQ(h.rank(d), 0U) << d;
  EXPECT_EQ(h.torsion_primes, (std::set<long>{2}));
  EXPECT_EQ(reduced_betti(rp2, Field::prime(2)), (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_EQ(reduced_betti(rp2, Field::prime(3)), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_TRUE(reisner_is_cm(rp2));
  EXPECT_FALSE(reisner_is_cm(rp2, Field::prime(2)));
}

TEST(Homology, ConeIsAcyclic) {
  // Coning the projective plane from a new vertex kills all homology, torsion included.
  const auto rp2 = projective_plane();
  std::vector<VarMask> facets;
  for (VarMask f : rp2.facets()) facets.push_back(f | bits({6}));
  const auto h = reduced_homology(SimplicialComplex::from_facets(7, facets));
  for (int d = -1; d <= 3; ++d) EXPECT_EQ(h.rank(d), 0U);
  EXPECT_TRUE(h.torsion_primes.empty());
}

TEST(Homology, InvariantUnderVertexPermutation) {
  const auto rp2 = projective_plane();
  const std::vector<int> perm{3, 5, 0, 1, 4, 2};
  std::vector<VarMask> moved;
  for (VarMask f : rp2.facets()) {
    VarMask g = 0;
    for (int v = 0; v < 6; ++v)
      if (f >> v & 1U) g |= VarMask{1} << perm[v];
    moved.push_back(g);
  }
  const auto a = reduced_homology(rp2);
  const auto b = reduced_homology(SimplicialComplex::from_facets(6, moved));
  EXPECT_EQ(a.reduced_betti, b.reduced_betti);
  EXPECT_EQ(a.torsion_primes, b.torsion_primes);
}

TEST(Homology, BettiMatchesDenseOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const int ground = 4 + trial % 4;
    std::uniform_int_distribution<VarMask> pick(1, (VarMask{1} << ground) - 1);
    std::vector<VarMask> facets;
    for (int k = 0; k < 2 + trial % 5; ++k) facets.push_back(pick(rng));
    const auto c = SimplicialComplex::from_facets(ground, facets);
    for (long p : {0L, 2L, 3L}) {
      const Field f = p == 0 ? Field::rationals() : Field::prime(p);
      auto got = reduced_betti(c, f);
      while (!got.empty() && got.back() == 0) got.pop_back();
      ASSERT_EQ(got, oracle::betti(facet_set(c), ground, p)) << "trial " << trial << " p " << p;
    }
  }
}

TEST(Homology, BoundarySquaresToZero) {
  const auto c = complex(5, {{0, 1, 2, 3, 4}});
  const auto faces = c.faces_by_size(5);
  for (std::size_t s = 2; s < faces.size(); ++s) {
    const auto upper = boundary_matrix(faces[s], faces[s - 1]);
    const auto lower = boundary_matrix(faces[s - 1], faces[s - 2]);
    for (const auto& col : upper.columns) {
      std::map<int, long long> image;
      for (const auto& [row, v] : col)
        for (const auto& [r2, w] : lower.columns[static_cast<std::size_t>(row)]) image[r2] += v * w;
      for (const auto& [_, x] : image) EXPECT_EQ(x, 0);
    }
  }
}

TEST(Reisner, UnitCases) {
  EXPECT_TRUE(reisner_is_cm(complex(4, {{0, 1, 2, 3}})));
  EXPECT_FALSE(reisner_is_cm(complex(3, {{0, 1}, {2}})));
  EXPECT_TRUE(reisner_is_cm(hollow_triangle()));
  // Two triangles glued at a vertex: pure but the link of the vertex is disconnected.
  EXPECT_FALSE(reisner_is_cm(complex(5, {{0, 1, 2}, {2, 3, 4}})));
}

TEST(Reisner, MatchesOracleOnRandomComplexes) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int ground = 4 + trial % 3;
    const int size = 2 + trial % 3;
    std::vector<int> verts(static_cast<std::size_t>(ground));
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<VarMask> facets;
    for (int k = 0; k < 2 + trial % 4; ++k) {
      std::shuffle(verts.begin(), verts.end(), rng);
      VarMask f = 0;
      for (int i = 0; i < size; ++i) f |= VarMask{1} << verts[static_cast<std::size_t>(i)];
      facets.push_back(f);
    }
    const auto c = SimplicialComplex::from_facets(ground, facets);
    ASSERT_EQ(reisner_is_cm(c), oracle::reisner(facet_set(c), ground)) << "trial " << trial;
  }
}

TEST(StanleyReisner, Examples) {
  const Ring r{3};
  const std::vector<Monomial> path{Monomial::var(r.x(1)) * Monomial::var(r.y(2)),
                                   Monomial::var(r.x(2)) * Monomial::var(r.y(3))};
  const auto c = stanley_reisner_complex(path, 6);
  EXPECT_EQ(c.facets().size(), 4U);
  for (VarMask f : c.facets()) EXPECT_EQ(std::popcount(f), 4);
  EXPECT_EQ(facet_set(stanley_reisner_complex({}, 6)), (std::set<VarMask>{(VarMask{1} << 6) - 1}));
  EXPECT_EQ(facet_set(stanley_reisner_complex({Monomial::var(0)}, 6)), (std::set<VarMask>{(VarMask{1} << 6) - 2}));
  EXPECT_THROW(stanley_reisner_complex({Monomial::var(0, 2)}, 6), SquarefreeError);
}

TEST(StanleyReisner, MatchesSubsetOracle) {
  for (const auto& g : connected_catalog(5).graphs) {
    const auto gens = initial_supports(g);
    const int ground = 2 * g.vertex_count();
    const auto c = stanley_reisner_complex(initial_ideal(gb_from_admissible_paths(g)), ground);
    ASSERT_EQ(facet_set(c), oracle::sr_facets(gens, ground)) << describe(g);
  }
}

TEST(Shelling, OrdersAreShellings) {
  const auto sphere = complex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  const auto order = find_pure_shelling(sphere);
  ASSERT_TRUE(order.has_value());
  EXPECT_TRUE(is_shelling(*order));
  EXPECT_FALSE(find_pure_shelling(complex(5, {{0, 1, 2}, {2, 3, 4}})).has_value());
  EXPECT_FALSE(find_pure_shelling(complex(4, {{0, 1, 2}, {3}})).has_value());
  for (const auto& g : connected_catalog(5).graphs) {
    const auto c = stanley_reisner_complex(initial_ideal(gb_from_admissible_paths(g)), 2 * g.vertex_count());
    if (const auto o = find_pure_shelling(c)) {
      EXPECT_TRUE(is_shelling(*o)) << describe(g);
      EXPECT_EQ(std::set<VarMask>(o->begin(), o->end()), facet_set(c));
      EXPECT_TRUE(reisner_is_cm(c)) << describe(g);
    }
  }
}

TEST(Hochster, Examples) {
  const Ring r{3};
  const std::vector<Monomial> path{Monomial::var(r.x(1)) * Monomial::var(r.y(2)),
                                   Monomial::var(r.x(2)) * Monomial::var(r.y(3))};
  EXPECT_EQ(projective_dimension_hochster(path), 2);
  EXPECT_EQ(projective_dimension_hochster({path[0]}), 1);
  EXPECT_EQ(projective_dimension_hochster(std::vector<Monomial>{}), 0);
  const auto star = initial_ideal(gb_from_admissible_paths(Graph(3, {{1, 2}, {1, 3}})));
  EXPECT_EQ(projective_dimension_hochster(star), oracle::hochster_pd(supports(star), 6));
  EXPECT_EQ(projective_dimension_hochster(star), 2);
}

TEST(Hochster, MatchesFullScanOnCatalog) {
  auto graphs = connected_catalog(4).graphs;
  const auto five = enumerate_connected_graphs(5).graphs;
  for (std::size_t k = 0; k < five.size(); k += 4) graphs.push_back(five[k]);
  for (const auto& g : graphs) {
    const auto gens = initial_supports(g);
    ASSERT_EQ(projective_dimension_hochster(gens), oracle::hochster_pd(gens, 2 * g.vertex_count())) << describe(g);
  }
}

TEST(Hochster, MatchesFullScanOnRandomIdeals) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int ground = 5 + trial % 4;
    std::uniform_int_distribution<int> var(0, ground - 1);
    std::vector<VarMask> gens;
    for (int k = 0; k < 2 + trial % 5; ++k) {
      VarMask g = 0;
      for (int d = 0; d < 1 + trial % 3; ++d) g |= VarMask{1} << var(rng);
      gens.push_back(g);
    }
    const int want = oracle::hochster_pd(gens, ground);
    ASSERT_EQ(projective_dimension_hochster(gens), want) << "trial " << trial;
    ASSERT_EQ(projective_dimension_hochster(gens, Field::rationals(), want), want) << "trial " << trial;
  }
}

TEST(Hochster, FieldDependence) {
  // The Stanley-Reisner ideal of the projective plane: pd differs between characteristic 2 and 0.
  const auto rp2 = projective_plane();
  std::vector<VarMask> nonfaces;
  for (VarMask m = 1; m < (VarMask{1} << 6); ++m) {
    if (rp2.contains(m)) continue;
    bool minimal = true;
    for (int v = 0; v < 6; ++v)
      if ((m >> v & 1U) && !rp2.contains(m & ~(VarMask{1} << v))) minimal = false;
    if (minimal) nonfaces.push_back(m);
  }
  EXPECT_EQ(projective_dimension_hochster(nonfaces), oracle::hochster_pd(nonfaces, 6));
  EXPECT_EQ(projective_dimension_hochster(nonfaces, Field::prime(2)), oracle::hochster_pd(nonfaces, 6, 2));
  EXPECT_EQ(projective_dimension_hochster(nonfaces), 3);
  EXPECT_EQ(projective_dimension_hochster(nonfaces, Field::prime(2)), 4);
}

TEST(Depth, Examples) {
  const auto p3 = depth_of_quotient(path_graph(3));
  EXPECT_EQ(p3.depth, 4);
  EXPECT_EQ(p3.dimension, 4);
  EXPECT_TRUE(p3.is_cm);
  for (int n = 1; n <= 5; ++n) {
    const auto k = depth_of_quotient(complete_graph(n));
    EXPECT_EQ(k.depth, n + 1);
    EXPECT_TRUE(k.is_cm);
  }
  const auto fan = depth_of_quotient(cone(star_graph(3)).graph);
  EXPECT_FALSE(fan.is_cm);
  EXPECT_EQ(fan.dimension, 6);
}

TEST(Depth, MatchesOracleAndInvariants) {
  for (const auto& g : connected_catalog(5).graphs) {
    const int n = g.vertex_count();
    const auto r = depth_of_quotient(g);
    EXPECT_EQ(r.depth + r.projective_dimension, 2 * n);
    EXPECT_EQ(r.dimension, dimension(g));
    EXPECT_LE(r.depth, r.dimension);
    if (r.is_cm) {
      EXPECT_TRUE(is_unmixed(g)) << describe(g);
    }
    if (n <= 4) {
      const auto gens = initial_supports(g);
      EXPECT_EQ(r.projective_dimension, oracle::hochster_pd(gens, 2 * n)) << describe(g);
      EXPECT_EQ(r.is_cm, oracle::reisner(oracle::sr_facets(gens, 2 * n), 2 * n)) << describe(g);
    }
  }
}

TEST(Depth, CohenMacaulayMatchesReisner) {
  for (const auto& g : connected_catalog(6).graphs) {
    const auto r = depth_of_quotient(g);
    const auto c = stanley_reisner_complex(initial_ideal(gb_from_admissible_paths(g)), 2 * g.vertex_count());
    EXPECT_EQ(r.is_cm, reisner_is_cm(c)) << describe(g);
    if (r.is_cm) {
      EXPECT_TRUE(is_unmixed(g)) << describe(g);
    }
  }
}

TEST(Depth, TreesHaveDepthNPlusOne) {
  for (const auto& g : connected_catalog(7).graphs)
    if (is_tree(g)) {
      EXPECT_EQ(depth_of_quotient(g).depth, g.vertex_count() + 1) << describe(g);
    }
}

TEST(Depth, RefusesOutsideCaps) {
  EXPECT_THROW(depth_of_quotient(edgeless_graph(2)), GraphError);
  EXPECT_THROW(depth_of_quotient(path_graph(8)), CapExceeded);
  DepthOptions wide;
  wide.max_vertices = 8;
  EXPECT_EQ(depth_of_quotient(path_graph(8), wide).depth, 9);
}
