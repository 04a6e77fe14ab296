#include "binedge/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "binedge/catalog.hpp"
#include "binedge/groebner.hpp"
#include "binedge/io.hpp"
#include "binedge/parallel.hpp"
#include "binedge/prime_spectrum.hpp"

namespace binedge {

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

std::string glue_instance(const Graph& g1, int v1, const Graph& g2, int v2) {
  return "glue(" + graph_id(g1) + "@" + std::to_string(v1) + ", " + graph_id(g2) + "@" + std::to_string(v2) + ")";
}

TheoremCheck make_check(std::string id, std::string instance, std::string expected, std::string computed) {
  TheoremCheck c{std::move(id), std::move(instance), std::move(expected), std::move(computed), false};
  c.pass = c.expected == c.computed;
  return c;
}

VertexSet translate(VertexSet s, const std::vector<int>& map) {
  VertexSet out;
  for (int v : s.to_vector()) out.insert(map[static_cast<std::size_t>(v)]);
  return out;
}

std::string cutset_list(std::vector<CutSet> cs) {
  sort_cutsets(cs);
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < cs.size(); ++k) os << (k ? " " : "") << cs[k].t.to_string() << ':' << cs[k].component_count;
  os << ']';
  return os.str();
}

struct Rooted {
  Graph g;
  int v = 0;
};

std::vector<Rooted> rooted_catalog(int n_max) {
  std::vector<Rooted> out;
  for (const auto& g : connected_catalog(n_max).graphs)
    for (int v : free_vertex_orbit_representatives(g)) out.push_back({g, v});
  return out;
}

// Glues `part` at its free vertex `part_vertex` onto the host vertex `host_vertex`, which must lie in
// exactly one part and be free there.
GluingDecomposition attach(const GluingDecomposition& d, const Graph& part, int host_vertex, int part_vertex) {
  const auto glued = glue(d.host, part, host_vertex, part_vertex);
  GluingDecomposition out;
  out.host = glued.graph;
  for (VertexSet p : d.parts) out.parts.push_back(translate(p, glued.map1));
  out.parts.push_back(translate(part.vertices(), glued.map2));
  return out;
}

GluingDecomposition single_part(const Graph& g) { return {g, {g.vertices()}}; }

// Smallest vertex of part `i` that belongs to no other part.
int unshared_vertex(const GluingDecomposition& d, std::size_t i) {
  VertexSet rest = d.parts[i];
  for (std::size_t j = 0; j < d.parts.size(); ++j)
    if (j != i) rest = rest - d.parts[j];
  if (rest.empty()) throw GraphError("part has no unshared vertex");
  return rest.min();
}

std::string decomposition_instance(const GluingDecomposition& d) {
  std::string s = "parts(" + graph_id(d.host) + ":";
  for (VertexSet p : d.parts) s += " " + p.to_string();
  return s + ")";
}

std::vector<GluingDecomposition> tree_family(int n_max) {
  std::vector<GluingDecomposition> out;
  const int top = std::min(n_max, 4);
  std::vector<std::vector<int>> chains{{}};
  for (int r = 1; r <= 4; ++r) {
    std::vector<std::vector<int>> longer;
    for (const auto& c : chains)
      for (int m = 2; m <= top; ++m) {
        auto next = c;
        next.push_back(m);
        longer.push_back(next);
        out.push_back(clique_chain(next));
      }
    chains = std::move(longer);
  }
  // A triangle with a clique hanging off each vertex: the part graph is a star.
  for (int a = 2; a <= top; ++a)
    for (int b = a; b <= top; ++b)
      for (int c = b; c <= top; ++c) {
        auto d = single_part(complete_graph(3));
        for (int m : {a, b, c}) d = attach(d, complete_graph(m), unshared_vertex(d, 0), 1);
        out.push_back(d);
      }
  // Arbitrary small graphs on both ends of a triangle.
  const auto ends = rooted_catalog(std::min(n_max, 4));
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i; j < ends.size(); ++j) {
      auto d = single_part(complete_graph(3));
      d = attach(d, ends[i].g, unshared_vertex(d, 0), ends[i].v);
      d = attach(d, ends[j].g, unshared_vertex(d, 0), ends[j].v);
      out.push_back(d);
    }
  return out;
}

std::vector<Graph> many_component_family(int n_max) {
  std::vector<Graph> out;
  const auto catalog = connected_catalog(std::max(1, n_max - 2)).graphs;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j)
      for (std::size_t k = j; k < catalog.size(); ++k) {
        const int total = catalog[i].vertex_count() + catalog[j].vertex_count() + catalog[k].vertex_count();
        if (total > n_max) continue;
        out.push_back(disjoint_union(disjoint_union(catalog[i], catalog[j]).graph, catalog[k]).graph);
      }
  if (n_max >= 4) out.push_back(edgeless_graph(4));
  return out;
}

bool shares_at_most_one(const std::vector<VertexSet>& cliques) {
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j)
      if ((cliques[i] & cliques[j]).size() > 1) return false;
  return true;
}

void append(std::vector<TheoremCheck>& to, std::vector<TheoremCheck> more) {
  to.insert(to.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::string graph_id(const Graph& g) { return emit_graph6(g); }

TheoremCheck check_gluing_unmixed(const Graph& g1, const Graph& g2, int v1, int v2) {
  const auto data = make_gluing_data(g1, g2, v1, v2);
  const Graph& g = data.glued.graph;
  const auto c1 = enumerate_cutsets(g1);
  const auto c2 = enumerate_cutsets(g2);
  const auto direct = enumerate_cutsets(g);
  const auto via = cutsets_via_gluing(c1, c2, data);

  std::map<VertexMask, int> count_of;
  for (const auto& c : direct) count_of[c.t.mask()] = c.component_count;
  bool heights = true;
  for (const auto& a : c1)
    for (const auto& b : c2) {
      const VertexSet t = translate(a.t, data.glued.map1) | translate(b.t, data.glued.map2);
      const int parts = height(g1, a) + height(g2, b);
      for (VertexSet candidate : {t, t.with(data.glued.shared)}) {
        auto it = count_of.find(candidate.mask());
        if (it == count_of.end()) continue;
        if (g.vertex_count() + candidate.size() - it->second != parts) heights = false;
      }
    }
  const bool predicted = is_unmixed(g1) && is_unmixed(g2);
  const std::string expected = "cutsets=" + cutset_list(via) + " heights=additive unmixed=" + flag(predicted);
  const std::string computed = "cutsets=" + cutset_list(direct) + " heights=" + (heights ? "additive" : "broken") +
                               " unmixed=" + flag(is_unmixed(g));
  return make_check("gluing-unmixed", glue_instance(g1, v1, g2, v2), expected, computed);
}

TheoremCheck check_depth_gluing(const Graph& g1, const Graph& g2, int v1, int v2, const DepthOptions& options) {
  const auto glued = glue(g1, g2, v1, v2);
  const auto d1 = depth_of_quotient(g1, options);
  const auto d2 = depth_of_quotient(g2, options);
  const auto d = depth_of_quotient(glued.graph, options);
  const std::string expected = "depth=" + std::to_string(d1.depth + d2.depth - 2) + " cm=" + flag(d1.is_cm && d2.is_cm);
  const std::string computed = "depth=" + std::to_string(d.depth) + " cm=" + flag(d.is_cm);
  return make_check("gluing-depth", glue_instance(g1, v1, g2, v2), expected, computed);
}

TheoremCheck check_tree_decomposition(const GluingDecomposition& d, const DepthOptions& options) {
  if (auto err = d.validate(); !err.empty()) throw GraphError("invalid decomposition: " + err);
  if (!is_tree(decomposition_graph(d))) throw GraphError("part graph of the decomposition is not a tree");
  const int r = static_cast<int>(d.parts.size());
  int depth_sum = 0;
  bool all_cm = true;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto part = depth_of_quotient(d.part_graph(i), options);
    depth_sum += part.depth;
    all_cm = all_cm && part.is_cm;
  }
  const auto host = depth_of_quotient(d.host, options);
  const bool unmixed = is_unmixed(d.host);
  std::string expected = "depth=" + std::to_string(depth_sum - 2 * (r - 1)) + " cm=" + flag(all_cm);
  std::string computed = "depth=" + std::to_string(host.depth) + " cm=" + flag(host.is_cm);
  if (all_cm) {
    expected += " cm_equals_unmixed=true";
    computed += " cm_equals_unmixed=" + flag(host.is_cm == unmixed);
  }
  return make_check("tree-depth", decomposition_instance(d), expected, computed);
}

TheoremCheck check_chordal_corollary(const Graph& g, const DepthOptions& options) {
  if (!is_chordal(g)) throw GraphError("graph is not chordal: " + describe(g));
  const auto cliques = clique_complex(g).facets;
  if (!shares_at_most_one(cliques)) throw GraphError("maximal cliques share more than one vertex: " + describe(g));
  bool no_triple = true;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const auto count = std::count_if(cliques.begin(), cliques.end(), [v](VertexSet c) { return c.contains(v); });
    if (count >= 3) no_triple = false;
  }
  const bool cm = depth_of_quotient(g, options).is_cm;
  const bool unmixed = is_unmixed(g);
  const std::string expected = "cm=" + flag(no_triple) + " unmixed=" + flag(no_triple) + " no_triple=" + flag(no_triple);
  const std::string computed = "cm=" + flag(cm) + " unmixed=" + flag(unmixed) + " no_triple=" + flag(no_triple);
  return make_check("chordal-equivalence", graph_id(g), expected, computed);
}

TheoremCheck check_cone_connected(const Graph& h) {
  if (!is_connected(h)) throw GraphError("cone check needs a connected graph: " + describe(h));
  const auto c = cone(h);
  const Graph& g = c.graph;
  const int n = g.vertex_count();
  std::vector<CutSet> predicted{{VertexSet(), 1}};
  for (const auto& t : enumerate_cutsets(h))
    if (!t.t.empty()) predicted.push_back({t.t.with(c.apex), t.component_count});
  const int dim_h = dimension(h);
  std::string expected = "cutsets=" + cutset_list(predicted) + " dim=" + std::to_string(std::max(n + 1, dim_h));
  std::string computed = "cutsets=" + cutset_list(enumerate_cutsets(g)) + " dim=" + std::to_string(dimension(g));
  if (is_unmixed(h)) {
    expected += " unmixed=" + flag(h.is_complete());
    computed += " unmixed=" + flag(is_unmixed(g));
  }
  return make_check("cone-connected", graph_id(h), expected, computed);
}

TheoremCheck check_cone_two_components(const Graph& h1, const Graph& h2, const DepthOptions* depth) {
  if (!is_connected(h1) || !is_connected(h2)) throw GraphError("cone check needs two connected parts");
  const auto h = disjoint_union(h1, h2);
  const auto c = cone(h.graph);
  const Graph& g = c.graph;
  const int n = g.vertex_count();
  const int n1 = h1.vertex_count();
  std::vector<int> map2(static_cast<std::size_t>(h2.vertex_count()) + 1, 0);
  for (int v = 1; v <= h2.vertex_count(); ++v) map2[static_cast<std::size_t>(v)] = n1 + v;
  std::vector<CutSet> predicted{{VertexSet(), 1}};
  for (const auto& a : enumerate_cutsets(h1))
    for (const auto& b : enumerate_cutsets(h2))
      predicted.push_back({(a.t | translate(b.t, map2)).with(c.apex), a.component_count + b.component_count});
  const bool u1 = is_unmixed(h1);
  const bool u2 = is_unmixed(h2);
  std::string expected = "cutsets=" + cutset_list(predicted) + " dim=" +
                         std::to_string(std::max(dimension(h1) + dimension(h2), n + 1)) + " unmixed=" + flag(u1 && u2);
  std::string computed = "cutsets=" + cutset_list(enumerate_cutsets(g)) + " dim=" + std::to_string(dimension(g)) +
                         " unmixed=" + flag(is_unmixed(g));
  if (depth != nullptr) {
    const bool cm1 = depth_of_quotient(h1, *depth).is_cm;
    const bool cm2 = depth_of_quotient(h2, *depth).is_cm;
    if (cm1 && cm2) {
      const auto r = depth_of_quotient(g, *depth);
      expected += " cm=true depth=" + std::to_string(n + 1);
      computed += " cm=" + flag(r.is_cm) + " depth=" + std::to_string(r.depth);
    }
  }
  return make_check("cone-two-components", graph_id(h1) + " + " + graph_id(h2), expected, computed);
}

TheoremCheck check_cone_many_components(const Graph& h) {
  const auto comps = connected_components(h);
  if (comps.size() < 3) throw GraphError("expected at least three components: " + describe(h));
  const auto c = cone(h);
  const int at_apex = c.graph.component_count(c.graph.vertices().without(c.apex));
  return make_check("cone-components", graph_id(h), "unmixed=false apex_components=" + std::to_string(comps.size()),
                    "unmixed=" + flag(is_unmixed(c.graph)) + " apex_components=" + std::to_string(at_apex));
}

TheoremCheck check_groebner_closed_form(const Graph& g) {
  const Ring ring{g.vertex_count()};
  const auto closed = gb_from_admissible_paths(g);
  bool squarefree = true;
  for (const auto& f : closed.generators) squarefree = squarefree && f.leading_monomial().is_squarefree();
  const auto reduced = reduce_basis(ring, closed.generators);
  const auto oracle = buchberger(ring, edge_ideal_generators(g));
  auto render = [&](const GroebnerBasis& b) {
    std::string s;
    for (const auto& f : b.generators) s += "[" + f.to_string(ring) + "]";
    return s;
  };
  return make_check("groebner-closed-form", graph_id(g), "basis=" + render(oracle) + " squarefree=true",
                    "basis=" + render(reduced) + " squarefree=" + flag(squarefree));
}

TheoremCheck check_glued_basis(const Graph& g1, int v1, const Graph& g2, int v2) {
  const auto glued = glued_union_basis(g1, v1, g2, v2);
  const bool criterion = satisfies_buchberger_criterion(glued.basis.generators);
  const auto ini = initial_ideal(glued.basis);
  const auto shape = check_glued_initial_shape(glued, ini);
  return make_check("glued-basis", glue_instance(g1, v1, g2, v2), "criterion=true shape=ok",
                    "criterion=" + flag(criterion) + " shape=" + (shape.empty() ? "ok" : shape));
}

std::size_t SuiteReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const TheoremCheck& c) { return !c.pass; }));
}

std::vector<std::string> suite_names() { return {"gluing", "tree", "cone", "chordal", "groebner"}; }

SuiteReport run_suite(const std::string& suite, int n_max, const VerifyOptions& options) {
  if (n_max < 1 || n_max > kCatalogMaxVertices)
    throw std::invalid_argument("n-max must be in 1.." + std::to_string(kCatalogMaxVertices));
  SuiteReport report{suite, n_max, {}};
  if (suite == "all") {
    for (const auto& name : suite_names()) append(report.checks, run_suite(name, n_max, options).checks);
    return report;
  }
  DepthOptions depth;
  depth.field = options.field;
  if (suite == "gluing") {
    const int depth_parts = std::min(n_max, options.gluing_depth_max_n);
    depth.max_vertices = 2 * depth_parts - 1;
    const auto rooted = rooted_catalog(n_max);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < rooted.size(); ++i)
      for (std::size_t j = i; j < rooted.size(); ++j) pairs.emplace_back(i, j);
    auto results = parallel_map(pairs, [&](const std::pair<std::size_t, std::size_t>& p) {
      const auto& a = rooted[p.first];
      const auto& b = rooted[p.second];
      std::vector<TheoremCheck> out{check_gluing_unmixed(a.g, b.g, a.v, b.v)};
      if (std::max(a.g.vertex_count(), b.g.vertex_count()) <= depth_parts)
        out.push_back(check_depth_gluing(a.g, b.g, a.v, b.v, depth));
      return out;
    }, options.threads);
    for (auto& r : results) append(report.checks, std::move(r));
  } else if (suite == "tree") {
    const auto family = tree_family(n_max);
    for (const auto& d : family) depth.max_vertices = std::max(depth.max_vertices, d.host.vertex_count());
    report.checks = parallel_map(family, [&](const GluingDecomposition& d) { return check_tree_decomposition(d, depth); },
                                 options.threads);
  } else if (suite == "cone") {
    depth.max_vertices = n_max + 1;
    const auto catalog = connected_catalog(n_max).graphs;
    append(report.checks, parallel_map(catalog, [](const Graph& h) { return check_cone_connected(h); }, options.threads));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < catalog.size(); ++i)
      for (std::size_t j = i; j < catalog.size(); ++j) pairs.emplace_back(i, j);
    append(report.checks, parallel_map(pairs, [&](const std::pair<std::size_t, std::size_t>& p) {
      const auto& h1 = catalog[p.first];
      const auto& h2 = catalog[p.second];
      const bool small = h1.vertex_count() + h2.vertex_count() + 1 <= depth.max_vertices;
      return check_cone_two_components(h1, h2, small ? &depth : nullptr);
    }, options.threads));
    append(report.checks, parallel_map(many_component_family(n_max),
                                       [](const Graph& h) { return check_cone_many_components(h); }, options.threads));
  } else if (suite == "chordal") {
    depth.max_vertices = n_max;
    std::vector<Graph> eligible;
    for (const auto& g : connected_catalog(n_max).graphs)
      if (is_chordal(g) && shares_at_most_one(clique_complex(g).facets)) eligible.push_back(g);
    report.checks = parallel_map(eligible, [&](const Graph& g) { return check_chordal_corollary(g, depth); },
                                 options.threads);
  } else if (suite == "groebner") {
    const auto catalog = connected_catalog(n_max).graphs;
    append(report.checks, parallel_map(catalog, [](const Graph& g) { return check_groebner_closed_form(g); },
                                       options.threads));
    std::vector<std::pair<int, int>> cliques;
    for (int a = 1; a <= 7; ++a)
      for (int b = a; a + b <= 8; ++b) cliques.emplace_back(a, b);
    append(report.checks, parallel_map(cliques, [](const std::pair<int, int>& p) {
      return check_glued_basis(complete_graph(p.first), p.first, complete_graph(p.second), 1);
    }, options.threads));
    const auto rooted = rooted_catalog(std::min(n_max, 4));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < rooted.size(); ++i)
      for (std::size_t j = 0; j < rooted.size(); ++j) pairs.emplace_back(i, j);
    append(report.checks, parallel_map(pairs, [&](const std::pair<std::size_t, std::size_t>& p) {
      return check_glued_basis(rooted[p.first].g, rooted[p.first].v, rooted[p.second].g, rooted[p.second].v);
    }, options.threads));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return report;
}

std::size_t SweepReport::unmixed_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SweepEntry& e) { return e.unmixed; }));
}

std::size_t SweepReport::cm_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SweepEntry& e) { return e.cm; }));
}

SweepReport conjecture_sweep(int n_max, const VerifyOptions& options) {
  if (n_max < 1 || n_max > kCatalogMaxVertices - 1)
    throw std::invalid_argument("sweep n-max must be in 1.." + std::to_string(kCatalogMaxVertices - 1));
  DepthOptions depth;
  depth.field = options.field;
  depth.max_vertices = n_max + 1;
  SweepReport report;
  report.n_max = n_max;
  const auto catalog = connected_catalog(n_max).graphs;
  report.entries = parallel_map(catalog, [&](const Graph& h) {
    const Graph g = cone(h).graph;
    SweepEntry e;
    e.h = graph_id(h);
    e.n = g.vertex_count();
    e.complete = h.is_complete();
    e.unmixed = is_unmixed(g);
    e.dimension = dimension(g);
    if (e.unmixed) {
      const auto r = depth_of_quotient(g, depth);
      e.depth_computed = true;
      e.depth = r.depth;
      e.cm = r.is_cm;
      if (e.cm) e.h_cm = depth_of_quotient(h, depth).is_cm;
    }
    return e;
  }, options.threads);
  for (const auto& e : report.entries) {
    if (e.cm && !e.complete) report.counterexamples.push_back(e.h);
    if (e.cm && !e.h_cm) report.cm_over_non_cm.push_back(e.h);
  }
  return report;
}

}  // namespace binedge
