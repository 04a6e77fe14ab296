#include "binedge/prime_spectrum.hpp"

#include <algorithm>

namespace binedge {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw GraphError(std::string(what) + ": graph must be connected");
}

// Calls visit(T) for every subset of `pool`, by size and then lexicographically, until visit returns false.
template <typename Visit>
void for_each_subset_ordered(VertexSet pool, Visit&& visit) {
  const std::vector<int> items = pool.to_vector();
  const int k = static_cast<int>(items.size());
  for (int size = 0; size <= k; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet t;
      for (int i : idx) t.insert(items[i]);
      if (!visit(t)) return;
      int i = size - 1;
      while (i >= 0 && idx[i] == k - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

VertexSet non_free_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (!is_free_vertex(g, v)) out.insert(v);
  return out;
}

// Checks the cut point property given the component count of the complement.
bool cutpoint_property_with(const Graph& g, VertexSet t, int c) {
  const VertexSet rest = g.vertices() - t;
  for (int i : t.to_vector())
    if (g.component_count(rest.with(i)) >= c) return false;
  return true;
}

}  // namespace

void sort_cutsets(std::vector<CutSet>& cs) {
  std::sort(cs.begin(), cs.end(), [](const CutSet& a, const CutSet& b) { return canonical_less(a.t, b.t); });
}

bool has_cutpoint_property(const Graph& g, VertexSet t) {
  if (!t.subset_of(g.vertices())) throw GraphError("has_cutpoint_property: set outside the vertex range");
  return cutpoint_property_with(g, t, g.component_count(g.vertices() - t));
}

std::vector<CutSet> enumerate_cutsets_any(const Graph& g) {
  std::vector<CutSet> out;
  // Free vertices lie in no cut set.
  for_each_subset_ordered(non_free_vertices(g), [&](VertexSet t) {
    const int c = g.component_count(g.vertices() - t);
    if (cutpoint_property_with(g, t, c)) out.push_back({t, c});
    return true;
  });
  return out;
}

std::vector<CutSet> enumerate_cutsets(const Graph& g) {
  require_connected(g, "enumerate_cutsets");
  return enumerate_cutsets_any(g);
}

int height(const Graph& g, const CutSet& c) { return g.vertex_count() + c.t.size() - c.component_count; }

std::vector<MinimalPrime> minimal_primes(const Graph& g) {
  require_connected(g, "minimal_primes");
  std::vector<MinimalPrime> out;
  for (const CutSet& c : enumerate_cutsets_any(g)) {
    MinimalPrime p{c, height(g, c), {}};
    VertexSet rest = g.vertices() - c.t;
    const VertexSet within = rest;
    while (!rest.empty()) {
      const VertexSet comp = g.component_of(rest.min(), within);
      p.components.push_back(comp);
      rest = rest - comp;
    }
    out.push_back(std::move(p));
  }
  return out;
}

int dimension(const Graph& g) {
  int min_height = 2 * g.vertex_count();
  for (const MinimalPrime& p : minimal_primes(g)) min_height = std::min(min_height, p.height);
  return 2 * g.vertex_count() - min_height;
}

std::optional<CutSet> unmixedness_witness(const Graph& g) {
  require_connected(g, "is_unmixed");
  std::optional<CutSet> found;
  for_each_subset_ordered(non_free_vertices(g), [&](VertexSet t) {
    const int c = g.component_count(g.vertices() - t);
    if (c != t.size() + 1 && cutpoint_property_with(g, t, c)) {
      found = CutSet{t, c};
      return false;
    }
    return true;
  });
  return found;
}

bool is_unmixed(const Graph& g) { return !unmixedness_witness(g).has_value(); }

SpectrumSummary spectrum(const Graph& g) {
  SpectrumSummary s;
  s.primes = minimal_primes(g);
  int min_height = 2 * g.vertex_count();
  s.unmixed = true;
  for (const MinimalPrime& p : s.primes) {
    min_height = std::min(min_height, p.height);
    s.unmixed = s.unmixed && p.cut_set.component_count == p.cut_set.t.size() + 1;
  }
  s.dimension = 2 * g.vertex_count() - min_height;
  return s;
}

GluingData make_gluing_data(const Graph& g1, const Graph& g2, int v1, int v2) {
  GluingData d{glue(g1, g2, v1, v2), v1, v2, {}, {}};
  d.facet1 = clique_complex(g1).facets_containing(v1).front();
  d.facet2 = clique_complex(g2).facets_containing(v2).front();
  return d;
}

std::vector<CutSet> cutsets_via_gluing(const std::vector<CutSet>& c1, const std::vector<CutSet>& c2,
                                       const GluingData& data) {
  const auto translate = [](VertexSet s, const std::vector<int>& map) {
    VertexSet out;
    for (int v : s.to_vector()) out.insert(map[v]);
    return out;
  };
  std::vector<CutSet> out;
  for (const CutSet& a : c1) {
    for (const CutSet& b : c2) {
      const VertexSet t = translate(a.t, data.glued.map1) | translate(b.t, data.glued.map2);
      out.push_back({t, a.component_count + b.component_count - 1});
      const bool f1_escapes = !data.facet1.subset_of(a.t.with(data.v1));
      const bool f2_escapes = !data.facet2.subset_of(b.t.with(data.v2));
      if (f1_escapes && f2_escapes) out.push_back({t.with(data.glued.shared), a.component_count + b.component_count});
    }
  }
  sort_cutsets(out);
  return out;
}

bool linear_form_regular(const Graph& g, const LinearDifference& form) {
  const int n = g.vertex_count();
  if (form.u < 1 || form.u > n || form.w < 1 || form.w > n)
    throw GraphError("linear_form_regular: vertex out of range");
  if (form.u == form.w) throw GraphError("linear_form_regular: degenerate form (u == w)");
  for (const CutSet& c : enumerate_cutsets_any(g))
    if (c.t.contains(form.u) && c.t.contains(form.w)) return false;
  return true;
}

}  // namespace binedge
