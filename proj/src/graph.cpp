#include "binedge/graph.hpp"

#include <algorithm>
#include <sstream>

namespace binedge {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (VertexMask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : to_vector()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_vector() < b.to_vector();
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) throw GraphError("vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw GraphError("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
      throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u - 1] |= VertexMask{1} << (v - 1);
    adj_[v - 1] |= VertexMask{1} << (u - 1);
    ++edge_count_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 1; u <= n_; ++u)
    for (VertexMask m = adj_[u - 1] >> u; m != 0; m &= m - 1) out.push_back({u, u + 1 + std::countr_zero(m)});
  return out;
}

VertexSet Graph::component_of(int start, VertexSet within) const {
  VertexMask seen = VertexMask{1} << (start - 1);
  VertexMask frontier = seen;
  const VertexMask allowed = within.mask();
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) next |= adj_[std::countr_zero(m)];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

int Graph::component_count(VertexSet s) const {
  int count = 0;
  VertexSet rest = s;
  while (!rest.empty()) {
    rest = rest - component_of(rest.min(), s);
    ++count;
  }
  return count;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s.to_vector())
    if (!s.without(v).subset_of(neighbors(v))) return false;
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet c = g.component_of(rest.min(), g.vertices());
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.component_count(g.vertices()) <= 1; }

bool is_cut_vertex(const Graph& g, int v) {
  const VertexSet all = g.vertices();
  return g.component_count(all.without(v)) > g.component_count(all);
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_chordal(const Graph& g) {
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    bool removed = false;
    for (int v : rest.to_vector())
      if (g.is_clique(g.neighbors(v) & rest)) {
        rest.erase(v);
        removed = true;
        break;
      }
    if (!removed) return false;
  }
  return true;
}

Relabeled induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<int> map(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  int next = 0;
  for (int v : s.to_vector()) {
    if (v > g.vertex_count()) throw GraphError("induced_subgraph: vertex outside the graph");
    map[v] = ++next;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (map[u] != 0 && map[v] != 0) edges.push_back({map[u], map[v]});
  return {Graph(next, edges), std::move(map)};
}

Graph delete_vertex(const Graph& g, int v) { return induced_subgraph(g, g.vertices().without(v)).graph; }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
  std::sort(edges.begin(), edges.end());
  return Graph(g.vertex_count(), edges);
}

std::vector<VertexSet> CliqueComplex::facets_containing(int v) const {
  std::vector<VertexSet> out;
  for (VertexSet f : facets)
    if (f.contains(v)) out.push_back(f);
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.emplace_back(r);
    return;
  }
  // Pivot on the vertex of P|X with the most neighbors in P.
  int pivot = 0;
  int best = -1;
  for (VertexMask m = p | x; m != 0; m &= m - 1) {
    const int u = std::countr_zero(m) + 1;
    const int c = std::popcount(p & g.neighbors(u).mask());
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (VertexMask m = p & ~g.neighbors(pivot).mask(); m != 0; m &= m - 1) {
    const VertexMask bit = m & (~m + 1);
    const int v = std::countr_zero(m) + 1;
    const VertexMask nv = g.neighbors(v).mask();
    bron_kerbosch(g, r | bit, p & nv, x & nv, out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<int> degeneracy_order(const Graph& g) {
  std::vector<int> order;
  VertexMask remaining = g.vertices().mask();
  while (remaining != 0) {
    int pick = 0;
    int best = kMaxVertices + 1;
    for (VertexMask m = remaining; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m) + 1;
      const int d = std::popcount(g.neighbors(v).mask() & remaining);
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    order.push_back(pick);
    remaining &= ~(VertexMask{1} << (pick - 1));
  }
  return order;
}

}  // namespace

CliqueComplex clique_complex(const Graph& g) {
  CliqueComplex cc;
  VertexMask p = g.vertices().mask();
  VertexMask x = 0;
  for (int v : degeneracy_order(g)) {
    const VertexMask bit = VertexMask{1} << (v - 1);
    const VertexMask nv = g.neighbors(v).mask();
    bron_kerbosch(g, bit, p & nv, x & nv, cc.facets);
    p &= ~bit;
    x |= bit;
  }
  std::sort(cc.facets.begin(), cc.facets.end(),
            [](VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); });
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int count = 0;
    for (VertexSet f : cc.facets) count += f.contains(v) ? 1 : 0;
    if (count == 1) cc.free_vertices.insert(v);
  }
  return cc;
}

bool is_free_vertex(const Graph& g, int v) {
  // A vertex lies in a single maximal clique exactly when its neighborhood is a clique.
  return g.is_clique(g.neighbors(v));
}

ConeResult cone(const Graph& h) {
  const int n = h.vertex_count();
  std::vector<Edge> edges = h.edges();
  for (int u = 1; u <= n; ++u) edges.push_back({u, n + 1});
  return {Graph(n + 1, edges), n + 1};
}

Relabeled disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.push_back({u + n1, v + n1});
  std::vector<int> map2(static_cast<std::size_t>(g2.vertex_count()) + 1, 0);
  for (int v = 1; v <= g2.vertex_count(); ++v) map2[v] = v + n1;
  return {Graph(n1 + g2.vertex_count(), edges), std::move(map2)};
}

GlueResult glue(const Graph& g1, const Graph& g2, int v1, int v2) {
  if (v1 < 1 || v1 > g1.vertex_count() || v2 < 1 || v2 > g2.vertex_count())
    throw GraphError("glue: vertex out of range");
  if (!is_free_vertex(g1, v1))
    throw GraphError("glue: vertex " + std::to_string(v1) + " is not free in the first graph");
  if (!is_free_vertex(g2, v2))
    throw GraphError("glue: vertex " + std::to_string(v2) + " is not free in the second graph");
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  GlueResult r;
  r.shared = n1;
  r.map1.assign(static_cast<std::size_t>(n1) + 1, 0);
  r.map2.assign(static_cast<std::size_t>(n2) + 1, 0);
  int next = 0;
  for (int v = 1; v <= n1; ++v)
    if (v != v1) r.map1[v] = ++next;
  r.map1[v1] = n1;
  next = n1;
  r.map2[v2] = n1;
  for (int v = 1; v <= n2; ++v)
    if (v != v2) r.map2[v] = ++next;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g1.edges()) edges.push_back({std::min(r.map1[u], r.map1[v]), std::max(r.map1[u], r.map1[v])});
  for (const auto& [u, v] : g2.edges()) edges.push_back({std::min(r.map2[u], r.map2[v]), std::max(r.map2[u], r.map2[v])});
  std::sort(edges.begin(), edges.end());
  r.graph = Graph(n1 + n2 - 1, edges);
  return r;
}

Graph GluingDecomposition::part_graph(std::size_t i) const { return induced_subgraph(host, parts.at(i)).graph; }

std::string GluingDecomposition::validate() const {
  VertexSet covered;
  for (VertexSet p : parts) covered = covered | p;
  if (covered != host.vertices()) return "parts do not cover the vertex set";
  for (const auto& [u, v] : host.edges()) {
    bool inside = false;
    for (VertexSet p : parts) inside = inside || (p.contains(u) && p.contains(v));
    if (!inside) return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies in no part";
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const VertexSet shared = parts[i] & parts[j];
      if (shared.size() > 1) return "parts " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " share more than one vertex";
      if (shared.empty()) continue;
      const int v = shared.min();
      for (std::size_t k : {i, j}) {
        const Relabeled sub = induced_subgraph(host, parts[k]);
        if (!is_free_vertex(sub.graph, sub.label_map[v]))
          return "shared vertex " + std::to_string(v) + " is not free in part " + std::to_string(k + 1);
      }
      for (std::size_t k = j + 1; k < parts.size(); ++k)
        if (!(shared & parts[k]).empty()) return "three parts share vertex " + std::to_string(v);
    }
  }
  return {};
}

Graph decomposition_graph(const GluingDecomposition& d) {
  std::vector<Edge> edges;
  const int r = static_cast<int>(d.parts.size());
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!(d.parts[i] & d.parts[j]).empty()) edges.push_back({i + 1, j + 1});
  return Graph(r, edges);
}

GluingDecomposition clique_chain(const std::vector<int>& sizes) {
  if (sizes.empty()) throw GraphError("clique_chain: no parts");
  std::vector<VertexSet> parts;
  int start = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int m = sizes[i];
    if (m < 1 || (sizes.size() > 1 && m < 2)) throw GraphError("clique_chain: clique sizes must be at least 2");
    VertexSet p;
    for (int v = start; v < start + m; ++v) p.insert(v);
    parts.push_back(p);
    start += m - 1;
  }
  const int n = start;
  std::vector<Edge> edges;
  for (VertexSet p : parts) {
    const auto vs = p.to_vector();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) edges.push_back({vs[a], vs[b]});
  }
  std::sort(edges.begin(), edges.end());
  return {Graph(n, edges), parts};
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 2; v <= leaves + 1; ++v) edges.push_back({1, v});
  return Graph(leaves + 1, edges);
}

Graph edgeless_graph(int n) { return Graph(n); }

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " E={";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << ',';
    os << u << '-' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace binedge
