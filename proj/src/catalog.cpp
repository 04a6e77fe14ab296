#include "binedge/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "binedge/io.hpp"

namespace binedge {

namespace {

// Ordered cells of an equitable refinement of `initial`.
std::vector<std::vector<int>> refine(const Graph& g, std::vector<std::vector<int>> cells) {
  const int n = g.vertex_count();
  while (true) {
    std::vector<int> cell_of(static_cast<std::size_t>(n) + 1);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<std::vector<int>> next;
    for (const auto& cell : cells) {
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> signature(cells.size(), 0);
        for (int u : g.neighbors(v).to_vector()) ++signature[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
        split[signature].push_back(v);
      }
      for (auto& [_, part] : split) next.push_back(std::move(part));
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

class LeastLabeling {
 public:
  LeastLabeling(const Graph& g, std::vector<std::vector<int>> cells) : g_(g), cells_(std::move(cells)) {
    const int n = g.vertex_count();
    order_.reserve(static_cast<std::size_t>(n));
    for (const auto& cell : cells_)
      for (std::size_t k = 0; k < cell.size(); ++k) slot_cell_.push_back(&cell);
    used_.assign(static_cast<std::size_t>(n) + 1, false);
  }

  std::vector<int> run() {
    search(0, false);
    return best_order_;
  }

 private:
  // Compare column `pos` of the candidate against the best; returns -1, 0, 1.
  int compare_column(std::size_t pos) const {
    for (std::size_t i = 0; i < pos; ++i) {
      const bool mine = g_.has_edge(order_[i], order_[pos]);
      const bool theirs = best_bits_[pos][i];
      if (mine != theirs) return mine ? 1 : -1;
    }
    return 0;
  }

  void search(std::size_t pos, bool tied) {
    if (pos == slot_cell_.size()) {
      if (!tied) store();
      return;
    }
    for (int v : *slot_cell_[pos]) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      order_.push_back(v);
      used_[static_cast<std::size_t>(v)] = true;
      const int cmp = tied ? compare_column(pos) : -1;
      if (cmp <= 0) {
        const auto before = stores_;
        search(pos + 1, tied && cmp == 0);
        if (stores_ != before) tied = true;
      }
      used_[static_cast<std::size_t>(v)] = false;
      order_.pop_back();
    }
  }

  void store() {
    ++stores_;
    best_order_ = order_;
    best_bits_.assign(order_.size(), {});
    for (std::size_t j = 0; j < order_.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) best_bits_[j].push_back(g_.has_edge(order_[i], order_[j]));
  }

  const Graph& g_;
  std::vector<std::vector<int>> cells_;
  std::vector<const std::vector<int>*> slot_cell_;
  std::vector<int> order_;
  std::vector<bool> used_;
  std::vector<int> best_order_;
  std::vector<std::vector<bool>> best_bits_;
  std::size_t stores_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int root) {
  const int n = g.vertex_count();
  std::map<int, std::vector<int>> by_degree;
  for (int v = 1; v <= n; ++v)
    if (v != root) by_degree[g.degree(v)].push_back(v);
  std::vector<std::vector<int>> cells;
  if (root != 0) cells.push_back({root});
  for (auto& [_, cell] : by_degree) cells.push_back(std::move(cell));
  const auto order = LeastLabeling(g, refine(g, std::move(cells))).run();
  CanonicalForm form;
  form.labeling.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < order.size(); ++k) form.labeling[static_cast<std::size_t>(order[k])] = static_cast<int>(k) + 1;
  form.graph6 = emit_graph6(relabel(g, form.labeling));
  return form;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a).graph6 == canonical_form(b).graph6;
}

GraphCatalog enumerate_connected_graphs(int n) {
  if (n < 1 || n > kCatalogMaxVertices)
    throw GraphError("catalog size must be in 1.." + std::to_string(kCatalogMaxVertices) + ", got " + std::to_string(n));
  GraphCatalog catalog;
  catalog.n_max = n;
  if (n == 1) {
    catalog.graphs.push_back(Graph(1));
    return catalog;
  }
  std::set<std::string> seen;
  for (const auto& base : enumerate_connected_graphs(n - 1).graphs) {
    const auto edges = base.edges();
    for (VertexMask s = 1; s < (VertexMask{1} << (n - 1)); ++s) {
      auto extended = edges;
      for (int v : VertexSet(s).to_vector()) extended.push_back({v, n});
      const auto form = canonical_form(Graph(n, extended));
      if (seen.insert(form.graph6).second) catalog.graphs.push_back(parse_graph6(form.graph6));
    }
  }
  std::sort(catalog.graphs.begin(), catalog.graphs.end(),
            [](const Graph& a, const Graph& b) { return emit_graph6(a) < emit_graph6(b); });
  return catalog;
}

GraphCatalog connected_catalog(int n_max) {
  GraphCatalog all;
  all.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    auto part = enumerate_connected_graphs(n);
    all.graphs.insert(all.graphs.end(), part.graphs.begin(), part.graphs.end());
  }
  return all;
}

std::vector<int> free_vertex_orbit_representatives(const Graph& g) {
  std::vector<int> reps;
  std::set<std::string> seen;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (is_free_vertex(g, v) && seen.insert(canonical_form(g, v).graph6).second) reps.push_back(v);
  return reps;
}

}  // namespace binedge
