#include "binedge/groebner.hpp"

#include <algorithm>
#include <set>

namespace binedge {

Polynomial edge_binomial(const Ring& ring, int i, int j) {
  if (i > j) std::swap(i, j);
  return Polynomial::binomial(Monomial::var(ring.x(i)) * Monomial::var(ring.y(j)),
                              Monomial::var(ring.x(j)) * Monomial::var(ring.y(i)));
}

std::vector<Polynomial> edge_ideal_generators(const Graph& g) {
  const Ring ring{g.vertex_count()};
  std::vector<Polynomial> out;
  for (const auto& [u, v] : g.edges()) out.push_back(edge_binomial(ring, u, v));
  return out;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  Polynomial rest = p;
  Polynomial remainder;
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const mpq_class lc = rest.leading_coefficient();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(lm)) {
        divisor = &d;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.add_term(lc, lm);
      rest.add_term(-lc, lm);
    } else {
      rest.add_multiple(-lc / divisor->leading_coefficient(), lm.quotient(divisor->leading_monomial()), *divisor);
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial s = f.scaled(1 / f.leading_coefficient(), l.quotient(f.leading_monomial()));
  s.add_multiple(-1 / g.leading_coefficient(), l.quotient(g.leading_monomial()), g);
  return s;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i].leading_monomial().coprime(gens[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(gens[i], gens[j]), gens).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis reduce_basis(const Ring& ring, std::vector<Polynomial> gb) {
  std::erase_if(gb, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(gb.begin(), gb.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  // Keep one generator per minimal leading monomial.
  std::vector<Polynomial> minimal;
  for (const Polynomial& p : gb) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(p.monic());
  }
  GroebnerBasis out{ring, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Polynomial& p = minimal[i];
    Polynomial tail = p;
    tail.add_term(-p.leading_coefficient(), p.leading_monomial());
    Polynomial reduced = normal_form(tail, others);
    reduced.add_term(1, p.leading_monomial());
    out.generators.push_back(std::move(reduced));
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return out;
}

GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (const Polynomial& p : gens)
    if (!p.is_zero()) basis.push_back(p.monic());

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  const auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // Normal selection: smallest lcm by degree, ties by term order.
    auto best = pending.begin();
    Monomial best_lcm = basis[best->first].leading_monomial().lcm(basis[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const Monomial l = basis[it->first].leading_monomial().lcm(basis[it->second].leading_monomial());
      if (l.degree() < best_lcm.degree() || (l.degree() == best_lcm.degree() && l < best_lcm)) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = basis[k].leading_monomial().divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    Polynomial h = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    const std::size_t fresh = basis.size() - 1;
    for (std::size_t k = 0; k < fresh; ++k) pending.insert({k, fresh});
  }
  return reduce_basis(ring, std::move(basis));
}

Monomial path_multiplier(const Ring& ring, const std::vector<int>& path) {
  const int i = path.front();
  const int j = path.back();
  Monomial u;
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const int v = path[k];
    if (v > j) u = u * Monomial::var(ring.x(v));
    if (v < i) u = u * Monomial::var(ring.y(v));
  }
  return u;
}

bool is_admissible(const Graph& g, const std::vector<int>& path) {
  if (path.size() < 2) return false;
  const int i = path.front();
  const int j = path.back();
  if (i >= j) return false;
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if (!g.has_edge(path[k], path[k + 1])) return false;
  // (1) distinct vertices
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  // (2) interior vertices outside [i, j]
  const std::size_t interior = path.size() - 2;
  for (std::size_t k = 1; k <= interior; ++k)
    if (path[k] >= i && path[k] <= j) return false;
  // (3) no proper order-preserving subsequence of the interior gives a path from i to j
  const std::uint32_t full = (std::uint32_t{1} << interior) - 1;
  for (std::uint32_t keep = 0; keep < full; ++keep) {
    int prev = i;
    bool is_path = true;
    for (std::size_t k = 0; k < interior && is_path; ++k) {
      if (((keep >> k) & 1U) == 0) continue;
      is_path = g.has_edge(prev, path[k + 1]);
      prev = path[k + 1];
    }
    if (is_path && g.has_edge(prev, j)) return false;
  }
  return true;
}

namespace {

// Extends `path` towards j through vertices outside [i, j]. A chord from the new vertex to an earlier,
// non-adjacent path vertex gives a shortcut subsequence, so such branches are cut early.
void extend_paths(const Graph& g, int j, std::vector<int>& path, VertexMask used, std::vector<std::vector<int>>& out) {
  const int last = path.back();
  const int i = path.front();
  for (int next : g.neighbors(last).to_vector()) {
    if ((used >> (next - 1)) & 1U) continue;
    bool chord = false;
    for (std::size_t k = 0; k + 1 < path.size() && !chord; ++k) chord = g.has_edge(path[k], next);
    if (chord) continue;
    if (next == j) {
      path.push_back(next);
      out.push_back(path);
      path.pop_back();
    } else if (next < i || next > j) {
      path.push_back(next);
      extend_paths(g, j, path, used | (VertexMask{1} << (next - 1)), out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
  const Ring ring{g.vertex_count()};
  std::vector<AdmissiblePath> out;
  for (int i = 1; i <= g.vertex_count(); ++i) {
    for (int j = i + 1; j <= g.vertex_count(); ++j) {
      std::vector<std::vector<int>> found;
      std::vector<int> path{i};
      extend_paths(g, j, path, VertexMask{1} << (i - 1), found);
      std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      for (auto& p : found) {
        if (!is_admissible(g, p)) continue;
        Monomial u = path_multiplier(ring, p);
        out.push_back({std::move(p), u});
      }
    }
  }
  return out;
}

GroebnerBasis gb_from_admissible_paths(const Graph& g) {
  const Ring ring{g.vertex_count()};
  GroebnerBasis gb{ring, {}};
  for (const AdmissiblePath& p : admissible_paths(g))
    gb.generators.push_back(edge_binomial(ring, p.from(), p.to()).scaled(1, p.multiplier));
  return gb;
}

GluedUnionBasis glued_union_basis(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (!is_free_vertex(g1, v1)) throw GraphError("glued_union_basis: glue vertex is not free in the first graph");
  if (!is_free_vertex(g2, v2)) throw GraphError("glued_union_basis: glue vertex is not free in the second graph");
  const int n = g1.vertex_count();
  const int m = g2.vertex_count();

  std::vector<int> perm1(static_cast<std::size_t>(n) + 1, 0);
  int next = 0;
  for (int v = 1; v <= n; ++v)
    if (v != v1) perm1[v] = ++next;
  perm1[v1] = n;
  std::vector<int> perm2(static_cast<std::size_t>(m) + 1, 0);
  perm2[v2] = 1;
  next = 1;
  for (int v = 1; v <= m; ++v)
    if (v != v2) perm2[v] = ++next;
  const Relabeled u = disjoint_union(relabel(g1, perm1), relabel(g2, perm2));

  GluedUnionBasis out;
  out.n = n;
  out.m = m;
  out.union_graph = u.graph;
  const Ring ring{n + m};
  out.basis.ring = ring;
  out.l_x = Polynomial::binomial(Monomial::var(ring.x(n)), Monomial::var(ring.x(n + 1)));
  out.l_y = Polynomial::binomial(Monomial::var(ring.y(n)), Monomial::var(ring.y(n + 1)));
  out.basis.generators.push_back(out.l_y);
  for (const AdmissiblePath& p : admissible_paths(u.graph)) {
    const int i = p.from();
    if (p.to() != n) {
      out.basis.generators.push_back(edge_binomial(ring, i, p.to()).scaled(1, p.multiplier));
    } else {
      // u (x_i y_{n+1} - x_n y_i)
      const Polynomial b = Polynomial::binomial(Monomial::var(ring.x(i)) * Monomial::var(ring.y(n + 1)),
                                                Monomial::var(ring.x(n)) * Monomial::var(ring.y(i)));
      out.basis.generators.push_back(b.scaled(1, p.multiplier));
    }
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a > b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> out;
  for (const Monomial& m : monomials) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  for (const Polynomial& p : gb.generators)
    if (!p.is_zero()) lts.push_back(p.leading_monomial());
  return minimalize(std::move(lts));
}

bool variable_avoids_initial_generators(const std::vector<Monomial>& ini, int var) {
  return std::none_of(ini.begin(), ini.end(), [var](const Monomial& m) { return m.exponent(var) > 0; });
}

std::string check_glued_initial_shape(const GluedUnionBasis& glued, const std::vector<Monomial>& ini) {
  const Ring& ring = glued.basis.ring;
  const int n = glued.n;
  const Monomial yn = Monomial::var(ring.y(n));
  if (std::find(ini.begin(), ini.end(), yn) == ini.end()) return "y_n is not a minimal initial generator";
  if (!variable_avoids_initial_generators(ini, ring.x(n))) return "x_n divides a minimal initial generator";
  std::set<Monomial> allowed;
  allowed.insert(yn);
  for (const AdmissiblePath& p : admissible_paths(glued.union_graph)) {
    const int i = p.from();
    if (p.to() != n)
      allowed.insert(p.multiplier * Monomial::var(ring.x(i)) * Monomial::var(ring.y(p.to())));
    else if (i < n)
      allowed.insert(p.multiplier * Monomial::var(ring.x(i)) * Monomial::var(ring.y(n + 1)));
  }
  for (const Monomial& m : ini)
    if (allowed.count(m) == 0) return "unexpected initial generator " + m.to_string(ring);
  return {};
}

}  // namespace binedge
