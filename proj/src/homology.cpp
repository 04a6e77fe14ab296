#include "binedge/homology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <type_traits>
#include <unordered_map>

#include "binedge/groebner.hpp"
#include "binedge/prime_spectrum.hpp"

namespace binedge {

namespace {

int bits(VarMask m) { return std::popcount(m); }

bool is_prime_number(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

mpz_class checked_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class checked_sub(const mpz_class& a, const mpz_class& b) { return a - b; }

bool is_unit(long long v) { return v == 1 || v == -1; }
bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }

mpz_class to_mpz(long long v) { return mpz_class(static_cast<signed long>(v)); }
mpz_class to_mpz(const mpz_class& v) { return v; }

template <class T>
T from_ll(long long v) {
  if constexpr (std::is_same_v<T, long long>)
    return v;
  else
    return to_mpz(v);
}

void dense_diagonal(std::vector<std::vector<mpz_class>> a, DiagonalForm& out) {
  const std::size_t rows = a.size();
  if (rows == 0) return;
  const std::size_t cols = a[0].size();
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (auto& row : a) std::swap(row[c1], row[c2]);
  };
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) return;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
          bi = t;
          bj = j;
        }
      std::swap(a[t], a[bi]);
      swap_cols(t, bj);
    }
    mpz_class d = abs(a[t][t]);
    if (d == 1)
      ++out.unit_count;
    else
      out.nonunit.push_back(d);
  }
}

template <class T>
DiagonalForm sparse_diagonalize(const SparseIntMatrix& m) {
  using Row = std::vector<std::pair<int, T>>;
  std::vector<Row> rows(static_cast<std::size_t>(m.rows));
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(m.cols));
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)]) {
      if (v == 0) continue;
      rows[static_cast<std::size_t>(r)].emplace_back(c, from_ll<T>(v));
      col_rows[static_cast<std::size_t>(c)].push_back(r);
    }
  for (auto& row : rows) std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  auto entry_at = [&](const Row& row, int c) -> const T* {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };

  DiagonalForm out;
  std::vector<char> alive(rows.size(), 1);
  Row scratch;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      int pivot_col = -1;
      std::size_t best = 0;
      for (const auto& [c, v] : rows[r]) {
        if (!is_unit(v)) continue;
        const std::size_t load = col_rows[static_cast<std::size_t>(c)].size();
        if (pivot_col < 0 || load < best) {
          pivot_col = c;
          best = load;
        }
      }
      if (pivot_col < 0) continue;
      const T pivot = *entry_at(rows[r], pivot_col);
      alive[r] = 0;
      ++out.unit_count;
      progress = true;
      auto touched = std::move(col_rows[static_cast<std::size_t>(pivot_col)]);
      col_rows[static_cast<std::size_t>(pivot_col)].clear();
      for (int other : touched) {
        const auto o = static_cast<std::size_t>(other);
        if (!alive[o]) continue;
        const T* hit = entry_at(rows[o], pivot_col);
        if (hit == nullptr) continue;
        const T factor = checked_mul(*hit, pivot);
        scratch.clear();
        const Row& a = rows[o];
        const Row& b = rows[r];
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
          if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            scratch.push_back(a[i++]);
          } else if (i == a.size() || b[j].first < a[i].first) {
            T v = checked_sub(T{0}, checked_mul(factor, b[j].second));
            col_rows[static_cast<std::size_t>(b[j].first)].push_back(other);
            scratch.emplace_back(b[j].first, v);
            ++j;
          } else {
            T v = checked_sub(a[i].second, checked_mul(factor, b[j].second));
            if (v != 0) scratch.emplace_back(a[i].first, v);
            ++i;
            ++j;
          }
        }
        rows[o].swap(scratch);
      }
    }
  }

  std::vector<int> live_cols;
  std::vector<std::size_t> live_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& e : rows[r]) live_cols.push_back(e.first);
  }
  if (live_rows.empty()) return out;
  std::sort(live_cols.begin(), live_cols.end());
  live_cols.erase(std::unique(live_cols.begin(), live_cols.end()), live_cols.end());
  std::vector<std::vector<mpz_class>> dense(live_rows.size(), std::vector<mpz_class>(live_cols.size(), 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]]) {
      auto j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
      dense[i][static_cast<std::size_t>(j)] = to_mpz(v);
    }
  dense_diagonal(std::move(dense), out);
  return out;
}

std::set<long> prime_factors(mpz_class d) {
  std::set<long> primes;
  for (long p = 2; mpz_class(p) * p <= d; ++p) {
    if (d % p != 0) continue;
    primes.insert(p);
    while (d % p == 0) d /= p;
  }
  if (d > 1) primes.insert(d.get_si());
  return primes;
}

std::vector<VarMask> maximal_sets(std::vector<VarMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VarMask a, VarMask b) {
    return bits(a) != bits(b) ? bits(a) > bits(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarMask> out;
  for (VarMask s : sets)
    if (std::none_of(out.begin(), out.end(), [s](VarMask f) { return (s & ~f) == 0; })) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VarMask> minimal_sets(std::vector<VarMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VarMask a, VarMask b) {
    return bits(a) != bits(b) ? bits(a) < bits(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarMask> out;
  for (VarMask s : sets)
    if (std::none_of(out.begin(), out.end(), [s](VarMask g) { return (g & ~s) == 0; })) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> members(VarMask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Ranks of the reduced chain complex of a complex whose faces are given by size. faces[s] must be
// complete for every size that is asked about.
class ChainRanks {
 public:
  ChainRanks(const std::vector<std::vector<VarMask>>& faces, Field field) : faces_(faces), field_(field) {}

  std::size_t face_count(int size) const {
    return size >= 0 && size < static_cast<int>(faces_.size()) ? faces_[static_cast<std::size_t>(size)].size() : 0;
  }

  // rank of the boundary from faces of `size` vertices to faces of size-1 vertices.
  std::size_t boundary_rank(int size) {
    if (size < 1 || face_count(size) == 0) return 0;
    if (auto it = cache_.find(size); it != cache_.end()) return it->second;
    const auto& upper = faces_[static_cast<std::size_t>(size)];
    const auto& lower = faces_[static_cast<std::size_t>(size - 1)];
    std::size_t rank = 0;
    if (size == 1) {
      rank = lower.empty() ? 0 : 1;
    } else {
      rank = diagonalize(boundary_matrix(upper, lower)).rank_over(field_);
    }
    cache_.emplace(size, rank);
    return rank;
  }

  // reduced Betti number in `degree`; needs faces up to size degree+2.
  std::size_t betti(int degree) {
    const int size = degree + 1;
    return face_count(size) - boundary_rank(size) - boundary_rank(size + 1);
  }

 private:
  const std::vector<std::vector<VarMask>>& faces_;
  Field field_;
  std::unordered_map<int, std::size_t> cache_;
};

// Faces of the independence complex of `gens` restricted to `ground`, up to `max_size` vertices.
std::vector<std::vector<VarMask>> independent_faces(const std::vector<VarMask>& gens, VarMask ground, int max_size) {
  std::vector<std::vector<VarMask>> faces(static_cast<std::size_t>(std::max(max_size, 0) + 1));
  faces[0].push_back(0);
  const auto verts = members(ground);
  std::vector<std::vector<VarMask>> through(64);
  for (VarMask g : gens) {
    if ((g & ~ground) != 0) continue;
    for (int v : members(g)) through[static_cast<std::size_t>(v)].push_back(g);
  }
  std::function<void(std::size_t, VarMask, int)> extend = [&](std::size_t from, VarMask face, int size) {
    if (size == max_size) return;
    for (std::size_t k = from; k < verts.size(); ++k) {
      const VarMask next = face | (VarMask{1} << verts[k]);
      bool ok = true;
      for (VarMask g : through[static_cast<std::size_t>(verts[k])])
        if ((g & ~next) == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      faces[static_cast<std::size_t>(size + 1)].push_back(next);
      extend(k + 1, next, size + 1);
    }
  };
  extend(0, 0, 0);
  for (auto& level : faces) std::sort(level.begin(), level.end());
  while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
  return faces;
}

// Lowest degree d <= max_degree with nonzero reduced homology of the independence complex on `ground`.
std::optional<int> lowest_homology(const std::vector<VarMask>& gens, VarMask ground, int max_degree, Field field) {
  if (max_degree < -1) return std::nullopt;
  const auto faces = independent_faces(gens, ground, max_degree + 2);
  ChainRanks ranks(faces, field);
  for (int d = -1; d <= max_degree; ++d)
    if (ranks.betti(d) != 0) return d;
  return std::nullopt;
}

// Minimum transversal size of the hypergraph `gens`, i.e. the height of the ideal.
int min_transversal(const std::vector<VarMask>& gens) {
  int best = static_cast<int>(gens.size());
  std::function<void(VarMask, int)> branch = [&](VarMask chosen, int size) {
    if (size >= best) return;
    auto open = std::find_if(gens.begin(), gens.end(), [chosen](VarMask g) { return (g & chosen) == 0; });
    if (open == gens.end()) {
      best = size;
      return;
    }
    for (int v : members(*open)) branch(chosen | (VarMask{1} << v), size + 1);
  };
  branch(0, 0);
  return best;
}

// W ranges over unions of generators, largest first.
std::vector<VarMask> generator_unions(const std::vector<VarMask>& gens, VarMask support, int min_size) {
  std::vector<VarMask> out;
  if (bits(support) <= 24) {
    for (VarMask w = support;; w = (w - 1) & support) {
      if (bits(w) >= min_size) {
        VarMask covered = 0;
        for (VarMask g : gens)
          if ((g & ~w) == 0) covered |= g;
        if (covered == w) out.push_back(w);
      }
      if (w == 0) break;
    }
  } else {
    std::vector<VarMask> frontier{0};
    std::unordered_map<VarMask, char> seen{{0, 1}};
    while (!frontier.empty()) {
      std::vector<VarMask> next;
      for (VarMask w : frontier)
        for (VarMask g : gens) {
          const VarMask u = w | g;
          if (seen.emplace(u, 1).second) next.push_back(u);
        }
      frontier.swap(next);
    }
    for (const auto& [w, _] : seen)
      if (w != 0 && bits(w) >= min_size) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](VarMask a, VarMask b) { return bits(a) != bits(b) ? bits(a) > bits(b) : a < b; });
  return out;
}

int pd_connected(const std::vector<VarMask>& gens, Field field, int lower_bound) {
  if (gens.size() == 1) return 1;
  VarMask support = 0;
  for (VarMask g : gens) support |= g;
  const int upper = std::min(static_cast<int>(gens.size()), bits(support));
  int best = std::max(lower_bound, min_transversal(gens));
  if (best >= upper) return upper;
  for (VarMask w : generator_unions(gens, support, best + 1)) {
    const int size = bits(w);
    if (size <= best) break;
    if (auto d = lowest_homology(gens, w, size - 2 - best, field)) {
      best = size - 1 - *d;
      if (best >= upper) break;
    }
  }
  return best;
}

std::vector<std::vector<VarMask>> support_components(const std::vector<VarMask>& gens) {
  std::vector<VarMask> comp_support;
  std::vector<std::vector<VarMask>> comps;
  for (VarMask g : gens) {
    VarMask merged = g;
    std::vector<VarMask> merged_gens{g};
    for (std::size_t k = comps.size(); k-- > 0;) {
      if ((comp_support[k] & merged) == 0) continue;
      merged |= comp_support[k];
      merged_gens.insert(merged_gens.end(), comps[k].begin(), comps[k].end());
      comp_support.erase(comp_support.begin() + static_cast<std::ptrdiff_t>(k));
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(k));
    }
    comp_support.push_back(merged);
    comps.push_back(std::move(merged_gens));
  }
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool shells_in_order(const std::vector<VarMask>& order) {
  for (std::size_t k = 1; k < order.size(); ++k) {
    const VarMask f = order[k];
    VarMask ridge_vertices = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const VarMask d = f & ~order[j];
      if (bits(d) == 1) ridge_vertices |= d;
    }
    for (std::size_t j = 0; j < k; ++j)
      if ((f & ~order[j] & ridge_vertices) == 0) return false;
  }
  return true;
}

std::vector<VarMask> independence_facets(const std::vector<VarMask>& gens, int ground_size) {
  std::vector<std::vector<VarMask>> through(static_cast<std::size_t>(ground_size));
  for (VarMask g : gens)
    for (int v : members(g)) through[static_cast<std::size_t>(v)].push_back(g);
  auto addable = [&](VarMask face, int v) {
    const VarMask next = face | (VarMask{1} << v);
    return std::none_of(through[static_cast<std::size_t>(v)].begin(), through[static_cast<std::size_t>(v)].end(),
                        [next](VarMask g) { return (g & ~next) == 0; });
  };
  std::vector<VarMask> facets;
  std::function<void(int, VarMask)> walk = [&](int v, VarMask face) {
    if (v == ground_size) {
      for (int u = 0; u < ground_size; ++u)
        if (((face >> u) & 1U) == 0 && addable(face, u)) return;
      facets.push_back(face);
      return;
    }
    if (addable(face, v)) walk(v + 1, face | (VarMask{1} << v));
    walk(v + 1, face);
  };
  walk(0, 0);
  std::sort(facets.begin(), facets.end());
  return facets;
}

}  // namespace

Field Field::prime(long p) {
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  return Field{p};
}

std::string Field::to_string() const { return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")"; }

std::size_t DiagonalForm::rank_over(Field f) const {
  if (f.characteristic == 0) return rank();
  std::size_t r = unit_count;
  for (const auto& d : nonunit)
    if (d % f.characteristic != 0) ++r;
  return r;
}

DiagonalForm diagonalize(const SparseIntMatrix& m) {
  try {
    return sparse_diagonalize<long long>(m);
  } catch (const Overflow&) {
    return sparse_diagonalize<mpz_class>(m);
  }
}

SparseIntMatrix boundary_matrix(const std::vector<VarMask>& faces, const std::vector<VarMask>& facets_below) {
  SparseIntMatrix m;
  m.rows = static_cast<int>(facets_below.size());
  m.cols = static_cast<int>(faces.size());
  m.columns.resize(faces.size());
  for (std::size_t c = 0; c < faces.size(); ++c) {
    long long sign = 1;
    for (VarMask rest = faces[c]; rest != 0; rest &= rest - 1) {
      const VarMask boundary_face = faces[c] & ~(rest & -rest);
      auto it = std::lower_bound(facets_below.begin(), facets_below.end(), boundary_face);
      if (it == facets_below.end() || *it != boundary_face)
        throw std::invalid_argument("boundary face missing from the lower face list");
      m.columns[c].emplace_back(static_cast<int>(it - facets_below.begin()), sign);
      sign = -sign;
    }
  }
  return m;
}

SimplicialComplex SimplicialComplex::from_facets(int ground_size, std::vector<VarMask> facets) {
  if (ground_size < 0 || ground_size > 64) throw std::invalid_argument("ground set size out of range");
  const VarMask ground = ground_size == 64 ? ~VarMask{0} : (VarMask{1} << ground_size) - 1;
  for (VarMask f : facets)
    if ((f & ~ground) != 0) throw std::invalid_argument("facet outside the ground set");
  SimplicialComplex c;
  c.ground_size_ = ground_size;
  c.facets_ = maximal_sets(std::move(facets));
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VarMask f : facets_) d = std::max(d, bits(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [this](VarMask f) { return bits(f) - 1 == dimension(); });
}

bool SimplicialComplex::contains(VarMask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VarMask f) { return (face & ~f) == 0; });
}

std::vector<std::vector<VarMask>> SimplicialComplex::faces_by_size(int max_size) const {
  std::vector<std::vector<VarMask>> faces(static_cast<std::size_t>(std::max(max_size, 0) + 1));
  if (is_void()) return faces;
  for (VarMask f : facets_) {
    for (VarMask s = f;; s = (s - 1) & f) {
      if (bits(s) <= max_size) faces[static_cast<std::size_t>(bits(s))].push_back(s);
      if (s == 0) break;
    }
  }
  for (auto& level : faces) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return faces;
}

SimplicialComplex SimplicialComplex::link(VarMask face) const {
  std::vector<VarMask> out;
  for (VarMask f : facets_)
    if ((face & ~f) == 0) out.push_back(f & ~face);
  return from_facets(ground_size_, std::move(out));
}

SimplicialComplex SimplicialComplex::restriction(VarMask vertices) const {
  std::vector<VarMask> out;
  if (!is_void())
    for (VarMask f : facets_) out.push_back(f & vertices);
  return from_facets(ground_size_, std::move(out));
}

std::size_t HomologyProfile::rank(int degree) const {
  auto it = reduced_betti.find(degree);
  return it == reduced_betti.end() ? 0 : it->second;
}

std::vector<std::size_t> reduced_betti(const SimplicialComplex& c, Field field) {
  if (c.is_void()) return {};
  const int dim = c.dimension();
  const auto faces = c.faces_by_size(dim + 1);
  ChainRanks ranks(faces, field);
  std::vector<std::size_t> out;
  for (int d = -1; d <= dim; ++d) out.push_back(ranks.betti(d));
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& c) {
  HomologyProfile profile;
  if (c.is_void()) return profile;
  const int dim = c.dimension();
  const auto faces = c.faces_by_size(dim + 1);
  std::vector<DiagonalForm> forms(faces.size() + 1);
  for (std::size_t s = 1; s < faces.size(); ++s)
    if (!faces[s].empty()) forms[s] = diagonalize(boundary_matrix(faces[s], faces[s - 1]));
  for (int d = -1; d <= dim; ++d) {
    const auto size = static_cast<std::size_t>(d + 1);
    profile.reduced_betti[d] = faces[size].size() - forms[size].rank() - forms[size + 1].rank();
    for (const auto& t : forms[size + 1].nonunit) profile.torsion_primes.merge(prime_factors(t));
  }
  return profile;
}

bool reisner_is_cm(const SimplicialComplex& c, Field field) {
  if (c.is_void()) return true;
  if (!c.is_pure()) return false;
  const int dim = c.dimension();
  const auto faces = c.faces_by_size(dim + 1);
  std::map<std::vector<VarMask>, bool> memo;
  for (const auto& level : faces)
    for (VarMask f : level) {
      const SimplicialComplex lk = c.link(f);
      auto [it, fresh] = memo.try_emplace(lk.facets(), true);
      if (fresh) {
        const auto betti = reduced_betti(lk, field);
        const int lk_dim = lk.dimension();
        for (int d = -1; d < lk_dim; ++d)
          if (betti[static_cast<std::size_t>(d + 1)] != 0) it->second = false;
      }
      if (!it->second) return false;
    }
  return true;
}

SimplicialComplex stanley_reisner_complex(const std::vector<Monomial>& ini, int ground_size) {
  std::vector<VarMask> gens;
  for (const auto& m : ini) {
    if (!m.is_squarefree()) throw SquarefreeError("generator is not squarefree");
    if (ground_size < 64 && (m.support() >> ground_size) != 0)
      throw std::invalid_argument("generator uses a variable outside the ground set");
    gens.push_back(m.support());
  }
  gens = minimal_sets(std::move(gens));
  if (std::find(gens.begin(), gens.end(), VarMask{0}) != gens.end()) return SimplicialComplex::from_facets(ground_size, {});
  return SimplicialComplex::from_facets(ground_size, independence_facets(gens, ground_size));
}

std::optional<std::vector<VarMask>> find_pure_shelling(const SimplicialComplex& c) {
  if (!c.is_pure()) return std::nullopt;
  std::vector<VarMask> order = c.facets();
  if (shells_in_order(order)) return order;
  std::reverse(order.begin(), order.end());
  if (shells_in_order(order)) return order;
  auto reversed = [](VarMask m) {
    VarMask r = 0;
    for (int i = 0; i < 64; ++i) r |= ((m >> i) & 1U) << (63 - i);
    return r;
  };
  std::sort(order.begin(), order.end(), [&](VarMask a, VarMask b) { return reversed(a) < reversed(b); });
  if (shells_in_order(order)) return order;
  std::reverse(order.begin(), order.end());
  if (shells_in_order(order)) return order;
  return std::nullopt;
}

int projective_dimension_hochster(const std::vector<VarMask>& generators, Field field, int lower_bound) {
  const auto gens = minimal_sets(generators);
  if (gens.empty()) return 0;
  if (gens.front() == 0) return 0;
  const auto comps = support_components(gens);
  if (comps.size() == 1) return pd_connected(gens, field, lower_bound);
  int total = 0;
  for (const auto& comp : comps) total += pd_connected(comp, field, 0);
  return total;
}

int projective_dimension_hochster(const std::vector<Monomial>& ini, Field field) {
  std::vector<VarMask> gens;
  for (const auto& m : ini) {
    if (!m.is_squarefree()) throw SquarefreeError("generator is not squarefree");
    gens.push_back(m.support());
  }
  return projective_dimension_hochster(gens, field);
}

DepthResult depth_of_quotient(const Graph& g, const DepthOptions& options) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw GraphError("depth_of_quotient requires a connected graph");
  if (n > options.max_vertices)
    throw CapExceeded("graph has " + std::to_string(n) + " vertices, depth cap is " +
                      std::to_string(options.max_vertices));
  const auto summary = spectrum(g);
  const auto ini = initial_ideal(gb_from_admissible_paths(g));
  std::vector<VarMask> gens;
  for (const auto& m : ini) {
    if (!m.is_squarefree()) throw std::logic_error("initial ideal is not squarefree for " + describe(g));
    gens.push_back(m.support());
  }
  DepthResult r;
  r.dimension = summary.dimension;
  const int lower = 2 * n - summary.dimension;
  int pd = -1;
  if (summary.unmixed) {
    const auto complex = SimplicialComplex::from_facets(2 * n, independence_facets(gens, 2 * n));
    if (find_pure_shelling(complex)) pd = lower;
  }
  if (pd < 0) pd = projective_dimension_hochster(gens, options.field, lower);
  r.projective_dimension = pd;
  r.depth = 2 * n - pd;
  r.is_cm = r.depth == r.dimension;
  if (r.depth > r.dimension) throw std::logic_error("computed depth exceeds dimension for " + describe(g));
  if (r.is_cm && !summary.unmixed) throw std::logic_error("Cohen-Macaulay verdict on a mixed graph " + describe(g));
  return r;
}

}  // namespace binedge
