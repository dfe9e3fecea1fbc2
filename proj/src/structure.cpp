#include "nlmult/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "nlmult/spectra.hpp"

namespace nlmult {

namespace {

// Tomita style branch and bound maximum clique with a greedy coloring bound.
struct MaxClique {
  const Graph& g;
  int best = 0;

  void expand(uint64_t cand, int size) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    uint64_t rest = cand;
    int color = 0;
    while (rest) {
      ++color;
      uint64_t cls = rest;
      while (cls) {
        int v = std::countr_zero(cls);
        order.push_back(v);
        bound.push_back(color);
        rest &= ~(uint64_t{1} << v);
        cls &= ~(uint64_t{1} << v) & ~g.neighbors(v);
      }
    }
    uint64_t pool = cand;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      int v = order[i];
      expand(pool & g.neighbors(v), size + 1);
      pool &= ~(uint64_t{1} << v);
    }
  }
};

int max_clique_size(const Graph& g) {
  if (g.order() == 0) return 0;
  MaxClique mc{g};
  uint64_t all = g.order() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.order()) - 1;
  mc.expand(all, 0);
  return mc.best;
}

uint64_t closed_neighborhood(const Graph& g, int v) {
  return g.neighbors(v) | (uint64_t{1} << v);
}

struct EmbeddingSearch {
  const Graph& pattern;
  const Graph& host;
  bool all;
  std::vector<int> assigned;
  std::vector<std::vector<int>> found;

  bool step() {
    const int i = static_cast<int>(assigned.size());
    if (i == pattern.order()) {
      found.push_back(assigned);
      return !all;
    }
    for (int w = 0; w < host.order(); ++w) {
      if (std::find(assigned.begin(), assigned.end(), w) != assigned.end()) continue;
      if (host.degree(w) < pattern.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (pattern.has_edge(j, i) != host.has_edge(assigned[j], w)) ok = false;
      }
      if (!ok) continue;
      assigned.push_back(w);
      if (step()) return true;
      assigned.pop_back();
    }
    return false;
  }
};

void require_induced(const Graph& pattern, const Graph& g, const std::vector<int>& embedding) {
  if (static_cast<int>(embedding.size()) != pattern.order()) {
    throw std::invalid_argument("embedding size does not match the pattern");
  }
  std::set<int> distinct(embedding.begin(), embedding.end());
  if (static_cast<int>(distinct.size()) != pattern.order()) {
    throw std::invalid_argument("embedding repeats a vertex");
  }
  for (int i = 0; i < pattern.order(); ++i) {
    for (int j = i + 1; j < pattern.order(); ++j) {
      if (pattern.has_edge(i, j) != g.has_edge(embedding[i], embedding[j])) {
        throw std::invalid_argument("embedding is not induced");
      }
    }
  }
}

}  // namespace

int independence_number(const Graph& g) { return max_clique_size(complement(g)); }

bool nu_equals_two(const Graph& g) {
  Graph h = complement(g);
  const int n = h.order();
  bool has_edge = false;
  for (int u = 0; u < n; ++u) {
    uint64_t nb = h.neighbors(u);
    if (nb) has_edge = true;
    uint64_t rest = nb;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (v <= u) continue;
      if (h.neighbors(u) & h.neighbors(v)) return false;  // triangle in complement
    }
  }
  return has_edge;
}

std::vector<TwinClique> twin_cliques(const Graph& g) {
  std::map<uint64_t, std::vector<int>> classes;
  for (int v = 0; v < g.order(); ++v) {
    classes[closed_neighborhood(g, v)].push_back(v);
  }
  std::vector<TwinClique> out;
  for (auto& [nb, vs] : classes) {
    if (vs.size() < 2) continue;
    out.push_back({vs, g.degree(vs.front())});
  }
  std::sort(out.begin(), out.end(),
            [](const TwinClique& a, const TwinClique& b) { return a.vertices < b.vertices; });
  return out;
}

bool check_twin_eigenvalue(const Graph& g, const TwinClique& tc) {
  const int q = static_cast<int>(tc.vertices.size());
  if (q < 2) throw std::invalid_argument("twin clique needs at least 2 vertices");
  uint64_t shared = closed_neighborhood(g, tc.vertices.front());
  for (int v : tc.vertices) {
    if (g.degree(v) != tc.shared_degree || closed_neighborhood(g, v) != shared) {
      throw std::invalid_argument("vertices are not closed twins");
    }
  }
  const Rational value = frac(tc.shared_degree + 1, tc.shared_degree);
  Poly p = nl_charpoly(g);
  Poly factor{-value, frac(1)};
  for (int k = 0; k < q - 1; ++k) {
    auto [quot, rem] = Poly::divrem(p, factor);
    if (!rem.is_zero()) return false;
    p = quot;
  }
  return true;
}

std::optional<std::vector<int>> find_induced(const Graph& pattern, const Graph& g) {
  if (pattern.order() > g.order()) return std::nullopt;
  EmbeddingSearch search{pattern, g, false};
  if (search.step()) return search.found.front();
  return std::nullopt;
}

std::vector<std::vector<int>> find_all_induced(const PatternGraph& pattern, const Graph& g) {
  if (pattern.g.order() > g.order()) return {};
  EmbeddingSearch search{pattern.g, g, true};
  search.step();
  std::set<std::vector<int>> reps;
  for (const auto& emb : search.found) {
    std::vector<int> least = emb;
    for (const auto& sigma : pattern.automorphisms) {
      std::vector<int> image(emb.size());
      for (size_t i = 0; i < emb.size(); ++i) image[i] = emb[sigma[i]];
      least = std::min(least, image);
    }
    reps.insert(least);
  }
  return {reps.begin(), reps.end()};
}

bool has_induced_p4(const Graph& g) {
  return find_induced(pattern(PatternId::P4).g, g).has_value();
}

bool is_cograph(const Graph& g) { return !has_induced_p4(g); }

std::array<std::vector<int>, 16> trace_partition(const Graph& g, const std::vector<int>& path) {
  require_induced(pattern(PatternId::P4).g, g, path);
  std::array<std::vector<int>, 16> buckets;
  for (int v = 0; v < g.order(); ++v) {
    if (std::find(path.begin(), path.end(), v) != path.end()) continue;
    int mask = 0;
    for (int k = 0; k < 4; ++k) {
      if (g.has_edge(v, path[k])) mask |= 1 << k;
    }
    buckets[mask].push_back(v);
  }
  return buckets;
}

std::vector<Poly> lemma26_residuals(const PatternGraph& pattern, const Graph& g,
                                    const std::vector<int>& embedding) {
  require_induced(pattern.g, g, embedding);
  const Poly s{1, -1};  // 1 - t
  auto d = [&](int role) { return Poly::constant(frac(g.degree(embedding[role - 1]))); };
  const Poly one = Poly::constant(frac(1));
  const Poly two = Poly::constant(frac(2));
  switch (pattern.id) {
    case PatternId::H1:
      return {d(1) * s + one, d(5) * s + one};
    case PatternId::H2:
      return {d(2) * s + one, d(5) * s + one};
    case PatternId::H3:
      return {s * s * d(1) * d(2) + s * d(4) - one};
    case PatternId::H4:
      return {s * d(3) * d(2) + d(3) + d(5), s * d(4) * d(5) + d(2) + d(4),
              s * s * d(1) * (d(3) + d(5)) + s * d(3) - one};
    case PatternId::H5:
      return {s * d(4) * (d(2) + d(5)) + d(2) + two * d(4),
              s * d(1) * (d(3) + d(5)) + d(3) + two * d(1)};
    case PatternId::H6:
      return {d(1) * s + one, d(4) * s + one};
    case PatternId::P4:
      break;
  }
  throw std::invalid_argument("no residual set for this pattern");
}

Poly eq1_residual(const Graph& g, const std::vector<int>& path) {
  require_induced(pattern(PatternId::P4).g, g, path);
  const Poly s{1, -1};
  auto d = [&](int role) { return frac(g.degree(path[role - 1])); };
  const Rational pair_sum = d(1) * d(2) + d(3) * d(4) + d(1) * d(4);
  return s.pow(4).scaled(d(1) * d(2) * d(3) * d(4)) - (s * s).scaled(pair_sum) +
         Poly::constant(frac(1));
}

}  // namespace nlmult
