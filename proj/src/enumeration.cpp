#include "nlmult/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nlmult {

namespace {

constexpr int kMaxCanonOrder = 16;

using Partition = std::vector<std::vector<int>>;

uint64_t cell_mask(const std::vector<int>& cell) {
  uint64_t m = 0;
  for (int v : cell) m |= uint64_t{1} << v;
  return m;
}

// Split every cell by neighbor counts toward every cell until stable. The
// procedure is label invariant: cell order and count order do not depend on
// vertex names beyond the graph structure.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t si = 0; si < cells.size() && !changed; ++si) {
      const uint64_t smask = cell_mask(cells[si]);
      for (size_t xi = 0; xi < cells.size() && !changed; ++xi) {
        const auto& cell = cells[xi];
        if (cell.size() <= 1) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        bool uniform = true;
        for (int v : cell) {
          int count = std::popcount(g.neighbors(v) & smask);
          if (!keyed.empty() && count != keyed.front().first) uniform = false;
          keyed.emplace_back(count, v);
        }
        if (uniform) continue;
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Partition next;
        next.reserve(cells.size() + 2);
        for (size_t i = 0; i < cells.size(); ++i) {
          if (i != xi) {
            next.push_back(cells[i]);
            continue;
          }
          std::vector<int> run;
          for (size_t k = 0; k < keyed.size(); ++k) {
            if (!run.empty() && keyed[k].first != keyed[k - 1].first) {
              next.push_back(std::move(run));
              run.clear();
            }
            run.push_back(keyed[k].second);
          }
          next.push_back(std::move(run));
        }
        cells = std::move(next);
        changed = true;
      }
    }
  }
}

CanonicalCode code_under(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[label[v]] = v;
  CanonicalCode code;
  code.n = n;
  int t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++t) {
      if (g.has_edge(inv[i], inv[j])) {
        code.words[t >> 6] |= uint64_t{1} << (63 - (t & 63));
      }
    }
  }
  return code;
}

std::vector<int> compose_inverse(const std::vector<int>& a, const std::vector<int>& b) {
  // gamma = a^-1 o b as a vertex map
  const int n = static_cast<int>(a.size());
  std::vector<int> inv_a(n), out(n);
  for (int v = 0; v < n; ++v) inv_a[a[v]] = v;
  for (int v = 0; v < n; ++v) out[v] = inv_a[b[v]];
  return out;
}

struct CanonSearch {
  const Graph& g;
  int n;
  bool have_first = false;
  bool have_best = false;
  std::vector<int> first_label, best_label;
  CanonicalCode first_code, best_code;
  std::vector<std::vector<int>> gens;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  void record_automorphism(const std::vector<int>& base, const std::vector<int>& leaf) {
    std::vector<int> gamma = compose_inverse(base, leaf);
    bool identity = true;
    for (int v = 0; v < n && identity; ++v) identity = gamma[v] == v;
    if (identity) return;
    if (std::find(gens.begin(), gens.end(), gamma) == gens.end()) gens.push_back(gamma);
  }

  // Orbit of v under the subgroup of known generators fixing `fixed` pointwise.
  uint64_t prefix_orbit(int v, const std::vector<int>& fixed) const {
    uint64_t reach = uint64_t{1} << v;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& gamma : gens) {
        bool fixes = true;
        for (int f : fixed) {
          if (gamma[f] != f) {
            fixes = false;
            break;
          }
        }
        if (!fixes) continue;
        for (int u = 0; u < n; ++u) {
          if ((reach >> u) & 1) {
            uint64_t bit = uint64_t{1} << gamma[u];
            if (!(reach & bit)) {
              reach |= bit;
              grew = true;
            }
          }
        }
      }
    }
    return reach;
  }

  void recurse(Partition cells, std::vector<int>& fixed) {
    refine(g, cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      std::vector<int> label(n);
      for (size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<int>(i);
      CanonicalCode code = code_under(g, label);
      if (!have_first) {
        have_first = have_best = true;
        first_label = best_label = label;
        first_code = best_code = code;
        return;
      }
      if (code == first_code) record_automorphism(first_label, label);
      if (code == best_code) {
        record_automorphism(best_label, label);
      } else if (code > best_code) {
        best_code = code;
        best_label = label;
      }
      return;
    }

    uint64_t explored = 0;
    for (int v : cells[target]) {
      if (explored & prefix_orbit(v, fixed)) continue;
      explored |= uint64_t{1} << v;
      Partition child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      fixed.push_back(v);
      recurse(std::move(child), fixed);
      fixed.pop_back();
    }
  }
};

std::vector<int> orbits_from_generators(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& gamma : gens) {
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(gamma[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = find(v);
  return orbit;
}

uint32_t apply_to_mask(uint32_t mask, const std::vector<int>& gamma) {
  uint32_t out = 0;
  for (int v = 0; v < static_cast<int>(gamma.size()); ++v) {
    if ((mask >> v) & 1) out |= uint32_t{1} << gamma[v];
  }
  return out;
}

// One representative (the least mask) per orbit of nonempty vertex subsets.
std::vector<uint32_t> subset_orbit_reps(int n, const std::vector<std::vector<int>>& gens) {
  const uint32_t limit = uint32_t{1} << n;
  std::vector<uint32_t> reps;
  std::vector<bool> seen(limit, false);
  for (uint32_t mask = 1; mask < limit; ++mask) {
    if (seen[mask]) continue;
    reps.push_back(mask);
    std::vector<uint32_t> queue{mask};
    seen[mask] = true;
    while (!queue.empty()) {
      uint32_t m = queue.back();
      queue.pop_back();
      for (const auto& gamma : gens) {
        uint32_t im = apply_to_mask(m, gamma);
        if (!seen[im]) {
          seen[im] = true;
          queue.push_back(im);
        }
      }
    }
  }
  return reps;
}

Graph extend(const Graph& g, uint32_t subset) {
  const int n = g.order();
  Graph h(n + 1);
  for (int u = 0; u < n; ++u) {
    uint64_t nb = g.neighbors(u);
    for (int v = u + 1; v < n; ++v) {
      if ((nb >> v) & 1) h.add_edge(u, v);
    }
  }
  for (int v = 0; v < n; ++v) {
    if ((subset >> v) & 1) h.add_edge(v, n);
  }
  return h;
}

bool connected_without(const Graph& g, int drop) {
  const int n = g.order();
  if (n <= 2) return true;
  int start = drop == 0 ? 1 : 0;
  uint64_t visited = uint64_t{1} << start;
  uint64_t frontier = visited;
  const uint64_t banned = uint64_t{1} << drop;
  while (frontier) {
    uint64_t next = 0;
    uint64_t f = frontier;
    while (f) {
      int u = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(u);
    }
    next &= ~banned;
    next &= ~visited;
    visited |= next;
    frontier = next;
  }
  return std::popcount(visited) == n - 1;
}

// Accept the child iff its new top vertex lies in the same automorphism orbit
// as the non-cut vertex with the greatest canonical position. Together with
// per parent subset orbit representatives this yields each isomorphism class
// exactly once.
bool accept_child(const Graph& child) {
  const int k = child.order() - 1;
  CanonResult canon = canonical_form(child);
  int best_pos = -1, f = -1;
  for (int v = 0; v < child.order(); ++v) {
    if (!connected_without(child, v)) continue;
    if (canon.labeling[v] > best_pos) {
      best_pos = canon.labeling[v];
      f = v;
    }
  }
  return f >= 0 && canon.orbit[f] == canon.orbit[k];
}

}  // namespace

size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(c.n);
  for (uint64_t w : c.words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

CanonResult canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonOrder) {
    throw std::invalid_argument("canonical_form supports at most 16 vertices");
  }
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  CanonSearch search(g);
  std::vector<int> fixed;
  search.recurse({all}, fixed);
  CanonResult result;
  result.code = search.best_code;
  result.labeling = search.best_label;
  result.generators = std::move(search.gens);
  result.orbit = orbits_from_generators(n, result.generators);
  return result;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

ConnectedGraphStream::ConnectedGraphStream(int n) : n_(n), base_pending_(n == 1) {
  if (n < 1 || n > 10) throw std::invalid_argument("stream supports 1 <= n <= 10");
  if (n > 1) {
    Graph k1(1);
    stack_.push_back({k1, subset_orbit_reps(1, {}), 0});
  }
}

std::optional<Graph> ConnectedGraphStream::next() {
  if (base_pending_) {
    base_pending_ = false;
    return Graph(1);
  }
  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    if (frame.idx == frame.reps.size()) {
      stack_.pop_back();
      continue;
    }
    uint32_t subset = frame.reps[frame.idx++];
    Graph child = extend(frame.g, subset);
    if (!accept_child(child)) continue;
    if (child.order() == n_) return child;
    auto gens = canonical_form(child).generators;
    std::vector<uint32_t> reps = subset_orbit_reps(child.order(), gens);
    stack_.push_back({std::move(child), std::move(reps), 0});
  }
  return std::nullopt;
}

std::vector<Graph> connected_graphs(int n) {
  ConnectedGraphStream stream(n);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

IngestResult read_graph6_stream(std::istream& in, OnError policy) {
  IngestResult result;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == ">>graph6<<") continue;
    if (line.empty()) continue;
    try {
      result.graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      if (policy == OnError::Abort) {
        std::ostringstream os;
        os << "line " << lineno << ": " << e.what();
        throw std::runtime_error(os.str());
      }
      result.skipped.push_back({lineno, e.what()});
    }
  }
  return result;
}

IngestResult read_graph6_file(const std::string& path, OnError policy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in, policy);
}

}  // namespace nlmult
