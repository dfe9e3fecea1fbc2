#include "nlmult/graph.hpp"

#include <algorithm>
#include <bit>

namespace nlmult {

namespace {

uint64_t full_mask(int n) {
  return n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > 64) throw std::invalid_argument("graph order must be in 1..64");
  adj_.assign(n_, 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= uint64_t{1} << v;
  adj_[v] |= uint64_t{1} << u;
}

int Graph::degree(int u) const {
  check_vertex(u);
  return std::popcount(adj_[u]);
}

int Graph::edge_count() const {
  int total = 0;
  for (int u = 0; u < n_; ++u) total += std::popcount(adj_[u]);
  return total / 2;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int u = 0; u < n_; ++u) d[u] = degree(u);
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error(Graph6Error::Kind::BadLength, "empty graph6 line");
  size_t pos = 0;
  long n = 0;
  const unsigned char b0 = static_cast<unsigned char>(line[0]);
  if (b0 < 63 || b0 > 126) {
    throw Graph6Error(Graph6Error::Kind::BadByte, "graph6 byte out of range");
  }
  if (b0 == 126) {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
      // 8-byte header encodes n >= 2^18, far past the 64-vertex cap.
      throw Graph6Error(Graph6Error::Kind::UnsupportedOrder,
                        "graph6 order exceeds 64 vertices");
    }
    if (line.size() < 4) throw Graph6Error(Graph6Error::Kind::BadLength, "truncated graph6 header");
    for (int k = 1; k <= 3; ++k) {
      const unsigned char b = static_cast<unsigned char>(line[k]);
      if (b < 63 || b > 126) {
        throw Graph6Error(Graph6Error::Kind::BadByte, "graph6 byte out of range");
      }
      n = (n << 6) | (b - 63);
    }
    pos = 4;
  } else {
    n = b0 - 63;
    pos = 1;
  }
  if (n < 1 || n > 64) {
    throw Graph6Error(Graph6Error::Kind::UnsupportedOrder,
                      n < 1 ? "graph6 order must be at least 1"
                            : "graph6 order exceeds 64 vertices");
  }
  const long nbits = n * (n - 1) / 2;
  const long nbytes = (nbits + 5) / 6;
  if (static_cast<long>(line.size()) - static_cast<long>(pos) != nbytes) {
    throw Graph6Error(Graph6Error::Kind::BadLength, "graph6 body has the wrong length");
  }
  Graph g(static_cast<int>(n));
  long bit = 0;
  int i = 0;
  int j = 1;
  for (long k = 0; k < nbytes; ++k) {
    const unsigned char b = static_cast<unsigned char>(line[pos + k]);
    if (b < 63 || b > 126) {
      throw Graph6Error(Graph6Error::Kind::BadByte, "graph6 byte out of range");
    }
    const int val = b - 63;
    for (int m = 5; m >= 0; --m, ++bit) {
      const bool set = (val >> m) & 1;
      if (bit >= nbits) {
        if (set) throw Graph6Error(Graph6Error::Kind::BadByte, "nonzero graph6 padding");
        continue;
      }
      if (set) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int nb = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u) {
    uint64_t row = ~g.neighbors(u) & full_mask(n) & ~(uint64_t{1} << u);
    for (int v = u + 1; v < n; ++v) {
      if ((row >> v) & 1u) c.add_edge(u, v);
    }
  }
  return c;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  uint64_t seen = 1;
  uint64_t frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(u);
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == full_mask(n);
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    uint64_t seen = uint64_t{1} << s;
    uint64_t frontier = seen;
    int dist = 0;
    while (frontier) {
      uint64_t next = 0;
      while (frontier) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.neighbors(u);
      }
      next &= ~seen;
      if (next) ++dist;
      seen |= next;
      frontier = next;
    }
    if (seen != full_mask(n)) return std::nullopt;
    best = std::max(best, dist);
  }
  return best;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation length mismatch");
  }
  Graph h(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    }
  }
  return h;
}

}  // namespace nlmult
