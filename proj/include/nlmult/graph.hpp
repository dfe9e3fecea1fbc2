#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nlmult {

// Undirected simple graph on 1..64 vertices.
// Invariant: adjacency is symmetric and irreflexive; rows are bitsets.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }
  uint64_t neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
  }
  int degree(int u) const;
  int edge_count() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex index out of range");
  }
  int n_;
  std::vector<uint64_t> adj_;
};

// graph6 text form errors, one kind per failure mode.
class Graph6Error : public std::runtime_error {
 public:
  enum class Kind { BadLength, BadByte, UnsupportedOrder };
  Graph6Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind(kind) {}
  Kind kind;
};

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

Graph complement(const Graph& g);
bool is_connected(const Graph& g);
// nullopt means the graph is disconnected (infinite diameter).
std::optional<int> diameter(const Graph& g);
// perm maps old vertex -> new vertex.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace nlmult
