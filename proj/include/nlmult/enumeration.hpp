#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nlmult/graph.hpp"

namespace nlmult {

// Adjacency bitstring of the canonically relabeled graph, upper triangle in
// row major order. Total order: by n, then lexicographic on the bits.
struct CanonicalCode {
  int n = 0;
  std::array<uint64_t, 2> words{0, 0};

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  size_t operator()(const CanonicalCode& c) const;
};

struct CanonResult {
  CanonicalCode code;
  std::vector<int> labeling;                 // vertex -> canonical position
  std::vector<std::vector<int>> generators;  // automorphisms of the input graph
  std::vector<int> orbit;                    // vertex -> least vertex in its orbit
};

// Canonical labeling by partition refinement with individualization.
// Supports order <= 16. The generators always generate a group whose vertex
// orbits equal the true automorphism orbits.
CanonResult canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of connected graphs on n vertices,
// by canonical augmentation. Supports 1 <= n <= 10.
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n);
  std::optional<Graph> next();

 private:
  struct Frame {
    Graph g;
    std::vector<uint32_t> reps;  // subset orbit representatives under Aut(g)
    size_t idx = 0;
  };

  int n_;
  bool base_pending_;
  std::vector<Frame> stack_;
};

std::vector<Graph> connected_graphs(int n);

// graph6 ingest, one graph per line; blank lines and an optional
// ">>graph6<<" header are ignored.
enum class OnError { Skip, Abort };

struct IngestDiagnostic {
  int line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<IngestDiagnostic> skipped;
};

IngestResult read_graph6_stream(std::istream& in, OnError policy);
IngestResult read_graph6_file(const std::string& path, OnError policy);

}  // namespace nlmult
