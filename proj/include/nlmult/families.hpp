#pragma once

#include <string>
#include <vector>

#include "nlmult/enumeration.hpp"
#include "nlmult/graph.hpp"

namespace nlmult {

Graph complete_graph(int n);
Graph complete_minus_edge(int n);  // n >= 2
Graph complete_bipartite(int a, int b);
Graph complete_tripartite(int a, int b, int c);
// clique of size a joined to an independent set of size n - a
Graph complete_split(int a, int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);

// Five vertex certificates: the five extensions of an induced path v1 v2 v3 v4
// compatible with independence number two, and K_{2,3} with an extra edge
// inside the larger side. Vertex i plays role v_{i+1}.
enum class PatternId { P4, H1, H2, H3, H4, H5, H6 };

struct PatternGraph {
  PatternId id;
  std::string name;
  Graph g;
  std::vector<std::vector<int>> automorphisms;
};

const PatternGraph& pattern(PatternId id);
// H1..H6 in order
const std::vector<PatternGraph>& pattern_catalog();

enum class ExceptionalClause { NuNotTwo, DiamThree, Cograph };

std::string clause_label(ExceptionalClause clause);
ExceptionalClause clause_from_label(const std::string& label);

struct ExceptionalEntry {
  std::string id;
  Graph g;
  ExceptionalClause clause;
};

// The sporadic graphs of the classification, keyed by canonical form.
class ExceptionalCatalog {
 public:
  ExceptionalCatalog() = default;
  explicit ExceptionalCatalog(std::vector<ExceptionalEntry> entries);

  static const ExceptionalCatalog& builtin();
  static ExceptionalCatalog load(const std::string& g6_path, const std::string& json_path);
  void save(const std::string& g6_path, const std::string& json_path) const;

  const std::vector<ExceptionalEntry>& entries() const { return entries_; }
  const ExceptionalEntry* find(const CanonicalCode& code) const;

 private:
  std::vector<ExceptionalEntry> entries_;
  std::vector<CanonicalCode> codes_;
};

}  // namespace nlmult
