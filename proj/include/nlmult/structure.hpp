#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nlmult/families.hpp"
#include "nlmult/graph.hpp"
#include "nlmult/poly.hpp"

namespace nlmult {

int independence_number(const Graph& g);
// fast path for the only value the classification cares about
bool nu_equals_two(const Graph& g);

// mutually adjacent vertices with identical closed neighborhoods
struct TwinClique {
  std::vector<int> vertices;
  int shared_degree = 0;
};

std::vector<TwinClique> twin_cliques(const Graph& g);

// A twin clique of q vertices of degree d forces eigenvalue 1 + 1/d with
// multiplicity at least q - 1; checked by exact polynomial division.
bool check_twin_eigenvalue(const Graph& g, const TwinClique& tc);

// first induced embedding of pattern in g, or nullopt
std::optional<std::vector<int>> find_induced(const Graph& pattern, const Graph& g);
// all induced embeddings up to pattern automorphism
std::vector<std::vector<int>> find_all_induced(const PatternGraph& pattern, const Graph& g);

bool has_induced_p4(const Graph& g);
bool is_cograph(const Graph& g);

// vertices outside an induced path v1 v2 v3 v4, bucketed by which of the four
// path vertices they see (bit k for v_{k+1})
std::array<std::vector<int>, 16> trace_partition(const Graph& g, const std::vector<int>& path);

// Residuals in t that vanish at an eigenvalue of multiplicity n - 3 whenever
// the five vertex pattern is induced. The embedding maps pattern vertex i to
// graph vertex embedding[i].
std::vector<Poly> lemma26_residuals(const PatternGraph& pattern, const Graph& g,
                                    const std::vector<int>& embedding);

// Same, for an induced path on four vertices: a single degree four residual.
Poly eq1_residual(const Graph& g, const std::vector<int>& path);

}  // namespace nlmult
