#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlmult/enumeration.hpp"
#include "nlmult/families.hpp"
#include "nlmult/graph.hpp"
#include "nlmult/spectra.hpp"

namespace nlmult {

enum class FamilyKind { None, Tripartite, CompleteMinusEdge, CycleC5, Exceptional };

struct StructuralVerdict {
  FamilyKind kind = FamilyKind::None;
  std::vector<int> parts;      // tripartite part sizes, descending
  std::string exceptional_id;  // catalog id when kind is Exceptional
  ExceptionalClause exceptional_clause = ExceptionalClause::NuNotTwo;
  std::string label() const;
};

// Membership in the classification families by structure alone.
StructuralVerdict structural_classify(const Graph& g, const ExceptionalCatalog& catalog);

// Everything the classification needs to know about one graph.
struct GraphAnalysis {
  int order = 0;
  MultiplicityProfile profile;
  std::vector<ThetaDescriptor> thetas;  // empty when no multiplicity n - 3 value
  bool rho_n_minus_1_one = false;
  int nu = 0;
  bool nu_two = false;
  std::optional<int> diam;
  bool cograph = false;
  StructuralVerdict structural;
};

GraphAnalysis analyze_graph(const Graph& g, const ExceptionalCatalog& catalog);

struct SpectralRow {
  std::string g6;
  Poly theta_factor;
  int multiplicity = 0;
  bool is_rho1 = false;
  bool is_rho_n_minus_1 = false;
  bool equals_one = false;
  int nu = 0;
  std::optional<int> diam;
  std::string family;
};

struct DSRow {
  std::string g6;
  std::vector<std::string> mates;  // cospectral non isomorphic companions
};

struct ScanOptions {
  bool want_ds = false;
  bool want_float = false;
  int jobs = 1;
};

struct ScanReport {
  int order = 0;
  uint64_t scanned = 0;
  std::vector<SpectralRow> spectral;
  std::vector<std::string> mismatches;
  std::vector<std::string> problem_counterexamples;
  std::vector<DSRow> ds;
  std::map<std::string, uint64_t> families;
  uint64_t float_checked = 0;
};

// One pass over all connected graphs of the order: finds every graph with an
// eigenvalue of multiplicity n - 3, checks it lands in exactly the family the
// classification predicts, and optionally runs the cospectrality and floating
// point cross checks.
ScanReport scan_order(int order, const ScanOptions& opts, const ExceptionalCatalog& catalog);

struct LemmaReport {
  int order_lo = 0;
  int order_hi = 0;
  uint64_t graphs_checked = 0;
  uint64_t omega_graphs = 0;
  uint64_t embeddings_checked = 0;
  std::vector<std::string> violations;
};

// Exhaustive verification of the supporting identities on every connected
// graph in the order range.
LemmaReport lemma_sweep(int order_lo, int order_hi);

// Discover the sporadic members by scanning; entries are keyed G1, G2, ... in
// (order, graph6) order.
ExceptionalCatalog bootstrap_exceptional_catalog(int order_lo, int order_hi);

}  // namespace nlmult
