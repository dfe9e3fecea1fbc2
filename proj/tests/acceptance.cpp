// Acceptance gate. Eight checks, one verdict line each, exit 0 only when
// every one passes. All tolerances are pinned here or in the library.
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "nlmult/classify.hpp"
#include "nlmult/families.hpp"
#include "nlmult/structure.hpp"
#include "oracles.hpp"

using namespace nlmult;

namespace {

int g_failures = 0;

void verdict(int idx, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", idx, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::vector<uint64_t> component_masks(const Graph& g) {
  std::vector<uint64_t> comps;
  uint64_t seen = 0;
  for (int s = 0; s < g.order(); ++s) {
    if ((seen >> s) & 1) continue;
    uint64_t comp = uint64_t{1} << s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      uint64_t fresh = g.neighbors(u) & ~comp;
      comp |= fresh;
      while (fresh) {
        int v = std::countr_zero(fresh);
        fresh &= fresh - 1;
        q.push(v);
      }
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool mask_is_clique(const Graph& g, uint64_t mask) {
  uint64_t rest = mask;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.neighbors(u) & mask) != (mask & ~(uint64_t{1} << u))) return false;
  }
  return true;
}

// complement is a disjoint union of cliques with two components, or with at
// most one component of size two or more
bool two_large_exclusion(const Graph& g) {
  Graph h = complement(g);
  auto comps = component_masks(h);
  bool all_cliques = true;
  int big = 0;
  for (uint64_t m : comps) {
    if (!mask_is_clique(h, m)) all_cliques = false;
    if (std::popcount(m) >= 2) ++big;
  }
  return all_cliques && (comps.size() == 2 || big <= 1);
}

size_t brute_connected_classes(int n) {
  std::vector<std::pair<int, int>> slot;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slot.emplace_back(u, v);
  std::unordered_set<CanonicalCode, CanonicalCodeHash> codes;
  for (uint64_t mask = 0; mask < (uint64_t{1} << slot.size()); ++mask) {
    Graph g(n);
    for (size_t e = 0; e < slot.size(); ++e) {
      if ((mask >> e) & 1) g.add_edge(slot[e].first, slot[e].second);
    }
    if (!is_connected(g)) continue;
    codes.insert(canonical_form(g).code);
  }
  return codes.size();
}

}  // namespace

int main() {
  // Shared exhaustive scans; ds and float cross checks ride along.
  ScanOptions opts;
  opts.want_ds = true;
  opts.want_float = true;
  opts.jobs = 1;
  std::map<int, ScanReport> scans;
  for (int n = 5; n <= 9; ++n) scans[n] = scan_order(n, opts, ExceptionalCatalog::builtin());

  // 1. five cycle, exact characteristic polynomial and float spectrum
  {
    const Graph c5 = cycle_graph(5);
    const std::vector<std::string> want = {"0/1", "25/16", "-25/4", "35/4", "-5/1", "1/1"};
    bool ok = nl_charpoly(c5).coeff_strings() == want;
    const double kTol = 1e-3;
    const double lo = (5.0 - std::sqrt(5.0)) / 4.0;
    const double hi = (5.0 + std::sqrt(5.0)) / 4.0;
    const std::vector<double> expect = {0.0, lo, lo, hi, hi};
    const std::vector<double> got = float_spectrum(c5);
    ok = ok && got.size() == expect.size();
    for (size_t i = 0; ok && i < expect.size(); ++i) {
      ok = std::fabs(got[i] - expect[i]) <= kTol;
    }
    verdict(1, "five cycle characteristic polynomial, exact plus float", ok,
            ok ? "coefficients match, spectrum within 1e-3" : "disagreement");
  }

  // 2. spectral condition equals structural membership, both directions
  {
    size_t scanned = 0;
    size_t bad = 0;
    size_t family_graphs = 0;
    for (const auto& [n, report] : scans) {
      scanned += report.scanned;
      for (const auto& m : report.mismatches) {
        if (m.find("floating point") == std::string::npos) ++bad;
      }
      for (const auto& [label, count] : report.families) family_graphs += count;
    }
    std::ostringstream d;
    d << "orders 5..9, " << scanned << " graphs, " << family_graphs << " family members, " << bad
      << " mismatches";
    verdict(2, "multiplicity n-3 classification, exhaustive both directions", scanned == 273183 && bad == 0,
            d.str());
  }

  // 3. no graph of order 6..9 has theta = rho_1 with independence number two
  {
    size_t hits = 0;
    for (int n = 6; n <= 9; ++n) hits += scans[n].problem_counterexamples.size();
    std::ostringstream d;
    d << hits << " counterexamples";
    verdict(3, "largest eigenvalue attains multiplicity n-3 only with nu >= 3 beyond order 5",
            hits == 0, d.str());
  }

  // 4. theta = rho_1 graphs have no cospectral non isomorphic mate
  {
    const std::map<int, size_t> expected_targets = {{5, 1}, {6, 1}, {7, 2}, {8, 0}, {9, 1}};
    bool ok = true;
    size_t targets = 0;
    size_t mates = 0;
    for (const auto& [n, report] : scans) {
      ok = ok && report.ds.size() == expected_targets.at(n);
      targets += report.ds.size();
      for (const auto& row : report.ds) mates += row.mates.size();
    }
    ok = ok && mates == 0;
    std::ostringstream d;
    d << targets << " targets, " << mates << " cospectral mates";
    verdict(4, "theta = rho_1 graphs are determined by their spectrum", ok, d.str());
  }

  // 5. the two infinite families behave uniformly through order 12
  {
    bool ok = true;
    int members = 0;
    for (int n = 5; n <= 12; ++n) {
      for (int a = n - 2; a >= 1 && ok; --a) {
        for (int b = std::min(a, n - a - 1); b >= 1; --b) {
          int c = n - a - b;
          if (c < 1 || c > b) continue;
          const Graph g = complete_tripartite(a, b, c);
          auto thetas = find_theta(g);
          ok = thetas.size() == 1 && thetas[0].multiplicity == n - 3 && thetas[0].equals_one &&
               rho_n_minus_1_is_one(g);
          ++members;
          if (!ok) break;
        }
      }
      if (!ok) break;
      const Graph g = complete_minus_edge(n);
      auto thetas = find_theta(g);
      // theta is exactly n/(n-1), never 1
      ok = thetas.size() == 1 && thetas[0].multiplicity == n - 3 && !thetas[0].equals_one &&
           thetas[0].factor.eval(frac(n, n - 1)) == frac(0) && rho_n_minus_1_is_one(g);
      ++members;
      if (!ok) break;
    }
    std::ostringstream d;
    d << members << " family members through order 12";
    verdict(5, "complete tripartite and complete minus edge families", ok, d.str());
  }

  // 6. eigenvalue bounds, twin cliques, pattern residuals
  {
    bool ok = true;
    std::ostringstream d;

    // all connected graphs of order 2..4, then the exhaustive sweep for 5..8
    for (int n = 2; n <= 4 && ok; ++n) {
      for (const Graph& g : connected_graphs(n)) {
        if (g.edge_count() == n * (n - 1) / 2) continue;
        MultiplicityProfile profile = multiplicity_profile(g);
        auto refs = sorted_roots(profile);
        if (refs.size() < 2 || compare_root_value(profile, refs[1], frac(1)) > 0) {
          ok = false;
          break;
        }
      }
    }
    LemmaReport sweep = lemma_sweep(5, 8);
    ok = ok && sweep.violations.empty() && sweep.graphs_checked == 12103 &&
         sweep.omega_graphs == 1 && sweep.embeddings_checked == 12;

    // random corpus: second smallest eigenvalue bound and the two large
    // eigenvalue count, through order 12
    std::mt19937 rng(20260814);
    const double probs[3] = {0.3, 0.5, 0.7};
    int randoms = 0;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 8);
      Graph g = oracle::random_connected_graph(rng, n, probs[rng() % 3]);
      if (g.edge_count() == n * (n - 1) / 2) {
        --trial;
        continue;
      }
      ++randoms;
      MultiplicityProfile profile = multiplicity_profile(g);
      auto refs = sorted_roots(profile);
      ok = refs.size() >= 2 && compare_root_value(profile, refs[1], frac(1)) <= 0;
      if (ok && !two_large_exclusion(g)) {
        ok = count_eigenvalues_at_least(profile, frac(n - 1, n - 2)) >= 2;
      }
    }

    // planted twin cliques: division route and multiplicity route must agree
    int planted = 0;
    for (int trial = 0; trial < 500 && ok; ++trial) {
      const int base = 4 + static_cast<int>(rng() % 5);
      const int q = 2 + static_cast<int>(rng() % 3);
      Graph h = oracle::random_connected_graph(rng, base, 0.5);
      Graph g(base + q - 1);
      for (int u = 0; u < base; ++u)
        for (int v = u + 1; v < base; ++v)
          if (h.has_edge(u, v)) g.add_edge(u, v);
      const int anchor = static_cast<int>(rng() % base);
      for (int k = 0; k < q - 1; ++k) {
        const int clone = base + k;
        g.add_edge(clone, anchor);
        for (int v = 0; v < base; ++v)
          if (h.has_edge(anchor, v)) g.add_edge(clone, v);
        for (int j = 0; j < k; ++j) g.add_edge(clone, base + j);
      }
      ++planted;
      bool found = false;
      MultiplicityProfile profile = multiplicity_profile(g);
      for (const auto& tc : twin_cliques(g)) {
        ok = ok && check_twin_eigenvalue(g, tc);
        const int d = tc.shared_degree;
        ok = ok && profile.multiplicity_of(frac(d + 1, d)) >=
                       static_cast<int>(tc.vertices.size()) - 1;
        if (std::find(tc.vertices.begin(), tc.vertices.end(), anchor) != tc.vertices.end() &&
            static_cast<int>(tc.vertices.size()) >= q) {
          found = true;
        }
      }
      ok = ok && found;
    }

    d << "orders 2..4 exhaustive, sweep of " << sweep.graphs_checked << " graphs with "
      << sweep.embeddings_checked << " pattern embeddings, " << randoms << " random graphs, "
      << planted << " planted twin cliques, " << sweep.violations.size() << " violations";
    verdict(6, "eigenvalue bounds, twin cliques, pattern residuals", ok, d.str());
  }

  // 7. exact intervals against the float eigensolver
  {
    size_t checked = 0;
    size_t disagreements = 0;
    bool full = true;
    for (const auto& [n, report] : scans) {
      checked += report.float_checked;
      if (n <= 8 && report.float_checked != report.scanned) full = false;
      for (const auto& m : report.mismatches) {
        if (m.find("floating point") != std::string::npos) ++disagreements;
      }
    }
    std::ostringstream d;
    d << checked << " graphs cross checked (every graph through order 8), tolerance 1e-8 on "
      << "intervals refined to width 1e-10, " << disagreements << " disagreements";
    verdict(7, "exact and floating point spectra agree", full && disagreements == 0, d.str());
  }

  // 8. enumeration against labeled brute force, canonical form invariance
  {
    const std::vector<size_t> expected = {1, 1, 2, 6, 21, 112, 853};
    bool ok = true;
    for (int n = 1; n <= 7 && ok; ++n) {
      const size_t brute = brute_connected_classes(n);
      ok = brute == expected[n - 1] && connected_graphs(n).size() == brute;
    }
    std::mt19937 rng(97);
    const std::vector<Graph> pool = connected_graphs(8);
    int relabelings = 0;
    for (size_t i = 0; i < pool.size() && ok; i += 111) {
      const Graph& g = pool[i];
      const Graph canon = canonical_graph(g);
      for (int r = 0; r < 100; ++r) {
        ++relabelings;
        auto perm = oracle::random_permutation(rng, g.order());
        if (!(canonical_graph(relabel(g, perm)) == canon)) {
          ok = false;
          break;
        }
      }
    }
    std::ostringstream d;
    d << "orders 1..7 against 2^binom(n,2) labeled graphs, " << relabelings
      << " random relabelings at order 8";
    verdict(8, "enumeration counts and canonical invariance", ok, d.str());
  }

  if (g_failures == 0) {
    std::printf("all 8 checks passed\n");
    return 0;
  }
  std::printf("%d check(s) failed\n", g_failures);
  return 1;
}
