#include "nlmult/classify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "nlmult/structure.hpp"

namespace nlmult {

namespace {

// Connected components of g as vertex masks.
std::vector<uint64_t> component_masks(const Graph& g) {
  const int n = g.order();
  std::vector<uint64_t> comps;
  uint64_t seen = 0;
  const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  while (seen != all) {
    int start = std::countr_zero(~seen & all);
    uint64_t comp = uint64_t{1} << start;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      uint64_t f = frontier;
      while (f) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(u);
      }
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool mask_is_clique(const Graph& g, uint64_t mask) {
  uint64_t rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.neighbors(v) & mask) != (mask & ~(uint64_t{1} << v))) return false;
  }
  return true;
}

const CanonicalCode& c5_code() {
  static const CanonicalCode code = canonical_form(cycle_graph(5)).code;
  return code;
}

std::string direction_prefix(const std::string& g6) { return g6 + ": "; }

// Facts the classification branches on, for one graph with a theta value.
struct ClauseFacts {
  bool rho_one;
  bool nu_two;
  int diam;
  bool cograph;
};

std::string expected_family(const ClauseFacts& f) {
  if (f.rho_one) return "tripartite or complete_minus_edge";
  if (!f.nu_two) return "exceptional(nu_ne_2)";
  if (f.diam == 3) return "exceptional(diam_3)";
  if (f.diam == 2 && f.cograph) return "exceptional(cograph)";
  if (f.diam == 2) return "cycle_c5";
  return "nothing (diameter out of range)";
}

bool verdict_matches(const ClauseFacts& f, const StructuralVerdict& s) {
  switch (s.kind) {
    case FamilyKind::Tripartite:
    case FamilyKind::CompleteMinusEdge:
      return f.rho_one;
    case FamilyKind::CycleC5:
      return !f.rho_one && f.nu_two && f.diam == 2 && !f.cograph;
    case FamilyKind::Exceptional:
      break;
    case FamilyKind::None:
      return false;
  }
  if (f.rho_one) return false;
  if (!f.nu_two) return s.exceptional_clause == ExceptionalClause::NuNotTwo;
  if (f.diam == 3) return s.exceptional_clause == ExceptionalClause::DiamThree;
  if (f.diam == 2 && f.cograph) return s.exceptional_clause == ExceptionalClause::Cograph;
  return false;
}

constexpr uint64_t kFloatFullOrderLimit = 8;  // full float cross check up to here
constexpr uint64_t kFloatStride = 1024;       // sampling stride beyond

bool float_cross_check(const Graph& g, const MultiplicityProfile& profile) {
  const Rational target_width = frac(1, 10000000000L);  // 1e-10
  const double tol = 1e-8;
  auto refs = sorted_roots(profile);
  std::vector<double> floats = float_spectrum(g);
  size_t fi = 0;
  for (auto& ref : refs) {
    RootRefiner refiner(profile.decomposition.parts[ref.part].factor);
    IsolatingInterval iv = refiner.refine(ref.interval, target_width);
    for (int k = 0; k < ref.multiplicity; ++k, ++fi) {
      if (fi >= floats.size()) return false;
      if (floats[fi] < iv.lo.get_d() - tol) return false;
      if (floats[fi] > iv.hi.get_d() + tol) return false;
    }
  }
  return fi == floats.size();
}

std::string charpoly_key(const Poly& p) {
  std::ostringstream os;
  for (const auto& s : p.coeff_strings()) os << s << "|";
  return os.str();
}

// Raw embeddings from automorphism orbit representatives.
std::vector<std::vector<int>> expand_embeddings(const PatternGraph& pattern,
                                                const std::vector<std::vector<int>>& reps) {
  std::set<std::vector<int>> all;
  for (const auto& emb : reps) {
    for (const auto& sigma : pattern.automorphisms) {
      std::vector<int> image(emb.size());
      for (size_t i = 0; i < emb.size(); ++i) image[i] = emb[sigma[i]];
      all.insert(image);
    }
  }
  return {all.begin(), all.end()};
}

// Bitmasks over {v1..v4} that would complete an independent triple with one
// of the nonadjacent path pairs; no vertex outside the path may use one.
constexpr std::array<int, 8> kForbiddenTraceMasks = {0b0000, 0b0001, 0b0010, 0b0100,
                                                     0b1000, 0b0101, 0b0110, 0b1010};

}  // namespace

std::string StructuralVerdict::label() const {
  switch (kind) {
    case FamilyKind::None:
      return "none";
    case FamilyKind::Tripartite: {
      std::ostringstream os;
      os << "tripartite(" << parts[0] << "," << parts[1] << "," << parts[2] << ")";
      return os.str();
    }
    case FamilyKind::CompleteMinusEdge:
      return "complete_minus_edge";
    case FamilyKind::CycleC5:
      return "cycle_c5";
    case FamilyKind::Exceptional:
      return "exceptional(" + exceptional_id + ")";
  }
  throw std::logic_error("unknown family kind");
}

StructuralVerdict structural_classify(const Graph& g, const ExceptionalCatalog& catalog) {
  if (g.order() < 5) throw std::invalid_argument("classification needs order at least 5");
  StructuralVerdict verdict;
  Graph h = complement(g);
  auto comps = component_masks(h);
  if (comps.size() == 3) {
    bool cliques = true;
    for (uint64_t m : comps) cliques = cliques && mask_is_clique(h, m);
    if (cliques) {
      verdict.kind = FamilyKind::Tripartite;
      for (uint64_t m : comps) verdict.parts.push_back(std::popcount(m));
      std::sort(verdict.parts.rbegin(), verdict.parts.rend());
      return verdict;
    }
  }
  if (g.order() >= 5 && h.edge_count() == 1) {
    verdict.kind = FamilyKind::CompleteMinusEdge;
    return verdict;
  }
  bool catalog_has_order = false;
  for (const auto& e : catalog.entries()) {
    if (e.g.order() == g.order()) catalog_has_order = true;
  }
  if (g.order() == 5 || catalog_has_order) {
    CanonicalCode code = canonical_form(g).code;
    if (g.order() == 5 && code == c5_code()) {
      verdict.kind = FamilyKind::CycleC5;
      return verdict;
    }
    if (const ExceptionalEntry* hit = catalog.find(code)) {
      verdict.kind = FamilyKind::Exceptional;
      verdict.exceptional_id = hit->id;
      verdict.exceptional_clause = hit->clause;
      return verdict;
    }
  }
  return verdict;
}

GraphAnalysis analyze_graph(const Graph& g, const ExceptionalCatalog& catalog) {
  GraphAnalysis a;
  a.order = g.order();
  a.profile = multiplicity_profile(g);
  a.thetas = find_theta(a.profile);
  a.rho_n_minus_1_one = rho_n_minus_1_is_one(a.profile, eigenvalue_one_multiplicity(g));
  a.nu = independence_number(g);
  a.nu_two = a.nu == 2;
  a.diam = diameter(g);
  a.cograph = is_cograph(g);
  a.structural = structural_classify(g, catalog);
  return a;
}

ScanReport scan_order(int order, const ScanOptions& opts, const ExceptionalCatalog& catalog) {
  if (order < 5) throw std::invalid_argument("scan needs order at least 5");
  ScanReport report;
  report.order = order;

  std::vector<Graph> graphs;
  {
    ConnectedGraphStream stream(order);
    while (auto g = stream.next()) graphs.push_back(std::move(*g));
  }
  report.scanned = graphs.size();

  struct Slot {
    std::string g6;
    std::vector<SpectralRow> rows;
    std::vector<std::string> mismatches;
    bool counterexample = false;
    bool is_ds_target = false;
    std::string cpkey;
    bool float_checked = false;
    bool float_ok = true;
    std::string family;  // empty when no theta
  };
  std::vector<Slot> slots(graphs.size());

  auto process = [&](size_t i) {
    const Graph& g = graphs[i];
    Slot& slot = slots[i];
    slot.g6 = write_graph6(g);
    MultiplicityProfile profile = multiplicity_profile(g);
    if (opts.want_ds) slot.cpkey = charpoly_key(profile.charpoly);
    auto thetas = find_theta(profile);
    StructuralVerdict structural = structural_classify(g, catalog);

    if (!thetas.empty()) {
      ClauseFacts facts;
      facts.rho_one = rho_n_minus_1_is_one(profile, eigenvalue_one_multiplicity(g));
      int nu = independence_number(g);
      facts.nu_two = nu == 2;
      facts.diam = diameter(g).value_or(-1);
      facts.cograph = is_cograph(g);
      slot.family = structural.label();

      if (!verdict_matches(facts, structural)) {
        slot.mismatches.push_back(direction_prefix(slot.g6) + "spectral side expects " +
                                  expected_family(facts) + ", structure gives " +
                                  structural.label());
      }
      for (const auto& t : thetas) {
        SpectralRow row;
        row.g6 = slot.g6;
        row.theta_factor = t.factor;
        row.multiplicity = t.multiplicity;
        row.is_rho1 = t.is_rho1;
        row.is_rho_n_minus_1 = t.is_rho_n_minus_1;
        row.equals_one = t.equals_one;
        row.nu = nu;
        row.diam = diameter(g);
        row.family = structural.label();
        slot.rows.push_back(std::move(row));
        if (t.is_rho1) slot.is_ds_target = true;
        if (t.is_rho1 && facts.nu_two && order >= 6) slot.counterexample = true;
      }
    } else if (structural.kind != FamilyKind::None) {
      slot.mismatches.push_back(direction_prefix(slot.g6) + "structure gives " +
                                structural.label() +
                                " but no eigenvalue has multiplicity n - 3");
    }

    if (opts.want_float) {
      const bool in_corpus = order <= static_cast<int>(kFloatFullOrderLimit) ||
                             !thetas.empty() || i % kFloatStride == 0;
      if (in_corpus) {
        slot.float_checked = true;
        slot.float_ok = float_cross_check(g, profile);
        if (!slot.float_ok) {
          slot.mismatches.push_back(direction_prefix(slot.g6) +
                                    "floating point spectrum disagrees with exact intervals");
        }
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < graphs.size(); ++i) process(i);
  } else {
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          size_t i = cursor.fetch_add(1);
          if (i >= graphs.size()) return;
          process(i);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  // Deterministic merge, ordered by graph6 then per graph theta order.
  std::vector<size_t> by_g6(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) by_g6[i] = i;
  std::sort(by_g6.begin(), by_g6.end(),
            [&](size_t a, size_t b) { return slots[a].g6 < slots[b].g6; });

  std::unordered_map<std::string, std::vector<std::string>> buckets;
  for (size_t i : by_g6) {
    Slot& slot = slots[i];
    for (auto& row : slot.rows) report.spectral.push_back(std::move(row));
    for (auto& m : slot.mismatches) report.mismatches.push_back(std::move(m));
    if (slot.counterexample) report.problem_counterexamples.push_back(slot.g6);
    if (!slot.family.empty()) ++report.families[slot.family];
    if (slot.float_checked) ++report.float_checked;
    if (opts.want_ds) buckets[slot.cpkey].push_back(slot.g6);
  }
  if (opts.want_ds) {
    for (size_t i : by_g6) {
      const Slot& slot = slots[i];
      if (!slot.is_ds_target) continue;
      DSRow row;
      row.g6 = slot.g6;
      for (const auto& mate : buckets[slot.cpkey]) {
        if (mate != slot.g6) row.mates.push_back(mate);
      }
      report.ds.push_back(std::move(row));
    }
  }
  return report;
}

LemmaReport lemma_sweep(int order_lo, int order_hi) {
  if (order_lo < 5 || order_hi < order_lo) throw std::invalid_argument("bad order range");
  LemmaReport report;
  report.order_lo = order_lo;
  report.order_hi = order_hi;

  for (int n = order_lo; n <= order_hi; ++n) {
    ConnectedGraphStream stream(n);
    while (auto maybe = stream.next()) {
      const Graph& g = *maybe;
      ++report.graphs_checked;
      const std::string g6 = write_graph6(g);
      auto complain = [&](const std::string& what) {
        report.violations.push_back(direction_prefix(g6) + what);
      };

      MultiplicityProfile profile = multiplicity_profile(g);
      auto refs = sorted_roots(profile);

      // trace identity: eigenvalues sum to n
      if (-profile.charpoly[n - 1] != frac(n)) complain("eigenvalue sum is not n");

      // all eigenvalues within [0, 2]
      {
        Poly radical = profile.radical();
        RootRefiner rr(radical);
        Rational b = cauchy_root_bound(radical);
        if (rr.count_half_open(-b, frac(0)) != 1 ||
            rr.count_half_open(-b, frac(2)) != static_cast<int>(refs.size())) {
          complain("eigenvalue outside [0, 2]");
        }
      }

      const bool complete = g.edge_count() == n * (n - 1) / 2;
      if (!complete && compare_root_value(profile, refs[1], frac(1)) > 0) {
        complain("second smallest eigenvalue exceeds 1 on a non complete graph");
      }

      {
        // two eigenvalues at least (n-1)/(n-2) outside the two excluded families
        Graph h = complement(g);
        auto comps = component_masks(h);
        bool all_cliques = true;
        int big = 0;
        for (uint64_t m : comps) {
          if (!mask_is_clique(h, m)) all_cliques = false;
          if (std::popcount(m) >= 2) ++big;
        }
        const bool excluded = all_cliques && (comps.size() == 2 || big <= 1);
        if (!excluded && count_eigenvalues_at_least(profile, frac(n - 1, n - 2)) < 2) {
          complain("fewer than two eigenvalues at or above (n-1)/(n-2)");
        }
      }

      for (const auto& tc : twin_cliques(g)) {
        if (!check_twin_eigenvalue(g, tc)) complain("twin clique eigenvalue division failed");
      }

      auto thetas = find_theta(profile);
      if (thetas.empty()) continue;
      const bool rho_one = rho_n_minus_1_is_one(profile, eigenvalue_one_multiplicity(g));
      if (rho_one || !nu_equals_two(g)) continue;
      if (diameter(g).value_or(-1) != 2) continue;
      auto p4_reps = find_all_induced(pattern(PatternId::P4), g);
      if (p4_reps.empty()) continue;
      ++report.omega_graphs;

      for (const auto& t : thetas) {
        if (t.equals_one) complain("theta equals one despite rho_{n-1} not being one");
      }

      auto p4_all = expand_embeddings(pattern(PatternId::P4), p4_reps);

      for (const auto& t : thetas) {
        for (const auto& emb : p4_reps) {
          ++report.embeddings_checked;
          if (!residual_mod(eq1_residual(g, emb), t.factor).is_zero()) {
            complain("path residual does not vanish at theta");
          }
        }
        for (const auto& p : pattern_catalog()) {
          for (const auto& emb : find_all_induced(p, g)) {
            ++report.embeddings_checked;
            for (const auto& res : lemma26_residuals(p, g, emb)) {
              if (!residual_mod(res, t.factor).is_zero()) {
                complain("degree residual does not vanish at theta for " + p.name);
              }
            }
          }
        }
      }

      // vertices off an induced path avoid the independence violating traces
      for (const auto& emb : p4_all) {
        auto buckets = trace_partition(g, emb);
        for (int mask : kForbiddenTraceMasks) {
          if (!buckets[mask].empty()) complain("forbidden trace bucket occupied");
        }
      }

      // paths sharing the last three vertices force equal front degrees
      {
        std::map<std::vector<int>, std::set<int>> tails;
        for (const auto& emb : p4_all) {
          tails[{emb[1], emb[2], emb[3]}].insert(g.degree(emb[0]));
        }
        for (const auto& [tail, degs] : tails) {
          if (degs.size() > 1) complain("equal tail paths with different front degrees");
        }
      }
    }
  }
  return report;
}

ExceptionalCatalog bootstrap_exceptional_catalog(int order_lo, int order_hi) {
  std::vector<ExceptionalEntry> entries;
  for (int n = order_lo; n <= order_hi; ++n) {
    std::vector<std::pair<std::string, ExceptionalEntry>> found;
    ConnectedGraphStream stream(n);
    while (auto maybe = stream.next()) {
      const Graph& g = *maybe;
      MultiplicityProfile profile = multiplicity_profile(g);
      auto thetas = find_theta(profile);
      if (thetas.empty()) continue;
      if (rho_n_minus_1_is_one(profile, eigenvalue_one_multiplicity(g))) {
        // tripartite or complete minus edge; not sporadic
        Graph h = complement(g);
        auto comps = component_masks(h);
        bool cliques = comps.size() == 3;
        for (uint64_t m : comps) cliques = cliques && mask_is_clique(h, m);
        if (!cliques && h.edge_count() != 1) {
          throw std::logic_error("graph with smallest nonzero eigenvalue one is not in a family");
        }
        continue;
      }
      ExceptionalClause clause;
      if (!nu_equals_two(g)) {
        clause = ExceptionalClause::NuNotTwo;
      } else if (diameter(g).value_or(-1) == 3) {
        clause = ExceptionalClause::DiamThree;
      } else if (diameter(g).value_or(-1) == 2 && is_cograph(g)) {
        clause = ExceptionalClause::Cograph;
      } else if (diameter(g).value_or(-1) == 2) {
        if (n == 5 && canonical_form(g).code == c5_code()) continue;  // the cycle
        throw std::logic_error("unclassifiable graph with multiplicity n - 3 at order " +
                               std::to_string(n));
      } else {
        throw std::logic_error("unexpected diameter for multiplicity n - 3 graph");
      }
      Graph canon = canonical_graph(g);
      found.push_back({write_graph6(canon), {"", canon, clause}});
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [g6, entry] : found) entries.push_back(std::move(entry));
  }
  for (size_t i = 0; i < entries.size(); ++i) entries[i].id = "G" + std::to_string(i + 1);
  return ExceptionalCatalog(std::move(entries));
}

}  // namespace nlmult
