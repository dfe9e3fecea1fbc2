#include "nlmult/families.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nlmult {

namespace {

void join_all(Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  for (int u : a)
    for (int v : b) g.add_edge(u, v);
}

std::vector<int> range_block(int from, int count) {
  std::vector<int> out(count);
  std::iota(out.begin(), out.end(), from);
  return out;
}

std::vector<std::vector<int>> brute_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (relabel(g, perm) == g) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

PatternGraph make_pattern(PatternId id, std::string name, const Graph& g) {
  return PatternGraph{id, std::move(name), g, brute_automorphisms(g)};
}

}  // namespace

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_minus_edge(int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  Graph g = complete_graph(n);
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) h.add_edge(u, v);
  return h;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  join_all(g, range_block(0, a), range_block(a, b));
  return g;
}

Graph complete_tripartite(int a, int b, int c) {
  Graph g(a + b + c);
  auto pa = range_block(0, a), pb = range_block(a, b), pc = range_block(a + b, c);
  join_all(g, pa, pb);
  join_all(g, pa, pc);
  join_all(g, pb, pc);
  return g;
}

Graph complete_split(int a, int n) {
  if (a < 0 || a > n) throw std::invalid_argument("clique size out of range");
  Graph g(n);
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

const PatternGraph& pattern(PatternId id) {
  static const std::vector<PatternGraph> all = [] {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph h1(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}});
    Graph h2(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
    Graph h3(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {3, 4}});
    Graph h4(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {3, 4}});
    Graph h5(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    Graph h6(5, {{0, 3}, {0, 1}, {0, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 4}});
    std::vector<PatternGraph> v;
    v.push_back(make_pattern(PatternId::P4, "P4", p4));
    v.push_back(make_pattern(PatternId::H1, "H1", h1));
    v.push_back(make_pattern(PatternId::H2, "H2", h2));
    v.push_back(make_pattern(PatternId::H3, "H3", h3));
    v.push_back(make_pattern(PatternId::H4, "H4", h4));
    v.push_back(make_pattern(PatternId::H5, "H5", h5));
    v.push_back(make_pattern(PatternId::H6, "H6", h6));
    return v;
  }();
  return all[static_cast<size_t>(id)];
}

const std::vector<PatternGraph>& pattern_catalog() {
  static const std::vector<PatternGraph> hs = {
      pattern(PatternId::H1), pattern(PatternId::H2), pattern(PatternId::H3),
      pattern(PatternId::H4), pattern(PatternId::H5), pattern(PatternId::H6)};
  return hs;
}

std::string clause_label(ExceptionalClause clause) {
  switch (clause) {
    case ExceptionalClause::NuNotTwo:
      return "nu_ne_2";
    case ExceptionalClause::DiamThree:
      return "diam_3";
    case ExceptionalClause::Cograph:
      return "cograph";
  }
  throw std::logic_error("unknown clause");
}

ExceptionalClause clause_from_label(const std::string& label) {
  if (label == "nu_ne_2") return ExceptionalClause::NuNotTwo;
  if (label == "diam_3") return ExceptionalClause::DiamThree;
  if (label == "cograph") return ExceptionalClause::Cograph;
  throw std::invalid_argument("unknown clause label: " + label);
}

ExceptionalCatalog::ExceptionalCatalog(std::vector<ExceptionalEntry> entries)
    : entries_(std::move(entries)) {
  codes_.reserve(entries_.size());
  for (const auto& e : entries_) codes_.push_back(canonical_form(e.g).code);
}

const ExceptionalEntry* ExceptionalCatalog::find(const CanonicalCode& code) const {
  for (size_t i = 0; i < codes_.size(); ++i) {
    if (codes_[i] == code) return &entries_[i];
  }
  return nullptr;
}

const ExceptionalCatalog& ExceptionalCatalog::builtin() {
  static const ExceptionalCatalog catalog = [] {
    struct Row {
      const char* id;
      const char* g6;
      ExceptionalClause clause;
    };
    // Discovered by bootstrap_exceptional_catalog(5, 9); ids in (order,
    // canonical graph6) order. Orders 5..9 contribute 2/4/5/4/5 entries.
    const std::vector<Row> rows = {
        {"G1", "DJk", ExceptionalClause::DiamThree},
        {"G2", "DJ{", ExceptionalClause::Cograph},
        {"G3", "EBnW", ExceptionalClause::NuNotTwo},
        {"G4", "EJ]w", ExceptionalClause::DiamThree},
        {"G5", "EJ^w", ExceptionalClause::Cograph},
        {"G6", "EJmw", ExceptionalClause::DiamThree},
        {"G7", "F@QFw", ExceptionalClause::NuNotTwo},
        {"G8", "F@QuW", ExceptionalClause::NuNotTwo},
        {"G9", "FJ\\|w", ExceptionalClause::DiamThree},
        {"G10", "FJ\\~w", ExceptionalClause::Cograph},
        {"G11", "FJ]|w", ExceptionalClause::DiamThree},
        {"G12", "GJ\\z|{", ExceptionalClause::DiamThree},
        {"G13", "GJ\\z~{", ExceptionalClause::Cograph},
        {"G14", "GJ\\||{", ExceptionalClause::DiamThree},
        {"G15", "GJ]||{", ExceptionalClause::DiamThree},
        {"G16", "H@QBtnN", ExceptionalClause::NuNotTwo},
        {"G17", "HJ\\zz}~", ExceptionalClause::DiamThree},
        {"G18", "HJ\\zz~~", ExceptionalClause::Cograph},
        {"G19", "HJ\\z|}~", ExceptionalClause::DiamThree},
        {"G20", "HJ\\||}~", ExceptionalClause::DiamThree},
    };
    std::vector<ExceptionalEntry> entries;
    entries.reserve(rows.size());
    for (const auto& r : rows) {
      entries.push_back({r.id, parse_graph6(r.g6), r.clause});
    }
    return ExceptionalCatalog(std::move(entries));
  }();
  return catalog;
}

void ExceptionalCatalog::save(const std::string& g6_path, const std::string& json_path) const {
  std::ofstream g6(g6_path);
  if (!g6) throw std::runtime_error("cannot write " + g6_path);
  nlohmann::ordered_json meta = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    g6 << write_graph6(e.g) << "\n";
    nlohmann::ordered_json row;
    row["id"] = e.id;
    row["order"] = e.g.order();
    row["clause"] = clause_label(e.clause);
    row["degree_sequence"] = e.g.degree_sequence();
    meta.push_back(row);
  }
  std::ofstream js(json_path);
  if (!js) throw std::runtime_error("cannot write " + json_path);
  js << meta.dump(2) << "\n";
}

ExceptionalCatalog ExceptionalCatalog::load(const std::string& g6_path,
                                            const std::string& json_path) {
  IngestResult graphs = read_graph6_file(g6_path, OnError::Abort);
  std::ifstream js(json_path);
  if (!js) throw std::runtime_error("cannot open " + json_path);
  nlohmann::json meta = nlohmann::json::parse(js);
  if (!meta.is_array() || meta.size() != graphs.graphs.size()) {
    throw std::runtime_error("catalog metadata does not match graph list");
  }
  std::vector<ExceptionalEntry> entries;
  entries.reserve(meta.size());
  for (size_t i = 0; i < meta.size(); ++i) {
    const auto& row = meta[i];
    if (row.at("order").get<int>() != graphs.graphs[i].order()) {
      throw std::runtime_error("catalog order mismatch at entry " + std::to_string(i));
    }
    entries.push_back({row.at("id").get<std::string>(), graphs.graphs[i],
                       clause_from_label(row.at("clause").get<std::string>())});
  }
  return ExceptionalCatalog(std::move(entries));
}

}  // namespace nlmult
