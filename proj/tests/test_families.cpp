#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "nlmult/enumeration.hpp"
#include "nlmult/families.hpp"
#include "nlmult/graph.hpp"
#include "oracles.hpp"

using namespace nlmult;

TEST_CASE("constructors") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_graph(1).edge_count() == 0);

  Graph k5e = complete_minus_edge(5);
  CHECK(k5e.edge_count() == 9);
  CHECK(k5e.degree_sequence() == std::vector<int>{4, 4, 4, 3, 3});
  CHECK_THROWS_AS(complete_minus_edge(1), std::invalid_argument);

  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(isomorphic(complete_bipartite(2, 3), k23));
  CHECK(complete_bipartite(1, 1).edge_count() == 1);

  Graph t122 = complete_tripartite(1, 2, 2);
  CHECK(t122.edge_count() == 8);
  CHECK(t122.degree_sequence() == std::vector<int>{4, 3, 3, 3, 3});
  CHECK(isomorphic(complete_tripartite(2, 2, 1), t122));

  Graph cs = complete_split(2, 5);
  CHECK(cs.edge_count() == 7);
  CHECK(cs.degree_sequence() == std::vector<int>{4, 4, 2, 2, 2});
  CHECK(isomorphic(complete_split(5, 5), complete_graph(5)));
  CHECK_THROWS_AS(complete_split(6, 5), std::invalid_argument);

  CHECK(isomorphic(cycle_graph(5), Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(path_graph(1).edge_count() == 0);
}

TEST_CASE("pattern catalog") {
  CHECK(pattern_catalog().size() == 6);

  auto order_of = [](PatternId id) { return pattern(id).automorphisms.size(); };
  CHECK(order_of(PatternId::P4) == 2);
  CHECK(order_of(PatternId::H1) == 2);
  CHECK(order_of(PatternId::H2) == 2);
  CHECK(order_of(PatternId::H3) == 10);
  CHECK(order_of(PatternId::H4) == 2);
  CHECK(order_of(PatternId::H5) == 2);
  CHECK(order_of(PatternId::H6) == 4);

  CHECK(isomorphic(pattern(PatternId::H3).g, cycle_graph(5)));
  CHECK(pattern(PatternId::H5).g.degree_sequence() == std::vector<int>{4, 3, 3, 2, 2});
  CHECK(pattern(PatternId::H1).g.edge_count() == 5);
  CHECK(pattern(PatternId::H6).g.edge_count() == 7);

  // Every listed automorphism really is one, and matches brute force exactly.
  for (const auto& p : pattern_catalog()) {
    auto brute = oracle::all_isomorphisms(p.g, p.g);
    CHECK(p.automorphisms == brute);
  }

  // The six certificates are pairwise non isomorphic.
  for (size_t i = 0; i < pattern_catalog().size(); ++i) {
    for (size_t j = i + 1; j < pattern_catalog().size(); ++j) {
      CHECK_FALSE(isomorphic(pattern_catalog()[i].g, pattern_catalog()[j].g));
    }
  }
}

TEST_CASE("clause labels") {
  CHECK(clause_label(ExceptionalClause::NuNotTwo) == "nu_ne_2");
  CHECK(clause_label(ExceptionalClause::DiamThree) == "diam_3");
  CHECK(clause_label(ExceptionalClause::Cograph) == "cograph");
  CHECK(clause_from_label("diam_3") == ExceptionalClause::DiamThree);
  CHECK_THROWS_AS(clause_from_label("bogus"), std::invalid_argument);
}

TEST_CASE("exceptional catalog save load and lookup") {
  std::vector<ExceptionalEntry> entries;
  entries.push_back({"T1", cycle_graph(5), ExceptionalClause::NuNotTwo});
  entries.push_back({"T2", complete_bipartite(3, 3), ExceptionalClause::Cograph});
  ExceptionalCatalog catalog(std::move(entries));

  // Lookup is by isomorphism class, not by labeling.
  Graph c5_relabeled(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  auto* hit = catalog.find(canonical_form(c5_relabeled).code);
  REQUIRE(hit != nullptr);
  CHECK(hit->id == "T1");
  CHECK(catalog.find(canonical_form(path_graph(5)).code) == nullptr);

  auto dir = std::filesystem::temp_directory_path();
  auto g6_path = (dir / "nlmult_test_catalog.g6").string();
  auto json_path = (dir / "nlmult_test_catalog.json").string();
  catalog.save(g6_path, json_path);
  ExceptionalCatalog loaded = ExceptionalCatalog::load(g6_path, json_path);
  REQUIRE(loaded.entries().size() == 2);
  CHECK(loaded.entries()[0].id == "T1");
  CHECK(loaded.entries()[0].clause == ExceptionalClause::NuNotTwo);
  CHECK(isomorphic(loaded.entries()[0].g, cycle_graph(5)));
  CHECK(loaded.entries()[1].id == "T2");
  CHECK(loaded.entries()[1].clause == ExceptionalClause::Cograph);
  CHECK(loaded.find(canonical_form(complete_bipartite(3, 3)).code) != nullptr);
  std::remove(g6_path.c_str());
  std::remove(json_path.c_str());
}
