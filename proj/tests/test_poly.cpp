#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "nlmult/poly.hpp"
#include "oracles.hpp"

using namespace nlmult;

TEST_CASE("poly arithmetic basics") {
  Poly zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());

  Poly x = Poly::variable();
  Poly p = x * x - Poly{3, 0} * x + Poly::constant(frac(2));
  CHECK(p.degree() == 2);
  CHECK(p.eval(frac(1)) == frac(0));
  CHECK(p.eval(frac(2)) == frac(0));
  CHECK(p.eval(frac(0)) == frac(2));
  CHECK(p.to_string() == "x^2 - 3*x + 2");

  Poly q{-1, 1};  // x - 1
  auto [quot, rem] = Poly::divrem(p, q);
  CHECK(rem.is_zero());
  CHECK(quot == Poly{-2, 1});
  CHECK(Poly::exact_div(p, q) == Poly{-2, 1});
  CHECK_THROWS_AS(Poly::exact_div(p + Poly::constant(frac(1)), q), std::logic_error);

  CHECK(p.derivative() == Poly{-3, 2});
  CHECK((x.pow(5)).degree() == 5);
  CHECK(p.monic() == p);
  Poly r = Poly{0, 0, 2} + Poly{1};
  CHECK(r.monic() == Poly::constant(frac(1, 2)) * r);
}

TEST_CASE("poly gcd") {
  Poly x = Poly::variable();
  Poly a = (x - Poly::constant(frac(1))).pow(2) * (x + Poly::constant(frac(2)));
  Poly b = (x - Poly::constant(frac(1))) * (x + Poly::constant(frac(3)));
  CHECK(poly_gcd(a, b) == x - Poly::constant(frac(1)));
  CHECK(poly_gcd(a, Poly{}) == a.monic());
  CHECK(poly_gcd(Poly{}, b) == b.monic());
  // Coprime pair.
  CHECK(poly_gcd(x, x + Poly::constant(frac(1))) == Poly::constant(frac(1)));
}

TEST_CASE("squarefree decomposition") {
  Poly x = Poly::variable();
  Poly p = (x - Poly::constant(frac(1))).pow(2) * (x + Poly::constant(frac(2)));
  auto dec = squarefree(p);
  REQUIRE(dec.parts.size() == 2);
  CHECK(dec.parts[0].multiplicity == 1);
  CHECK(dec.parts[0].factor == x + Poly::constant(frac(2)));
  CHECK(dec.parts[1].multiplicity == 2);
  CHECK(dec.parts[1].factor == x - Poly::constant(frac(1)));
  CHECK(dec.reassemble() == p.monic());

  // Normalized Laplacian charpoly of C5, expanded by hand:
  // x (x^2 - 5/2 x + 5/4)^2 = x^5 - 5x^4 + 35/4 x^3 - 25/4 x^2 + 25/16 x.
  Poly c5{frac(0), frac(25, 16), frac(-25, 4), frac(35, 4), frac(-5), frac(1)};
  auto dc5 = squarefree(c5);
  REQUIRE(dc5.parts.size() == 2);
  CHECK(dc5.parts[0].multiplicity == 1);
  CHECK(dc5.parts[0].factor == x);
  CHECK(dc5.parts[1].multiplicity == 2);
  CHECK(dc5.parts[1].factor == Poly{frac(5, 4), frac(-5, 2), frac(1)});
  CHECK(dc5.reassemble() == c5);

  auto lin = squarefree(x);
  REQUIRE(lin.parts.size() == 1);
  CHECK(lin.parts[0].multiplicity == 1);
}

TEST_CASE("sturm counts and isolation") {
  Poly x = Poly::variable();
  Poly p = (x - Poly::constant(frac(1))) * (x - Poly::constant(frac(2))) *
           (x + Poly::constant(frac(1, 2)));
  CHECK(sturm_count(p, frac(-1), frac(3)) == 3);
  CHECK(sturm_count(p, frac(0), frac(3)) == 2);
  CHECK(sturm_count(p, frac(3), frac(4)) == 0);
  CHECK_THROWS_AS(sturm_count(p, frac(1), frac(3)), std::domain_error);

  auto ivs = isolate_roots(p);
  REQUIRE(ivs.size() == 3);
  for (size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);
  CHECK(ivs[0].contains(frac(-1, 2)));
  CHECK(ivs[1].contains(frac(1)));
  CHECK(ivs[2].contains(frac(2)));
  for (const auto& iv : ivs) {
    CHECK(p.eval(iv.lo) != frac(0));
    CHECK(p.eval(iv.hi) != frac(0));
  }

  // Root exactly at a bisection midpoint: roots of x^2 - 1/4 from bound 1.25.
  Poly q = x * x - Poly::constant(frac(1, 4));
  auto qi = isolate_roots(q);
  REQUIRE(qi.size() == 2);
  CHECK(qi[0].contains(frac(-1, 2)));
  CHECK(qi[1].contains(frac(1, 2)));

  CHECK(isolate_roots(x * x + Poly::constant(frac(1))).empty());

  auto one = isolate_roots(x);
  REQUIRE(one.size() == 1);
  CHECK(one[0].contains(frac(0)));
}

TEST_CASE("refine interval narrows and keeps the root") {
  Poly x = Poly::variable();
  Poly p = x * x - Poly::constant(frac(2));
  auto ivs = isolate_roots(p);
  REQUIRE(ivs.size() == 2);
  auto iv = refine_interval(p, ivs[1], frac(1, 1000000));
  CHECK(iv.width() <= frac(1, 1000000));
  // sqrt(2) = 1.41421356...
  CHECK(iv.lo < frac(1414214, 1000000));
  CHECK(iv.hi > frac(1414213, 1000000));

  // Rational root: refinement must keep endpoints off the root.
  Poly r = (x - Poly::constant(frac(1, 3))) * (x + Poly::constant(frac(4)));
  auto rv = isolate_roots(r);
  REQUIRE(rv.size() == 2);
  auto jv = refine_interval(r, rv[1], frac(1, 1000000000));
  CHECK(jv.contains(frac(1, 3)));
  CHECK(r.eval(jv.lo) != frac(0));
  CHECK(r.eval(jv.hi) != frac(0));
}

TEST_CASE("root refiner counts on half open intervals") {
  Poly x = Poly::variable();
  Poly p = x * (x - Poly::constant(frac(1))) * (x - Poly::constant(frac(2)));
  RootRefiner rr(p);
  CHECK(rr.count_half_open(frac(-1), frac(2)) == 3);   // 0, 1, 2 with 2 included
  CHECK(rr.count_half_open(frac(0), frac(2)) == 2);    // 1, 2
  CHECK(rr.count_half_open(frac(0), frac(1, 2)) == 0);
  CHECK(rr.sign_at(frac(3)) == 1);
  CHECK(rr.sign_at(frac(1)) == 0);
  CHECK(rr.sign_at(frac(-1)) == -1);
}

TEST_CASE("residual_mod") {
  Poly t = Poly::variable();
  Poly m = t - Poly::constant(frac(3));
  CHECK(residual_mod(t + Poly::constant(frac(1)), m) == Poly::constant(frac(4)));
  CHECK(residual_mod(m * m, m).is_zero());
  Poly quad{frac(5, 4), frac(-5, 2), frac(1)};
  // 4(1-t)^2 + 2(1-t) - 1 vanishes at both roots of t^2 - 5/2 t + 5/4.
  Poly s = Poly::constant(frac(1)) - t;
  CHECK(residual_mod(Poly{4} * s * s + Poly{2} * s - Poly::constant(frac(1)), quad).is_zero());
  CHECK_THROWS_AS(residual_mod(t, Poly::constant(frac(1))), std::invalid_argument);
}

TEST_CASE("charpoly against cofactor expansion") {
  RationalMatrix ident(2);
  ident.at(0, 0) = frac(1);
  ident.at(1, 1) = frac(1);
  CHECK(charpoly(ident) == Poly{1, -2, 1});

  RationalMatrix swap2(2);
  swap2.at(0, 1) = frac(1);
  swap2.at(1, 0) = frac(1);
  CHECK(charpoly(swap2) == Poly{-1, 0, 1});

  std::mt19937 rng(20240818);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 5;
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = frac(num(rng), den(rng));
    CHECK(charpoly(m) == oracle::charpoly_by_cofactors(m));
  }
}

TEST_CASE("rank") {
  RationalMatrix z(3);
  CHECK(rank(z) == 0);

  // Adjacency matrix of K_{2,3} has rank 2.
  RationalMatrix k23(5);
  for (int u : {0, 1})
    for (int v : {2, 3, 4}) {
      k23.at(u, v) = frac(1);
      k23.at(v, u) = frac(1);
    }
  CHECK(rank(k23) == 2);

  RationalMatrix ident(4);
  for (int i = 0; i < 4; ++i) ident.at(i, i) = frac(1);
  CHECK(rank(ident) == 4);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 4;
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = frac(num(rng));
    // Duplicate a row; rank must not exceed n - 1.
    for (int j = 0; j < n; ++j) m.at(n - 1, j) = m.at(0, j);
    CHECK(rank(m) <= n - 1);
  }
}

TEST_CASE("sturm count matches isolation count on random squarefree polys") {
  std::mt19937 rng(20240819);
  std::uniform_int_distribution<int> coeff(-6, 6);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int deg = 1 + trial % 6;
    std::vector<Rational> cs(deg + 1);
    for (auto& c : cs) c = frac(coeff(rng));
    if (cs.back() == frac(0)) cs.back() = frac(1);
    Poly p(cs);
    auto dec = squarefree(p);
    bool sf = true;
    for (const auto& part : dec.parts)
      if (part.multiplicity > 1) sf = false;
    if (!sf) continue;
    ++checked;
    Rational b = cauchy_root_bound(p);
    CHECK(static_cast<int>(isolate_roots(p).size()) == sturm_count(p, -b, b));
  }
  CHECK(checked > 200);
}
