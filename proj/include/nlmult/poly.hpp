#pragma once

#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlmult/rational.hpp"

namespace nlmult {

// Univariate polynomial over Q, coefficients ascending by degree.
// Invariant: no trailing zero coefficient; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& v);
  static Poly variable();
  static Poly monomial(int k, const Rational& v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // coefficient of x^k, zero past the degree
  const Rational& operator[](int k) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(const Rational& s) const;
  Poly pow(int e) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

  // quotient and remainder; den must be nonzero
  static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);
  // division that must leave no remainder
  static Poly exact_div(const Poly& num, const Poly& den);

  std::string to_string(const std::string& var = "x") const;
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// monic gcd (primitive integer remainder sequence internally)
Poly poly_gcd(const Poly& a, const Poly& b);

struct SquarefreePart {
  Poly factor;  // monic, square-free
  int multiplicity;
};

// unit * prod factor_i^{mult_i} == p; factors pairwise coprime
struct SquarefreeDecomposition {
  Rational unit;
  std::vector<SquarefreePart> parts;
  Poly reassemble() const;
};

SquarefreeDecomposition squarefree(const Poly& p);

// Exactly one real root of the target polynomial lies in (lo, hi); the
// endpoints are never roots, so the signs at lo and hi differ.
struct IsolatingInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

// 1 + max|c_i| / |lead|; every real root lies in (-B, B)
Rational cauchy_root_bound(const Poly& p);

// Sturm chain of a square-free polynomial, built once and queried many times.
class RootRefiner {
 public:
  explicit RootRefiner(const Poly& p);

  int sign_at(const Rational& x) const;
  // distinct roots in (lo, hi]; requires p(lo) != 0
  int count_half_open(const Rational& lo, const Rational& hi) const;
  // bisect iv until hi - lo <= max_width, keeping the isolation invariant
  IsolatingInterval refine(IsolatingInterval iv, const Rational& max_width) const;

 private:
  int variations(const Rational& x) const;
  std::vector<std::vector<Integer>> seq_;
};

// Number of distinct real roots of square-free p in the open interval
// (lo, hi). Throws std::domain_error when an endpoint is a root; nudge the
// endpoint and retry.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

// p square-free with deg >= 1 (constants give an empty list); intervals are
// returned sorted and pairwise disjoint
std::vector<IsolatingInterval> isolate_roots(const Poly& p);

// bisect iv until hi - lo <= max_width, keeping the isolation invariant
IsolatingInterval refine_interval(const Poly& p, const IsolatingInterval& iv,
                                  const Rational& max_width);

// remainder of p modulo minpoly (minpoly nonzero, degree >= 1)
Poly residual_mod(const Poly& p, const Poly& minpoly);

// Dense square matrix over Q.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
  }
  static RationalMatrix identity(int n);

  int size() const { return n_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<Rational> a_;
};

// monic det(xI - m) by the trace recurrence
Poly charpoly(const RationalMatrix& m);

// rank over Q, fraction-free elimination
int rank(const RationalMatrix& m);

}  // namespace nlmult
