#pragma once

#include <vector>

#include "nlmult/graph.hpp"
#include "nlmult/poly.hpp"

namespace nlmult {

// Exact eigenvalue data for the normalized Laplacian of a connected graph:
// the characteristic polynomial, its square-free decomposition (factor
// multiplicity == eigenvalue multiplicity), and isolating intervals for the
// real roots of every factor.
struct MultiplicityProfile {
  int n = 0;
  Poly charpoly;
  SquarefreeDecomposition decomposition;
  // roots[k] holds the isolating intervals for decomposition.parts[k]
  std::vector<std::vector<IsolatingInterval>> roots;

  // multiplicity of a given rational eigenvalue (0 when absent)
  int multiplicity_of(const Rational& value) const;
  // product of the square-free factors (all distinct eigenvalues, each once)
  Poly radical() const;
};

// One real eigenvalue whose multiplicity is exactly n-3.
struct ThetaDescriptor {
  Poly factor;  // the square-free factor this root belongs to
  IsolatingInterval interval;
  int multiplicity;         // always n-3
  bool is_rho1;             // largest eigenvalue overall
  bool is_rho_n_minus_1;    // smallest nonzero eigenvalue
  bool equals_one;          // the root is exactly 1
};

// Reference to one distinct eigenvalue inside a profile, in ascending order.
struct RootRef {
  int part;        // index into decomposition.parts
  int index;       // index into roots[part]
  IsolatingInterval interval;  // refined copy, pairwise disjoint across refs
  int multiplicity;
};

// Row-stochastic walk matrix D^-1 A. Throws when some vertex is isolated.
RationalMatrix walk_matrix(const Graph& g);

// Characteristic polynomial of I - D^-1 A (similar to the normalized
// Laplacian, so the spectrum is identical). Requires a connected graph.
Poly nl_charpoly(const Graph& g);

MultiplicityProfile multiplicity_profile(const Graph& g);

// All distinct eigenvalues in ascending order with disjoint intervals.
std::vector<RootRef> sorted_roots(const MultiplicityProfile& profile);

// Descriptors for every real root of the factor with multiplicity exactly
// n-3, ascending; empty when no factor has that multiplicity. Requires n >= 5.
std::vector<ThetaDescriptor> find_theta(const Graph& g);
std::vector<ThetaDescriptor> find_theta(const MultiplicityProfile& profile);

// Multiplicity of eigenvalue 1 via the adjacency rank over Q.
int eigenvalue_one_multiplicity(const Graph& g);

// True iff the smallest nonzero eigenvalue equals 1 exactly. Requires a
// connected graph with n >= 2.
bool rho_n_minus_1_is_one(const Graph& g);
bool rho_n_minus_1_is_one(const MultiplicityProfile& profile, int one_multiplicity);

// Jacobi rotations on the symmetric normalized Laplacian; ascending
// eigenvalues. Throws if the sweep limit is hit.
std::vector<double> float_spectrum(const Graph& g);

// Eigenvalue count, with multiplicity, in [bound, +inf).
int count_eigenvalues_at_least(const MultiplicityProfile& profile, const Rational& bound);

// Sign of (root - value) for one distinct eigenvalue: -1, 0 or +1, exact.
int compare_root_value(const MultiplicityProfile& profile, const RootRef& ref,
                       const Rational& value);

}  // namespace nlmult
