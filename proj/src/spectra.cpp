#include "nlmult/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace nlmult {

namespace {

Integer to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Integer z = static_cast<unsigned long>(u >> 64);
  z <<= 64;
  z += static_cast<unsigned long>(u & ~uint64_t{0});
  return neg ? Integer(-z) : z;
}

// Fraction-free determinant; destroys the buffer. Division stays exact.
template <typename T>
T bareiss_det(std::vector<T>& a, int n) {
  T prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (a[static_cast<size_t>(i) * n + k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(pivot) * n + j]);
      }
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T t = a[static_cast<size_t>(k) * n + k] * a[static_cast<size_t>(i) * n + j] -
              a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(k) * n + j];
        a[static_cast<size_t>(i) * n + j] = t / prev;
      }
      a[static_cast<size_t>(i) * n + k] = 0;
    }
    prev = a[static_cast<size_t>(k) * n + k];
  }
  const T& d = a[static_cast<size_t>(n - 1) * n + (n - 1)];
  return sign > 0 ? d : -d;
}

// True when every intermediate product in the fraction-free elimination of
// s*D + A fits __int128 for |s| <= smax (Hadamard bound on the minors).
bool int128_safe(const Graph& g, long smax) {
  const int n = g.order();
  std::vector<double> lognorm;
  lognorm.reserve(n);
  for (int u = 0; u < n; ++u) {
    const double diag = static_cast<double>(smax) * g.degree(u);
    const double norm2 = diag * diag + g.degree(u);
    lognorm.push_back(0.5 * std::log2(std::max(norm2, 1.0)));
  }
  std::sort(lognorm.rbegin(), lognorm.rend());
  double top = 0;
  for (int i = 0; i < n - 1 && i < static_cast<int>(lognorm.size()); ++i) top += lognorm[i];
  return 2.0 * top < 120.0;
}

Integer det_scaled_degree_plus_adj(const Graph& g, long s, bool use_int128) {
  const int n = g.order();
  if (use_int128) {
    std::vector<__int128> a(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
      a[static_cast<size_t>(u) * n + u] = static_cast<__int128>(s) * g.degree(u);
      uint64_t row = g.neighbors(u);
      while (row) {
        const int v = std::countr_zero(row);
        row &= row - 1;
        a[static_cast<size_t>(u) * n + v] = 1;
      }
    }
    return to_mpz(bareiss_det(a, n));
  }
  std::vector<Integer> a(static_cast<size_t>(n) * n, Integer(0));
  for (int u = 0; u < n; ++u) {
    a[static_cast<size_t>(u) * n + u] = Integer(s) * g.degree(u);
    uint64_t row = g.neighbors(u);
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      a[static_cast<size_t>(u) * n + v] = 1;
    }
  }
  return bareiss_det(a, n);
}

// Newton interpolation through (j, values[j]) for j = 0..m-1.
Poly newton_interpolate(const std::vector<Rational>& values) {
  const int m = static_cast<int>(values.size());
  std::vector<Rational> dd = values;
  for (int k = 1; k < m; ++k) {
    for (int j = m - 1; j >= k; --j) {
      dd[j] = (dd[j] - dd[j - 1]) / frac(k);
    }
  }
  Poly acc = Poly::constant(dd[m - 1]);
  for (int j = m - 2; j >= 0; --j) {
    acc = acc * Poly{-j, 1} + Poly::constant(dd[j]);
  }
  return acc;
}

void require_no_isolated_vertex(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 0) {
      throw std::invalid_argument("graph has an isolated vertex");
    }
  }
}

template <typename T>
int rank_impl(std::vector<T> a, int n) {
  T prev = 1;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if (a[static_cast<size_t>(i) * n + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<size_t>(r) * n + j], a[static_cast<size_t>(pivot) * n + j]);
      }
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        T t = a[static_cast<size_t>(r) * n + col] * a[static_cast<size_t>(i) * n + j] -
              a[static_cast<size_t>(i) * n + col] * a[static_cast<size_t>(r) * n + j];
        a[static_cast<size_t>(i) * n + j] = t / prev;
      }
      a[static_cast<size_t>(i) * n + col] = 0;
    }
    prev = a[static_cast<size_t>(r) * n + col];
    ++r;
  }
  return r;
}

int adjacency_rank(const Graph& g) {
  const int n = g.order();
  // 0/1 entries: minors stay below n^(n/2), comfortably int64 through n = 26
  if (n <= 26) {
    std::vector<int64_t> a(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
      uint64_t row = g.neighbors(u);
      while (row) {
        const int v = std::countr_zero(row);
        row &= row - 1;
        a[static_cast<size_t>(u) * n + v] = 1;
      }
    }
    return rank_impl(std::move(a), n);
  }
  std::vector<Integer> a(static_cast<size_t>(n) * n, Integer(0));
  for (int u = 0; u < n; ++u) {
    uint64_t row = g.neighbors(u);
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      a[static_cast<size_t>(u) * n + v] = 1;
    }
  }
  return rank_impl(std::move(a), n);
}

}  // namespace

RationalMatrix walk_matrix(const Graph& g) {
  require_no_isolated_vertex(g);
  const int n = g.order();
  RationalMatrix m(n);
  for (int u = 0; u < n; ++u) {
    const Rational inv = frac(1, g.degree(u));
    uint64_t row = g.neighbors(u);
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      m.at(u, v) = inv;
    }
  }
  return m;
}

Poly nl_charpoly(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  // single vertex: the normalized Laplacian is the 1x1 zero matrix
  if (g.order() == 1) return Poly::variable();
  require_no_isolated_vertex(g);
  const int n = g.order();
  // det(xI - (I - D^-1 A)) = det((x-1)D + A) / prod(deg); evaluate the integer
  // determinant at x = 0..n and interpolate.
  Integer degree_product = 1;
  for (int u = 0; u < n; ++u) degree_product *= g.degree(u);
  const bool fast = int128_safe(g, n);
  std::vector<Rational> values;
  values.reserve(n + 1);
  for (int x = 0; x <= n; ++x) {
    values.push_back(frac(det_scaled_degree_plus_adj(g, x - 1, fast), degree_product));
  }
  Poly p = newton_interpolate(values);
  if (p.degree() != n || p.leading() != 1 || sgn(p[0]) != 0) {
    throw std::logic_error("characteristic polynomial sanity check failed");
  }
  return p;
}

int MultiplicityProfile::multiplicity_of(const Rational& value) const {
  for (const auto& part : decomposition.parts) {
    if (sgn(part.factor.eval(value)) == 0) return part.multiplicity;
  }
  return 0;
}

Poly MultiplicityProfile::radical() const {
  Poly acc = Poly::constant(1);
  for (const auto& part : decomposition.parts) acc = acc * part.factor;
  return acc;
}

MultiplicityProfile multiplicity_profile(const Graph& g) {
  MultiplicityProfile profile;
  profile.n = g.order();
  profile.charpoly = nl_charpoly(g);
  profile.decomposition = squarefree(profile.charpoly);
  int root_total = 0;
  for (const auto& part : profile.decomposition.parts) {
    profile.roots.push_back(isolate_roots(part.factor));
    root_total += part.multiplicity * static_cast<int>(profile.roots.back().size());
  }
  if (root_total != profile.n) {
    throw std::logic_error("eigenvalue count does not match the order");
  }
  if (profile.multiplicity_of(0) != 1) {
    throw std::logic_error("eigenvalue 0 must be simple for a connected graph");
  }
  // independent route to the multiplicity of eigenvalue 1
  if (profile.multiplicity_of(1) != g.order() - adjacency_rank(g)) {
    throw std::logic_error("eigenvalue-1 multiplicity disagrees with the adjacency rank");
  }
  return profile;
}

std::vector<RootRef> sorted_roots(const MultiplicityProfile& profile) {
  std::vector<RootRef> refs;
  for (int k = 0; k < static_cast<int>(profile.decomposition.parts.size()); ++k) {
    const auto& part = profile.decomposition.parts[k];
    for (int i = 0; i < static_cast<int>(profile.roots[k].size()); ++i) {
      refs.push_back({k, i, profile.roots[k][i], part.multiplicity});
    }
  }
  std::vector<RootRefiner> refiners;
  refiners.reserve(profile.decomposition.parts.size());
  for (const auto& part : profile.decomposition.parts) refiners.emplace_back(part.factor);
  for (int round = 0;; ++round) {
    if (round > 200) throw std::logic_error("interval separation did not converge");
    std::sort(refs.begin(), refs.end(),
              [](const RootRef& a, const RootRef& b) { return a.interval.lo < b.interval.lo; });
    bool overlap = false;
    for (size_t i = 0; i + 1 < refs.size(); ++i) {
      RootRef& a = refs[i];
      RootRef& b = refs[i + 1];
      if (a.interval.hi <= b.interval.lo) continue;
      overlap = true;
      const Rational w = std::min(a.interval.width(), b.interval.width()) / 4;
      a.interval = refiners[a.part].refine(a.interval, w);
      b.interval = refiners[b.part].refine(b.interval, w);
    }
    if (!overlap) break;
  }
  return refs;
}

std::vector<ThetaDescriptor> find_theta(const Graph& g) {
  if (g.order() < 5) throw std::invalid_argument("need at least 5 vertices");
  return find_theta(multiplicity_profile(g));
}

std::vector<ThetaDescriptor> find_theta(const MultiplicityProfile& profile) {
  if (profile.n < 5) throw std::invalid_argument("need at least 5 vertices");
  const int target = profile.n - 3;
  int part = -1;
  for (int k = 0; k < static_cast<int>(profile.decomposition.parts.size()); ++k) {
    if (profile.decomposition.parts[k].multiplicity == target) {
      part = k;
      break;
    }
  }
  std::vector<ThetaDescriptor> out;
  if (part < 0) return out;
  const Poly& factor = profile.decomposition.parts[part].factor;
  const bool one_is_root = sgn(factor.eval(1)) == 0;
  const auto refs = sorted_roots(profile);
  if (refs.empty() || !refs.front().interval.contains(0)) {
    throw std::logic_error("smallest eigenvalue is not 0");
  }
  for (size_t pos = 0; pos < refs.size(); ++pos) {
    const RootRef& ref = refs[pos];
    if (ref.part != part) continue;
    ThetaDescriptor d;
    d.factor = factor;
    d.interval = ref.interval;
    d.multiplicity = target;
    d.is_rho1 = (pos + 1 == refs.size());
    d.is_rho_n_minus_1 = (pos == 1);
    d.equals_one = one_is_root && profile.roots[ref.part][ref.index].contains(1);
    out.push_back(std::move(d));
  }
  return out;
}

int eigenvalue_one_multiplicity(const Graph& g) {
  return g.order() - adjacency_rank(g);
}

bool rho_n_minus_1_is_one(const MultiplicityProfile& profile, int one_multiplicity) {
  // no eigenvalue strictly between 0 and 1, and 1 present
  Poly s = Poly::exact_div(profile.radical(), Poly::variable());
  if (sgn(s.eval(1)) == 0) {
    s = Poly::exact_div(s, Poly{-1, 1});
  }
  if (s.degree() == 0) return one_multiplicity >= 1;
  return sturm_count(s, 0, 1) == 0 && one_multiplicity >= 1;
}

bool rho_n_minus_1_is_one(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("need at least 2 vertices");
  return rho_n_minus_1_is_one(multiplicity_profile(g), eigenvalue_one_multiplicity(g));
}

std::vector<double> float_spectrum(const Graph& g) {
  require_no_isolated_vertex(g);
  const int n = g.order();
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    a[static_cast<size_t>(u) * n + u] = 1.0;
    uint64_t row = g.neighbors(u);
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      a[static_cast<size_t>(u) * n + v] =
          -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
    }
  }
  auto entry = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  constexpr double kTol = 1e-12;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += 2.0 * entry(p, q) * entry(p, q);
    }
    if (std::sqrt(off) < kTol) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = entry(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = entry(p, q);
        if (apq == 0.0) continue;
        const double theta = (entry(q, q) - entry(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = entry(p, p);
        const double aqq = entry(q, q);
        entry(p, p) = app - t * apq;
        entry(q, q) = aqq + t * apq;
        entry(p, q) = 0.0;
        entry(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = entry(r, p);
          const double arq = entry(r, q);
          entry(r, p) = c * arp - s * arq;
          entry(p, r) = entry(r, p);
          entry(r, q) = s * arp + c * arq;
          entry(q, r) = entry(r, q);
        }
      }
    }
  }
  throw std::runtime_error("jacobi iteration did not converge");
}

int count_eigenvalues_at_least(const MultiplicityProfile& profile, const Rational& bound) {
  int count = 0;
  for (int k = 0; k < static_cast<int>(profile.decomposition.parts.size()); ++k) {
    const auto& part = profile.decomposition.parts[k];
    const bool bound_is_root = sgn(part.factor.eval(bound)) == 0;
    RootRefiner refiner(part.factor);
    for (const auto& iv : profile.roots[k]) {
      if (iv.lo >= bound) {
        count += part.multiplicity;
        continue;
      }
      if (iv.hi <= bound) continue;
      if (bound_is_root) {
        // the unique root inside is the bound itself
        count += part.multiplicity;
        continue;
      }
      IsolatingInterval c = iv;
      while (c.contains(bound)) c = refiner.refine(c, c.width() / 4);
      if (c.lo >= bound) count += part.multiplicity;
    }
  }
  return count;
}

int compare_root_value(const MultiplicityProfile& profile, const RootRef& ref,
                       const Rational& value) {
  const Poly& factor = profile.decomposition.parts[ref.part].factor;
  IsolatingInterval iv = ref.interval;
  if (sgn(factor.eval(value)) == 0) {
    // value is a root of the factor; it is the interval's root iff inside
    if (iv.contains(value)) return 0;
    return value <= iv.lo ? 1 : -1;
  }
  RootRefiner refiner(factor);
  while (iv.contains(value)) iv = refiner.refine(iv, iv.width() / 4);
  return value <= iv.lo ? 1 : -1;
}

}  // namespace nlmult
