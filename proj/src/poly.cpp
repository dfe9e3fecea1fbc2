#include "nlmult/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace nlmult {

namespace {

const Rational kZero = 0;

// Integer polynomial kernel used for gcd and Sturm work; same ascending
// layout, empty vector is the zero polynomial.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zderiv(const ZPoly& p) {
  ZPoly d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  ztrim(d);
  return d;
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// divide by the (positive) content; the sign pattern is preserved
ZPoly zprimitive(ZPoly p) {
  ztrim(p);
  if (p.empty()) return p;
  const Integer g = zcontent(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

// Clear denominators: primitive integer image of a rational polynomial,
// leading sign preserved.
ZPoly zfrom(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    z.push_back(Integer(c.get_num() * (l / c.get_den())));
  }
  return zprimitive(std::move(z));
}

Poly zto_monic(const ZPoly& z) {
  if (z.empty()) return Poly();
  std::vector<Rational> c;
  c.reserve(z.size());
  const Integer& lead = z.back();
  for (const auto& v : z) c.push_back(frac(v, lead));
  return Poly(std::move(c));
}

// Pseudo-remainder of a by b scaled by a positive multiple of lc(b)^k, so the
// sign pattern matches the true rational remainder (Sturm chains need this).
ZPoly zprem_positive(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  int da = static_cast<int>(a.size()) - 1;
  long performed = 0;
  while (da >= db && !a.empty()) {
    const Integer top = a.back();
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= db; ++k) a[da - db + k] -= top * b[k];
    ztrim(a);
    da = static_cast<int>(a.size()) - 1;
    ++performed;
  }
  if (lb < 0 && (performed % 2) != 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zprem_positive(a, b);
    r = zprimitive(std::move(r));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

// sign of p(x) for rational x = u/v via the scaled Horner value
// sum c_k u^k v^(d-k)
int zsign_at(const ZPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& u = x.get_num();
  const Integer& v = x.get_den();
  Integer acc = p.back();
  Integer vp = 1;
  for (int k = static_cast<int>(p.size()) - 2; k >= 0; --k) {
    vp *= v;
    acc = acc * u + p[k] * vp;
  }
  return sgn(acc);
}

}  // namespace

RootRefiner::RootRefiner(const Poly& p) {
  ZPoly s0 = zfrom(p);
  if (s0.empty()) throw std::invalid_argument("sturm chain of the zero polynomial");
  ZPoly s1 = zprimitive(zderiv(s0));
  seq_.push_back(std::move(s0));
  if (s1.empty()) return;
  seq_.push_back(std::move(s1));
  while (true) {
    const ZPoly& a = seq_[seq_.size() - 2];
    const ZPoly& b = seq_[seq_.size() - 1];
    ZPoly r = zprem_positive(a, b);
    if (r.empty()) break;
    r = zprimitive(std::move(r));
    for (auto& c : r) c = -c;
    seq_.push_back(std::move(r));
    if (seq_.back().size() == 1) break;
  }
}

int RootRefiner::variations(const Rational& x) const {
  int count = 0;
  int prev = 0;
  for (const auto& s : seq_) {
    const int sg = zsign_at(s, x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

int RootRefiner::sign_at(const Rational& x) const { return zsign_at(seq_.front(), x); }

int RootRefiner::count_half_open(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

IsolatingInterval RootRefiner::refine(IsolatingInterval iv, const Rational& max_width) const {
  if (sgn(max_width) <= 0) throw std::invalid_argument("width must be positive");
  const int sign_lo = sign_at(iv.lo);
  if (sign_lo == 0 || sign_at(iv.hi) == 0) {
    throw std::domain_error("interval endpoint is a root");
  }
  while (iv.hi - iv.lo > max_width) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sign_at(mid);
    if (s == 0) {
      // the root is exactly mid; pin a clean bracket of width <= max_width
      Rational delta = max_width / 4;
      while (sign_at(mid - delta) == 0 || sign_at(mid + delta) == 0) delta /= 2;
      iv.lo = mid - delta;
      iv.hi = mid + delta;
      return iv;
    }
    if (s == sign_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.push_back(frac(v));
  trim();
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& v) {
  Poly p;
  if (sgn(v) != 0) p.c_.push_back(v);
  return p;
}

Poly Poly::variable() { return monomial(1, 1); }

Poly Poly::monomial(int k, const Rational& v) {
  Poly p;
  if (sgn(v) != 0) {
    p.c_.assign(k + 1, kZero);
    p.c_[k] = v;
  }
  return p;
}

const Rational& Poly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    acc = acc * x + c_[k];
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * frac(static_cast<long>(k)));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
  return scaled(frac(1) / leading());
}

Poly Poly::scaled(const Rational& s) const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(v * s);
  return Poly(std::move(c));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc = constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(-v);
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), kZero);
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> r = num.c_;
  const int dd = den.degree();
  const int dn = num.degree();
  if (dn < dd) return {Poly(), num};
  std::vector<Rational> q(dn - dd + 1, kZero);
  const Rational& lead = den.leading();
  for (int k = dn; k >= dd; --k) {
    if (sgn(r[k]) == 0) continue;
    const Rational f = r[k] / lead;
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * den.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
  auto [q, r] = divrem(num, den);
  if (!r.is_zero()) throw std::logic_error("polynomial division left a remainder");
  return q;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1);
    if (k == 0 || !unit) {
      os << a.get_num().get_str();
      if (a.get_den() != 1) os << "/" << a.get_den().get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::vector<std::string> Poly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(to_fraction_string(c));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return zto_monic(zgcd(zfrom(a), zfrom(b)));
}

Poly SquarefreeDecomposition::reassemble() const {
  Poly acc = Poly::constant(unit);
  for (const auto& part : parts) acc = acc * part.factor.pow(part.multiplicity);
  return acc;
}

SquarefreeDecomposition squarefree(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  SquarefreeDecomposition out;
  out.unit = p.leading();
  if (p.degree() == 0) return out;
  Poly g = poly_gcd(p, p.derivative());
  Poly w = Poly::exact_div(p.monic(), g);
  int mult = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, g);
    Poly f = Poly::exact_div(w, y);
    if (f.degree() > 0) out.parts.push_back({f, mult});
    g = Poly::exact_div(g, y);
    w = std::move(y);
    ++mult;
  }
  return out;
}

Rational cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rational a = abs(p[k]) / lead;
    if (a > m) m = a;
  }
  return m + 1;
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  RootRefiner chain(p);
  if (chain.sign_at(lo) == 0 || chain.sign_at(hi) == 0) {
    throw std::domain_error("interval endpoint is a root; nudge the endpoint and retry");
  }
  // open interval equals half-open (lo, hi] when hi is not a root
  return chain.count_half_open(lo, hi);
}

namespace {

// Shrink to a sub-interval around a known rational root mid so that both new
// endpoints are clean and the interval still contains only that root.
void bracket_rational_root(const RootRefiner& chain, const Rational& mid, Rational& lo,
                           Rational& hi, const Rational& start_delta) {
  Rational delta = start_delta;
  while (true) {
    const Rational a = mid - delta;
    const Rational b = mid + delta;
    if (chain.sign_at(a) != 0 && chain.sign_at(b) != 0 &&
        chain.count_half_open(a, b) == 1) {
      lo = a;
      hi = b;
      return;
    }
    delta /= 2;
  }
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of zero");
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0) return out;
  RootRefiner chain(p);
  const Rational bound = cauchy_root_bound(p);
  struct Seg {
    Rational lo, hi;
    int count;
  };
  std::vector<Seg> work;
  {
    const Rational lo = -bound;
    const Rational hi = bound;
    const int total = chain.count_half_open(lo, hi);
    if (total > 0) work.push_back({lo, hi, total});
  }
  while (!work.empty()) {
    Seg seg = work.back();
    work.pop_back();
    if (seg.count == 1) {
      out.push_back({seg.lo, seg.hi});
      continue;
    }
    const Rational mid = (seg.lo + seg.hi) / 2;
    if (chain.sign_at(mid) == 0) {
      Rational a, b;
      bracket_rational_root(chain, mid, a, b, (seg.hi - seg.lo) / 8);
      const int left = chain.count_half_open(seg.lo, a);
      const int right = chain.count_half_open(b, seg.hi);
      if (left > 0) work.push_back({seg.lo, a, left});
      out.push_back({a, b});
      if (right > 0) work.push_back({b, seg.hi, right});
    } else {
      const int left = chain.count_half_open(seg.lo, mid);
      const int right = seg.count - left;
      if (left > 0) work.push_back({seg.lo, mid, left});
      if (right > 0) work.push_back({mid, seg.hi, right});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

IsolatingInterval refine_interval(const Poly& p, const IsolatingInterval& iv,
                                  const Rational& max_width) {
  return RootRefiner(p).refine(iv, max_width);
}

Poly residual_mod(const Poly& p, const Poly& minpoly) {
  if (minpoly.degree() < 1) {
    throw std::invalid_argument("modulus must have degree at least 1");
  }
  return Poly::divrem(p, minpoly).second;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Poly charpoly(const RationalMatrix& m) {
  const int n = m.size();
  std::vector<Rational> coeff(n + 1, kZero);
  coeff[n] = 1;
  RationalMatrix b = m;  // running power-sum matrix
  for (int j = 1; j <= n; ++j) {
    if (j > 1) {
      // b <- m * (b + a_{j-1} I)
      RationalMatrix t = b;
      const Rational& a = coeff[n - (j - 1)];
      for (int i = 0; i < n; ++i) t.at(i, i) += a;
      RationalMatrix nb(n);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
          Rational acc = 0;
          for (int l = 0; l < n; ++l) acc += m.at(i, l) * t.at(l, k);
          nb.at(i, k) = acc;
        }
      }
      b = std::move(nb);
    }
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += b.at(i, i);
    coeff[n - j] = -tr / frac(j);
  }
  return Poly(std::move(coeff));
}

int rank(const RationalMatrix& m) {
  const int n = m.size();
  // scale rows to integers; row scaling leaves the rank alone
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    }
    for (int j = 0; j < n; ++j) {
      a[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
    }
  }
  Integer prev = 1;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        Integer t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

}  // namespace nlmult
