#include "trop/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

UPoly upoly_trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return upoly_trim(std::move(out));
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return upoly_trim(std::move(out));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return upoly_trim(std::move(out));
}

UPoly upoly_divexact(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("inexact polynomial division");
  UPoly rem = a;
  UPoly quot(a.size() - b.size() + 1, Rat(0));
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Rat q = rem[k + b.size() - 1] / b.back();
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw Error("inexact polynomial division");
  return upoly_trim(std::move(quot));
}

namespace {

UPoly upoly_pow(const UPoly& a, long e) {
  UPoly out{Rat(1)};
  for (long i = 0; i < e; ++i) out = upoly_mul(out, a);
  return out;
}

long int_ord(Int a, const Int& p) {
  long k = 0;
  while (a % p == 0) {
    a /= p;
    ++k;
  }
  return k;
}

}  // namespace

Rat padic_val(const Rat& q, const Int& p) {
  if (q == 0) throw Error("valuation of zero");
  return Rat(int_ord(q.get_num(), p) - int_ord(q.get_den(), p));
}

FieldElem fe(const Rat& q) {
  FieldElem e;
  if (q != 0) e.num = {q};
  return e;
}

FieldElem fe_parameter() {
  FieldElem e;
  e.num = {Rat(0), Rat(1)};
  return e;
}

FieldElem fe_add(const FieldElem& a, const FieldElem& b) {
  return {upoly_add(upoly_mul(a.num, b.den), upoly_mul(b.num, a.den)),
          upoly_mul(a.den, b.den)};
}

FieldElem fe_sub(const FieldElem& a, const FieldElem& b) {
  return {upoly_sub(upoly_mul(a.num, b.den), upoly_mul(b.num, a.den)),
          upoly_mul(a.den, b.den)};
}

FieldElem fe_mul(const FieldElem& a, const FieldElem& b) {
  return {upoly_mul(a.num, b.num), upoly_mul(a.den, b.den)};
}

FieldElem fe_div(const FieldElem& a, const FieldElem& b) {
  if (b.is_zero()) throw Error("division by zero coefficient");
  return {upoly_mul(a.num, b.den), upoly_mul(a.den, b.num)};
}

LiteralPolynomial make_literal(int n, CoeffModel model, Int prime,
                               std::vector<LiteralTerm> terms) {
  if (terms.empty()) throw Error("literal polynomial needs a term");
  std::set<std::string> seen;
  for (const auto& t : terms) {
    if (static_cast<int>(t.exponent.size()) != n) throw DimensionMismatch();
    if (t.coeff.is_zero()) throw Error("zero coefficient in literal polynomial");
    if (model == CoeffModel::PAdic &&
        (t.coeff.num.size() > 1 || t.coeff.den.size() > 1))
      throw Error("p-adic coefficients must be rational constants");
    std::string k;
    for (const auto& e : t.exponent) k += e.get_str() + ",";
    if (!seen.insert(k).second) throw Error("duplicate exponent");
  }
  if (model == CoeffModel::PAdic && prime < 2) throw Error("invalid prime");
  return {n, model, std::move(prime), std::move(terms)};
}

Rat coeff_valuation(const LiteralPolynomial& f, const FieldElem& c) {
  if (c.is_zero()) throw Error("valuation of zero");
  if (f.model == CoeffModel::PAdic) return padic_val(c.num[0] / c.den[0], f.prime);
  auto ord0 = [](const UPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) return static_cast<long>(i);
    throw Error("valuation of zero");
  };
  return Rat(ord0(c.num) - ord0(c.den));
}

TropicalPolynomial tropicalize(const LiteralPolynomial& f) {
  std::vector<std::pair<ZVec, Rat>> terms;
  for (const auto& t : f.terms)
    terms.push_back({t.exponent, coeff_valuation(f, t.coeff)});
  return TropicalPolynomial(f.n, std::move(terms));
}

std::vector<std::pair<Rat, Int>> np1d(const TropicalPolynomial& f) {
  if (f.ambient_dim() != 1) throw DimensionMismatch();
  std::vector<std::pair<Rat, Rat>> pts;  // (exponent, weight), sorted
  for (const auto& [nu, w] : f.terms()) pts.push_back({Rat(nu[0]), w});

  std::vector<std::pair<Rat, Rat>> hull;
  auto cross = [](const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b,
                  const std::pair<Rat, Rat>& c) -> Rat {
    return (b.first - a.first) * (c.second - a.second) -
           (b.second - a.second) * (c.first - a.first);
  };
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }

  std::vector<std::pair<Rat, Int>> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Rat dx = hull[i + 1].first - hull[i].first;
    Rat slope = (hull[i + 1].second - hull[i].second) / dx;
    out.push_back({-slope, dx.get_num()});
  }
  return out;
}

KnownRootInstance known_root_instance(const std::vector<Rat>& valuations,
                                      const Int& p) {
  Int lcm(1);
  for (const auto& v : valuations) {
    Int d = v.get_den();
    lcm = lcm / gcd(lcm, d) * d;
  }
  if (lcm > 6) throw UnrealizableValuation();
  const long L = lcm.get_si();

  std::map<Rat, long> next_unit;
  UPoly f{Rat(1)};
  std::map<Rat, Int> counts;
  for (const auto& v : valuations) {
    Rat scaled = v * Rat(lcm);
    long& u = next_unit[v];
    do {
      ++u;
    } while (Int(u) % p == 0);
    Rat t = Rat(u);
    Int e = scaled.get_num();
    if (e >= 0)
      for (Int i = 0; i < e; ++i) t *= p;
    else
      for (Int i = 0; i > e; --i) t /= p;
    UPoly factor(L + 1, Rat(0));
    factor[0] = -t;
    factor[L] = Rat(1);
    f = upoly_mul(f, factor);
    counts[v] += L;
  }

  std::vector<LiteralTerm> terms;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] != 0) terms.push_back({ZVec{Int(static_cast<long>(k))}, fe(f[k])});

  KnownRootInstance out;
  out.f = make_literal(1, CoeffModel::PAdic, p, std::move(terms));
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    out.expected.push_back({it->first, it->second});
  return out;
}

namespace {

// bivariate polynomial as a polynomial in one main variable with UPoly
// coefficients in the other
using BPoly = std::vector<UPoly>;

BPoly trim_bpoly(BPoly b) {
  while (!b.empty() && b.back().empty()) b.pop_back();
  return b;
}

using Terms2 = std::map<std::pair<long, long>, Rat>;  // (x-exp, y-exp)

Terms2 normalized_terms(const LiteralPolynomial& f) {
  Terms2 t;
  long minx = 0, miny = 0;
  bool first = true;
  for (const auto& term : f.terms) {
    long a = term.exponent[0].get_si(), b = term.exponent[1].get_si();
    if (first || a < minx) minx = a;
    if (first || b < miny) miny = b;
    first = false;
  }
  for (const auto& term : f.terms)
    t[{term.exponent[0].get_si() - minx, term.exponent[1].get_si() - miny}] =
        term.coeff.num[0] / term.coeff.den[0];
  return t;
}

// polynomial in `main` (0 = x, 1 = y) with coefficients in the other
// variable; common monomial factors are stripped since only torus zeros count
BPoly as_bpoly(const Terms2& t, int main) {
  long minm = 0, minc = 0;
  bool first = true;
  for (const auto& [e, c] : t) {
    long dm = main == 0 ? e.first : e.second;
    long dc = main == 0 ? e.second : e.first;
    if (first || dm < minm) minm = dm;
    if (first || dc < minc) minc = dc;
    first = false;
  }
  BPoly b;
  for (const auto& [e, c] : t) {
    long dm = (main == 0 ? e.first : e.second) - minm;
    long dc = (main == 0 ? e.second : e.first) - minc;
    if (static_cast<long>(b.size()) <= dm) b.resize(dm + 1);
    if (static_cast<long>(b[dm].size()) <= dc) b[dm].resize(dc + 1, Rat(0));
    b[dm][dc] += c;
  }
  for (auto& c : b) c = upoly_trim(std::move(c));
  return trim_bpoly(std::move(b));
}

UPoly bareiss_det(std::vector<std::vector<UPoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return {Rat(1)};
  UPoly prev{Rat(1)};
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m[i][k].empty()) {
        piv = i;
        break;
      }
    if (piv < 0) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = upoly_divexact(
            upoly_sub(upoly_mul(m[i][j], m[k][k]), upoly_mul(m[i][k], m[k][j])),
            prev);
    prev = m[k][k];
  }
  UPoly d = m[n - 1][n - 1];
  return sign < 0 ? upoly_sub({}, d) : d;
}

/// Resultant with respect to the main variable; a UPoly in the coefficient
/// variable.  Zero polynomial inputs yield the zero resultant.
UPoly sylvester_resultant(const BPoly& a, const BPoly& b) {
  if (a.empty() || b.empty()) return {};
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  if (da == 0) return upoly_pow(a[0], db);
  if (db == 0) return upoly_pow(b[0], da);
  const int n = da + db;
  std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
  return bareiss_det(std::move(m));
}

Terms2 product_twist(const Terms2& t) {
  long shift = 0;
  for (const auto& [e, c] : t) shift = std::max(shift, e.first - e.second);
  Terms2 out;
  for (const auto& [e, c] : t) out[{e.first, e.second - e.first + shift}] += c;
  return out;
}

Terms2 ratio_twist(const Terms2& t) {
  Terms2 out;
  for (const auto& [e, c] : t) out[{e.first, e.first + e.second}] += c;
  return out;
}

/// Number of nonzero roots of the eliminant with the given valuation,
/// counted with multiplicity.  Identically zero eliminants signal a
/// positive-dimensional intersection.
Int marginal_count(const UPoly& res, const Rat& target, const Int& p) {
  if (res.empty()) throw NotFinite();
  std::vector<std::pair<ZVec, Rat>> terms;
  for (std::size_t k = 0; k < res.size(); ++k)
    if (res[k] != 0)
      terms.push_back({ZVec{Int(static_cast<long>(k))}, padic_val(res[k], p)});
  if (terms.size() < 2) return 0;
  for (const auto& [v, len] : np1d(TropicalPolynomial(1, terms)))
    if (v == target) return len;
  return 0;
}

}  // namespace

Int resultant_count2(const LiteralPolynomial& f1, const LiteralPolynomial& f2,
                     const QVec& v) {
  if (f1.n != 2 || f2.n != 2 || v.size() != 2) throw DimensionMismatch();
  if (f1.model != CoeffModel::PAdic || f2.model != CoeffModel::PAdic ||
      f1.prime != f2.prime)
    throw Error("resultant counting needs a common p-adic model");
  const Int& p = f1.prime;

  Terms2 t1 = normalized_terms(f1), t2 = normalized_terms(f2);
  UPoly res_y = sylvester_resultant(as_bpoly(t1, 1), as_bpoly(t2, 1));
  UPoly res_x = sylvester_resultant(as_bpoly(t1, 0), as_bpoly(t2, 0));
  UPoly res_prod = sylvester_resultant(as_bpoly(product_twist(t1), 1),
                                       as_bpoly(product_twist(t2), 1));
  UPoly res_ratio = sylvester_resultant(as_bpoly(ratio_twist(t1), 1),
                                        as_bpoly(ratio_twist(t2), 1));

  Int m1 = marginal_count(res_y, v[0], p);
  Int m2 = marginal_count(res_x, v[1], p);
  Int mp = marginal_count(res_prod, v[0] + v[1], p);
  Int mr = marginal_count(res_ratio, v[0] - v[1], p);

  if (m1 == 0 || m2 == 0 || mp == 0 || mr == 0) return 0;
  if (m1 == m2 && m2 == mp && mp == mr) return m1;
  throw PairingAmbiguous();
}

LinearSolveResult linear_solve_trop(const LiteralPolynomial& f1,
                                    const LiteralPolynomial& f2,
                                    const Fan& delta) {
  if (f1.n != 2 || f2.n != 2 || delta.ambient_dim() != 2)
    throw DimensionMismatch();
  if (f1.model != f2.model || f1.prime != f2.prime)
    throw Error("mismatched coefficient models");

  auto affine = [](const LiteralPolynomial& f) {
    FieldElem a, b, c;
    for (const auto& t : f.terms) {
      long ex = t.exponent[0].get_si(), ey = t.exponent[1].get_si();
      if (ex == 1 && ey == 0)
        a = t.coeff;
      else if (ex == 0 && ey == 1)
        b = t.coeff;
      else if (ex == 0 && ey == 0)
        c = t.coeff;
      else
        throw Error("system is not affine");
    }
    return std::array<FieldElem, 3>{a, b, c};
  };
  auto [a1, b1, c1] = affine(f1);
  auto [a2, b2, c2] = affine(f2);

  FieldElem d = fe_sub(fe_mul(a1, b2), fe_mul(a2, b1));
  FieldElem m13 = fe_sub(fe_mul(a1, c2), fe_mul(a2, c1));
  FieldElem m23 = fe_sub(fe_mul(b1, c2), fe_mul(b2, c1));
  if (d.is_zero() && m13.is_zero() && m23.is_zero()) throw DegenerateSystem();

  auto val_or_inf = [&](const FieldElem& e) -> std::optional<Rat> {
    if (e.is_zero()) return std::nullopt;
    return coeff_valuation(f1, e);
  };

  if (!d.is_zero()) {
    FieldElem xi = fe_div(fe_sub(fe_mul(c2, b1), fe_mul(c1, b2)), d);
    FieldElem eta = fe_div(fe_sub(fe_mul(a2, c1), fe_mul(a1, c2)), d);
    return {trop_point({val_or_inf(xi), val_or_inf(eta)}, delta), Int(1)};
  }

  // parallel distinct lines: the projective solution sits on the stratum of
  // the common escape direction
  if (a1.is_zero() || b1.is_zero())
    throw Error("parallel axis-aligned configuration is out of scope");
  Polyhedron tau = Polyhedron::cone_from_generators(2, {ZVec{Int(-1), Int(-1)}});
  if (!delta.contains(tau)) throw StratumNotInFan();
  Rat drift = coeff_valuation(f1, b1) - coeff_valuation(f1, a1);
  QVec coset = project_quotient(tau, QVec{drift, Rat(0)});
  return {ExtendedPoint{std::move(tau), std::move(coset)}, Int(1)};
}

}  // namespace trop
