#include "trop/tropical.hpp"

#include <algorithm>
#include <set>

namespace trop {

namespace {

bool zvec_lex_less(const ZVec& a, const ZVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

TropicalPolynomial::TropicalPolynomial(int n,
                                       std::vector<std::pair<ZVec, Rat>> terms)
    : n_(n), terms_(std::move(terms)) {
  if (terms_.empty()) throw Error("tropical polynomial needs at least one term");
  for (const auto& [nu, w] : terms_)
    if (static_cast<int>(nu.size()) != n_) throw DimensionMismatch();
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return zvec_lex_less(a.first, b.first); });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].first == terms_[i - 1].first)
      throw Error("duplicate exponent in tropical polynomial");
}

std::vector<ZVec> TropicalPolynomial::support() const {
  std::vector<ZVec> out;
  for (const auto& [nu, w] : terms_) out.push_back(nu);
  return out;
}

Rat weight(const TropicalPolynomial& f, const QVec& v) {
  bool first = true;
  Rat best;
  for (const auto& [nu, w] : f.terms()) {
    Rat val = w + dot(nu, v);
    if (first || val < best) {
      best = val;
      first = false;
    }
  }
  return best;
}

std::vector<ZVec> initial_support(const TropicalPolynomial& f, const QVec& v) {
  Rat best = weight(f, v);
  std::vector<ZVec> out;
  for (const auto& [nu, w] : f.terms())
    if (w + dot(nu, v) == best) out.push_back(nu);
  return out;
}

std::vector<ZVec> stratum_survivors(const TropicalPolynomial& f,
                                    const Polyhedron& tau) {
  auto gens = tau.cone_generators();
  std::vector<ZVec> survivors = f.support();
  for (const auto& g : gens) {
    QVec gq = to_qvec(g);
    bool first = true;
    Rat best;
    for (const auto& nu : f.support()) {
      Rat val = dot(nu, gq);
      if (first || val < best) {
        best = val;
        first = false;
      }
    }
    std::vector<ZVec> next;
    for (const auto& nu : survivors)
      if (dot(nu, gq) == best) next.push_back(nu);
    survivors = std::move(next);
  }
  // compatibility: tau lies inside a Newton-fan cone iff the joint survivors
  // are exactly the minimizers at an interior point of tau
  if (!gens.empty() && !survivors.empty()) {
    QVec interior(f.ambient_dim(), Rat(0));
    for (const auto& g : gens) interior = add(interior, to_qvec(g));
    bool first = true;
    Rat best;
    for (const auto& nu : f.support()) {
      Rat val = dot(nu, interior);
      if (first || val < best) {
        best = val;
        first = false;
      }
    }
    std::size_t count = 0;
    for (const auto& nu : f.support())
      if (dot(nu, interior) == best) ++count;
    if (count != survivors.size()) survivors.clear();
  }
  return survivors;
}

TropicalPolynomial stratum_polynomial(const TropicalPolynomial& f,
                                      const Polyhedron& tau) {
  auto survivors = stratum_survivors(f, tau);
  if (survivors.empty()) throw FanNotCompatible();
  const ZVec& nu0 = survivors.front();  // support() is lex sorted
  std::map<std::string, Rat> weight_of;
  for (const auto& [nu, w] : f.terms()) {
    std::string k;
    for (const auto& c : nu) k += c.get_str() + ",";
    weight_of.emplace(k, w);
  }
  // distinct survivors may project to the same quotient exponent; the
  // induced weight of a merged monomial is the minimum
  std::map<std::string, std::pair<ZVec, Rat>> merged;
  for (const auto& nu : survivors) {
    ZVec diff(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) diff[i] = nu[i] - nu0[i];
    std::string k;
    for (const auto& c : nu) k += c.get_str() + ",";
    ZVec proj = project_dual(tau, diff);
    const Rat& w = weight_of.at(k);
    std::string pk;
    for (const auto& c : proj) pk += c.get_str() + ",";
    auto it = merged.find(pk);
    if (it == merged.end())
      merged.emplace(pk, std::make_pair(std::move(proj), w));
    else if (w < it->second.second)
      it->second.second = w;
  }
  std::vector<std::pair<ZVec, Rat>> terms;
  for (auto& [k, t] : merged) terms.push_back(std::move(t));
  return TropicalPolynomial(f.ambient_dim() - tau.dim(), std::move(terms));
}

std::optional<Rat> weight(const TropicalPolynomial& f, const ExtendedPoint& v) {
  if (v.is_ordinary()) return weight(f, v.coset);
  auto survivors = stratum_survivors(f, v.stratum);
  if (survivors.empty()) return std::nullopt;
  return weight(stratum_polynomial(f, v.stratum), v.coset);
}

std::vector<ZVec> initial_support(const TropicalPolynomial& f,
                                  const ExtendedPoint& v) {
  if (v.is_ordinary()) return initial_support(f, v.coset);
  auto survivors = stratum_survivors(f, v.stratum);
  if (survivors.empty()) return {};
  TropicalPolynomial g = stratum_polynomial(f, v.stratum);
  // match quotient minimizers back to original exponents
  const ZVec& nu0 = survivors.front();
  auto minimizers = initial_support(g, v.coset);
  std::set<std::string> min_keys;
  for (const auto& m : minimizers) {
    std::string k;
    for (const auto& c : m) k += c.get_str() + ",";
    min_keys.insert(k);
  }
  std::vector<ZVec> out;
  for (const auto& nu : survivors) {
    ZVec diff(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) diff[i] = nu[i] - nu0[i];
    ZVec proj = project_dual(v.stratum, diff);
    std::string k;
    for (const auto& c : proj) k += c.get_str() + ",";
    if (min_keys.count(k)) out.push_back(nu);
  }
  return out;
}

TropicalHypersurface hypersurface(const TropicalPolynomial& f) {
  const int n = f.ambient_dim();
  TropicalHypersurface out{n, PolyhedralComplex(n), {}, std::nullopt};
  std::vector<QVec> supp_pts;
  for (const auto& nu : f.support()) supp_pts.push_back(to_qvec(nu));
  out.newton_polytope = Polyhedron::from_points(supp_pts);
  const auto& terms = f.terms();
  const int m = static_cast<int>(terms.size());
  if (m < 2) return out;

  std::set<std::string> cell_keys;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> tset;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) tset.push_back(i);
    // gamma_T: ties on T, at most elsewhere
    const auto& [nu0, w0] = terms[tset[0]];
    std::vector<LinConstraint> cons;
    for (int i : tset) {
      if (i == tset[0]) continue;
      const auto& [nu, w] = terms[i];
      QVec c(n);
      for (int j = 0; j < n; ++j) c[j] = Rat(nu[j] - nu0[j]);
      cons.push_back({std::move(c), w0 - w, true});
    }
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) continue;
      const auto& [mu, wmu] = terms[i];
      QVec c(n);
      for (int j = 0; j < n; ++j) c[j] = Rat(nu0[j] - mu[j]);
      cons.push_back({std::move(c), wmu - w0, false});
    }
    auto cell = Polyhedron::try_from_halfspaces(n, cons);
    if (!cell) continue;
    // genuine cell iff T is exactly the minimizing set at a relative
    // interior point
    QVec probe = cell->relative_interior_point();
    if (static_cast<int>(initial_support(f, probe).size()) !=
        static_cast<int>(tset.size()))
      continue;
    if (!cell_keys.insert(cell->canonical_key()).second) continue;
    std::vector<ZVec> dual_support;
    std::vector<QVec> dual_pts;
    for (int i : tset) {
      dual_support.push_back(terms[i].first);
      dual_pts.push_back(to_qvec(terms[i].first));
    }
    Polyhedron dual = Polyhedron::from_points(dual_pts);
    out.complex.add_cell(*cell);
    out.cells.push_back({std::move(*cell), std::move(dual_support), std::move(dual)});
  }
  return out;
}

Fan newton_fan(const TropicalPolynomial& f) {
  std::vector<QVec> supp;
  for (const auto& nu : f.support()) supp.push_back(to_qvec(nu));
  return normal_fan(Polyhedron::from_points(supp));
}

TropicalPolynomial translate(const TropicalPolynomial& f, const QVec& t) {
  std::vector<std::pair<ZVec, Rat>> terms;
  for (const auto& [nu, w] : f.terms()) terms.push_back({nu, w - dot(nu, t)});
  return TropicalPolynomial(f.ambient_dim(), std::move(terms));
}

std::vector<std::pair<Polyhedron, TropicalHypersurface>> stratified_closure(
    const TropicalPolynomial& f, const Fan& delta) {
  if (delta.ambient_dim() != f.ambient_dim()) throw DimensionMismatch();
  std::vector<std::pair<Polyhedron, TropicalHypersurface>> out;
  for (const auto& tau : delta.cones()) {
    TropicalPolynomial g = stratum_polynomial(f, tau);  // FanNotCompatible
    out.push_back({tau, hypersurface(g)});
  }
  return out;
}

}  // namespace trop
