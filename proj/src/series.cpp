#include "trop/series.hpp"

#include <algorithm>
#include <set>

namespace trop {

TruncatedSeries make_series(Polyhedron domain,
                            std::vector<std::pair<ZVec, Rat>> terms,
                            Rat tail_bound) {
  if (!domain.pointed()) throw NotPointed();
  const int n = domain.ambient_dim();
  const Polyhedron recession = domain.recession_cone();
  std::set<std::string> seen;
  for (const auto& [nu, w] : terms) {
    if (static_cast<int>(nu.size()) != n) throw DimensionMismatch();
    std::string k;
    for (const auto& c : nu) k += c.get_str() + ",";
    if (!seen.insert(k).second) throw Error("duplicate exponent in series");
    for (const auto& r : recession.rays())
      if (dot(nu, r) < 0)
        throw Error("series term diverges along a recession direction");
  }
  if (terms.empty()) throw Error("series needs at least one retained term");
  return {std::move(domain), std::move(terms), std::move(tail_bound)};
}

namespace {

// sup over P of m(v) = min over retained terms of w + <nu, v>; the level is
// encoded as an extra LP variable t <= each affine term.
LPResult retained_min_sup(const TruncatedSeries& f) {
  const int n = f.domain.ambient_dim();
  std::vector<LinConstraint> cons;
  for (const auto& c : f.domain.lp_constraints()) {
    QVec cc = c.coeffs;
    cc.push_back(Rat(0));
    cons.push_back({std::move(cc), c.rhs, c.equality});
  }
  for (const auto& [nu, w] : f.terms) {
    QVec cc(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) cc[i] = Rat(-nu[i]);
    cc[n] = 1;  // t - <nu, v> <= w
    cons.push_back({std::move(cc), w, false});
  }
  QVec obj(n + 1, Rat(0));
  obj[n] = 1;
  return lp_maximize(cons, obj, n + 1);
}

}  // namespace

std::vector<std::pair<ZVec, Rat>> vertices_on_P(const TruncatedSeries& f) {
  LPResult sup = retained_min_sup(f);
  if (sup.status != LPStatus::Optimal || sup.value >= f.tail_bound)
    throw CertificateInsufficient();

  const int n = f.domain.ambient_dim();
  std::vector<std::pair<ZVec, Rat>> out;
  for (const auto& [nu, w] : f.terms) {
    std::vector<LinConstraint> cons = f.domain.lp_constraints();
    for (const auto& [mu, wm] : f.terms) {
      if (mu == nu) continue;
      QVec cc(n);
      for (int i = 0; i < n; ++i) cc[i] = Rat(nu[i] - mu[i]);
      cons.push_back({std::move(cc), wm - w, false});
    }
    if (lp_feasible(cons, n).status == LPStatus::Optimal) out.push_back({nu, w});
  }
  return out;
}

TropicalPolynomial restrict_to_laurent(const TruncatedSeries& f) {
  return TropicalPolynomial(f.domain.ambient_dim(), vertices_on_P(f));
}

Rat min_weight(const TruncatedSeries& f) {
  bool first = true;
  Rat best;
  for (const auto& v : f.domain.vertices())
    for (const auto& [nu, w] : f.terms) {
      Rat val = w + dot(nu, v);
      if (first || val < best) {
        best = val;
        first = false;
      }
    }
  if (best >= f.tail_bound) throw CertificateInsufficient();
  return best;
}

Rat stability_radius(const TruncatedSeries& f) {
  vertices_on_P(f);  // may throw CertificateInsufficient
  Rat radius = f.tail_bound - min_weight(f);
  for (const auto& v : f.domain.vertices()) {
    bool first = true;
    Rat m;
    for (const auto& [nu, w] : f.terms) {
      Rat val = w + dot(nu, v);
      if (first || val < m) {
        m = val;
        first = false;
      }
    }
    for (const auto& [nu, w] : f.terms) {
      Rat slack = w + dot(nu, v) - m;
      if (slack > 0 && slack < radius) radius = slack;
    }
  }
  return radius;
}

}  // namespace trop
