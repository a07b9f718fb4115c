#include "trop/fan.hpp"

#include <map>
#include <set>

#include "trop/complex.hpp"

namespace trop {

Fan Fan::from_cones(int n, const std::vector<Polyhedron>& cones) {
  Fan fan(n);
  std::set<std::string> keys;
  std::vector<Polyhedron> work = cones;
  if (work.empty()) work.push_back(Polyhedron::cone_from_generators(n, {}));
  for (const auto& c : work) {
    if (c.ambient_dim() != n) throw DimensionMismatch();
    if (!c.is_cone()) throw Error("fan member is not a cone");
    for (auto& f : c.all_faces())
      if (keys.insert(f.canonical_key()).second) fan.cones_.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < fan.cones_.size(); ++i)
    for (std::size_t j = i + 1; j < fan.cones_.size(); ++j) {
      auto inter = fan.cones_[i].intersect(fan.cones_[j]);
      if (!inter) continue;  // cannot happen: cones share the origin
      if (!is_face_of(*inter, fan.cones_[i]) || !is_face_of(*inter, fan.cones_[j]))
        throw Error("cone intersections are not common faces");
    }
  return fan;
}

int Fan::find(const Polyhedron& cone) const {
  for (int i = 0; i < static_cast<int>(cones_.size()); ++i)
    if (cones_[i] == cone) return i;
  return -1;
}

bool Fan::pointed() const {
  for (const auto& c : cones_)
    if (!c.pointed()) return false;
  return true;
}

bool Fan::complete() const {
  PolyhedralComplex full(n_);
  full.add_cell(Polyhedron::full_space(n_));
  PolyhedralComplex self(n_);
  for (const auto& c : cones_) self.add_cell(c);
  return supports_equal(self, full);
}

Fan normal_fan(const Polyhedron& p) {
  if (!p.pointed()) throw NotPointed();
  const int n = p.ambient_dim();
  std::vector<Polyhedron> cones;
  for (const auto& f : p.all_faces()) {
    QVec c = f.relative_interior_point();
    std::vector<LinConstraint> cons;
    for (const auto& v : p.vertices()) {
      QVec diff = sub(c, v);
      if (is_zero(diff)) continue;
      cons.push_back({std::move(diff), Rat(0), false});
    }
    for (const auto& r : p.rays()) {
      QVec neg(n);
      for (int i = 0; i < n; ++i) neg[i] = Rat(-r[i]);
      cons.push_back({std::move(neg), Rat(0), false});
    }
    cones.push_back(Polyhedron::from_halfspaces(n, cons));
  }
  return Fan::from_cones(n, cones);
}

Polyhedron coordinate_cone(int n, const std::vector<int>& idx) {
  std::vector<ZVec> gens;
  for (int i : idx) {
    ZVec e(n, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Polyhedron::cone_from_generators(n, gens);
}

ZMat quotient_splitting(const Polyhedron& tau) {
  const int n = tau.ambient_dim();
  int rank = 0;
  return lattice_splitting(tau.cone_generators(), n, rank);
}

QVec project_quotient(const Polyhedron& tau, const QVec& v) {
  const int n = tau.ambient_dim();
  const int k = tau.dim();
  ZMat a = quotient_splitting(tau);
  QMat rows(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = Rat(a[i][j]);
  QVec y;
  if (!solve_linear(rows, v, y)) throw Error("unimodular solve failed");
  return QVec(y.begin() + k, y.end());
}

ZVec project_dual(const Polyhedron& tau, const ZVec& u) {
  const int n = tau.ambient_dim();
  const int k = tau.dim();
  ZMat a = quotient_splitting(tau);
  ZVec out(n - k, Int(0));
  for (int j = k; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j - k] += a[i][j] * u[i];
  return out;
}

ExtendedPoint trop_point(const std::vector<std::optional<Rat>>& coords,
                         const Fan& delta) {
  const int n = delta.ambient_dim();
  if (static_cast<int>(coords.size()) != n) throw DimensionMismatch();
  std::vector<int> inf_idx;
  QVec v(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (coords[i])
      v[i] = *coords[i];
    else
      inf_idx.push_back(i);
  }
  Polyhedron tau = coordinate_cone(n, inf_idx);
  if (!delta.contains(tau)) throw StratumNotInFan();
  return {tau, project_quotient(tau, v)};
}

ExtendedPolyhedron closure_polyhedron(const Polyhedron& p, const Fan& delta) {
  if (!p.pointed()) throw NotPointed();
  const int n = p.ambient_dim();
  Polyhedron u = p.recession_cone();
  if (!delta.contains(u)) throw ConeNotInFan();

  ExtendedPolyhedron out{p, {}};
  for (const auto& tau : u.all_faces()) {
    const int k = tau.dim();
    auto gens = tau.cone_generators();
    auto annihilates = [&](const ZVec& normal) {
      for (const auto& s : gens)
        if (dot(normal, s) != 0) return false;
      return true;
    };
    ZMat a = quotient_splitting(tau);
    std::vector<LinConstraint> cons;
    auto push = [&](const Halfspace& h, bool eq) {
      if (!annihilates(h.normal)) return;
      QVec c(n - k, Rat(0));
      for (int j = k; j < n; ++j)
        for (int i = 0; i < n; ++i) c[j - k] += Rat(a[i][j] * h.normal[i]);
      cons.push_back({std::move(c), h.offset, eq});
    };
    for (const auto& e : p.equations()) push(e, true);
    for (const auto& h : p.inequalities()) push(h, false);
    out.strata.push_back({tau, Polyhedron::from_halfspaces(n - k, cons)});
  }
  return out;
}

}  // namespace trop
