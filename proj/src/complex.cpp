#include "trop/complex.hpp"

#include <map>

namespace trop {

bool PolyhedralComplex::add_cell(Polyhedron c) {
  if (c.ambient_dim() != n_) throw DimensionMismatch();
  if (!keys_.insert(c.canonical_key()).second) return false;
  cells_.push_back(std::move(c));
  return true;
}

bool PolyhedralComplex::supports(const QVec& v) const {
  for (const auto& c : cells_)
    if (c.contains(v)) return true;
  return false;
}

std::vector<int> PolyhedralComplex::maximal_cell_indices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
    bool maximal = true;
    for (int j = 0; j < static_cast<int>(cells_.size()) && maximal; ++j) {
      if (i == j) continue;
      if (cells_[i].subset_of(cells_[j]) && !(cells_[i] == cells_[j])) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

bool is_face_of(const Polyhedron& f, const Polyhedron& p) {
  if (!f.subset_of(p)) return false;
  QVec c = f.relative_interior_point();
  auto cons = p.lp_constraints();
  for (auto& con : cons)
    if (!con.equality && dot(con.coeffs, c) == con.rhs) con.equality = true;
  auto g = Polyhedron::try_from_halfspaces(p.ambient_dim(), cons);
  return g && f == *g;
}

bool PolyhedralComplex::is_valid_complex() const {
  for (const auto& c : cells_)
    for (const auto& f : c.all_faces())
      if (!keys_.count(f.canonical_key())) return false;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (std::size_t j = i + 1; j < cells_.size(); ++j) {
      auto inter = cells_[i].intersect(cells_[j]);
      if (!inter) continue;
      if (!is_face_of(*inter, cells_[i]) || !is_face_of(*inter, cells_[j]))
        return false;
    }
  }
  return true;
}

PolyhedralComplex refine_intersect(const PolyhedralComplex& a,
                                   const PolyhedralComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch();
  PolyhedralComplex out(a.ambient_dim());
  for (const auto& ca : a.cells())
    for (const auto& cb : b.cells()) {
      auto i = ca.intersect(cb);
      if (i) out.add_cell(std::move(*i));
    }
  return out;
}

namespace {

// Is every point of `cell` in the support of `b`?  The cell is sliced along
// every constraint hyperplane occurring in b; each resulting full-dimensional
// piece lies entirely inside or entirely outside each cell of b, so testing
// one relative interior point per piece decides coverage exactly.
bool covered_by(const Polyhedron& cell, const PolyhedralComplex& b) {
  const int n = cell.ambient_dim();
  std::map<std::string, std::pair<ZVec, Rat>> planes;
  for (const auto& c : b.cells()) {
    auto take = [&](const Halfspace& h) {
      ZVec key = h.normal;
      Rat off = h.offset;
      // identify (u, a) with (-u, -a)
      bool flip = false;
      for (const auto& x : key)
        if (x != 0) {
          flip = x < 0;
          break;
        }
      if (flip) {
        for (auto& x : key) x = -x;
        off = -off;
      }
      std::string k;
      for (const auto& x : key) k += x.get_str() + ",";
      k += rat_to_string(off);
      planes.emplace(k, std::make_pair(std::move(key), std::move(off)));
    };
    for (const auto& e : c.equations()) take(e);
    for (const auto& h : c.inequalities()) take(h);
  }

  const int k = cell.dim();
  std::vector<Polyhedron> pieces{cell};
  for (const auto& [key, plane] : planes) {
    const auto& [u, a] = plane;
    std::vector<Polyhedron> next;
    std::set<std::string> seen;
    for (const auto& p : pieces) {
      auto cons = p.lp_constraints();
      cons.push_back({to_qvec(u), a, false});
      auto lo = Polyhedron::try_from_halfspaces(n, cons);
      cons.back().coeffs = scale(cons.back().coeffs, Rat(-1));
      cons.back().rhs = -a;
      auto hi = Polyhedron::try_from_halfspaces(n, cons);
      for (auto* side : {&lo, &hi}) {
        if (!*side || (*side)->dim() != k) continue;
        if (seen.insert((*side)->canonical_key()).second)
          next.push_back(std::move(**side));
      }
    }
    pieces = std::move(next);
  }
  for (const auto& p : pieces)
    if (!b.supports(p.relative_interior_point())) return false;
  return true;
}

bool support_subset(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  for (int i : a.maximal_cell_indices())
    if (!covered_by(a.cells()[i], b)) return false;
  return true;
}

}  // namespace

bool supports_equal(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch();
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return support_subset(a, b) && support_subset(b, a);
}

}  // namespace trop
