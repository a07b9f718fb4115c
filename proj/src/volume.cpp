#include "trop/volume.hpp"

#include "trop/hull.hpp"

namespace trop {

Rat lattice_volume(const Polyhedron& p) {
  if (!p.bounded()) throw Unbounded();
  return convex_hull(p.vertices()).volume;
}

Rat relative_lattice_volume(const Polyhedron& p) {
  if (!p.bounded()) throw Unbounded();
  const auto& verts = p.vertices();
  const int n = p.ambient_dim();
  const int k = p.dim();
  if (k == 0) return 1;
  if (k == n) return convex_hull(verts).volume;

  // lattice basis of the direction space: first k columns of the splitting
  ZMat dirs;
  for (std::size_t i = 1; i < verts.size(); ++i)
    dirs.push_back(scaled_integral(sub(verts[i], verts[0])));
  int rank = 0;
  ZMat u = lattice_splitting(dirs, n, rank);
  // u is n x n with basis columns 0..rank-1; rank == k here
  QMat bmat(n, QVec(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) bmat[i][j] = Rat(u[i][j]);
  std::vector<QVec> coords;
  for (const auto& v : verts) {
    QVec d = sub(v, verts[0]);
    QVec x;
    if (!solve_linear(bmat, d, x)) throw Error("vertex outside affine hull lattice");
    coords.push_back(std::move(x));
  }
  return convex_hull(coords).volume;
}

std::vector<QVec> minkowski_vertex_sums(const std::vector<const Polyhedron*>& ps) {
  std::vector<QVec> sums{QVec(ps.empty() ? 0 : ps[0]->ambient_dim(), Rat(0))};
  for (const auto* p : ps) {
    std::vector<QVec> next;
    for (const auto& s : sums)
      for (const auto& v : p->vertices()) next.push_back(add(s, v));
    sums = std::move(next);
  }
  return sums;
}

Rat mixed_volume(const std::vector<Polyhedron>& ps) {
  if (ps.empty()) throw DimensionMismatch();
  const int n = ps[0].ambient_dim();
  if (static_cast<int>(ps.size()) != n) throw DimensionMismatch();
  for (const auto& p : ps) {
    if (p.ambient_dim() != n) throw DimensionMismatch();
    if (!p.bounded()) throw Unbounded();
  }
  Rat mv = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<const Polyhedron*> sel;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sel.push_back(&ps[i]);
    Rat vol = convex_hull(minkowski_vertex_sums(sel)).volume;
    int sign = ((n - static_cast<int>(sel.size())) % 2 == 0) ? 1 : -1;
    mv += sign * vol;
  }
  return mv;
}

}  // namespace trop
