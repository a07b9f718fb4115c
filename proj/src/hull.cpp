#include "trop/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

std::vector<int> affine_basis(const std::vector<QVec>& points) {
  std::vector<int> basis;
  if (points.empty()) return basis;
  basis.push_back(0);
  QMat dirs;
  for (int i = 1; i < static_cast<int>(points.size()); ++i) {
    QMat trial = dirs;
    trial.push_back(sub(points[i], points[0]));
    if (rank_of(trial) > static_cast<int>(dirs.size())) {
      dirs = std::move(trial);
      basis.push_back(i);
    }
  }
  return basis;
}

Rat volume_in_coords(const std::vector<QVec>& pts) {
  Hull h = convex_hull(pts);
  return h.volume;
}

namespace {

struct Facet {
  std::vector<int> verts;  // d vertex indices
  QVec normal;
  Rat offset;
  bool alive = true;
};

// Hyperplane through the facet's points, oriented so that `inside` is on the
// <= side.
bool facet_plane(const std::vector<QVec>& pts, const std::vector<int>& verts,
                 const QVec& inside, QVec& normal, Rat& offset) {
  const int d = static_cast<int>(pts[0].size());
  QMat dirs;
  for (std::size_t i = 1; i < verts.size(); ++i)
    dirs.push_back(sub(pts[verts[i]], pts[verts[0]]));
  auto kern = kernel_basis(dirs, d);
  if (kern.size() != 1) return false;  // degenerate facet
  normal = kern[0];
  offset = dot(normal, pts[verts[0]]);
  Rat side = dot(normal, inside);
  if (side > offset) {
    for (auto& v : normal) v = -v;
    offset = -offset;
  } else if (side == offset) {
    return false;  // interior point on the plane; should not happen
  }
  return true;
}

}  // namespace

Hull convex_hull(const std::vector<QVec>& points_in) {
  Hull out;
  out.volume = 0;
  // dedupe
  std::vector<QVec> pts;
  {
    std::set<std::vector<std::string>> seen;
    for (const auto& p : points_in) {
      std::vector<std::string> key;
      key.reserve(p.size());
      for (const auto& c : p) key.push_back(rat_to_string(c));
      if (seen.insert(key).second) pts.push_back(p);
    }
  }
  if (pts.empty()) return out;
  const int d = static_cast<int>(pts[0].size());
  std::vector<int> basis = affine_basis(pts);
  out.dim = static_cast<int>(basis.size()) - 1;
  if (out.dim < d) return out;

  if (d == 1) {
    Rat lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    out.volume = hi - lo;
    out.facets.push_back({{Rat(1)}, hi});
    out.facets.push_back({{Rat(-1)}, -lo});
    return out;
  }

  // interior point: centroid of the initial simplex
  QVec inside(d, Rat(0));
  for (int idx : basis) inside = add(inside, pts[idx]);
  inside = scale(inside, Rat(1, static_cast<unsigned long>(basis.size())));

  std::vector<Facet> facets;
  for (int omit = 0; omit <= d; ++omit) {
    Facet f;
    for (int i = 0; i <= d; ++i)
      if (i != omit) f.verts.push_back(basis[i]);
    facet_plane(pts, f.verts, inside, f.normal, f.offset);
    facets.push_back(std::move(f));
  }

  std::set<int> used(basis.begin(), basis.end());
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (used.count(p)) continue;
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      if (!facets[fi].alive) continue;
      if (dot(facets[fi].normal, pts[p]) > facets[fi].offset) visible.push_back(fi);
    }
    if (visible.empty()) continue;  // inside or on the boundary
    // horizon ridges: (d-1)-subsets appearing in exactly one visible facet
    // whose other side is invisible (or equivalently counted once)
    std::map<std::vector<int>, int> ridge_count;
    for (int fi : visible) {
      const auto& vs = facets[fi].verts;
      for (std::size_t omit = 0; omit < vs.size(); ++omit) {
        std::vector<int> ridge;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (i != omit) ridge.push_back(vs[i]);
        std::sort(ridge.begin(), ridge.end());
        ridge_count[ridge]++;
      }
    }
    for (int fi : visible) facets[fi].alive = false;
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;  // internal ridge between two visible facets
      Facet f;
      f.verts = ridge;
      f.verts.push_back(p);
      QVec n;
      Rat off;
      if (!facet_plane(pts, f.verts, inside, n, off)) continue;
      f.normal = std::move(n);
      f.offset = off;
      facets.push_back(std::move(f));
    }
    used.insert(p);
  }

  // volume: cones from the first hull vertex over facets avoiding it
  const int apex = basis[0];
  Rat fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    if (std::find(f.verts.begin(), f.verts.end(), apex) != f.verts.end()) continue;
    QMat m;
    for (int v : f.verts) m.push_back(sub(pts[v], pts[apex]));
    Rat dv = det(m);
    if (dv < 0) dv = -dv;
    out.volume += dv / fact;
  }

  // deduplicated supporting hyperplanes (simplicial facets may share one)
  std::set<std::pair<std::vector<std::string>, std::string>> seen_planes;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    ZVec zn = scaled_integral(f.normal);
    // scaled_integral preserves direction up to positive factor; recover the
    // matching offset by rescaling against the original normal
    int nz = -1;
    for (int i = 0; i < d; ++i)
      if (f.normal[i] != 0) {
        nz = i;
        break;
      }
    Rat factor = Rat(zn[nz]) / f.normal[nz];
    Rat off = f.offset * factor;
    std::vector<std::string> key;
    for (const auto& c : zn) key.push_back(c.get_str());
    if (!seen_planes.insert({key, rat_to_string(off)}).second) continue;
    out.facets.push_back({to_qvec(zn), off});
  }
  return out;
}

}  // namespace trop
