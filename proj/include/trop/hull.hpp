/**
 * Exact incremental convex hull (beneath-beyond) in small dimension, used
 * for facet enumeration from point sets and for lattice-normalized volumes.
 */

#ifndef TROP_HULL_HPP
#define TROP_HULL_HPP

#include "trop/numeric.hpp"

namespace trop {

struct HullFacet {
  QVec normal;  // outward: normal . x <= offset on the hull
  Rat offset;
};

struct Hull {
  int dim = 0;                     // affine dimension of the point set
  Rat volume;                      // d-volume when full-dimensional, else 0
  std::vector<HullFacet> facets;   // deduplicated supporting hyperplanes
};

/// Hull of a full-dimensional point set in its ambient space.  If the set is
/// lower-dimensional, only `dim` is filled (volume 0, no facets).
Hull convex_hull(const std::vector<QVec>& points);

/// Greedy affine basis: returns indices {i0, i1, ...} with p[i1]-p[i0], ...
/// linearly independent and spanning the affine hull.
std::vector<int> affine_basis(const std::vector<QVec>& points);

/// Euclidean d!-normalized volume of conv(points) inside its affine hull,
/// measured in the coordinates induced by the given basis directions.
Rat volume_in_coords(const std::vector<QVec>& coords_points);

}  // namespace trop

#endif  // TROP_HULL_HPP
