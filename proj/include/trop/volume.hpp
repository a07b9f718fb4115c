/**
 * Lattice-normalized volumes and mixed volumes of rational polytopes.
 */

#ifndef TROP_VOLUME_HPP
#define TROP_VOLUME_HPP

#include "trop/polyhedron.hpp"

namespace trop {

/// n-dimensional volume normalized so the unit lattice cell has volume 1;
/// 0 for lower-dimensional polytopes.  Throws Unbounded.
Rat lattice_volume(const Polyhedron& p);

/// k-dimensional volume of a k-dimensional polytope inside its affine hull,
/// normalized to the induced lattice span cap Z^n.  Points have volume 1.
Rat relative_lattice_volume(const Polyhedron& p);

/// Mixed volume of exactly n polytopes in ambient dimension n, computed by
/// inclusion-exclusion over Minkowski sums of subsets.
Rat mixed_volume(const std::vector<Polyhedron>& ps);

/// Vertex set of the Minkowski sum (with duplicates removed, not reduced to
/// extreme points; suitable as convex_hull input).
std::vector<QVec> minkowski_vertex_sums(const std::vector<const Polyhedron*>& ps);

}  // namespace trop

#endif  // TROP_VOLUME_HPP
