/**
 * Dimension-zero tropical complete intersections: intersection complexes,
 * mixed-volume multiplicities at isolated points, connected components,
 * thickenings, certified generic translations (the moving lemma), stable
 * multiplicities along non-proper components, and component closures in a
 * toric compactification.
 */

#ifndef TROP_INTERSECT_HPP
#define TROP_INTERSECT_HPP

#include <cstdint>

#include "trop/tropical.hpp"
#include "trop/volume.hpp"

namespace trop {

/// Common refinement of the hypersurface complexes; its support is the
/// set-theoretic intersection of the tropical hypersurfaces.
PolyhedralComplex intersection_complex(const std::vector<TropicalPolynomial>& fs);

/// A connected component of the intersection complex.
struct Component {
  std::vector<Polyhedron> cells;  // all cells, faces included
  bool bounded;
};

/// Partition of the intersection complex into connected components; cells
/// are adjacent iff their intersection is nonempty.
std::vector<Component> components(const std::vector<TropicalPolynomial>& fs);

/// Uniform epsilon-relaxation of a component's cells: every inequality offset
/// is increased by epsilon and every equation is replaced by a slab of width
/// 2*epsilon, so each relaxed cell is full-dimensional and contains its base
/// cell in the interior.  epsilon is found by halving from 1 until the
/// relaxed union meets no other component.
struct Thickening {
  std::vector<Polyhedron> base;
  Rat epsilon;
  std::vector<Polyhedron> relaxed;
};

Thickening thicken(const Component& c, const std::vector<TropicalPolynomial>& fs);

/// One intersection point of a translated system, with the minimizing
/// exponents of each factor at that point.
struct TranslationPoint {
  QVec point;
  std::vector<std::vector<ZVec>> dual_supports;  // one sorted list per factor
};

/// Certificate of an admissible translation: at both t = epsilon and
/// t = epsilon/2 the hypersurfaces translated by t * directions[i] meet the
/// thickened component in a finite transverse point set in its interior,
/// with identical combinatorial data at both parameters.
struct TranslationCertificate {
  std::vector<ZVec> directions;  // one per polynomial
  Rat epsilon;
  Thickening thickening;
  std::vector<TranslationPoint> points;  // at t = epsilon
  std::uint64_t seed;
  int attempts;
};

/// Searches seeded integer directions of growing max-norm; throws
/// GenericityFailure after the retry cap.
TranslationCertificate admissible_translation(
    const Component& c, const std::vector<TropicalPolynomial>& fs,
    std::uint64_t seed);

struct MultiplicityReport {
  std::optional<ExtendedPoint> locus_point;  // set for point multiplicities
  int component_id = -1;                     // set for stable multiplicities
  std::vector<Polyhedron> dual_cells;  // per-factor duals when locus is a point
  Int multiplicity;
  std::vector<TranslationCertificate> certificates;  // one per cross-check seed
};

/// Multiplicity of an isolated ordinary intersection point of a square
/// system: the mixed volume of the n dual cells conv(initial_support(f_i, v)).
/// Throws NotIsolated when v is not an isolated point of the intersection,
/// BoundaryStratum when v lies at infinity.
MultiplicityReport point_multiplicity(const std::vector<TropicalPolynomial>& fs,
                                      const ExtendedPoint& v);

/// Stable intersection multiplicity along a component: the sum of mixed
/// volumes at the points of an admissibly translated system inside the
/// thickening.  Recomputed for cross_checks independent seeds; disagreement
/// raises WellDefinednessViolation.
MultiplicityReport stable_multiplicity(const Component& c,
                                       const std::vector<TropicalPolynomial>& fs,
                                       std::uint64_t seed, int cross_checks);

/// Boundary points added to a component by its closure in the
/// compactification of delta: for each nonzero face tau of a cell's recession
/// cone, the common zeros of the stratum polynomials of the f_i restricted to
/// the closure strata of the component's cells.  Throws FanNotCompatible when
/// a recession cone is not a union of delta cones fitting the Newton fans,
/// NotFinite when a boundary piece has positive dimension.
std::vector<ExtendedPoint> component_closure(
    const Component& c, const std::vector<TropicalPolynomial>& fs,
    const Fan& delta);

}  // namespace trop

#endif  // TROP_INTERSECT_HPP
