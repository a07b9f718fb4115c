/**
 * Polyhedral complexes: collections of cells closed under faces whose
 * pairwise intersections are common faces.  Includes common refinement of
 * two complexes and an exact support-equality test.
 */

#ifndef TROP_COMPLEX_HPP
#define TROP_COMPLEX_HPP

#include <set>

#include "trop/polyhedron.hpp"

namespace trop {

class PolyhedralComplex {
 public:
  explicit PolyhedralComplex(int ambient_dim) : n_(ambient_dim) {}

  int ambient_dim() const { return n_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  /// Insert a cell; duplicates (by canonical key) are ignored.
  bool add_cell(Polyhedron c);

  /// Membership of a point in the support (union of cells).
  bool supports(const QVec& v) const;

  /// Indices of cells not strictly contained in another cell.
  std::vector<int> maximal_cell_indices() const;

  /// Checks that pairwise intersections are common faces and that the
  /// complex is closed under taking faces.
  bool is_valid_complex() const;

 private:
  int n_;
  std::vector<Polyhedron> cells_;
  std::set<std::string> keys_;
};

/// Is f a face of p (in the maxset sense)?
bool is_face_of(const Polyhedron& f, const Polyhedron& p);

/// Common refinement: all nonempty pairwise intersections of cells.
PolyhedralComplex refine_intersect(const PolyhedralComplex& a,
                                   const PolyhedralComplex& b);

/// Exact support equality |a| = |b|, decided by volume accounting inside a
/// certified bounding box large enough to contain a witness point of any
/// nonempty difference region.
bool supports_equal(const PolyhedralComplex& a, const PolyhedralComplex& b);

}  // namespace trop

#endif  // TROP_COMPLEX_HPP
