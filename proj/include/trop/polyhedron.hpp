/**
 * Rational polyhedra with a canonical irredundant H-representation and a
 * lazily computed V-representation.  Canonicalization makes structural
 * equality decide set equality, so polyhedra can be deduplicated by key.
 *
 * Conventions: every constraint is stored as an integral primitive normal u
 * with rational offset a, meaning <u, x> <= a (or = a for equations).  A
 * Polyhedron value is always nonempty; infeasible systems are rejected at
 * construction with EmptyPolyhedron.
 */

#ifndef TROP_POLYHEDRON_HPP
#define TROP_POLYHEDRON_HPP

#include <optional>
#include <string>

#include "trop/errors.hpp"
#include "trop/lp.hpp"
#include "trop/numeric.hpp"

namespace trop {

struct Halfspace {
  ZVec normal;
  Rat offset;
};

class Polyhedron {
 public:
  /// Canonicalize an arbitrary constraint system.  Throws EmptyPolyhedron.
  static Polyhedron from_halfspaces(int n, const std::vector<LinConstraint>& cons);
  static std::optional<Polyhedron> try_from_halfspaces(
      int n, const std::vector<LinConstraint>& cons);

  /// conv(points) + cone(rays); points must be nonempty.
  static Polyhedron from_generators(const std::vector<QVec>& points,
                                    const std::vector<ZVec>& rays);
  static Polyhedron from_points(const std::vector<QVec>& points);
  static Polyhedron cone_from_generators(int n, const std::vector<ZVec>& gens);
  static Polyhedron full_space(int n);
  static Polyhedron single_point(const QVec& v);

  int ambient_dim() const { return n_; }
  int dim() const;

  const std::vector<Halfspace>& equations() const { return equations_; }
  const std::vector<Halfspace>& inequalities() const { return inequalities_; }
  std::vector<LinConstraint> lp_constraints() const;

  bool contains(const QVec& v) const;
  /// Set containment: *this subseteq other.
  bool subset_of(const Polyhedron& other) const;
  bool operator==(const Polyhedron& other) const {
    return canonical_key() == other.canonical_key();
  }
  const std::string& canonical_key() const;

  /// maxset(u, P): the face where <u, .> attains its supremum.
  Polyhedron face(const ZVec& u) const;
  /// All nonempty faces, including *this, deduplicated.
  std::vector<Polyhedron> all_faces() const;

  const std::vector<QVec>& vertices() const;      // throws NotPointed
  const std::vector<ZVec>& rays() const;          // extreme rays (primitive)
  const std::vector<ZVec>& lineality() const;     // lattice basis of lin space
  bool pointed() const;
  bool bounded() const;
  bool is_cone() const;  // all offsets zero
  /// rays plus +/- lineality generators; for pointed cones just the rays.
  std::vector<ZVec> cone_generators() const;

  Polyhedron recession_cone() const;
  std::optional<Polyhedron> intersect(const Polyhedron& other) const;
  Polyhedron translate(const QVec& t) const;

  /// A point in the relative interior (all irredundant inequalities strict).
  QVec relative_interior_point() const;

 private:
  Polyhedron() = default;
  void compute_vrep() const;

  int n_ = 0;
  std::vector<Halfspace> equations_;
  std::vector<Halfspace> inequalities_;

  mutable bool vrep_done_ = false;
  mutable std::vector<QVec> vertices_;
  mutable std::vector<ZVec> rays_;
  mutable std::vector<ZVec> lineality_;
  mutable std::string key_;
};

}  // namespace trop

#endif  // TROP_POLYHEDRON_HPP
