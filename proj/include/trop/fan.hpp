/**
 * Pointed fans, normal fans (min convention), extended points with
 * infinite coordinates, and closures of polyhedra in the associated partial
 * compactification.  Quotients N/span(tau) carry canonical coordinates from
 * a Smith-normal-form splitting of the lattice, so extended points and
 * strata polyhedra have decidable equality.
 */

#ifndef TROP_FAN_HPP
#define TROP_FAN_HPP

#include <optional>

#include "trop/polyhedron.hpp"

namespace trop {

class Fan {
 public:
  /// Builds the fan generated by the given cones: closes under faces and
  /// verifies that pairwise intersections are common faces.
  static Fan from_cones(int n, const std::vector<Polyhedron>& cones);

  int ambient_dim() const { return n_; }
  const std::vector<Polyhedron>& cones() const { return cones_; }
  int find(const Polyhedron& cone) const;  // index, or -1
  bool contains(const Polyhedron& cone) const { return find(cone) >= 0; }
  bool pointed() const;
  /// support = R^n, decided exactly.
  bool complete() const;

 private:
  explicit Fan(int n) : n_(n) {}
  int n_;
  std::vector<Polyhedron> cones_;
};

/// Normal fan of a polyhedron in the min convention: the cone at a face F is
/// {u : <u,.> attains its minimum over P exactly on F}.  Complete iff P is a
/// polytope.
Fan normal_fan(const Polyhedron& p);

/// The cone spanned by the coordinate rays e_i, i in idx.
Polyhedron coordinate_cone(int n, const std::vector<int>& idx);

/// Unimodular splitting matrix A = [B | C] for a cone tau: the first dim(tau)
/// columns B are a lattice basis of span(tau) cap Z^n, the remaining columns C
/// complete it to a basis of Z^n.  Deterministic per cone.
ZMat quotient_splitting(const Polyhedron& tau);

/// Canonical quotient coordinates of v in N/span(tau): the last n - dim(tau)
/// entries of A^{-1} v.  Constant on cosets v + span(tau).
QVec project_quotient(const Polyhedron& tau, const QVec& v);

/// Dual projection of an exponent u: C^T u, paired with project_quotient so
/// that <C^T u, A^{-1}v tail> = <u, v> whenever u annihilates span(tau).
ZVec project_dual(const Polyhedron& tau, const ZVec& u);

struct ExtendedPoint {
  Polyhedron stratum;  // cone tau of the ambient fan
  QVec coset;          // canonical quotient coordinates, length n - dim(tau)

  bool operator==(const ExtendedPoint& o) const {
    return stratum == o.stratum && coset == o.coset;
  }
  bool is_ordinary() const { return stratum.dim() == 0; }
};

/// Extended point from coordinatewise valuations; nullopt encodes +infinity.
/// The infinite coordinates must span a coordinate cone of the fan.
ExtendedPoint trop_point(const std::vector<std::optional<Rat>>& coords,
                         const Fan& delta);

struct ExtendedPolyhedron {
  Polyhedron base;
  /// (tau, pi_tau(base)) for every face tau of the recession cone; the
  /// stratum polyhedron lives in the canonical quotient coordinates.
  std::vector<std::pair<Polyhedron, Polyhedron>> strata;
};

/// Closure of a pointed polyhedron in the partial compactification N(Delta);
/// requires recession_cone(p) to be a cone of delta.
ExtendedPolyhedron closure_polyhedron(const Polyhedron& p, const Fan& delta);

}  // namespace trop

#endif  // TROP_FAN_HPP
