/**
 * Tropical Laurent polynomials in the min-plus convention: a term with
 * exponent nu and weight w contributes w + <nu, v>, and the hypersurface is
 * the locus where the minimum is attained at least twice.  Cells carry dual
 * Newton cells (convex hulls of the minimizing exponents), and closures in a
 * partial compactification are computed stratum by stratum from faces of the
 * Newton polytope.
 */

#ifndef TROP_TROPICAL_HPP
#define TROP_TROPICAL_HPP

#include <map>
#include <optional>

#include "trop/complex.hpp"
#include "trop/fan.hpp"

namespace trop {

class TropicalPolynomial {
 public:
  /// Terms are (exponent, weight); exponents must be distinct, at least one.
  TropicalPolynomial(int n, std::vector<std::pair<ZVec, Rat>> terms);

  int ambient_dim() const { return n_; }
  const std::vector<std::pair<ZVec, Rat>>& terms() const { return terms_; }
  bool is_monomial() const { return terms_.size() == 1; }
  std::vector<ZVec> support() const;

 private:
  int n_;
  std::vector<std::pair<ZVec, Rat>> terms_;  // sorted by exponent
};

struct HypersurfaceCell {
  Polyhedron cell;
  std::vector<ZVec> dual_support;  // minimizing exponents, sorted
  Polyhedron dual;                 // conv(dual_support)
};

struct TropicalHypersurface {
  int ambient_dim;
  PolyhedralComplex complex;            // the cells as a complex
  std::vector<HypersurfaceCell> cells;  // same cells with duality data
  std::optional<Polyhedron> newton_polytope;
};

/// min over terms of w + <nu, v>.
Rat weight(const TropicalPolynomial& f, const QVec& v);

/// Exponents attaining the minimum at v.
std::vector<ZVec> initial_support(const TropicalPolynomial& f, const QVec& v);

/// Terms of f surviving at the stratum of tau: those minimizing <., w> over
/// the support for every generator w of tau.  Empty when tau straddles a
/// wall of the Newton fan.
std::vector<ZVec> stratum_survivors(const TropicalPolynomial& f,
                                    const Polyhedron& tau);

/// The restriction of f to the stratum of tau in canonical quotient
/// coordinates: surviving terms with exponents C^T(nu - nu0), nu0 the
/// lexicographically smallest survivor, weights unchanged.  Throws
/// FanNotCompatible when no term survives.
TropicalPolynomial stratum_polynomial(const TropicalPolynomial& f,
                                      const Polyhedron& tau);

/// Weight at an extended point: evaluation of the stratum polynomial at the
/// coset.  nullopt (+infinity) when no term survives the stratum.
std::optional<Rat> weight(const TropicalPolynomial& f, const ExtendedPoint& v);

/// Minimizing exponents at an extended point, reported as exponents of f.
std::vector<ZVec> initial_support(const TropicalPolynomial& f,
                                  const ExtendedPoint& v);

/// The canonical hypersurface complex with dual Newton cells.  Monomials
/// yield an empty complex.
TropicalHypersurface hypersurface(const TropicalPolynomial& f);

/// Min-convention normal fan of the Newton polytope conv(support(f)).
Fan newton_fan(const TropicalPolynomial& f);

/// Weights w ↦ w - <nu, t>; shifts the hypersurface by t.
TropicalPolynomial translate(const TropicalPolynomial& f, const QVec& t);

/// Hypersurfaces of all stratum polynomials, one per cone of delta.  Every
/// cone of delta must lie inside a cone of the Newton fan; otherwise
/// FanNotCompatible.
std::vector<std::pair<Polyhedron, TropicalHypersurface>> stratified_closure(
    const TropicalPolynomial& f, const Fan& delta);

}  // namespace trop

#endif  // TROP_TROPICAL_HPP
