/**
 * Independent ground truth for the tropical engine: literal polynomials
 * over exact valued coefficient fields (rationals with p-adic valuation, or
 * rational functions in a parameter with order-at-zero valuation), the
 * classical one-variable Newton polygon, constructed-root instance
 * generation, resultant elimination for bivariate root counting, and the
 * exact solution of affine 2x2 systems with extended tropicalization.
 *
 * Nothing here shares geometry code with the engine beyond rational
 * arithmetic, so agreement between the two is meaningful evidence.
 */

#ifndef TROP_ORACLE_HPP
#define TROP_ORACLE_HPP

#include "trop/fan.hpp"
#include "trop/tropical.hpp"

namespace trop {

/// Dense univariate polynomial over Q; coefficient of degree k at index k,
/// trailing zeros trimmed, empty vector = 0.
using UPoly = std::vector<Rat>;

UPoly upoly_trim(UPoly p);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
/// Exact division; throws Error when the remainder is nonzero.
UPoly upoly_divexact(const UPoly& a, const UPoly& b);

/// p-adic valuation of a nonzero rational; throws Error on zero.
Rat padic_val(const Rat& q, const Int& p);

/// Element of the coefficient field: a rational function num/den in the
/// parameter.  Constants are degree-zero num and den.
struct FieldElem {
  UPoly num{};
  UPoly den{UPoly{Rat(1)}};

  bool is_zero() const { return num.empty(); }
};

FieldElem fe(const Rat& q);
FieldElem fe_parameter();  // the parameter itself
FieldElem fe_add(const FieldElem& a, const FieldElem& b);
FieldElem fe_sub(const FieldElem& a, const FieldElem& b);
FieldElem fe_mul(const FieldElem& a, const FieldElem& b);
FieldElem fe_div(const FieldElem& a, const FieldElem& b);

enum class CoeffModel { PAdic, Parameter };

struct LiteralTerm {
  ZVec exponent;
  FieldElem coeff;
};

struct LiteralPolynomial {
  int n = 0;
  CoeffModel model = CoeffModel::PAdic;
  Int prime = Int(2);
  std::vector<LiteralTerm> terms;
};

/// Validated constructor: nonzero coefficients, distinct exponents of the
/// right arity, constant coefficients under the p-adic model.
LiteralPolynomial make_literal(int n, CoeffModel model, Int prime,
                               std::vector<LiteralTerm> terms);

/// Valuation of a nonzero coefficient under f's model.
Rat coeff_valuation(const LiteralPolynomial& f, const FieldElem& c);

/// Exact term-by-term tropicalization.
TropicalPolynomial tropicalize(const LiteralPolynomial& f);

/// Newton polygon of a univariate tropical polynomial: (valuation, count)
/// pairs from the lower hull of the lifted terms, left to right (weakly
/// decreasing valuations); the counts sum to the support width.  Monomials
/// yield an empty list.
std::vector<std::pair<Rat, Int>> np1d(const TropicalPolynomial& f);

struct KnownRootInstance {
  LiteralPolynomial f;
  std::vector<std::pair<Rat, Int>> expected;  // np1d ground truth
};

/// Product of linear (or, for fractional valuations, x^L - t) factors whose
/// roots have exactly the requested p-adic valuations; expected lists each
/// requested valuation with its total root count.  Fractional valuations
/// with lcm of denominators above a small cap raise UnrealizableValuation.
KnownRootInstance known_root_instance(const std::vector<Rat>& valuations,
                                      const Int& p);

/// Number of common zeros (xi, eta) in the torus with coordinatewise
/// valuations v, counted with multiplicity, via resultant elimination in
/// both variables plus product and ratio twists; the four marginal counts
/// must agree.  Throws NotFinite when a resultant vanishes identically,
/// PairingAmbiguous when the marginals disagree.  p-adic model only.
Int resultant_count2(const LiteralPolynomial& f1, const LiteralPolynomial& f2,
                     const QVec& v);

struct LinearSolveResult {
  ExtendedPoint point;
  Int count;
};

/// Exact solution of two affine polynomials a x + b y + c in two variables:
/// the extended tropicalization of the unique solution of the projective
/// system in the compactification of delta, with count 1.  Proportional
/// systems raise DegenerateSystem.
LinearSolveResult linear_solve_trop(const LiteralPolynomial& f1,
                                    const LiteralPolynomial& f2,
                                    const Fan& delta);

}  // namespace trop

#endif  // TROP_ORACLE_HPP
