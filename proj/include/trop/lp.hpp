/**
 * Exact rational linear programming.  A two-phase dense simplex with
 * Bland's rule over GMP rationals; this is the single feasibility and
 * optimization kernel behind every polyhedral predicate in the library.
 */

#ifndef TROP_LP_HPP
#define TROP_LP_HPP

#include "trop/numeric.hpp"

namespace trop {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LinConstraint {
  QVec coeffs;  // coeffs . x  (<=|=)  rhs
  Rat rhs;
  bool equality = false;
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;  // optimal objective value when status == Optimal
  QVec x;     // an optimal (or feasible) point
};

/// Maximize objective . x subject to the constraints; x ranges over Q^n.
LPResult lp_maximize(const std::vector<LinConstraint>& constraints,
                     const QVec& objective, int n);

LPResult lp_minimize(const std::vector<LinConstraint>& constraints,
                     const QVec& objective, int n);

/// Feasibility only (zero objective).
LPResult lp_feasible(const std::vector<LinConstraint>& constraints, int n);

}  // namespace trop

#endif  // TROP_LP_HPP
