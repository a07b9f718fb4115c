/**
 * Truncated power series on a pointed polyhedral domain P.  A series is a
 * finite list of retained terms plus a scalar tail certificate T: every
 * omitted term has min-weight over P at least T.  The finiteness algorithm
 * extracts the terms visible on the lower hull over P, reducing the series
 * to an effective Laurent polynomial on P.
 */

#ifndef TROP_SERIES_HPP
#define TROP_SERIES_HPP

#include "trop/polyhedron.hpp"
#include "trop/tropical.hpp"

namespace trop {

struct TruncatedSeries {
  Polyhedron domain;                       // pointed polyhedron P
  std::vector<std::pair<ZVec, Rat>> terms; // exponent -> weight, distinct
  Rat tail_bound;                          // certificate T
};

/// Validated constructor: domain pointed, exponents distinct and weakly
/// increasing along every recession ray of P (so weights are bounded below
/// on P and the series converges on it).
TruncatedSeries make_series(Polyhedron domain,
                            std::vector<std::pair<ZVec, Rat>> terms,
                            Rat tail_bound);

/// The terms visible on the lower hull somewhere over P: exactly
/// union over v in P of the minimizing terms.  Throws CertificateInsufficient
/// when the sup over P of the retained minimum reaches the tail bound, since
/// an omitted term could then interfere.
std::vector<std::pair<ZVec, Rat>> vertices_on_P(const TruncatedSeries& f);

/// The effective Laurent polynomial with exactly the vertices_on_P terms;
/// its tropical hypersurface agrees with the series' inside P.
TropicalPolynomial restrict_to_laurent(const TruncatedSeries& f);

/// min over v in vertices(P) and retained terms of w + <nu, v>; this is the
/// negated log of the sup norm of f on the domain.
Rat min_weight(const TruncatedSeries& f);

/// A threshold delta > 0: perturbing weights by less than delta (and adding
/// terms of min-weight above delta) cannot change vertices_on_P.  Computed
/// from the smallest positive slack between minimizing and non-minimizing
/// lifted values over the vertices of P, capped by tail_bound - min_weight.
Rat stability_radius(const TruncatedSeries& f);

}  // namespace trop

#endif  // TROP_SERIES_HPP
