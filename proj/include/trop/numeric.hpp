/**
 * Exact rational and integer linear algebra primitives used throughout the
 * library: dense Gaussian elimination over Q, integer lattice normal forms,
 * and small vector utilities.  All arithmetic is arbitrary precision
 * (GMP); there are no epsilon tolerances anywhere.
 */

#ifndef TROP_NUMERIC_HPP
#define TROP_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace trop {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<ZVec>;

QVec to_qvec(const ZVec& v);
ZVec scaled_integral(const QVec& v);   // clear denominators, primitive
ZVec primitive(const ZVec& v);         // divide by gcd; zero vector stays zero
bool is_zero(const QVec& v);
bool is_zero(const ZVec& v);

Rat dot(const QVec& a, const QVec& b);
Rat dot(const ZVec& a, const QVec& b);
Int dot(const ZVec& a, const ZVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& c);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);  // accepts "a" or "a/b"

/// Row echelon data for a rational matrix.
struct RowEchelon {
  QMat rows;               // reduced rows, pivot columns normalized to 1
  std::vector<int> pivots; // pivot column of each row
  int rank() const { return static_cast<int>(rows.size()); }
};

RowEchelon row_reduce(const QMat& m);

int rank_of(const QMat& m);
Rat det(const QMat& m);  // square matrix

/// Kernel basis of m (viewed as rows acting on column vectors by dot).
std::vector<QVec> kernel_basis(const QMat& m, int ncols);

/// Solve rows * x = rhs; empty optional if inconsistent.
bool solve_linear(const QMat& rows, const QVec& rhs, QVec& out);

/// Smith-normal-form based splitting of a saturated sublattice.
///
/// Given integer generators (columns span a rank-k subspace S of Q^n),
/// produces an n x n unimodular matrix whose first k columns form a basis
/// of S cap Z^n and whose last n-k columns complete it to a basis of Z^n.
ZMat lattice_splitting(const ZMat& generators_cols, int n, int& rank_out);

/// Deterministic integer stream for reproducible direction sampling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Integer in [lo, hi] inclusive.
  long next_in(long lo, long hi);

 private:
  std::uint64_t state_;
};

}  // namespace trop

#endif  // TROP_NUMERIC_HPP
