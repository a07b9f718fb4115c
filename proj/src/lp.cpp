#include "trop/lp.hpp"

#include <cassert>

namespace trop {

namespace {

// Dense simplex on the system A x = b, x >= 0, b >= 0, maximizing c.x.
// Bland's rule throughout, so termination is guaranteed.
class Tableau {
 public:
  Tableau(QMat a, QVec b, int nvars) : a_(std::move(a)), b_(std::move(b)), nvars_(nvars) {
    m_ = static_cast<int>(a_.size());
    basis_.assign(m_, -1);
  }

  int rows() const { return m_; }
  std::vector<int>& basis() { return basis_; }

  // Maximize c.x starting from the current feasible basis.  Returns false on
  // unboundedness.  `allowed` masks the columns eligible to enter.
  bool optimize(const QVec& c, const std::vector<bool>& allowed) {
    // reduced cost of column j: c_j - y . A_j with y the basic multipliers
    while (true) {
      QVec y = dual_multipliers(c);
      int enter = -1;
      for (int j = 0; j < nvars_; ++j) {
        if (!allowed[j] || in_basis(j)) continue;
        Rat red = c[j];
        for (int i = 0; i < m_; ++i) red -= y[i] * a_[i][j];
        if (red > 0) {
          enter = j;  // Bland: smallest index
          break;
        }
      }
      if (enter < 0) return true;
      // ratio test, Bland tie-break on basic variable index
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rat ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    Rat inv = 1 / a_[row][col];
    for (auto& v : a_[row]) v *= inv;
    b_[row] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rat f = a_[i][col];
      for (int j = 0; j < nvars_; ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  QVec solution() const {
    QVec x(nvars_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= 0) x[basis_[i]] = b_[i];
    return x;
  }

  Rat coeff(int i, int j) const { return a_[i][j]; }

 private:
  bool in_basis(int j) const {
    for (int i = 0; i < m_; ++i)
      if (basis_[i] == j) return true;
    return false;
  }

  // y solving y . A_B = c_B.  Since the tableau is kept in canonical form
  // (basic columns are unit columns), the multipliers are read directly.
  QVec dual_multipliers(const QVec& c) const {
    QVec y(m_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= 0) y[i] = c[basis_[i]];
    return y;
  }

  QMat a_;
  QVec b_;
  int nvars_;
  int m_;
  std::vector<int> basis_;
};

}  // namespace

LPResult lp_maximize(const std::vector<LinConstraint>& constraints,
                     const QVec& objective, int n) {
  const int m = static_cast<int>(constraints.size());
  int nslack = 0;
  for (const auto& c : constraints)
    if (!c.equality) ++nslack;
  const int nv = 2 * n + nslack + m;  // x+, x-, slacks, artificials
  const int art0 = 2 * n + nslack;

  QMat a(m, QVec(nv, Rat(0)));
  QVec b(m, Rat(0));
  int slack = 0;
  for (int i = 0; i < m; ++i) {
    const auto& con = constraints[i];
    for (int j = 0; j < n; ++j) {
      a[i][j] = con.coeffs[j];
      a[i][n + j] = -con.coeffs[j];
    }
    b[i] = con.rhs;
    if (!con.equality) {
      a[i][2 * n + slack] = 1;
      ++slack;
    }
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
    a[i][art0 + i] = 1;
  }

  Tableau t(std::move(a), std::move(b), nv);
  for (int i = 0; i < m; ++i) t.basis()[i] = art0 + i;

  // Phase 1: maximize -sum(artificials).
  QVec phase1(nv, Rat(0));
  for (int i = 0; i < m; ++i) phase1[art0 + i] = -1;
  std::vector<bool> all(nv, true);
  bool ok = t.optimize(phase1, all);
  assert(ok);
  (void)ok;
  Rat p1 = 0;
  {
    QVec x = t.solution();
    for (int i = 0; i < m; ++i) p1 += x[art0 + i];
  }
  if (p1 != 0) return {LPStatus::Infeasible, Rat(0), {}};

  // Drive remaining (degenerate) artificials out of the basis.
  for (int i = 0; i < m; ++i) {
    if (t.basis()[i] < art0) continue;
    int enter = -1;
    for (int j = 0; j < art0; ++j)
      if (t.coeff(i, j) != 0) {
        enter = j;
        break;
      }
    if (enter >= 0) t.pivot(i, enter);
    // else: redundant row; leave the artificial basic at value zero.
  }

  // Phase 2: artificial columns are frozen.
  std::vector<bool> allowed(nv, true);
  for (int i = 0; i < m; ++i) allowed[art0 + i] = false;
  QVec c2(nv, Rat(0));
  for (int j = 0; j < n; ++j) {
    c2[j] = objective[j];
    c2[n + j] = -objective[j];
  }
  if (!t.optimize(c2, allowed)) return {LPStatus::Unbounded, Rat(0), {}};

  QVec full = t.solution();
  LPResult res;
  res.status = LPStatus::Optimal;
  res.x.resize(n);
  for (int j = 0; j < n; ++j) res.x[j] = full[j] - full[n + j];
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += objective[j] * res.x[j];
  return res;
}

LPResult lp_minimize(const std::vector<LinConstraint>& constraints,
                     const QVec& objective, int n) {
  QVec neg(objective.size());
  for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  LPResult r = lp_maximize(constraints, neg, n);
  if (r.status == LPStatus::Optimal) r.value = -r.value;
  return r;
}

LPResult lp_feasible(const std::vector<LinConstraint>& constraints, int n) {
  return lp_maximize(constraints, QVec(n, Rat(0)), n);
}

}  // namespace trop
