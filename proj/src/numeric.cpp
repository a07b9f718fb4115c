#include "trop/numeric.hpp"

#include <stdexcept>

namespace trop {

QVec to_qvec(const ZVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

ZVec scaled_integral(const QVec& v) {
  Int lcm = 1;
  for (const auto& q : v) {
    Int d = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat q = v[i] * Rat(lcm);
    out[i] = q.get_num();
  }
  return primitive(out);
}

ZVec primitive(const ZVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return v;
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const ZVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const ZVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec scale(const QVec& a, const Rat& c) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

RowEchelon row_reduce(const QMat& m) {
  RowEchelon re;
  if (m.empty()) return re;
  QMat work = m;
  const int ncols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(work.size()); ++col) {
    int piv = -1;
    for (int r = row; r < static_cast<int>(work.size()); ++r)
      if (work[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(work[row], work[piv]);
    Rat inv = 1 / work[row][col];
    for (int c = col; c < ncols; ++c) work[row][c] *= inv;
    for (int r = 0; r < static_cast<int>(work.size()); ++r) {
      if (r == row || work[r][col] == 0) continue;
      Rat f = work[r][col];
      for (int c = col; c < ncols; ++c) work[r][c] -= f * work[row][c];
    }
    re.pivots.push_back(col);
    ++row;
  }
  re.rows.assign(work.begin(), work.begin() + row);
  return re;
}

int rank_of(const QMat& m) { return row_reduce(m).rank(); }

Rat det(const QMat& m) {
  const int n = static_cast<int>(m.size());
  QMat work = m;
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(work[col], work[piv]);
      d = -d;
    }
    d *= work[col][col];
    Rat inv = 1 / work[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (work[r][col] == 0) continue;
      Rat f = work[r][col] * inv;
      for (int c = col; c < n; ++c) work[r][c] -= f * work[col][c];
    }
  }
  return d;
}

std::vector<QVec> kernel_basis(const QMat& m, int ncols) {
  RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : re.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, Rat(0));
    v[free] = 1;
    for (int r = 0; r < re.rank(); ++r) v[re.pivots[r]] = -re.rows[r][free];
    basis.push_back(v);
  }
  return basis;
}

bool solve_linear(const QMat& rows, const QVec& rhs, QVec& out) {
  if (rows.empty()) return false;
  const int ncols = static_cast<int>(rows[0].size());
  QMat aug = rows;
  for (std::size_t r = 0; r < rows.size(); ++r) aug[r].push_back(rhs[r]);
  RowEchelon re = row_reduce(aug);
  for (int r = 0; r < re.rank(); ++r)
    if (re.pivots[r] == ncols) return false;  // 0 = 1 row
  out.assign(ncols, Rat(0));
  for (int r = 0; r < re.rank(); ++r) out[re.pivots[r]] = re.rows[r][ncols];
  // solution is valid only if free columns may be set to zero; verify
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (dot(rows[r], out) != rhs[r]) return false;
  return true;
}

namespace {

// Hermite-style column reduction used inside the Smith splitting: returns a
// unimodular U with U * g in column echelon form over Z.
void swap_rows(ZMat& m, int a, int b) { std::swap(m[a], m[b]); }

void add_row(ZMat& m, int dst, int src, const Int& f) {
  for (std::size_t c = 0; c < m[dst].size(); ++c) m[dst][c] += f * m[src][c];
}

}  // namespace

ZMat lattice_splitting(const ZMat& generators_cols, int n, int& rank_out) {
  // Work on the transpose: rows = generators.  Compute unimodular V (n x n)
  // with rows of (G^T * V^T)... easier: bring the n x m matrix G to Smith-like
  // form U G W = D; the saturation of the column span is spanned by the first
  // k columns of U^{-1}.  We only need U^{-1}, built as the inverse sequence
  // of row operations applied to the identity.
  int m = generators_cols.empty() ? 0 : static_cast<int>(generators_cols.size());
  // generators_cols: list of columns, each of size n. Assemble A (n x m).
  ZMat a(n, ZVec(m, Int(0)));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) a[i][j] = generators_cols[j][i];

  // uinv accumulates the inverse row operations: A_orig = uinv * A_current.
  ZMat uinv(n, ZVec(n, Int(0)));
  for (int i = 0; i < n; ++i) uinv[i][i] = 1;

  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    // eliminate below using gcd steps (euclidean) on rows row..n-1 of column col
    while (true) {
      int piv = -1;
      for (int r = row; r < n; ++r)
        if (a[r][col] != 0) {
          piv = (piv < 0 || abs(a[r][col]) < abs(a[piv][col])) ? r : piv;
        }
      if (piv < 0) break;
      if (piv != row) {
        swap_rows(a, row, piv);
        // uinv: swapping rows r,s of A means swapping columns r,s of uinv
        for (int i = 0; i < n; ++i) std::swap(uinv[i][row], uinv[i][piv]);
      }
      bool clean = true;
      for (int r = row + 1; r < n; ++r) {
        if (a[r][col] == 0) continue;
        Int q = a[r][col] / a[row][col];  // truncated division is fine here
        if (q != 0) {
          add_row(a, r, row, -q);
          // A' = E A with E adding -q*row to r  =>  uinv' = uinv * E^{-1},
          // i.e. column r of uinv gets +q * column... E^{-1} adds +q*row_row
          // to row_r; uinv * E^{-1}: col_row += q * col_r.
          for (int i = 0; i < n; ++i) uinv[i][row] += q * uinv[i][r];
        }
        if (a[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] != 0) {
      if (a[row][col] < 0) {
        for (int c = 0; c < m; ++c) a[row][c] = -a[row][c];
        for (int i = 0; i < n; ++i) uinv[i][row] = -uinv[i][row];
      }
      ++row;
    }
  }
  rank_out = row;
  // Columns of uinv: first `row` columns span the saturation of the column
  // span of A; the rest complete a basis of Z^n.  (A_orig = uinv * A_echelon,
  // and A_echelon has its nonzero rows among the first `row`.)
  return uinv;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::next_in(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

}  // namespace trop
