#include "trop/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace trop {

namespace {

// Scale (normal, offset) by a positive rational so the normal becomes a
// primitive integer vector.  The normal must be nonzero.
Halfspace primitive_halfspace(const QVec& normal, const Rat& offset) {
  ZVec zn = scaled_integral(normal);
  int nz = 0;
  while (normal[nz] == 0) ++nz;
  Rat factor = Rat(zn[nz]) / normal[nz];
  return {std::move(zn), offset * factor};
}

std::string zvec_key(const ZVec& v) {
  std::string s;
  for (const auto& c : v) {
    s += c.get_str();
    s += ',';
  }
  return s;
}

std::string halfspace_key(const Halfspace& h) {
  return zvec_key(h.normal) + ':' + rat_to_string(h.offset);
}

bool zvec_less(const ZVec& a, const ZVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return zvec_less(a.normal, b.normal);
  return a.offset < b.offset;
}

// Iterate over all k-subsets of {0,...,m-1}.
bool next_subset(std::vector<int>& idx, int m) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < m - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<LinConstraint> Polyhedron::lp_constraints() const {
  std::vector<LinConstraint> cons;
  for (const auto& e : equations_) cons.push_back({to_qvec(e.normal), e.offset, true});
  for (const auto& h : inequalities_) cons.push_back({to_qvec(h.normal), h.offset, false});
  return cons;
}

Polyhedron Polyhedron::from_halfspaces(int n, const std::vector<LinConstraint>& cons) {
  auto p = try_from_halfspaces(n, cons);
  if (!p) throw EmptyPolyhedron();
  return std::move(*p);
}

std::optional<Polyhedron> Polyhedron::try_from_halfspaces(
    int n, const std::vector<LinConstraint>& cons) {
  for (const auto& c : cons)
    if (static_cast<int>(c.coeffs.size()) != n) throw DimensionMismatch();

  LPResult feas = lp_feasible(cons, n);
  if (feas.status == LPStatus::Infeasible) return std::nullopt;

  // Split into equations and inequalities; detect implicit equalities by
  // minimizing each inequality that is tight at the feasibility witness.
  QMat eq_rows;  // length n+1: (normal | offset)
  std::vector<std::pair<QVec, Rat>> ineqs;
  for (const auto& c : cons) {
    if (is_zero(c.coeffs)) continue;  // trivial (feasibility already checked)
    if (c.equality) {
      QVec row = c.coeffs;
      row.push_back(c.rhs);
      eq_rows.push_back(std::move(row));
    } else {
      bool implicit = false;
      if (dot(c.coeffs, feas.x) == c.rhs) {
        LPResult r = lp_minimize(cons, c.coeffs, n);
        implicit = (r.status == LPStatus::Optimal && r.value == c.rhs);
      }
      if (implicit) {
        QVec row = c.coeffs;
        row.push_back(c.rhs);
        eq_rows.push_back(std::move(row));
      } else {
        ineqs.push_back({c.coeffs, c.rhs});
      }
    }
  }

  Polyhedron p;
  p.n_ = n;

  RowEchelon re = row_reduce(eq_rows);
  for (const auto& row : re.rows) {
    QVec normal(row.begin(), row.begin() + n);
    // a pivot in the offset column would mean 0 = 1, impossible when feasible
    p.equations_.push_back(primitive_halfspace(normal, row[n]));
  }

  // Reduce inequality normals modulo the equations (using RREF pivots) so
  // the representation of lower-dimensional polyhedra is unique.
  std::map<std::string, Halfspace> dedup;
  for (auto& [normal, offset] : ineqs) {
    for (std::size_t r = 0; r < re.rows.size(); ++r) {
      int piv = re.pivots[r];
      if (normal[piv] == 0) continue;
      Rat c = normal[piv];  // RREF pivot entries are 1
      for (int j = 0; j < n; ++j) normal[j] -= c * re.rows[r][j];
      offset -= c * re.rows[r][n];
    }
    if (is_zero(normal)) continue;
    Halfspace h = primitive_halfspace(normal, offset);
    std::string key = zvec_key(h.normal);
    auto it = dedup.find(key);
    if (it == dedup.end())
      dedup.emplace(key, std::move(h));
    else if (h.offset < it->second.offset)
      it->second.offset = h.offset;
  }
  std::vector<Halfspace> kept;
  for (auto& [k, h] : dedup) kept.push_back(std::move(h));

  // Remove redundant inequalities one at a time.
  std::vector<bool> removed(kept.size(), false);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<LinConstraint> sub;
    for (const auto& e : p.equations_)
      sub.push_back({to_qvec(e.normal), e.offset, true});
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i || removed[j]) continue;
      sub.push_back({to_qvec(kept[j].normal), kept[j].offset, false});
    }
    LPResult r = lp_maximize(sub, to_qvec(kept[i].normal), n);
    if (r.status == LPStatus::Optimal && r.value <= kept[i].offset) removed[i] = true;
  }
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (!removed[i]) p.inequalities_.push_back(std::move(kept[i]));
  std::sort(p.inequalities_.begin(), p.inequalities_.end(), halfspace_less);
  return p;
}

int Polyhedron::dim() const { return n_ - static_cast<int>(equations_.size()); }

bool Polyhedron::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != n_) throw DimensionMismatch();
  for (const auto& e : equations_)
    if (dot(e.normal, v) != e.offset) return false;
  for (const auto& h : inequalities_)
    if (dot(h.normal, v) > h.offset) return false;
  return true;
}

bool Polyhedron::subset_of(const Polyhedron& other) const {
  if (n_ != other.n_) throw DimensionMismatch();
  auto cons = lp_constraints();
  auto check_upper = [&](const ZVec& u, const Rat& a) {
    LPResult r = lp_maximize(cons, to_qvec(u), n_);
    return r.status == LPStatus::Optimal && r.value <= a;
  };
  for (const auto& e : other.equations_) {
    if (!check_upper(e.normal, e.offset)) return false;
    LPResult r = lp_minimize(cons, to_qvec(e.normal), n_);
    if (!(r.status == LPStatus::Optimal && r.value >= e.offset)) return false;
  }
  for (const auto& h : other.inequalities_)
    if (!check_upper(h.normal, h.offset)) return false;
  return true;
}

const std::string& Polyhedron::canonical_key() const {
  if (key_.empty()) {
    std::string s = "E";
    for (const auto& e : equations_) s += '|' + halfspace_key(e);
    s += "#I";
    for (const auto& h : inequalities_) s += '|' + halfspace_key(h);
    key_ = std::move(s);
  }
  return key_;
}

Polyhedron Polyhedron::face(const ZVec& u) const {
  if (static_cast<int>(u.size()) != n_) throw DimensionMismatch();
  auto cons = lp_constraints();
  LPResult r = lp_maximize(cons, to_qvec(u), n_);
  if (r.status == LPStatus::Unbounded) throw UnboundedDirection();
  cons.push_back({to_qvec(u), r.value, true});
  return from_halfspaces(n_, cons);
}

std::vector<Polyhedron> Polyhedron::all_faces() const {
  std::map<std::string, Polyhedron> seen;
  std::vector<Polyhedron> queue{*this};
  seen.emplace(canonical_key(), *this);
  while (!queue.empty()) {
    Polyhedron p = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < p.inequalities_.size(); ++i) {
      auto cons = p.lp_constraints();
      cons[p.equations_.size() + i].equality = true;
      auto f = try_from_halfspaces(n_, cons);
      if (!f) continue;
      if (seen.emplace(f->canonical_key(), *f).second) queue.push_back(std::move(*f));
    }
  }
  std::vector<Polyhedron> out;
  for (auto& [k, p] : seen) out.push_back(std::move(p));
  return out;
}

void Polyhedron::compute_vrep() const {
  if (vrep_done_) return;
  vrep_done_ = true;

  QMat all_normals;
  for (const auto& e : equations_) all_normals.push_back(to_qvec(e.normal));
  for (const auto& h : inequalities_) all_normals.push_back(to_qvec(h.normal));
  for (const auto& k : kernel_basis(all_normals, n_))
    lineality_.push_back(primitive(scaled_integral(k)));
  if (!lineality_.empty()) return;

  const int neq = static_cast<int>(equations_.size());
  const int m = static_cast<int>(inequalities_.size());
  QMat eqm;
  QVec eqr;
  for (const auto& e : equations_) {
    eqm.push_back(to_qvec(e.normal));
    eqr.push_back(e.offset);
  }

  // vertices: bases of n - neq tight inequalities
  const int k = n_ - neq;
  std::set<std::string> vseen;
  if (k <= m || k == 0) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    bool more = (k == 0) || (k <= m);
    while (more) {
      QMat rows = eqm;
      QVec rhs = eqr;
      for (int i : idx) {
        rows.push_back(to_qvec(inequalities_[i].normal));
        rhs.push_back(inequalities_[i].offset);
      }
      if (rank_of(rows) == n_) {
        QVec x;
        if (solve_linear(rows, rhs, x) && contains(x)) {
          std::string key;
          for (const auto& c : x) key += rat_to_string(c) + ',';
          if (vseen.insert(key).second) vertices_.push_back(std::move(x));
        }
      }
      more = (k > 0) && next_subset(idx, m);
    }
  }

  // extreme rays: rank n-1 tight subsets of the recession cone
  if (k >= 1 && k - 1 <= m) {
    std::set<std::string> rseen;
    std::vector<int> idx(k - 1);
    for (int i = 0; i < k - 1; ++i) idx[i] = i;
    bool more = true;
    while (more) {
      QMat rows = eqm;
      for (int i : idx) rows.push_back(to_qvec(inequalities_[i].normal));
      auto kern = kernel_basis(rows, n_);
      if (kern.size() == 1) {
        ZVec d = primitive(scaled_integral(kern[0]));
        bool ok_pos = true, ok_neg = true;
        for (const auto& h : inequalities_) {
          Int s = dot(h.normal, d);
          if (s > 0) ok_pos = false;
          if (s < 0) ok_neg = false;
        }
        if (ok_pos || ok_neg) {
          if (!ok_pos)
            for (auto& c : d) c = -c;
          if (rseen.insert(zvec_key(d)).second) rays_.push_back(std::move(d));
        }
      }
      more = (k > 1) && next_subset(idx, m);
    }
  }
}

const std::vector<QVec>& Polyhedron::vertices() const {
  compute_vrep();
  if (!lineality_.empty()) throw NotPointed();
  return vertices_;
}

const std::vector<ZVec>& Polyhedron::rays() const {
  compute_vrep();
  if (!lineality_.empty()) throw NotPointed();
  return rays_;
}

const std::vector<ZVec>& Polyhedron::lineality() const {
  compute_vrep();
  return lineality_;
}

bool Polyhedron::pointed() const {
  compute_vrep();
  return lineality_.empty();
}

bool Polyhedron::bounded() const {
  compute_vrep();
  return lineality_.empty() && rays_.empty();
}

bool Polyhedron::is_cone() const {
  for (const auto& e : equations_)
    if (e.offset != 0) return false;
  for (const auto& h : inequalities_)
    if (h.offset != 0) return false;
  return true;
}

std::vector<ZVec> Polyhedron::cone_generators() const {
  compute_vrep();
  std::vector<ZVec> gens = rays_;
  for (const auto& l : lineality_) {
    gens.push_back(l);
    ZVec neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    gens.push_back(std::move(neg));
  }
  return gens;
}

Polyhedron Polyhedron::recession_cone() const {
  std::vector<LinConstraint> cons;
  for (const auto& e : equations_) cons.push_back({to_qvec(e.normal), Rat(0), true});
  for (const auto& h : inequalities_) cons.push_back({to_qvec(h.normal), Rat(0), false});
  return from_halfspaces(n_, cons);
}

std::optional<Polyhedron> Polyhedron::intersect(const Polyhedron& other) const {
  if (n_ != other.n_) throw DimensionMismatch();
  auto cons = lp_constraints();
  auto more = other.lp_constraints();
  cons.insert(cons.end(), more.begin(), more.end());
  return try_from_halfspaces(n_, cons);
}

Polyhedron Polyhedron::translate(const QVec& t) const {
  if (static_cast<int>(t.size()) != n_) throw DimensionMismatch();
  Polyhedron p;
  p.n_ = n_;
  p.equations_ = equations_;
  p.inequalities_ = inequalities_;
  for (auto& e : p.equations_) e.offset += dot(e.normal, t);
  for (auto& h : p.inequalities_) h.offset += dot(h.normal, t);
  return p;
}

QVec Polyhedron::relative_interior_point() const {
  if (inequalities_.empty()) {
    LPResult r = lp_feasible(lp_constraints(), n_);
    return r.x;
  }
  // maximize t subject to <u,x> + t <= a for each inequality, capped t <= 1
  std::vector<LinConstraint> cons;
  for (const auto& e : equations_) {
    QVec c = to_qvec(e.normal);
    c.push_back(Rat(0));
    cons.push_back({std::move(c), e.offset, true});
  }
  for (const auto& h : inequalities_) {
    QVec c = to_qvec(h.normal);
    c.push_back(Rat(1));
    cons.push_back({std::move(c), h.offset, false});
  }
  {
    QVec c(n_ + 1, Rat(0));
    c[n_] = 1;
    cons.push_back({std::move(c), Rat(1), false});
  }
  QVec obj(n_ + 1, Rat(0));
  obj[n_] = 1;
  LPResult r = lp_maximize(cons, obj, n_ + 1);
  QVec x(r.x.begin(), r.x.begin() + n_);
  return x;
}

Polyhedron Polyhedron::full_space(int n) { return from_halfspaces(n, {}); }

Polyhedron Polyhedron::single_point(const QVec& v) {
  const int n = static_cast<int>(v.size());
  std::vector<LinConstraint> cons;
  for (int i = 0; i < n; ++i) {
    QVec c(n, Rat(0));
    c[i] = 1;
    cons.push_back({std::move(c), v[i], true});
  }
  return from_halfspaces(n, cons);
}

Polyhedron Polyhedron::cone_from_generators(int n, const std::vector<ZVec>& gens_in) {
  std::vector<ZVec> gens;
  for (const auto& g : gens_in) {
    if (static_cast<int>(g.size()) != n) throw DimensionMismatch();
    if (!is_zero(g)) gens.push_back(g);
  }
  std::vector<LinConstraint> cons;
  QMat grows;
  for (const auto& g : gens) grows.push_back(to_qvec(g));
  auto span_perp = kernel_basis(grows, n);
  for (const auto& u : span_perp) cons.push_back({u, Rat(0), true});
  const int d = n - static_cast<int>(span_perp.size());

  if (d > 0) {
    // span basis from row reduction
    QMat span_basis = row_reduce(grows).rows;
    const int m = static_cast<int>(gens.size());
    std::set<std::string> seen;
    std::vector<int> idx(d - 1);
    for (int i = 0; i < d - 1; ++i) idx[i] = i;
    bool more = (d - 1 <= m);
    while (more) {
      // u in span(gens) orthogonal to the chosen subset: u = lambda . B with
      // (subset x B^T) lambda = 0
      QMat msub;
      for (int i : idx) {
        QVec row(d);
        for (int j = 0; j < d; ++j) row[j] = dot(gens[i], span_basis[j]);
        msub.push_back(std::move(row));
      }
      auto kern = kernel_basis(msub, d);
      if (kern.size() == 1) {
        QVec u(n, Rat(0));
        for (int j = 0; j < d; ++j)
          for (int c = 0; c < n; ++c) u[c] += kern[0][j] * span_basis[j][c];
        ZVec zu = primitive(scaled_integral(u));
        bool ok_pos = true, ok_neg = true;
        for (const auto& g : gens) {
          Int s = dot(zu, g);
          if (s > 0) ok_pos = false;
          if (s < 0) ok_neg = false;
        }
        if (ok_pos || ok_neg) {
          if (!ok_pos)
            for (auto& c : zu) c = -c;
          if (seen.insert(zvec_key(zu)).second)
            cons.push_back({to_qvec(zu), Rat(0), false});
        }
      }
      more = (d > 1) && next_subset(idx, m);
    }
  }
  return from_halfspaces(n, cons);
}

Polyhedron Polyhedron::from_generators(const std::vector<QVec>& points,
                                       const std::vector<ZVec>& rays) {
  if (points.empty()) throw EmptyPolyhedron();
  const int n = static_cast<int>(points[0].size());
  std::vector<ZVec> gens;
  for (const auto& p : points) {
    QVec h = p;
    h.push_back(Rat(1));
    gens.push_back(scaled_integral(h));
  }
  for (const auto& r : rays) {
    ZVec h = r;
    h.push_back(Int(0));
    gens.push_back(std::move(h));
  }
  Polyhedron cone = cone_from_generators(n + 1, gens);
  std::vector<LinConstraint> cons;
  for (const auto& e : cone.equations()) {
    QVec u(e.normal.begin(), e.normal.begin() + n);
    cons.push_back({std::move(u), Rat(-e.normal[n]), true});
  }
  for (const auto& h : cone.inequalities()) {
    QVec u(h.normal.begin(), h.normal.begin() + n);
    cons.push_back({std::move(u), Rat(-h.normal[n]), false});
  }
  return from_halfspaces(n, cons);
}

Polyhedron Polyhedron::from_points(const std::vector<QVec>& points) {
  return from_generators(points, {});
}

}  // namespace trop
