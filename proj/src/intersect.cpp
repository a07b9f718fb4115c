#include "trop/intersect.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace trop {

namespace {

void check_system(const std::vector<TropicalPolynomial>& fs, bool square) {
  if (fs.empty()) throw Error("empty polynomial system");
  const int n = fs[0].ambient_dim();
  for (const auto& f : fs)
    if (f.ambient_dim() != n) throw DimensionMismatch();
  if (square && static_cast<int>(fs.size()) != n) throw DimensionMismatch();
}

std::string qvec_key(const QVec& v) {
  std::string s;
  for (const auto& c : v) s += rat_to_string(c) + ",";
  return s;
}

std::vector<QVec> exps_to_points(const std::vector<ZVec>& exps) {
  std::vector<QVec> pts;
  for (const auto& e : exps) pts.push_back(to_qvec(e));
  return pts;
}

Int integral_mixed_volume(const std::vector<Polyhedron>& duals) {
  Rat mv = mixed_volume(duals);
  if (mv.get_den() != 1) throw Error("mixed volume is not integral");
  return mv.get_num();
}

}  // namespace

PolyhedralComplex intersection_complex(const std::vector<TropicalPolynomial>& fs) {
  check_system(fs, false);
  PolyhedralComplex acc = hypersurface(fs[0]).complex;
  for (std::size_t i = 1; i < fs.size(); ++i)
    acc = refine_intersect(acc, hypersurface(fs[i]).complex);
  return acc;
}

std::vector<Component> components(const std::vector<TropicalPolynomial>& fs) {
  PolyhedralComplex ic = intersection_complex(fs);
  const auto& cells = ic.cells();
  const int m = static_cast<int>(cells.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (cells[i].intersect(cells[j])) parent[find(i)] = find(j);

  std::map<int, Component> by_root;
  for (int i = 0; i < m; ++i) {
    Component& c = by_root[find(i)];
    c.cells.push_back(cells[i]);
  }
  std::vector<Component> out;
  for (auto& [root, c] : by_root) {
    c.bounded = std::all_of(c.cells.begin(), c.cells.end(),
                            [](const Polyhedron& p) { return p.bounded(); });
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

Polyhedron relax_cell(const Polyhedron& cell, const Rat& eps) {
  const int n = cell.ambient_dim();
  std::vector<LinConstraint> cons;
  for (const auto& e : cell.equations()) {
    QVec u = to_qvec(e.normal);
    QVec neg = scale(u, Rat(-1));
    cons.push_back({std::move(u), e.offset + eps, false});
    cons.push_back({std::move(neg), -e.offset + eps, false});
  }
  for (const auto& h : cell.inequalities())
    cons.push_back({to_qvec(h.normal), h.offset + eps, false});
  return Polyhedron::from_halfspaces(n, cons);
}

std::vector<Polyhedron> maximal_cells(const std::vector<Polyhedron>& cells) {
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (i != j && cells[i].subset_of(cells[j]) && !(cells[i] == cells[j])) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(cells[i]);
  }
  return out;
}

}  // namespace

Thickening thicken(const Component& c, const std::vector<TropicalPolynomial>& fs) {
  check_system(fs, false);
  if (c.cells.empty()) throw Error("empty component");

  std::set<std::string> own;
  for (const auto& cell : c.cells) own.insert(cell.canonical_key());
  std::vector<Polyhedron> foreign;
  for (const auto& other : components(fs)) {
    bool is_self = false;
    for (const auto& cell : other.cells)
      if (own.count(cell.canonical_key())) is_self = true;
    if (!is_self)
      for (const auto& cell : maximal_cells(other.cells))
        foreign.push_back(cell);
  }

  const std::vector<Polyhedron> base = maximal_cells(c.cells);
  Rat eps(1);
  for (int round = 0; round < 300; ++round) {
    std::vector<Polyhedron> relaxed;
    for (const auto& cell : base) relaxed.push_back(relax_cell(cell, eps));
    bool separated = true;
    for (const auto& r : relaxed) {
      for (const auto& f : foreign)
        if (r.intersect(f)) {
          separated = false;
          break;
        }
      if (!separated) break;
    }
    if (separated) return {base, eps, std::move(relaxed)};
    eps /= 2;
  }
  throw Error("thickening failed to separate components");
}

namespace {

struct ProbePoint {
  QVec point;
  std::vector<std::vector<ZVec>> dual_supports;
  std::string combo_key;
};

std::string supports_key(const std::vector<std::vector<ZVec>>& duals) {
  std::string s;
  for (const auto& factor : duals) {
    for (const auto& e : factor) {
      for (const auto& x : e) s += x.get_str() + ",";
      s += ";";
    }
    s += "|";
  }
  return s;
}

bool strictly_inside(const Polyhedron& p, const QVec& v) {
  if (!p.equations().empty()) return false;
  for (const auto& h : p.inequalities())
    if (!(dot(h.normal, v) < h.offset)) return false;
  return true;
}

/// The intersection of the hypersurfaces translated by t * dirs[i] within the
/// thickening, provided it is a finite transverse point set in the interior;
/// nullopt when any admissibility condition fails at this t.
std::optional<std::vector<ProbePoint>> probe(
    const std::vector<TropicalPolynomial>& fs, const std::vector<ZVec>& dirs,
    const Rat& t, const Thickening& th) {
  const int n = fs[0].ambient_dim();
  std::vector<TropicalPolynomial> gs;
  for (std::size_t i = 0; i < fs.size(); ++i)
    gs.push_back(translate(fs[i], scale(to_qvec(dirs[i]), t)));

  PolyhedralComplex ic = intersection_complex(gs);
  std::map<std::string, QVec> pts;
  for (const auto& cell : ic.cells())
    for (const auto& r : th.relaxed) {
      auto x = cell.intersect(r);
      if (!x) continue;
      if (x->dim() > 0) return std::nullopt;
      QVec p = x->relative_interior_point();
      std::string key = qvec_key(p);
      pts.emplace(std::move(key), std::move(p));
    }

  std::vector<ProbePoint> out;
  for (const auto& [key, p] : pts) {
    bool interior = false;
    for (const auto& r : th.relaxed)
      if (strictly_inside(r, p)) {
        interior = true;
        break;
      }
    if (!interior) return std::nullopt;

    ProbePoint pp;
    pp.point = p;
    int codim_sum = 0;
    QMat edge_dirs;
    for (const auto& g : gs) {
      std::vector<ZVec> sup = initial_support(g, p);
      codim_sum += Polyhedron::from_points(exps_to_points(sup)).dim();
      for (std::size_t j = 1; j < sup.size(); ++j)
        edge_dirs.push_back(sub(to_qvec(sup[j]), to_qvec(sup[0])));
      pp.dual_supports.push_back(std::move(sup));
    }
    if (codim_sum != n || rank_of(edge_dirs) != n) return std::nullopt;
    pp.combo_key = supports_key(pp.dual_supports);
    out.push_back(std::move(pp));
  }
  return out;
}

std::vector<std::string> sorted_keys(const std::vector<ProbePoint>& pts) {
  std::vector<std::string> ks;
  for (const auto& p : pts) ks.push_back(p.combo_key);
  std::sort(ks.begin(), ks.end());
  return ks;
}

}  // namespace

TranslationCertificate admissible_translation(
    const Component& c, const std::vector<TropicalPolynomial>& fs,
    std::uint64_t seed) {
  check_system(fs, true);
  const int n = fs[0].ambient_dim();
  Thickening th = thicken(c, fs);

  // the intersection points of the translated hypersurfaces solve linear
  // systems whose normals are exponent differences; their displacement is
  // at most (n * spread)^n times the translation, so the probe magnitude
  // must be shrunk by that factor to keep them inside the thickening
  Int spread = 1;
  for (const auto& f : fs)
    for (int j = 0; j < n; ++j) {
      Int lo = f.terms().front().first[j], hi = lo;
      for (const auto& [nu, w] : f.terms()) {
        lo = std::min(lo, nu[j]);
        hi = std::max(hi, nu[j]);
      }
      spread = std::max(spread, Int(hi - lo));
    }
  Int amplification = 1;
  for (int i = 0; i < n; ++i) amplification *= n * spread;

  SplitMix64 rng(seed);
  const int cap = 60;
  for (int attempt = 0; attempt < cap; ++attempt) {
    const long bound = 1 + attempt / 6;
    std::vector<ZVec> dirs;
    long max_entry = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      ZVec d(n);
      for (int j = 0; j < n; ++j) {
        long e = rng.next_in(-bound, bound);
        d[j] = Int(e);
        max_entry = std::max(max_entry, std::abs(e));
      }
      dirs.push_back(std::move(d));
    }

    Rat eps = th.epsilon / (2 * max_entry * amplification);
    for (int halving = 0; halving < 12; ++halving, eps /= 2) {
      auto a = probe(fs, dirs, eps, th);
      if (!a) continue;
      auto b = probe(fs, dirs, eps / 2, th);
      if (!b || sorted_keys(*a) != sorted_keys(*b)) continue;

      TranslationCertificate cert;
      cert.directions = dirs;
      cert.epsilon = eps;
      cert.thickening = th;
      for (auto& p : *a)
        cert.points.push_back({std::move(p.point), std::move(p.dual_supports)});
      cert.seed = seed;
      cert.attempts = attempt + 1;
      return cert;
    }
  }
  throw GenericityFailure("retry cap of " + std::to_string(cap) +
                          " direction samples reached");
}

MultiplicityReport point_multiplicity(const std::vector<TropicalPolynomial>& fs,
                                      const ExtendedPoint& v) {
  check_system(fs, true);
  if (!v.is_ordinary()) throw BoundaryStratum();
  const QVec& p = v.coset;
  if (static_cast<int>(p.size()) != fs[0].ambient_dim())
    throw DimensionMismatch();

  bool found = false;
  const PolyhedralComplex ic = intersection_complex(fs);
  for (const auto& cell : ic.cells())
    if (cell.contains(p)) {
      if (cell.dim() > 0) throw NotIsolated();
      found = true;
    }
  if (!found) throw NotIsolated();

  MultiplicityReport report;
  report.locus_point = v;
  for (const auto& f : fs)
    report.dual_cells.push_back(
        Polyhedron::from_points(exps_to_points(initial_support(f, p))));
  report.multiplicity = integral_mixed_volume(report.dual_cells);
  return report;
}

MultiplicityReport stable_multiplicity(const Component& c,
                                       const std::vector<TropicalPolynomial>& fs,
                                       std::uint64_t seed, int cross_checks) {
  check_system(fs, true);
  if (cross_checks < 1) throw Error("at least one seed is required");

  MultiplicityReport report;
  SplitMix64 seeder(seed);
  std::optional<Int> total;
  for (int run = 0; run < cross_checks; ++run) {
    const std::uint64_t s = run == 0 ? seed : seeder.next();
    TranslationCertificate cert = admissible_translation(c, fs, s);
    Int sum = 0;
    for (const auto& pt : cert.points) {
      std::vector<Polyhedron> duals;
      for (const auto& sup : pt.dual_supports)
        duals.push_back(Polyhedron::from_points(exps_to_points(sup)));
      sum += integral_mixed_volume(duals);
      if (run == 0 && cert.points.size() == 1) report.dual_cells = duals;
    }
    if (total && *total != sum) throw WellDefinednessViolation();
    total = sum;
    report.certificates.push_back(std::move(cert));
  }
  report.component_id = 0;
  report.multiplicity = *total;
  return report;
}

std::vector<ExtendedPoint> component_closure(
    const Component& c, const std::vector<TropicalPolynomial>& fs,
    const Fan& delta) {
  check_system(fs, false);

  std::vector<std::pair<Polyhedron, std::vector<Polyhedron>>> per_tau;
  for (const auto& cell : c.cells) {
    ExtendedPolyhedron ext = [&] {
      try {
        return closure_polyhedron(cell, delta);
      } catch (const ConeNotInFan&) {
        throw FanNotCompatible();
      }
    }();
    for (auto& [tau, proj] : ext.strata) {
      if (tau.dim() == 0) continue;
      auto it = std::find_if(per_tau.begin(), per_tau.end(),
                             [&](const auto& e) { return e.first == tau; });
      if (it == per_tau.end())
        per_tau.push_back({tau, {proj}});
      else
        it->second.push_back(proj);
    }
  }

  std::vector<ExtendedPoint> out;
  for (const auto& [tau, projs] : per_tau) {
    std::vector<TropicalHypersurface> hs;
    for (const auto& f : fs) hs.push_back(hypersurface(stratum_polynomial(f, tau)));
    for (const auto& proj : projs) {
      std::vector<Polyhedron> pieces = {proj};
      for (const auto& h : hs) {
        std::vector<Polyhedron> next;
        for (const auto& piece : pieces)
          for (const auto& cell : h.complex.cells())
            if (auto x = piece.intersect(cell)) next.push_back(std::move(*x));
        pieces = std::move(next);
      }
      for (const auto& piece : pieces) {
        if (piece.dim() > 0) throw NotFinite();
        ExtendedPoint ep{tau, piece.relative_interior_point()};
        if (std::find(out.begin(), out.end(), ep) == out.end())
          out.push_back(std::move(ep));
      }
    }
  }
  return out;
}

}  // namespace trop
