#include "trop/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace trop {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing

const json& need(const json& o, const char* key, const char* where) {
  auto it = o.find(key);
  if (it == o.end())
    throw InputError(std::string("missing field '") + key + "' in " + where);
  return *it;
}

Rat rat_field(const json& v, const char* where) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) {
    try {
      return rat_from_string(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError(std::string("expected a rational string in ") + where);
}

ZVec zvec_field(const json& v, int n, const char* where) {
  if (!v.is_array() || (n >= 0 && static_cast<int>(v.size()) != n))
    throw InputError(std::string("expected an integer vector of length ") +
                     std::to_string(n) + " in " + where);
  ZVec out;
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw InputError(std::string("expected integer entries in ") + where);
    out.push_back(Int(e.get<long>()));
  }
  return out;
}

UPoly upoly_field(const json& v, const char* where) {
  if (!v.is_array()) throw InputError(std::string("expected a coefficient array in ") + where);
  UPoly out;
  for (const auto& e : v) out.push_back(rat_field(e, where));
  return upoly_trim(std::move(out));
}

std::vector<LinConstraint> constraints_field(const json& v, int n,
                                             const char* where) {
  std::vector<LinConstraint> cons;
  auto take = [&](const json& arr, bool eq) {
    if (!arr.is_array()) throw InputError(std::string("expected a constraint list in ") + where);
    for (const auto& c : arr) {
      LinConstraint lc;
      lc.coeffs = to_qvec(zvec_field(need(c, "normal", where), n, where));
      lc.rhs = rat_field(need(c, "offset", where), where);
      lc.equality = eq;
      cons.push_back(std::move(lc));
    }
  };
  if (v.contains("inequalities")) take(v["inequalities"], false);
  if (v.contains("equations")) take(v["equations"], true);
  return cons;
}

}  // namespace

SystemDocument parse_system(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  SystemDocument sys;
  const json& dim = need(doc, "dim", "document");
  if (!dim.is_number_integer() || dim.get<int>() < 1)
    throw InputError("dim must be a positive integer");
  sys.dim = dim.get<int>();

  const json& val = need(doc, "valuation", "document");
  std::string model = need(val, "model", "valuation").get<std::string>();
  if (model == "p-adic") {
    sys.model = ValuationModel::PAdic;
    const json& p = need(val, "prime", "valuation");
    if (!p.is_number_integer() || p.get<long>() < 2)
      throw InputError("prime must be an integer >= 2");
    sys.prime = Int(p.get<long>());
  } else if (model == "parameter") {
    sys.model = ValuationModel::Parameter;
  } else if (model == "explicit") {
    sys.model = ValuationModel::Explicit;
  } else {
    throw InputError("valuation model must be p-adic, parameter or explicit");
  }

  const json& polys = need(doc, "polynomials", "document");
  if (!polys.is_array()) throw InputError("polynomials must be a list");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::string where = "polynomial " + std::to_string(i);
    const json& terms = need(polys[i], "terms", where.c_str());
    if (!terms.is_array() || terms.empty())
      throw InputError(where + " needs a nonempty term list");
    bool has_coeff = false, has_val = false;
    std::vector<LiteralTerm> lit;
    std::vector<std::pair<ZVec, Rat>> trop;
    for (const auto& t : terms) {
      ZVec exp = zvec_field(need(t, "exp", where.c_str()), sys.dim, where.c_str());
      if (t.contains("coeff") == t.contains("val"))
        throw InputError(where + ": each term needs exactly one of coeff, val");
      if (t.contains("coeff")) {
        has_coeff = true;
        FieldElem c;
        if (t["coeff"].is_object()) {
          c.num = upoly_field(need(t["coeff"], "num", where.c_str()), where.c_str());
          if (t["coeff"].contains("den"))
            c.den = upoly_field(t["coeff"]["den"], where.c_str());
          if (c.den.empty()) throw InputError(where + ": zero denominator");
        } else {
          c = fe(rat_field(t["coeff"], where.c_str()));
        }
        lit.push_back({exp, std::move(c)});
      } else {
        has_val = true;
        trop.push_back({exp, rat_field(t["val"], where.c_str())});
      }
    }
    if (has_coeff && has_val)
      throw InputError(where + " mixes coeff and val terms");
    if (has_coeff && sys.model == ValuationModel::Explicit)
      throw InputError(where + " has coefficients under the explicit model");
    try {
      if (has_coeff) {
        CoeffModel m = sys.model == ValuationModel::PAdic ? CoeffModel::PAdic
                                                          : CoeffModel::Parameter;
        LiteralPolynomial f = make_literal(sys.dim, m, sys.prime, std::move(lit));
        sys.polynomials.push_back(tropicalize(f));
        sys.literals.push_back(std::move(f));
      } else {
        sys.polynomials.push_back(TropicalPolynomial(sys.dim, std::move(trop)));
        sys.literals.push_back(std::nullopt);
      }
    } catch (const Error& e) {
      throw InputError(where + ": " + e.what());
    }
  }

  if (doc.contains("series")) {
    for (std::size_t i = 0; i < doc["series"].size(); ++i) {
      std::string where = "series " + std::to_string(i);
      const json& s = doc["series"][i];
      std::vector<std::pair<ZVec, Rat>> terms;
      for (const auto& t : need(s, "terms", where.c_str()))
        terms.push_back({zvec_field(need(t, "exp", where.c_str()), sys.dim,
                                    where.c_str()),
                         rat_field(need(t, "val", where.c_str()), where.c_str())});
      try {
        Polyhedron domain = Polyhedron::from_halfspaces(
            sys.dim, constraints_field(need(s, "domain", where.c_str()), sys.dim,
                                       where.c_str()));
        sys.series.push_back(make_series(
            std::move(domain), std::move(terms),
            rat_field(need(s, "tail_bound", where.c_str()), where.c_str())));
      } catch (const Error& e) {
        throw InputError(where + ": " + e.what());
      }
    }
  }

  if (doc.contains("fans")) {
    for (std::size_t i = 0; i < doc["fans"].size(); ++i) {
      std::string where = "fan " + std::to_string(i);
      std::vector<Polyhedron> cones;
      for (const auto& c : need(doc["fans"][i], "cones", where.c_str())) {
        std::vector<ZVec> gens;
        for (const auto& g : c) gens.push_back(zvec_field(g, sys.dim, where.c_str()));
        cones.push_back(Polyhedron::cone_from_generators(sys.dim, gens));
      }
      try {
        sys.fans.push_back(Fan::from_cones(sys.dim, cones));
      } catch (const Error& e) {
        throw InputError(where + ": " + e.what());
      }
    }
  }
  return sys;
}

namespace {

// ------------------------------------------------------------- emission

json jrat(const Rat& q) { return rat_to_string(q); }

json jqvec(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

json jzvec(const ZVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(static_cast<long>(x.get_si()));
  return a;
}

json jhalfspaces(const std::vector<Halfspace>& hs) {
  json a = json::array();
  for (const auto& h : hs)
    a.push_back({{"normal", jzvec(h.normal)}, {"offset", jrat(h.offset)}});
  return a;
}

json jpolyhedron(const Polyhedron& p) {
  json o;
  o["dim"] = p.dim();
  o["equations"] = jhalfspaces(p.equations());
  o["inequalities"] = jhalfspaces(p.inequalities());
  o["pointed"] = p.pointed();
  if (p.pointed()) {
    json vs = json::array();
    for (const auto& v : p.vertices()) vs.push_back(jqvec(v));
    o["vertices"] = vs;
    json rs = json::array();
    for (const auto& r : p.rays()) rs.push_back(jzvec(r));
    o["rays"] = rs;
  } else {
    json ls = json::array();
    for (const auto& l : p.lineality()) ls.push_back(jzvec(l));
    o["lineality"] = ls;
  }
  o["interior_point"] = jqvec(p.relative_interior_point());
  return o;
}

json jextended(const ExtendedPoint& ep) {
  json o;
  o["ordinary"] = ep.is_ordinary();
  json gens = json::array();
  if (ep.stratum.dim() > 0)
    for (const auto& g : ep.stratum.cone_generators()) gens.push_back(jzvec(g));
  o["stratum_generators"] = gens;
  o["coset"] = jqvec(ep.coset);
  return o;
}

json jcertificate(const TranslationCertificate& cert) {
  json o;
  o["seed"] = cert.seed;
  o["attempts"] = cert.attempts;
  o["epsilon"] = jrat(cert.epsilon);
  o["thickening_epsilon"] = jrat(cert.thickening.epsilon);
  json dirs = json::array();
  for (const auto& d : cert.directions) dirs.push_back(jzvec(d));
  o["directions"] = dirs;
  json pts = json::array();
  for (const auto& p : cert.points) {
    json supports = json::array();
    for (const auto& sup : p.dual_supports) {
      json s = json::array();
      for (const auto& nu : sup) s.push_back(jzvec(nu));
      supports.push_back(s);
    }
    pts.push_back({{"point", jqvec(p.point)}, {"dual_supports", supports}});
  }
  o["points"] = pts;
  return o;
}

json jreport(const MultiplicityReport& r) {
  json o;
  o["multiplicity"] = r.multiplicity.get_str();
  if (r.locus_point) o["locus_point"] = jextended(*r.locus_point);
  if (r.component_id >= 0) o["component"] = r.component_id;
  json duals = json::array();
  for (const auto& d : r.dual_cells) duals.push_back(jpolyhedron(d));
  o["dual_cells"] = duals;
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(jcertificate(c));
  o["certificates"] = certs;
  return o;
}

json jhypersurface(const TropicalHypersurface& h) {
  json o;
  o["ambient_dim"] = h.ambient_dim;
  std::vector<const HypersurfaceCell*> order;
  for (const auto& c : h.cells) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const HypersurfaceCell* a, const HypersurfaceCell* b) {
              return a->cell.canonical_key() < b->cell.canonical_key();
            });
  json cells = json::array();
  for (const HypersurfaceCell* c : order) {
    json cell;
    cell["cell"] = jpolyhedron(c->cell);
    json sup = json::array();
    for (const auto& nu : c->dual_support) sup.push_back(jzvec(nu));
    cell["dual_support"] = sup;
    cells.push_back(cell);
  }
  o["cells"] = cells;
  return o;
}

// deterministic component order shared by every subcommand
std::vector<Component> sorted_components(
    const std::vector<TropicalPolynomial>& fs) {
  std::vector<Component> comps = components(fs);
  for (auto& c : comps)
    std::sort(c.cells.begin(), c.cells.end(),
              [](const Polyhedron& a, const Polyhedron& b) {
                return a.canonical_key() < b.canonical_key();
              });
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    return a.cells.front().canonical_key() < b.cells.front().canonical_key();
  });
  return comps;
}

QVec parse_point(const std::string& s, int n) {
  QVec v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(rat_from_string(part));
    } catch (const std::exception&) {
      throw InputError("cannot parse point coordinate '" + part + "'");
    }
  }
  if (static_cast<int>(v.size()) != n)
    throw InputError("point has " + std::to_string(v.size()) +
                     " coordinates, expected " + std::to_string(n));
  return v;
}

const Component& component_at(const std::vector<Component>& comps, int idx) {
  if (idx < 0 || idx >= static_cast<int>(comps.size()))
    throw InputError("component index " + std::to_string(idx) +
                     " out of range (have " + std::to_string(comps.size()) + ")");
  return comps[idx];
}

Fan fan_for(const SystemDocument& sys, int fan_idx) {
  if (fan_idx >= 0) {
    if (fan_idx >= static_cast<int>(sys.fans.size()))
      throw InputError("fan index out of range");
    return sys.fans[fan_idx];
  }
  if (!sys.fans.empty()) return sys.fans.front();
  return newton_fan(sys.polynomials.front());
}

const LiteralPolynomial& literal_at(const SystemDocument& sys, int idx,
                                    const char* cmd) {
  if (idx < 0 || idx >= static_cast<int>(sys.literals.size()))
    throw InputError("polynomial index out of range");
  if (!sys.literals[idx])
    throw InputError(std::string(cmd) + " needs literal coefficients, polynomial " +
                     std::to_string(idx) + " has explicit weights");
  return *sys.literals[idx];
}

ExtendedPoint ordinary_point(QVec v) {
  int n = static_cast<int>(v.size());
  return {coordinate_cone(n, {}), std::move(v)};
}

// ------------------------------------------------------------- commands

json cmd_hypersurface(const SystemDocument& sys, int poly) {
  if (poly < 0 || poly >= static_cast<int>(sys.polynomials.size()))
    throw InputError("polynomial index out of range");
  return jhypersurface(hypersurface(sys.polynomials[poly]));
}

json cmd_components(const SystemDocument& sys) {
  json out;
  out["ambient_dim"] = sys.dim;
  json list = json::array();
  for (const auto& c : sorted_components(sys.polynomials)) {
    json jc;
    jc["bounded"] = c.bounded;
    json cells = json::array();
    for (const auto& cell : c.cells) cells.push_back(jpolyhedron(cell));
    jc["cells"] = cells;
    list.push_back(jc);
  }
  out["components"] = list;
  return out;
}

json cmd_intersect(const SystemDocument& sys, const std::string& point,
                   std::uint64_t seed, int checks) {
  if (!point.empty()) {
    QVec v = parse_point(point, sys.dim);
    return jreport(point_multiplicity(sys.polynomials, ordinary_point(v)));
  }
  auto comps = sorted_components(sys.polynomials);
  json out;
  json list = json::array();
  Int total = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component& c = comps[i];
    json jc;
    jc["component"] = static_cast<int>(i);
    jc["bounded"] = c.bounded;
    MultiplicityReport r;
    if (c.cells.size() == 1 && c.cells[0].dim() == 0) {
      jc["kind"] = "point";
      r = point_multiplicity(sys.polynomials,
                             ordinary_point(c.cells[0].relative_interior_point()));
      jc["locus_point"] = jextended(*r.locus_point);
    } else {
      jc["kind"] = "stable";
      r = stable_multiplicity(c, sys.polynomials, seed, checks);
    }
    jc["multiplicity"] = r.multiplicity.get_str();
    total += r.multiplicity;
    list.push_back(jc);
  }
  out["components"] = list;
  out["total"] = total.get_str();
  return out;
}

json cmd_stable(const SystemDocument& sys, int comp, std::uint64_t seed,
                int checks) {
  auto comps = sorted_components(sys.polynomials);
  MultiplicityReport r =
      stable_multiplicity(component_at(comps, comp), sys.polynomials, seed, checks);
  r.component_id = comp;
  return jreport(r);
}

json cmd_closure(const SystemDocument& sys, int comp, int fan_idx) {
  auto comps = sorted_components(sys.polynomials);
  Fan delta = fan_for(sys, fan_idx);
  auto boundary =
      component_closure(component_at(comps, comp), sys.polynomials, delta);
  std::sort(boundary.begin(), boundary.end(),
            [](const ExtendedPoint& a, const ExtendedPoint& b) {
              if (a.stratum.canonical_key() != b.stratum.canonical_key())
                return a.stratum.canonical_key() < b.stratum.canonical_key();
              return a.coset < b.coset;
            });
  json out;
  json pts = json::array();
  for (const auto& ep : boundary) pts.push_back(jextended(ep));
  out["boundary_points"] = pts;
  return out;
}

json cmd_np1d(const SystemDocument& sys, int poly) {
  if (poly < 0 || poly >= static_cast<int>(sys.polynomials.size()))
    throw InputError("polynomial index out of range");
  json out;
  json segs = json::array();
  for (const auto& [v, len] : np1d(sys.polynomials[poly]))
    segs.push_back({{"valuation", jrat(v)}, {"count", static_cast<long>(len.get_si())}});
  out["polygon"] = segs;
  return out;
}

json cmd_series(const SystemDocument& sys, int idx) {
  if (idx < 0 || idx >= static_cast<int>(sys.series.size()))
    throw InputError("series index out of range");
  const TruncatedSeries& f = sys.series[idx];
  json out;
  out["min_weight"] = jrat(min_weight(f));
  json verts = json::array();
  for (const auto& [nu, w] : vertices_on_P(f))
    verts.push_back({{"exp", jzvec(nu)}, {"val", jrat(w)}});
  out["vertices_on_P"] = verts;
  out["stability_radius"] = jrat(stability_radius(f));
  json terms = json::array();
  const TropicalPolynomial restricted = restrict_to_laurent(f);
  for (const auto& [nu, w] : restricted.terms())
    terms.push_back({{"exp", jzvec(nu)}, {"val", jrat(w)}});
  out["restriction"] = {{"terms", terms}};
  return out;
}

json cmd_oracle_roots(std::uint64_t seed) {
  const std::vector<Rat> pool{Rat(-2), Rat(-1), Rat(0),    Rat(1),
                              Rat(2),  Rat(3),  Rat(1, 2), Rat(3, 2)};
  const long primes[] = {2, 3, 5};
  SplitMix64 rng(seed);
  Int p(primes[rng.next_in(0, 2)]);
  std::vector<Rat> vals;
  int count = static_cast<int>(rng.next_in(1, 6));
  for (int i = 0; i < count; ++i)
    vals.push_back(pool[rng.next_in(0, pool.size() - 1)]);
  KnownRootInstance inst = known_root_instance(vals, p);

  json out;
  out["prime"] = static_cast<long>(p.get_si());
  json jv = json::array();
  for (const auto& v : vals) jv.push_back(jrat(v));
  out["valuations"] = jv;
  json terms = json::array();
  for (const auto& t : inst.f.terms)
    terms.push_back({{"exp", jzvec(t.exponent)},
                     {"coeff", jrat(t.coeff.num[0] / t.coeff.den[0])}});
  out["polynomial"] = {{"terms", terms}};
  json exp = json::array();
  for (const auto& [v, len] : inst.expected)
    exp.push_back({{"valuation", jrat(v)}, {"count", static_cast<long>(len.get_si())}});
  out["expected"] = exp;
  out["agrees"] = np1d(tropicalize(inst.f)) == inst.expected;
  return out;
}

json cmd_oracle_resultant2(const SystemDocument& sys, const std::string& point) {
  if (sys.polynomials.size() < 2)
    throw InputError("resultant2 needs two polynomials");
  QVec v = parse_point(point, sys.dim);
  Int count = resultant_count2(literal_at(sys, 0, "resultant2"),
                               literal_at(sys, 1, "resultant2"), v);
  json out;
  out["count"] = count.get_str();
  return out;
}

json cmd_oracle_linear2(const SystemDocument& sys, int fan_idx) {
  if (sys.polynomials.size() < 2)
    throw InputError("linear2 needs two polynomials");
  Fan delta = fan_for(sys, fan_idx);
  LinearSolveResult r = linear_solve_trop(literal_at(sys, 0, "linear2"),
                                          literal_at(sys, 1, "linear2"), delta);
  json out;
  out["count"] = r.count.get_str();
  out["point"] = jextended(r.point);
  return out;
}

// ------------------------------------------------------------- rendering

struct Pt {
  double x, y;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

double dget(const json& s) { return rat_from_string(s.get<std::string>()).get_d(); }

Pt pt_of(const json& coords) { return {dget(coords[0]), dget(coords[1])}; }

Pt unit(double dx, double dy) {
  double n = std::hypot(dx, dy);
  return {dx / n, dy / n};
}

std::string render_svg(const json& doc, double raylen) {
  if (need(doc, "ambient_dim", "complex document").get<int>() != 2)
    throw InputError("render needs an ambient dimension 2 complex");

  struct Seg {
    Pt a, b;
  };
  std::vector<Pt> markers;
  std::vector<std::string> labels;
  std::vector<Seg> segments;
  std::vector<std::vector<Pt>> polygons;

  for (const auto& entry : need(doc, "cells", "complex document")) {
    const json& cell = entry.contains("cell") ? entry["cell"] : entry;
    int dim = need(cell, "dim", "cell").get<int>();
    bool pointed = need(cell, "pointed", "cell").get<bool>();
    std::vector<Pt> verts;
    if (pointed)
      for (const auto& v : cell["vertices"]) verts.push_back(pt_of(v));
    std::vector<Pt> rays;
    if (pointed)
      for (const auto& r : cell["rays"])
        rays.push_back({static_cast<double>(r[0].get<long>()),
                        static_cast<double>(r[1].get<long>())});
    Pt ip = pt_of(need(cell, "interior_point", "cell"));

    if (dim == 0) {
      markers.push_back(verts.empty() ? ip : verts[0]);
      const json& v = cell["vertices"][0];
      labels.push_back("(" + v[0].get<std::string>() + ", " +
                       v[1].get<std::string>() + ")");
    } else if (dim == 1) {
      if (!pointed) {
        Pt d = unit(static_cast<double>(cell["lineality"][0][0].get<long>()),
                    static_cast<double>(cell["lineality"][0][1].get<long>()));
        segments.push_back({{ip.x - raylen * d.x, ip.y - raylen * d.y},
                            {ip.x + raylen * d.x, ip.y + raylen * d.y}});
      } else if (verts.size() == 2) {
        segments.push_back({verts[0], verts[1]});
      } else {
        Pt d = unit(rays[0].x, rays[0].y);
        segments.push_back(
            {verts[0], {verts[0].x + raylen * d.x, verts[0].y + raylen * d.y}});
      }
    } else {
      std::vector<Pt> pts = verts;
      if (pts.empty()) pts.push_back(ip);
      std::vector<Pt> dirs = rays;
      if (!pointed)
        for (const auto& l : cell["lineality"]) {
          double lx = static_cast<double>(l[0].get<long>());
          double ly = static_cast<double>(l[1].get<long>());
          dirs.push_back({lx, ly});
          dirs.push_back({-lx, -ly});
        }
      std::vector<Pt> poly = pts;
      for (const auto& d : dirs) {
        Pt u = unit(d.x, d.y);
        for (const auto& v : pts)
          poly.push_back({v.x + raylen * u.x, v.y + raylen * u.y});
      }
      double cx = 0, cy = 0;
      for (const auto& p : poly) cx += p.x, cy += p.y;
      cx /= poly.size(), cy /= poly.size();
      std::sort(poly.begin(), poly.end(), [&](const Pt& a, const Pt& b) {
        return std::atan2(a.y - cy, a.x - cx) < std::atan2(b.y - cy, b.x - cx);
      });
      polygons.push_back(std::move(poly));
    }
  }

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto see = [&](const Pt& p) {
    if (first) minx = maxx = p.x, miny = maxy = p.y, first = false;
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  };
  for (const auto& p : markers) see(p);
  for (const auto& s : segments) see(s.a), see(s.b);
  for (const auto& poly : polygons)
    for (const auto& p : poly) see(p);
  minx -= 0.5, miny -= 0.5, maxx += 0.5, maxy += 0.5;
  double span = std::max(maxx - minx, maxy - miny);
  if (span <= 0) span = 1;
  double scale = 380.0 / span;
  auto tx = [&](double x) { return 20.0 + (x - minx) * scale; };
  auto ty = [&](double y) { return 400.0 - (y - miny) * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"420\" height=\"420\" viewBox=\"0 0 420 420\">\n";
  for (const auto& poly : polygons) {
    svg << "<polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) svg << " ";
      svg << fmt(tx(poly[i].x)) << "," << fmt(ty(poly[i].y));
    }
    svg << "\" fill=\"#cfe2f3\" stroke=\"none\"/>\n";
  }
  for (const auto& s : segments)
    svg << "<line x1=\"" << fmt(tx(s.a.x)) << "\" y1=\"" << fmt(ty(s.a.y))
        << "\" x2=\"" << fmt(tx(s.b.x)) << "\" y2=\"" << fmt(ty(s.b.y))
        << "\" stroke=\"#1f3d7a\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i < markers.size(); ++i) {
    svg << "<circle cx=\"" << fmt(tx(markers[i].x)) << "\" cy=\""
        << fmt(ty(markers[i].y)) << "\" r=\"4\" fill=\"#b4231f\"/>\n";
    svg << "<text x=\"" << fmt(tx(markers[i].x) + 6) << "\" y=\""
        << fmt(ty(markers[i].y) - 6) << "\" font-size=\"12\">" << labels[i]
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// ------------------------------------------------------------- driver

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw InputError("cannot write output file: " + output);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact tropical intersection toolkit"};
  app.require_subcommand(1);

  std::string input, output, point;
  int poly = 0, component = 0, fan = -1, checks = 2;
  std::uint64_t seed = 1;
  double ray_length = 3.0;

  auto common = [&](CLI::App* c, bool with_input = true) {
    if (with_input)
      c->add_option("--input", input, "system document (JSON)")->required();
    c->add_option("--output", output, "write the result here instead of stdout");
    return c;
  };

  auto* c_hyp = common(app.add_subcommand("hypersurface", "tropical hypersurface of one polynomial"));
  c_hyp->add_option("--poly", poly, "polynomial index");
  common(app.add_subcommand("components", "connected components of the intersection"));
  auto* c_int = common(app.add_subcommand("intersect", "intersection multiplicities"));
  c_int->add_option("--point", point, "isolated point as comma-separated rationals");
  c_int->add_option("--seed", seed, "seed for non-proper components");
  c_int->add_option("--checks", checks, "cross-check seeds");
  auto* c_stb = common(app.add_subcommand("stable", "stable multiplicity along a component"));
  c_stb->add_option("--component", component, "component index");
  c_stb->add_option("--seed", seed, "base seed");
  c_stb->add_option("--checks", checks, "cross-check seeds");
  auto* c_clo = common(app.add_subcommand("closure", "boundary points of a component closure"));
  c_clo->add_option("--component", component, "component index");
  c_clo->add_option("--fan", fan, "fan index in the document");
  auto* c_np = common(app.add_subcommand("np1d", "one-variable Newton polygon"));
  c_np->add_option("--poly", poly, "polynomial index");
  auto* c_ser = common(app.add_subcommand("series", "effective restriction of a truncated series"));
  c_ser->add_option("--poly", poly, "series index");
  auto* c_ora = app.add_subcommand("oracle", "independent ground-truth computations");
  c_ora->require_subcommand(1);
  auto* c_roots = c_ora->add_subcommand("np1d-roots", "seeded constructed-root instance");
  c_roots->add_option("--seed", seed, "instance seed");
  c_roots->add_option("--output", output, "write the result here instead of stdout");
  auto* c_res = common(c_ora->add_subcommand("resultant2", "bivariate root count by resultants"));
  c_res->add_option("--point", point, "target valuation vector")->required();
  auto* c_lin = common(c_ora->add_subcommand("linear2", "exact affine 2x2 solve"));
  c_lin->add_option("--fan", fan, "fan index in the document");
  auto* c_ren = common(app.add_subcommand("render", "SVG of a 2-D complex document"));
  c_ren->add_option("--svg-ray-length", ray_length, "truncation length for rays");

  std::vector<const char*> argv;
  argv.push_back("tropcli");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    json result;
    if (c_ren->parsed()) {
      json doc;
      try {
        doc = json::parse(read_file(input));
      } catch (const std::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
      }
      emit(render_svg(doc, ray_length), output, out);
      return 0;
    }
    if (c_roots->parsed()) {
      emit(cmd_oracle_roots(seed).dump(2) + "\n", output, out);
      return 0;
    }
    SystemDocument sys = parse_system(read_file(input));
    if (c_hyp->parsed())
      result = cmd_hypersurface(sys, poly);
    else if (app.get_subcommand("components")->parsed())
      result = cmd_components(sys);
    else if (c_int->parsed())
      result = cmd_intersect(sys, point, seed, checks);
    else if (c_stb->parsed())
      result = cmd_stable(sys, component, seed, checks);
    else if (c_clo->parsed())
      result = cmd_closure(sys, component, fan);
    else if (c_np->parsed())
      result = cmd_np1d(sys, poly);
    else if (c_ser->parsed())
      result = cmd_series(sys, poly);
    else if (c_res->parsed())
      result = cmd_oracle_resultant2(sys, point);
    else if (c_lin->parsed())
      result = cmd_oracle_linear2(sys, fan);
    emit(result.dump(2) + "\n", output, out);
    return 0;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "refused: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace trop
