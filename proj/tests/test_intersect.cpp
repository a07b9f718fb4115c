#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "trop/intersect.hpp"

using namespace trop;

namespace {

QVec qv(std::vector<long> v) {
  QVec out;
  for (long x : v) out.push_back(Rat(x));
  return out;
}

ZVec zv(std::vector<long> v) {
  ZVec out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

ExtendedPoint ordinary(QVec v) {
  int n = static_cast<int>(v.size());
  return {coordinate_cone(n, {}), std::move(v)};
}

// f1 = p x + x^p + y^p, f2 = y + x^p + y^p over the p-adics
std::vector<TropicalPolynomial> multeg(long p) {
  TropicalPolynomial f1(
      2, {{zv({1, 0}), Rat(1)}, {zv({p, 0}), Rat(0)}, {zv({0, p}), Rat(0)}});
  TropicalPolynomial f2(
      2, {{zv({0, 1}), Rat(0)}, {zv({p, 0}), Rat(0)}, {zv({0, p}), Rat(0)}});
  return {f1, f2};
}

TropicalPolynomial trop_line() {
  return TropicalPolynomial(
      2, {{zv({1, 0}), Rat(0)}, {zv({0, 1}), Rat(0)}, {zv({0, 0}), Rat(0)}});
}

}  // namespace

TEST_CASE("intersection complex of the binomial-tail pair") {
  // the two curves share the binomial tail x^p + y^p, so besides the
  // transverse crossing they overlap along the diagonal ray x = y <= 0
  auto fs = multeg(3);
  PolyhedralComplex ic = intersection_complex(fs);
  REQUIRE(ic.cells().size() == 3);
  int points = 0, rays = 0;
  for (const auto& c : ic.cells()) (c.dim() == 0 ? points : rays)++;
  CHECK(points == 2);
  CHECK(rays == 1);
  CHECK(ic.supports(QVec{Rat(1, 2), Rat(3, 2)}));
  CHECK(ic.supports(qv({0, 0})));
  CHECK(ic.supports(qv({-4, -4})));
  CHECK(!ic.supports(qv({1, 1})));
}

TEST_CASE("intersection complex of coincident and disjoint lines") {
  TropicalPolynomial f = trop_line();
  PolyhedralComplex ic = intersection_complex({f, f});
  CHECK(supports_equal(ic, hypersurface(f).complex));

  // parallel binomial hypersurfaces never meet
  TropicalPolynomial g(2, {{zv({1, 0}), Rat(0)}, {zv({0, 1}), Rat(0)}});
  TropicalPolynomial h(2, {{zv({1, 0}), Rat(1)}, {zv({0, 1}), Rat(0)}});
  CHECK(intersection_complex({g, h}).empty());
}

TEST_CASE("point multiplicity at the transverse crossing") {
  auto fs = multeg(3);
  auto r1 = point_multiplicity(fs, ordinary(QVec{Rat(1, 2), Rat(3, 2)}));
  CHECK(r1.multiplicity == 2);
  REQUIRE(r1.dual_cells.size() == 2);
  CHECK(r1.dual_cells[0].dim() == 1);
  CHECK(r1.dual_cells[1].dim() == 1);
  CHECK(r1.certificates.empty());

  auto fs5 = multeg(5);
  CHECK(point_multiplicity(fs5, ordinary(QVec{Rat(1, 4), Rat(5, 4)})).multiplicity == 4);
}

TEST_CASE("unimodular transverse crossing has multiplicity one") {
  TropicalPolynomial f = trop_line();
  TropicalPolynomial g = translate(f, qv({3, 1}));
  auto r = point_multiplicity({f, g}, ordinary(qv({2, 0})));
  CHECK(r.multiplicity == 1);
}

TEST_CASE("point multiplicity preconditions") {
  auto fs = multeg(3);
  CHECK_THROWS_AS(point_multiplicity(fs, ordinary(qv({1, 1}))), NotIsolated);

  // (0,0) lies on the shared diagonal ray, hence is not isolated
  CHECK_THROWS_AS(point_multiplicity(fs, ordinary(qv({0, 0}))), NotIsolated);

  TropicalPolynomial f = trop_line();
  CHECK_THROWS_AS(point_multiplicity({f, f}, ordinary(qv({0, 0}))), NotIsolated);

  ExtendedPoint at_infinity{coordinate_cone(2, {0}), QVec{Rat(0)}};
  CHECK_THROWS_AS(point_multiplicity(fs, at_infinity), BoundaryStratum);
}

TEST_CASE("connected components") {
  auto comps = components(multeg(3));
  REQUIRE(comps.size() == 2);
  int singletons = 0, unbounded = 0;
  for (const auto& c : comps) {
    if (c.cells.size() == 1 && c.bounded) singletons++;
    if (!c.bounded) {
      unbounded++;
      CHECK(c.cells.size() == 2);  // the diagonal ray and its endpoint
    }
  }
  CHECK(singletons == 1);
  CHECK(unbounded == 1);

  TropicalPolynomial f = trop_line();
  auto line = components({f, f});
  REQUIRE(line.size() == 1);
  CHECK(!line[0].bounded);
  CHECK(line[0].cells.size() == 4);  // vertex and three rays

  TropicalPolynomial g(2, {{zv({1, 0}), Rat(0)}, {zv({0, 1}), Rat(0)}});
  TropicalPolynomial h(2, {{zv({1, 0}), Rat(1)}, {zv({0, 1}), Rat(0)}});
  CHECK(components({g, h}).empty());
}

TEST_CASE("thickening separates components") {
  auto fs = multeg(3);
  auto comps = components(fs);
  const Component* pt = nullptr;
  for (const auto& c : comps)
    if (c.cells[0].contains(QVec{Rat(1, 2), Rat(3, 2)})) pt = &c;
  REQUIRE(pt != nullptr);

  Thickening th = thicken(*pt, fs);
  CHECK(th.epsilon > 0);
  REQUIRE(th.relaxed.size() == 1);
  CHECK(th.relaxed[0].bounded());
  CHECK(th.relaxed[0].contains(QVec{Rat(1, 2), Rat(3, 2)}));
  CHECK(!th.relaxed[0].contains(qv({0, 0})));

  // a lone component accepts epsilon = 1 immediately
  TropicalPolynomial f = trop_line();
  auto line = components({f, f});
  CHECK(thicken(line[0], {f, f}).epsilon == Rat(1));
}

TEST_CASE("thickening of close parallel lines shrinks epsilon") {
  // x^2 + a xy + y^2 with val(a) = -1/4: two lines x - y = +-1/4 apart
  TropicalPolynomial f(2, {{zv({2, 0}), Rat(0)},
                           {zv({1, 1}), Rat(-1, 4)},
                           {zv({0, 2}), Rat(0)}});
  auto comps = components({f});
  REQUIRE(comps.size() == 2);
  Thickening th = thicken(comps[0], {f});
  CHECK(th.epsilon == Rat(1, 4));
}

TEST_CASE("admissible translation along the doubled line") {
  TropicalPolynomial f = trop_line();
  auto comps = components({f, f});
  REQUIRE(comps.size() == 1);

  TranslationCertificate cert = admissible_translation(comps[0], {f, f}, 7);
  CHECK(cert.directions.size() == 2);
  CHECK(cert.epsilon > 0);
  CHECK(cert.attempts >= 1);
  REQUIRE(cert.points.size() == 1);
  // the single translated crossing is a transverse pair of segments
  for (const auto& sup : cert.points[0].dual_supports) CHECK(sup.size() == 2);
}

TEST_CASE("stable multiplicity of the non-proper line is one") {
  // f1 = x + y + 1, f2 = alpha x + beta y + 1 with val alpha = val beta = 0
  TropicalPolynomial f = trop_line();
  auto comps = components({f, f});
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 17ull, 1234567ull}) {
    auto r = stable_multiplicity(comps[0], {f, f}, seed, 1);
    CHECK(r.multiplicity == 1);
  }
  auto r = stable_multiplicity(comps[0], {f, f}, 42, 5);
  CHECK(r.multiplicity == 1);
  CHECK(r.certificates.size() == 5);
  CHECK(r.dual_cells.size() == 2);
}

TEST_CASE("stable multiplicities of the two binomial-tail components") {
  auto fs = multeg(3);
  Int total = 0;
  for (const auto& c : components(fs)) {
    auto r = stable_multiplicity(c, fs, 11, 2);
    total += r.multiplicity;
    if (c.bounded) {
      // isolated point: stable multiplicity reduces to the point multiplicity
      QVec v = c.cells[0].relative_interior_point();
      CHECK(r.multiplicity == point_multiplicity(fs, ordinary(v)).multiplicity);
      CHECK(r.multiplicity == 2);
    } else {
      // the shared ray carries the p^2 - p zeros at its endpoint
      CHECK(r.multiplicity == 6);
    }
  }
  // Bernstein: the sum over components is MV of the two Newton triangles
  CHECK(total == 8);
}

TEST_CASE("stable multiplicity is translation covariant") {
  auto fs = multeg(3);
  QVec t = qv({2, -1});
  std::vector<TropicalPolynomial> shifted;
  for (const auto& f : fs) shifted.push_back(translate(f, t));
  auto comps = components(fs);
  auto comps_shifted = components(shifted);
  REQUIRE(comps.size() == comps_shifted.size());
  Int a = 0, b = 0;
  for (const auto& c : comps) a += stable_multiplicity(c, fs, 5, 1).multiplicity;
  for (const auto& c : comps_shifted)
    b += stable_multiplicity(c, shifted, 5, 1).multiplicity;
  CHECK(a == b);
}

TEST_CASE("closure of the non-proper line adds three boundary points") {
  TropicalPolynomial f = trop_line();
  auto comps = components({f, f});
  Fan delta = newton_fan(f);  // the projective plane fan
  auto boundary = component_closure(comps[0], {f, f}, delta);
  CHECK(boundary.size() == 3);
  std::set<std::string> strata;
  for (const auto& ep : boundary) {
    CHECK(ep.stratum.dim() == 1);
    CHECK(ep.coset == QVec{Rat(0)});
    strata.insert(ep.stratum.canonical_key());
  }
  CHECK(strata.size() == 3);
}

TEST_CASE("closure of binomial-tail components") {
  auto fs = multeg(3);
  Fan delta = newton_fan(fs[0]);
  for (const auto& c : components(fs)) {
    auto boundary = component_closure(c, fs, delta);
    if (c.bounded) {
      CHECK(boundary.empty());
    } else {
      // the ray escapes through the stratum of its recession direction
      REQUIRE(boundary.size() == 1);
      Polyhedron diag = Polyhedron::cone_from_generators(2, {zv({-1, -1})});
      CHECK(boundary[0].stratum == diag);
    }
  }
}

TEST_CASE("closure of a ray component hits one stratum point") {
  // f2 cuts out the full diagonal; the intersection with Trop(f1) is the
  // closed ray below the vertex of the line
  TropicalPolynomial f1 = trop_line();
  TropicalPolynomial f2(2, {{zv({1, 0}), Rat(0)}, {zv({0, 1}), Rat(0)}});
  auto comps = components({f1, f2});
  REQUIRE(comps.size() == 1);
  CHECK(!comps[0].bounded);

  Fan delta = newton_fan(f1);
  auto boundary = component_closure(comps[0], {f1, f2}, delta);
  REQUIRE(boundary.size() == 1);
  Polyhedron diag = Polyhedron::cone_from_generators(2, {zv({-1, -1})});
  CHECK(boundary[0].stratum == diag);
  CHECK(boundary[0].coset == QVec{Rat(0)});

  // a fan missing the recession direction is rejected
  Fan quad = Fan::from_cones(
      2, {Polyhedron::cone_from_generators(2, {zv({1, 0}), zv({0, 1})})});
  CHECK_THROWS_AS(component_closure(comps[0], {f1, f2}, quad), FanNotCompatible);
}
