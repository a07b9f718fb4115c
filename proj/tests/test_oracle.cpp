#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trop/oracle.hpp"

using namespace trop;

namespace {

ZVec zv(std::vector<long> v) {
  ZVec out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

LiteralPolynomial lit2(Int p, std::vector<std::pair<std::vector<long>, Rat>> ts) {
  std::vector<LiteralTerm> terms;
  for (auto& [e, c] : ts) terms.push_back({zv(e), fe(c)});
  return make_literal(2, CoeffModel::PAdic, p, std::move(terms));
}

// f1 = p x + x^p + y^p, f2 = y + x^p + y^p
std::pair<LiteralPolynomial, LiteralPolynomial> multeg_literal(long p) {
  auto f1 = lit2(Int(p), {{{1, 0}, Rat(p)}, {{p, 0}, Rat(1)}, {{0, p}, Rat(1)}});
  auto f2 = lit2(Int(p), {{{0, 1}, Rat(1)}, {{p, 0}, Rat(1)}, {{0, p}, Rat(1)}});
  return {f1, f2};
}

Fan projective_fan() {
  return Fan::from_cones(
      2, {Polyhedron::cone_from_generators(2, {zv({-1, -1}), zv({0, 1})}),
          Polyhedron::cone_from_generators(2, {zv({-1, -1}), zv({1, 0})}),
          Polyhedron::cone_from_generators(2, {zv({1, 0}), zv({0, 1})})});
}

// f1 = x + y + 1, f2 = alpha x + beta y + 1
std::pair<LiteralPolynomial, LiteralPolynomial> line_pair(Int p, Rat alpha,
                                                          Rat beta) {
  auto f1 = lit2(p, {{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}, {{0, 0}, Rat(1)}});
  auto f2 = lit2(p, {{{1, 0}, alpha}, {{0, 1}, beta}, {{0, 0}, Rat(1)}});
  return {f1, f2};
}

}  // namespace

TEST_CASE("univariate polynomial arithmetic") {
  UPoly a{Rat(-3), Rat(1)};           // x - 3
  UPoly b{Rat(-1), Rat(1)};           // x - 1
  UPoly prod = upoly_mul(a, b);       // x^2 - 4x + 3
  CHECK(prod == UPoly{Rat(3), Rat(-4), Rat(1)});
  CHECK(upoly_divexact(prod, a) == b);
  CHECK(upoly_sub(prod, prod).empty());
  CHECK(upoly_add(a, UPoly{Rat(3)}) == UPoly{Rat(0), Rat(1)});
  CHECK_THROWS_AS(upoly_divexact(UPoly{Rat(1), Rat(1)}, a), Error);
}

TEST_CASE("p-adic and parameter valuations") {
  CHECK(padic_val(Rat(12), Int(2)) == 2);
  CHECK(padic_val(Rat(1, 9), Int(3)) == -2);
  CHECK(padic_val(Rat(5), Int(3)) == 0);
  CHECK_THROWS_AS(padic_val(Rat(0), Int(2)), Error);

  LiteralPolynomial f =
      make_literal(1, CoeffModel::Parameter, Int(2),
                   {{zv({0}), fe_parameter()}, {zv({1}), fe(Rat(1))}});
  CHECK(coeff_valuation(f, fe_parameter()) == 1);
  CHECK(coeff_valuation(f, fe_div(fe(Rat(1)), fe_parameter())) == -1);
  CHECK(coeff_valuation(f, fe(Rat(7))) == 0);
}

TEST_CASE("literal validation") {
  CHECK_THROWS_AS(make_literal(1, CoeffModel::PAdic, Int(3), {}), Error);
  CHECK_THROWS_AS(make_literal(1, CoeffModel::PAdic, Int(3),
                               {{zv({0}), fe(Rat(0))}}),
                  Error);
  CHECK_THROWS_AS(make_literal(1, CoeffModel::PAdic, Int(3),
                               {{zv({0}), fe(Rat(1))}, {zv({0}), fe(Rat(2))}}),
                  Error);
  CHECK_THROWS_AS(make_literal(1, CoeffModel::PAdic, Int(3),
                               {{zv({0}), fe_parameter()}}),
                  Error);
}

TEST_CASE("one-variable Newton polygon") {
  // (x - 3)(x - 1) = x^2 - 4x + 3 over the 3-adics
  LiteralPolynomial f = make_literal(
      1, CoeffModel::PAdic, Int(3),
      {{zv({0}), fe(Rat(3))}, {zv({1}), fe(Rat(-4))}, {zv({2}), fe(Rat(1))}});
  auto np = np1d(tropicalize(f));
  REQUIRE(np.size() == 2);
  CHECK(np[0] == std::pair{Rat(1), Int(1)});
  CHECK(np[1] == std::pair{Rat(0), Int(1)});

  TropicalPolynomial linear(1, {{zv({0}), Rat(1)}, {zv({1}), Rat(0)}});
  auto npl = np1d(linear);
  REQUIRE(npl.size() == 1);
  CHECK(npl[0] == std::pair{Rat(1), Int(1)});

  CHECK(np1d(TropicalPolynomial(1, {{zv({5}), Rat(2)}})).empty());

  // terms above the lower hull do not contribute, fractional slopes survive
  TropicalPolynomial spread(
      1, {{zv({0}), Rat(4)}, {zv({1}), Rat(1)}, {zv({2}), Rat(9)},
          {zv({4}), Rat(0)}});
  auto nps = np1d(spread);
  REQUIRE(nps.size() == 2);
  CHECK(nps[0] == std::pair{Rat(3), Int(1)});
  CHECK(nps[1] == std::pair{Rat(1, 3), Int(3)});

  // collinear breakpoints merge into a single slope with full width
  TropicalPolynomial merged(
      1, {{zv({0}), Rat(4)}, {zv({3}), Rat(1)}, {zv({4}), Rat(0)}});
  CHECK(np1d(merged) == std::vector{std::pair{Rat(1), Int(4)}});
}

TEST_CASE("known-root instances pin the Newton polygon") {
  auto inst = known_root_instance({Rat(1), Rat(1), Rat(0)}, Int(3));
  // (x - 3)(x - 6)(x - 1) = x^3 - 10x^2 + 27x - 18
  REQUIRE(inst.f.terms.size() == 4);
  REQUIRE(inst.expected.size() == 2);
  CHECK(inst.expected[0] == std::pair{Rat(1), Int(2)});
  CHECK(inst.expected[1] == std::pair{Rat(0), Int(1)});
  CHECK(np1d(tropicalize(inst.f)) == inst.expected);

  auto constant = known_root_instance({}, Int(2));
  CHECK(constant.expected.empty());
  CHECK(np1d(tropicalize(constant.f)).empty());

  auto single = known_root_instance({Rat(2)}, Int(5));
  REQUIRE(single.f.terms.size() == 2);
  CHECK(np1d(tropicalize(single.f)) ==
        std::vector{std::pair{Rat(2), Int(1)}});

  // fractional valuation 1/2 over Q_2: realized by x^2 - 2
  auto half = known_root_instance({Rat(1, 2)}, Int(2));
  CHECK(np1d(tropicalize(half.f)) ==
        std::vector{std::pair{Rat(1, 2), Int(2)}});

  CHECK_THROWS_AS(known_root_instance({Rat(1, 7)}, Int(3)),
                  UnrealizableValuation);
}

TEST_CASE("known-root instances agree with np1d across random draws") {
  const std::vector<Rat> pool{Rat(-2), Rat(-1), Rat(0),    Rat(1),
                              Rat(2),  Rat(3),  Rat(1, 2), Rat(3, 2)};
  const long primes[] = {2, 3, 5};
  SplitMix64 rng(20260823);
  for (int trial = 0; trial < 40; ++trial) {
    Int p(primes[rng.next_in(0, 2)]);
    std::vector<Rat> vals;
    int count = static_cast<int>(rng.next_in(0, 5));
    for (int i = 0; i < count; ++i)
      vals.push_back(pool[rng.next_in(0, pool.size() - 1)]);
    auto inst = known_root_instance(vals, p);
    CHECK(np1d(tropicalize(inst.f)) == inst.expected);
  }
}

TEST_CASE("resultant counting on the binomial-tail pair") {
  auto [f1, f2] = multeg_literal(3);
  CHECK(resultant_count2(f1, f2, QVec{Rat(1, 2), Rat(3, 2)}) == 2);
  // the honest torus zeros all sit over (1/2, 3/2)
  CHECK(resultant_count2(f1, f2, QVec{Rat(0), Rat(0)}) == 0);
  CHECK(resultant_count2(f1, f2, QVec{Rat(1), Rat(1)}) == 0);

  auto [g1, g2] = multeg_literal(5);
  CHECK(resultant_count2(g1, g2, QVec{Rat(1, 4), Rat(5, 4)}) == 4);
}

TEST_CASE("resultant counting on split systems") {
  auto f1 = lit2(Int(3), {{{1, 0}, Rat(1)}, {{0, 0}, Rat(-3)}});  // x - 3
  auto f2 = lit2(Int(3), {{{0, 1}, Rat(1)}, {{0, 0}, Rat(-9)}});  // y - 9
  CHECK(resultant_count2(f1, f2, QVec{Rat(1), Rat(2)}) == 1);
  CHECK(resultant_count2(f1, f2, QVec{Rat(1), Rat(1)}) == 0);
  CHECK(resultant_count2(f1, f2, QVec{Rat(0), Rat(2)}) == 0);

  // Laurent exponents are normalized away: 1 - 3x^{-1} cuts the same locus
  auto f1l = lit2(Int(3), {{{0, 0}, Rat(1)}, {{-1, 0}, Rat(-3)}});
  CHECK(resultant_count2(f1l, f2, QVec{Rat(1), Rat(2)}) == 1);

  // a shared factor makes every eliminant vanish
  CHECK_THROWS_AS(resultant_count2(f1, f1, QVec{Rat(1), Rat(1)}), NotFinite);

  // {1,3} x {1,3}: the plain marginals cannot separate (0,1) from (1,0),
  // but the ratio twist can, so the counts disagree
  auto g1 = lit2(Int(3), {{{2, 0}, Rat(1)}, {{1, 0}, Rat(-4)}, {{0, 0}, Rat(3)}});
  auto g2 = lit2(Int(3), {{{0, 2}, Rat(1)}, {{0, 1}, Rat(-4)}, {{0, 0}, Rat(3)}});
  CHECK_THROWS_AS(resultant_count2(g1, g2, QVec{Rat(1), Rat(0)}),
                  PairingAmbiguous);
  CHECK_THROWS_AS(resultant_count2(g1, g2, QVec{Rat(1), Rat(1)}),
                  PairingAmbiguous);
  // valuations hit by no marginal are cleanly excluded
  CHECK(resultant_count2(g1, g2, QVec{Rat(2), Rat(0)}) == 0);
}

TEST_CASE("affine solve: transverse branches") {
  Fan delta = projective_fan();
  Polyhedron origin = coordinate_cone(2, {});

  // generic unit coefficients: the crossing keeps valuation (0, 0)
  auto [f1, f2] = line_pair(Int(5), Rat(2), Rat(3));
  auto r = linear_solve_trop(f1, f2, delta);
  CHECK(r.count == 1);
  CHECK(r.point == ExtendedPoint{origin, QVec{Rat(0), Rat(0)}});

  // val(beta - alpha) large: the crossing slides down the diagonal ray
  auto [g1, g2] = line_pair(Int(3), Rat(2), Rat(2 + 81));
  auto rg = linear_solve_trop(g1, g2, delta);
  CHECK(rg.point == ExtendedPoint{origin, QVec{Rat(-4), Rat(-4)}});

  // val(alpha - 1) large: the crossing slides up the vertical ray
  auto [h1, h2] = line_pair(Int(3), Rat(1 + 81), Rat(2));
  auto rh = linear_solve_trop(h1, h2, delta);
  CHECK(rh.point == ExtendedPoint{origin, QVec{Rat(0), Rat(4)}});

  // val(beta - 1) large: symmetric, along the horizontal ray
  auto [k1, k2] = line_pair(Int(3), Rat(2), Rat(1 + 81));
  auto rk = linear_solve_trop(k1, k2, delta);
  CHECK(rk.point == ExtendedPoint{origin, QVec{Rat(4), Rat(0)}});
}

TEST_CASE("affine solve: boundary and degenerate branches") {
  Fan delta = projective_fan();

  // alpha = 1: eta = 0, the solution escapes through the vertical stratum
  auto [f1, f2] = line_pair(Int(3), Rat(1), Rat(2));
  auto r = linear_solve_trop(f1, f2, delta);
  CHECK(r.count == 1);
  CHECK(r.point.stratum == Polyhedron::cone_from_generators(2, {zv({0, 1})}));
  CHECK(r.point.coset == project_quotient(r.point.stratum, QVec{Rat(0), Rat(0)}));

  // beta = 1: xi = 0, horizontal stratum
  auto [g1, g2] = line_pair(Int(3), Rat(2), Rat(1));
  auto rg = linear_solve_trop(g1, g2, delta);
  CHECK(rg.point.stratum == Polyhedron::cone_from_generators(2, {zv({1, 0})}));

  // alpha = beta != 1: parallel lines meeting on the diagonal stratum
  auto [h1, h2] = line_pair(Int(3), Rat(2), Rat(2));
  auto rh = linear_solve_trop(h1, h2, delta);
  Polyhedron diag = Polyhedron::cone_from_generators(2, {zv({-1, -1})});
  CHECK(rh.point.stratum == diag);
  CHECK(rh.point.coset == project_quotient(diag, QVec{Rat(0), Rat(0)}));
  CHECK(rh.count == 1);

  // a valuation gap between the parallel coefficients shifts the coset
  auto d1 = lit2(Int(3), {{{1, 0}, Rat(1)}, {{0, 1}, Rat(3)}, {{0, 0}, Rat(1)}});
  auto d2 = lit2(Int(3), {{{1, 0}, Rat(2)}, {{0, 1}, Rat(6)}, {{0, 0}, Rat(1)}});
  auto rd = linear_solve_trop(d1, d2, delta);
  CHECK(rd.point.stratum == diag);
  CHECK(rd.point.coset == project_quotient(diag, QVec{Rat(1), Rat(0)}));
  CHECK(rd.point.coset != rh.point.coset);

  // proportional systems have no unique solution
  auto [p1, p2] = line_pair(Int(3), Rat(1), Rat(1));
  CHECK_THROWS_AS(linear_solve_trop(p1, p2, delta), DegenerateSystem);
  auto doubled = lit2(Int(3), {{{1, 0}, Rat(2)}, {{0, 1}, Rat(2)}, {{0, 0}, Rat(2)}});
  CHECK_THROWS_AS(linear_solve_trop(p1, doubled, delta), DegenerateSystem);

  // parallel lines whose escape direction is missing from the fan
  Fan quad = Fan::from_cones(
      2, {Polyhedron::cone_from_generators(2, {zv({1, 0}), zv({0, 1})})});
  CHECK_THROWS_AS(linear_solve_trop(h1, h2, quad), StratumNotInFan);
}
