#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "trop/cli.hpp"

using namespace trop;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kMulteg = R"({
  "dim": 2,
  "valuation": {"model": "p-adic", "prime": 3},
  "polynomials": [
    {"terms": [{"exp": [1,0], "coeff": "3"}, {"exp": [3,0], "coeff": "1"}, {"exp": [0,3], "coeff": "1"}]},
    {"terms": [{"exp": [0,1], "coeff": "1"}, {"exp": [3,0], "coeff": "1"}, {"exp": [0,3], "coeff": "1"}]}
  ]
})";

const char* kLine = R"({
  "dim": 2,
  "valuation": {"model": "explicit"},
  "polynomials": [
    {"terms": [{"exp": [1,0], "val": "0"}, {"exp": [0,1], "val": "0"}, {"exp": [0,0], "val": "0"}]}
  ]
})";

const char* kDoubledLine = R"({
  "dim": 2,
  "valuation": {"model": "explicit"},
  "polynomials": [
    {"terms": [{"exp": [1,0], "val": "0"}, {"exp": [0,1], "val": "0"}, {"exp": [0,0], "val": "0"}]},
    {"terms": [{"exp": [1,0], "val": "0"}, {"exp": [0,1], "val": "0"}, {"exp": [0,0], "val": "0"}]}
  ]
})";

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "cli_" + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("system document parsing") {
  SystemDocument sys = parse_system(kMulteg);
  CHECK(sys.dim == 2);
  CHECK(sys.model == ValuationModel::PAdic);
  CHECK(sys.prime == 3);
  REQUIRE(sys.polynomials.size() == 2);
  CHECK(sys.literals[0].has_value());
  CHECK(weight(sys.polynomials[0], QVec{Rat(0), Rat(0)}) == 0);

  SystemDocument line = parse_system(kLine);
  CHECK(line.model == ValuationModel::Explicit);
  CHECK(!line.literals[0].has_value());

  CHECK_THROWS_AS(parse_system("{"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"dim": 2})"), InputError);
  // wrong exponent arity
  CHECK_THROWS_AS(
      parse_system(
          R"({"dim": 2, "valuation": {"model": "explicit"},
              "polynomials": [{"terms": [{"exp": [1], "val": "0"}]}]})"),
      InputError);
  // coeff and val mixed in one polynomial
  CHECK_THROWS_AS(
      parse_system(
          R"({"dim": 1, "valuation": {"model": "p-adic", "prime": 2},
              "polynomials": [{"terms": [{"exp": [0], "coeff": "1"},
                                         {"exp": [1], "val": "0"}]}]})"),
      InputError);
  // coefficients are meaningless under explicit weights
  CHECK_THROWS_AS(
      parse_system(
          R"({"dim": 1, "valuation": {"model": "explicit"},
              "polynomials": [{"terms": [{"exp": [0], "coeff": "1"}]}]})"),
      InputError);
}

TEST_CASE("intersect command reports per-component multiplicities") {
  std::string doc = write_temp("multeg.json", kMulteg);
  auto r = run({"intersect", "--input", doc, "--seed", "3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["total"] == "8");
  REQUIRE(j["components"].size() == 2);
  std::map<std::string, std::string> mult;
  for (const auto& c : j["components"])
    mult[c["kind"].get<std::string>()] = c["multiplicity"].get<std::string>();
  CHECK(mult["point"] == "2");
  CHECK(mult["stable"] == "6");

  // identical invocations are byte-identical
  auto r2 = run({"intersect", "--input", doc, "--seed", "3"});
  CHECK(r.out == r2.out);

  auto rp = run({"intersect", "--input", doc, "--point", "1/2,3/2"});
  REQUIRE(rp.code == 0);
  json jp = json::parse(rp.out);
  CHECK(jp["multiplicity"] == "2");
  CHECK(jp["locus_point"]["coset"][0] == "1/2");
  CHECK(jp["dual_cells"].size() == 2);
}

TEST_CASE("exit codes") {
  std::string doc = write_temp("multeg.json", kMulteg);
  CHECK(run({}).code == 1);
  CHECK(run({"intersect", "--input", doc, "--bogus"}).code == 1);
  CHECK(run({"intersect", "--input", "does_not_exist.json"}).code == 2);
  std::string bad = write_temp("bad.json", "{\"dim\": 2");
  CHECK(run({"components", "--input", bad}).code == 2);
  // (0,0) sits on the shared ray: refusal, not crash
  auto r = run({"intersect", "--input", doc, "--point", "0,0"});
  CHECK(r.code == 3);
  CHECK(r.err.find("isolated") != std::string::npos);
  CHECK(run({"intersect", "--input", doc, "--point", "0"}).code == 2);
}

TEST_CASE("hypersurface document and SVG rendering") {
  std::string doc = write_temp("line.json", kLine);
  auto r = run({"hypersurface", "--input", doc});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["ambient_dim"] == 2);
  REQUIRE(j["cells"].size() == 4);
  int points = 0, rays = 0;
  for (const auto& c : j["cells"]) {
    int d = c["cell"]["dim"].get<int>();
    (d == 0 ? points : rays)++;
    CHECK(c["dual_support"].size() == (d == 0 ? 3 : 2));
  }
  CHECK(points == 1);
  CHECK(rays == 3);

  std::string hyp = write_temp("line_hyp.json", r.out);
  auto svg = run({"render", "--input", hyp});
  REQUIRE(svg.code == 0);
  auto count = [&](const std::string& needle) {
    int n = 0;
    for (std::size_t pos = 0; (pos = svg.out.find(needle, pos)) != std::string::npos;
         ++n, ++pos) {
    }
    return n;
  };
  CHECK(count("<line") == 3);
  CHECK(count("<circle") == 1);
  CHECK(svg.out.find("(0, 0)") != std::string::npos);
  CHECK(run({"render", "--input", hyp}).out == svg.out);

  // a 1-dimensional complex cannot be rendered
  std::string np = write_temp(
      "np.json",
      R"({"dim": 1, "valuation": {"model": "explicit"},
          "polynomials": [{"terms": [{"exp": [0], "val": "1"}, {"exp": [1], "val": "0"}]}]})");
  auto h1 = run({"hypersurface", "--input", np});
  REQUIRE(h1.code == 0);
  std::string hyp1 = write_temp("np_hyp.json", h1.out);
  CHECK(run({"render", "--input", hyp1}).code == 2);
}

TEST_CASE("stable and closure commands") {
  std::string doc = write_temp("doubled.json", kDoubledLine);
  auto r = run({"stable", "--input", doc, "--component", "0", "--seed", "7",
                "--checks", "3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["multiplicity"] == "1");
  CHECK(j["component"] == 0);
  CHECK(j["certificates"].size() == 3);

  auto c = run({"closure", "--input", doc, "--component", "0"});
  REQUIRE(c.code == 0);
  json jc = json::parse(c.out);
  CHECK(jc["boundary_points"].size() == 3);
  for (const auto& ep : jc["boundary_points"]) CHECK(ep["coset"][0] == "0");

  CHECK(run({"stable", "--input", doc, "--component", "5"}).code == 2);
}

TEST_CASE("np1d and oracle commands") {
  std::string np = write_temp(
      "np2.json",
      R"({"dim": 1, "valuation": {"model": "p-adic", "prime": 3},
          "polynomials": [{"terms": [{"exp": [0], "coeff": "3"},
                                     {"exp": [1], "coeff": "-4"},
                                     {"exp": [2], "coeff": "1"}]}]})");
  auto r = run({"np1d", "--input", np});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["polygon"].size() == 2);
  CHECK(j["polygon"][0]["valuation"] == "1");
  CHECK(j["polygon"][1]["count"] == 1);

  for (const char* seed : {"1", "5", "99"}) {
    auto o = run({"oracle", "np1d-roots", "--seed", seed});
    REQUIRE(o.code == 0);
    CHECK(json::parse(o.out)["agrees"] == true);
  }

  std::string doc = write_temp("multeg.json", kMulteg);
  auto res = run({"oracle", "resultant2", "--input", doc, "--point", "1/2,3/2"});
  REQUIRE(res.code == 0);
  CHECK(json::parse(res.out)["count"] == "2");

  std::string lin = write_temp("linear.json", R"({
    "dim": 2,
    "valuation": {"model": "p-adic", "prime": 3},
    "polynomials": [
      {"terms": [{"exp": [1,0], "coeff": "1"}, {"exp": [0,1], "coeff": "1"}, {"exp": [0,0], "coeff": "1"}]},
      {"terms": [{"exp": [1,0], "coeff": "2"}, {"exp": [0,1], "coeff": "2"}, {"exp": [0,0], "coeff": "1"}]}
    ]})");
  auto l = run({"oracle", "linear2", "--input", lin});
  REQUIRE(l.code == 0);
  json jl = json::parse(l.out);
  CHECK(jl["count"] == "1");
  CHECK(jl["point"]["ordinary"] == false);
  CHECK(jl["point"]["stratum_generators"][0] == json::array({-1, -1}));
}

TEST_CASE("series command") {
  std::string doc = write_temp("series.json", R"({
    "dim": 1,
    "valuation": {"model": "explicit"},
    "polynomials": [{"terms": [{"exp": [0], "val": "0"}]}],
    "series": [{
      "domain": {"inequalities": [{"normal": [1], "offset": "3"},
                                  {"normal": [-1], "offset": "0"}]},
      "terms": [{"exp": [0], "val": "0"}, {"exp": [1], "val": "1"},
                {"exp": [2], "val": "4"}, {"exp": [3], "val": "9"}],
      "tail_bound": "16"
    }]
  })");
  auto r = run({"series", "--input", doc, "--poly", "0"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["vertices_on_P"].size() == 1);
  CHECK(j["vertices_on_P"][0]["exp"] == json::array({0}));
  CHECK(j["min_weight"] == "0");
  CHECK(j["restriction"]["terms"].size() == 1);
}
