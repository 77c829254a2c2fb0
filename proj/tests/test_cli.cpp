#include <doctest.h>

#include "support.hpp"

#include <shapelemma/cli.hpp>

#include <json.hpp>

#include <sstream>

using namespace shapelemma;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args)
{
  args.insert(args.begin(), "shapelemma");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) { return std::string(SHAPELEMMA_FIXTURE_DIR) + "/" + name + ".sys"; }

}  // namespace

TEST_CASE("cli exit codes")
{
  CHECK(cli({"resultant", fixture_path("intro")}).code == 0);
  CHECK(cli({"resultant", fixture_path("nope")}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"resultant", "--system", "vars: x1 x2\nf1 = x1 +"}).code == 2);
  CHECK(cli({"resultant", "--system", "vars: x1 x2\nf1 = x1\nf2 = x2"}).code == 3);
  CHECK(cli({"subresultants", "--system", "vars: x1 x2\nf1 = x1 + x2\nf2 = x1 - x2"}).code == 3);
  CHECK(cli({"theorem", "1.3", fixture_path("point_at_infinity")}).code == 4);
  CHECK(cli({"poisson", fixture_path("line_at_infinity")}).code == 4);
  CHECK(cli({"theorem", "2.0", fixture_path("intro")}).code == 1);
  CHECK(cli({"resultant", fixture_path("intro"), "--system", "vars: x1 x2\nf1 = x1\nf2 = x2^2"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli json output")
{
  auto r = cli({"--format", "json", "resultant", fixture_path("line_at_infinity")});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["factored"] == "x3^7*(x3 + 6)");
  CHECK(testing::P(doc["R"].get<std::string>(), 4) == testing::P("x3^7*(x3 + 6)", 4));

  auto t = json::parse(cli({"--format", "json", "theorem", "1.3", fixture_path("shared_leading")}).out);
  CHECK(t["flags"]["shape"] == true);
  CHECK(t["flags"]["generated_by_R_and_p"] == true);
  CHECK(t["flags"]["elim_by_R"] == false);
  CHECK(t["gcd_R_s0"] == "x2");
  CHECK(t["verdict"] == "consistent");
  for (const char* c : {"shape_and_no_infinity", "elim_and_coprime_s0", "generated_and_elim"})
    CHECK(t["flags"][c] == false);

  auto i = json::parse(cli({"--format", "json", "infinity", fixture_path("point_at_infinity")}).out);
  CHECK(i["exists"] == true);
  CHECK(i["charts"][0]["points"][0]["x2"] == "-1");

  auto p = json::parse(cli({"--format", "json", "poisson", fixture_path("fat_point")}).out);
  CHECK(p["pass"] == true);
  CHECK(p["factors"][0]["factor"] == "x2");
  CHECK(p["factors"][0]["exponent"] == 4);

  // polynomial strings re-parse to the same values
  for (const char* name : {"intro", "cubic_shape", "generic_bezout", "line_at_infinity"}) {
    const auto sys = testing::fixture(name);
    auto d = json::parse(cli({"--format", "json", "subresultants", fixture_path(name)}).out);
    for (auto& [key, value] : d["p"].items())
      CHECK(testing::P(value.get<std::string>(), sys.nvars()).to_string() == value.get<std::string>());
    auto g = json::parse(cli({"--format", "json", "groebner", fixture_path(name)}).out);
    for (auto& value : g["basis"])
      CHECK(testing::P(value.get<std::string>(), sys.nvars()).to_string() == value.get<std::string>());
  }

  auto e = json::parse(cli({"--format", "json", "resultant", "--system", "vars: x1 x2\nf1 = x1 +"}).out);
  CHECK(e["error"] == "ParseError");
}
