#include <doctest.h>

#include <sstream>

#include "twobridge/cli/app.hpp"
#include "twobridge/cli/document.hpp"
#include "twobridge/cli/knot_spec.hpp"
#include "twobridge/errors.hpp"

using namespace twobridge;
using namespace twobridge::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json payload(std::vector<std::string> args) {
  const Result r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["schema_version"] == "1");
  return doc["payload"];
}

}  // namespace

TEST_CASE("knot specifications") {
  CHECK(parse_knot_spec("S(49,19)") == SchubertForm(49, 19));
  CHECK(parse_knot_spec(" s( 49 , 19 ) ") == SchubertForm(49, 19));
  CHECK(parse_knot_spec("C[2,2]") == SchubertForm(5, 2));
  CHECK(parse_knot_spec("c[2, 2, -2, 2, 2, -2]") == SchubertForm(49, 18));
  CHECK(parse_knot_spec("9_27") == SchubertForm(49, 19));
  CHECK_THROWS_AS(parse_knot_spec("S(4,1)"), DomainError);
  CHECK_THROWS_AS(parse_knot_spec("S(49)"), ParseError);
  CHECK_THROWS_AS(parse_knot_spec("S(49,19"), ParseError);
  CHECK_THROWS_AS(parse_knot_spec("C[2,,2]"), ParseError);
  CHECK_THROWS_AS(parse_knot_spec("C[3,2]"), DomainError);
  CHECK_THROWS_AS(parse_knot_spec("10_1"), ParseError);
  CHECK_THROWS_AS(parse_knot_spec(""), ParseError);
}

TEST_CASE("json helpers") {
  CHECK(integer_json(BigInt(42)) == 42);
  CHECK(integer_json(BigInt(1) << 70) == "1180591620717411303424");
  CHECK(rational_json(Rational(2)) == "2");
  CHECK(rational_json(Rational(BigInt(-1), BigInt(2))) == "-1/2");
}

TEST_CASE("info") {
  const Json p = payload({"info", "S(49,19)", "--json"});
  CHECK(p["knot"]["alpha"] == 49);
  CHECK(p["knot"]["beta"] == 18);
  CHECK(p["mirrored"] == true);
  CHECK(p["name"] == "9_27");
  CHECK(p["crossing_number"] == 9);
  CHECK(p["genus"] == 3);
  CHECK(p["conway"] == Json::parse("[2,2,-2,2,2,-2]"));
  CHECK(p["simple_cf"] == Json::parse("[0,2,1,2,1,1,2]"));

  const Json f = payload({"info", "C[2,2]", "--json"});
  CHECK(f["knot"]["alpha"] == 5);
  CHECK(f["knot"]["beta"] == 2);
  CHECK(f["crossing_number"] == 4);

  const Result bad = invoke({"info", "S(4,1)"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());

  const Result text = invoke({"info", "9_27"});
  CHECK(text.code == 0);
  CHECK(text.out.find("crossings  9") != std::string::npos);
}

TEST_CASE("info conway round trip") {
  for (const std::string spec : {"S(49,19)", "S(961,210)", "S(5,3)", "S(41,16)", "S(29,11)", "8_9", "3_1"}) {
    const Json p = payload({"info", spec, "--json"});
    std::string conway = "C[";
    for (std::size_t i = 0; i < p["conway"].size(); ++i) conway += (i ? "," : "") + p["conway"][i].dump();
    conway += "]";
    const auto e = equivalent(parse_knot_spec(conway), parse_knot_spec(spec));
    CHECK(e != Equivalence::distinct);
    if (!p["mirrored"].get<bool>()) CHECK(e == Equivalence::same);
  }
}

TEST_CASE("slopes") {
  const Json p = payload({"slopes", "S(49,19)", "--json"});
  REQUIRE(p["records"].size() == 10);
  CHECK(p["records"][4] == Json::parse(R"({"cf":[0,3,-4,3,-2],"n_plus":4,"n_minus":0,"slope":8,"weight":12})"));
  CHECK(p["longitude_index"] == 0);

  const Json f = payload({"slopes", "S(5,2)", "--json"});
  std::multiset<int> slopes;
  for (const auto& r : f["records"]) slopes.insert(r["slope"].get<int>());
  CHECK(slopes == std::multiset<int>{-4, 0, 4});

  CHECK(payload({"slopes", "--kx", "2", "--json"})["records"].size() == 25);
  CHECK(invoke({"slopes", "--kx", "0"}).code == 2);
  CHECK(invoke({"slopes", "--kx", "2", "S(5,2)"}).code == 2);
  CHECK(invoke({"slopes"}).code == 2);
}

TEST_CASE("obstruct") {
  const Json k1 = payload({"obstruct", "--kx", "1", "--json"});
  CHECK(k1["casson_difference"] == "-2");
  CHECK(k1["verdict"] == "NoHomologySphereCosmetic_SL2C");

  const Json r63 = payload({"obstruct", "S(13,5)", "--json"});
  CHECK(r63["delta_second"] == 2);
  CHECK(r63["verdict"] == "NoCosmetic_BoyerLines");
  CHECK(r63["name"] == "6_3");
}

TEST_CASE("obstruct census") {
  const Json p = payload({"obstruct", "--census", "9", "--filter", "sigma=0", "--json"});
  CHECK(p["count"] == 13);
  CHECK(p["reports"].size() == 13);
  CHECK(p["max_crossings"] == 9);

  const Json q = payload({"obstruct", "--census", "9", "--filter", "sigma=0", "--filter", "delta_second=0", "--json"});
  REQUIRE(q["count"] == 1);
  CHECK(q["reports"][0]["name"] == "9_27");

  const Result lines = invoke({"obstruct", "--census", "5", "--jsonl", "--threads", "2"});
  REQUIRE(lines.code == 0);
  std::istringstream in(lines.out);
  std::string line;
  std::vector<Json> rows;
  while (std::getline(in, line)) rows.push_back(Json::parse(line));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["name"] == "3_1");
  CHECK(rows[3]["knot"]["alpha"] == 7);

  CHECK(invoke({"obstruct", "--census", "9", "--filter", "colour=red"}).code == 2);
  CHECK(invoke({"obstruct", "--census", "9", "--filter", "sigma"}).code == 2);
  CHECK(invoke({"obstruct", "S(5,2)", "--filter", "sigma=0"}).code == 2);
  CHECK(invoke({"obstruct", "--census", "2"}).code == 2);
}

TEST_CASE("alexander") {
  const Json p = payload({"alexander", "S(25,9)", "--json"});
  CHECK(p["delta_second"] == 4);
  CHECK(p["alexander_text"] == "2t^-2-6t^-1+9-6t+2t^2");
  CHECK(p["alexander_polynomial"]["-2"] == 2);
  CHECK(p["alexander_polynomial"]["0"] == 9);

  const Json k = payload({"alexander", "9_27", "--json"});
  CHECK(k["sigma"] == 0);
  CHECK(k["tau_zero"] == true);
}

TEST_CASE("casson") {
  const Json p = payload({"casson", "S(49,19)", "1/1", "--json"});
  CHECK(p["lambda"]["value"] == "55");
  CHECK(p["lambda"]["hypotheses_ok"] == true);
  CHECK(p["seminorm"] == "134");
  CHECK(p["cosmetic_difference"] == "2");

  const Json q = payload({"casson", "S(49,18)", "--json"});
  CHECK(q["slope"] == "1/1");
  CHECK(q["lambda"]["value"] == "53");

  const Json n = payload({"casson", "S(49,18)", "-1/1", "--json"});
  CHECK(n["lambda"]["value"] == "55");

  const Json z = payload({"casson", "S(49,18)", "0/1", "--json"});
  CHECK(z["lambda"]["value"].is_null());
  CHECK(z["lambda"]["hypotheses_ok"] == false);

  const Result meridian = invoke({"casson", "S(49,19)", "1/0"});
  CHECK(meridian.code == 2);
  CHECK(meridian.out.empty());
  CHECK(invoke({"casson", "S(49,19)", "2/4"}).code == 2);
  CHECK(payload({"casson", "--kx", "1", "-1/1", "--json"})["lambda"]["value"] == "55");
}

TEST_CASE("exit codes and help") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"info", "--help"}).code == 0);
  CHECK(invoke({"info", "S(49,19)", "--bogus"}).code == 2);
}

TEST_CASE("output is byte deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"info", "9_27", "--json"},
      {"slopes", "--kx", "3", "--json"},
      {"obstruct", "--census", "8", "--json", "--threads", "3"},
      {"obstruct", "--census", "8", "--jsonl"},
      {"alexander", "S(41,16)"},
      {"casson", "--kx", "2", "3/7", "--json"},
  };
  for (const auto& c : commands) {
    const Result a = invoke(c);
    const Result b = invoke(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(invoke({"obstruct", "--census", "9", "--jsonl", "--threads", "1"}).out ==
        invoke({"obstruct", "--census", "9", "--jsonl", "--threads", "4"}).out);
}
