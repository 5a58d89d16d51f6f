#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(FAIRREP_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fairrep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fairrep::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("upsilon on K4") {
  auto plain = run({"upsilon", "--pattern", data("tri.g"), "--host", data("k4.g")});
  REQUIRE(plain.code == 0);
  CHECK(json_of(plain)["value"] == 2);
  auto sym = run({"upsilon", "--pattern", data("tri.g"), "--host", data("k4.g"), "--symmetric"});
  REQUIRE(sym.code == 0);
  CHECK(json_of(sym)["value"] == 6);
}

TEST_CASE("aut and copies") {
  auto aut = run({"aut", data("k4.g")});
  REQUIRE(aut.code == 0);
  CHECK(json_of(aut)["order"] == 24);
  auto tt = run({"aut", data("tailed_tri.g")});
  CHECK(json_of(tt)["order"] == 2);
  auto copies = run({"copies", "--pattern", data("tri.g"), "--host", data("k4.g")});
  REQUIRE(copies.code == 0);
  CHECK(json_of(copies)["count"] == 4);
}

TEST_CASE("dm-cover") {
  auto edge = run({"dm-cover", data("edge.bg")});
  REQUIRE(edge.code == 0);
  CHECK(json_of(edge) == nlohmann::json::parse(R"({"tau": 1, "a": [], "b": [0]})"));
  auto c4 = run({"dm-cover", data("c4.bg")});
  CHECK(json_of(c4)["b"] == nlohmann::json::array({0, 1}));
}

TEST_CASE("symmetrize multiple") {
  auto r = run({"symmetrize", "--mode", "multiple", "--family", data("two_tri_sets.json"), "--x", "0,3", "--k", "1",
                "--group", data("two_tri.g")});
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["Y"] == nlohmann::json::array({0, 1, 2, 3, 4, 5}));
  CHECK(j["bound"] == "3/1");
  CHECK(j["family_invariant"] == true);

  auto bad = run({"symmetrize", "--mode", "multiple", "--family", data("two_tri_sets.json"), "--x", "0", "--k", "1",
                  "--group", data("two_tri.g")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("infeasible") != std::string::npos);

  // The orbit rule leaves some member with fewer than k points: flagged, exit 1.
  auto shortfall = run({"symmetrize", "--mode", "multiple", "--family", data("short_sets.json"), "--x", "3,5,6,7",
                        "--k", "3", "--group", data("short_group.json")});
  CHECK(shortfall.code == 1);
  CHECK(json_of(shortfall)["ok"] == false);
  CHECK(shortfall.err.find("flagged") != std::string::npos);
}

TEST_CASE("symmetrize weighted and the product oracle") {
  std::vector<std::string> base = {"symmetrize", "--mode", "weighted", "--family", data("two_stars.json"),
                                   "--x",        "0,10",   "--group",  data("star_swap.json")};
  auto r = run(base);
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["Y"] == nlohmann::json::array({0, 10}));
  CHECK(j["bound"] == "4/1");
  auto with_oracle = base;
  with_oracle.push_back("--oracle");
  auto o = run(with_oracle);
  REQUIRE(o.code == 0);
  auto jo = json_of(o);
  CHECK(jo["agree"] == true);
  CHECK(jo["oracle"]["lift"]["E"] == 3);
  auto text = run({"--text", "symmetrize", "--mode", "weighted", "--family", data("two_stars.json"), "--x", "0,10",
                   "--group", data("star_swap.json")});
  CHECK(text.code == 0);
  CHECK(text.out.find("bound: 4,") != std::string::npos);
}

TEST_CASE("tadpole") {
  auto r = run({"tadpole", "--pattern", data("tailed_tri.g"), "--host", data("k4_pendant.g")});
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["Y"].size() <= 3 * j["X"].size());
  CHECK(j["conclusions_hold"] == true);
  auto infeasible = run({"tadpole", "--pattern", data("tailed_tri.g"), "--host", data("k4_pendant.g"), "--x", "0"});
  CHECK(infeasible.code == 1);
  auto not_tadpole = run({"tadpole", "--pattern", data("tri.g"), "--host", data("k4.g")});
  CHECK(not_tadpole.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"aut"}).code == 2);
  CHECK(run({"aut", data("k4.g"), "--bogus"}).code == 2);
  CHECK(run({"aut", data("missing.g")}).code == 2);
  auto bad = run({"aut", data("bad.g")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"symmetrize", "--mode", "sideways", "--family", data("two_tri_sets.json"), "--x", "0", "--group",
             data("two_tri.g")})
            .code == 2);
  CHECK(run({"symmetrize", "--mode", "multiple", "--family", data("two_tri_sets.json"), "--x", "0,3", "--k", "1",
             "--group", data("two_tri.g"), "--oracle"})
            .code == 2);
}

TEST_CASE("text flag before or after the subcommand") {
  auto a = run({"--text", "aut", data("k4.g")});
  auto b = run({"aut", data("k4.g"), "--text"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("|Aut| = 24") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"aut", data("k4_pendant.g")},
           {"upsilon", "--pattern", data("tailed_tri.g"), "--host", data("k4_pendant.g"), "--symmetric"},
           {"tadpole", "--pattern", data("tailed_tri.g"), "--host", data("k4_pendant.g")},
           {"dm-cover", data("c4.bg")}}) {
    auto first = run(args);
    auto second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
