#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run rthy(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " RTHY_BIN " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(RTHY_DATA) + "/" + name; }

}  // namespace

TEST_CASE("check-order on the Shor encodings") {
  auto r = rthy("check-order " + data("shor_x.json") + " " + data("shor_y.json"));
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["convertible"] == false);
  CHECK(d["certificate"]["verified"] == true);

  auto c = rthy("check-order " + data("shor_x.json") + " " + data("coarse_x.json"));
  REQUIRE(c.code == 0);
  CHECK(c.doc()["convertible"] == true);
  CHECK(c.doc()["witness"].size() == 2);
}

TEST_CASE("zonotope and lorenz vertex lists") {
  auto z = rthy("zonotope " + data("binary_a.json") + " " + data("binary_b.json"));
  REQUIRE(z.code == 0);
  CHECK(z.doc()["x_includes_y"] == false);
  CHECK(z.doc()["y_includes_x"] == false);
  CHECK(z.doc()["vertices"].size() == 4);

  auto l = rthy("lorenz " + data("lorenz_red.json"));
  REQUIRE(l.code == 0);
  CHECK(l.doc()["vertices"] == json::parse(R"([["0","0"],["1/4","3/4"],["1","1"]])"));

  auto csv = rthy("--format csv lorenz " + data("lorenz_blue.json") + " --ref uniform");
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "x,y\n0,0\n1/2,7/8\n1,1\n");

  CHECK(rthy("--format csv weight " + data("shor_x.json")).code == 2);
}

TEST_CASE("markotope, weights and robustness") {
  auto m = rthy("markotope " + data("shor_x.json") + " " + data("coarse_x.json"));
  REQUIRE(m.code == 0);
  CHECK(m.doc()["contains"] == true);
  CHECK(rthy("markotope " + data("shor_y.json") + " " + data("coarse_x.json")).doc()["contains"] == false);

  CHECK(rthy("weight " + data("shor_x.json") + " --m 2 --k 3").doc()["value"] == "1/4");
  CHECK(rthy("weight " + data("shor_y.json") + " --m 1 --k 3").doc()["value"] == "1");
  CHECK(rthy("robustness " + data("shor_y.json") + " --kind global").doc()["value"] == "1/3");
  CHECK(rthy("robustness " + data("shor_y.json") + " --kind nonconvexity").doc()["value"] == "+inf");
  CHECK(rthy("weight " + data("shor_x.json") + " --m 3 --k 3").code == 2);
}

TEST_CASE("possibilistic search and its guard") {
  auto r = rthy("possibilistic " + data("shor_x.json") + " " + data("shor_y.json"));
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["convertible"] == false);
  CHECK(d["certificate"]["verified"] == true);
  CHECK(d["hypergraph_x"] == json::parse("[[0,1],[0,2],[0,3]]"));
  CHECK(d["hypergraph_y"] == json::parse("[[0,1],[1,2],[0,2]]"));

  auto g = rthy("possibilistic " + data("shor_x.json") + " " + data("shor_y.json"), "RTHY_ENUM_GUARD=1");
  CHECK(g.code == 3);
}

TEST_CASE("channel subcommands") {
  auto y = rthy("channel yield " + data("psi_x.json") + " --monotone fmk --m 2 --k 3");
  REQUIRE(y.code == 0);
  CHECK(y.doc()["value"] == "1/4");
  CHECK(y.doc()["exact"] == true);
  CHECK(rthy("--threads 2 channel yield " + data("psi_x.json") + " --monotone fmk --m 2 --k 3").doc()["value"] ==
        "1/4");
  CHECK(rthy("channel equivalent " + data("psi_x.json") + " " + data("shor_x.json")).doc()["equivalent"] == true);
  CHECK(rthy("channel equivalent " + data("psi_x.json") + " " + data("shor_y.json")).doc()["equivalent"] == false);
  auto s = rthy("channel simulate " + data("shor_x.json") + " " + data("psi_x.json"));
  CHECK(s.doc()["convertible"] == true);
}

TEST_CASE("module subcommands") {
  std::string mod = " --module " + data("four_resources.json");
  auto v = rthy("module validate" + mod);
  REQUIRE(v.code == 0);
  CHECK(v.doc()["valid"] == true);

  auto o = rthy("module order" + mod);
  CHECK(o.doc()["pairs"].size() == 5);

  auto c = rthy("module cost" + mod + " --gold " + data("gold.json"));
  REQUIRE(c.code == 0);
  CHECK(c.doc()["cost"]["1'"]["value"] == "2");
  CHECK(c.doc()["cost"]["1'"]["witness"] == "2");
  auto y = rthy("module yield" + mod + " --gold " + data("gold.json") + " --at \"1'\"");
  CHECK(y.doc()["yield"]["1'"]["value"] == "0");
  CHECK(y.doc()["yield"].size() == 1);
  CHECK(rthy("module yield" + mod + " --gold " + data("gold.json") + " --at nope").code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(rthy("--help").code == 0);
  CHECK(rthy("").code == 2);
  CHECK(rthy("no-such-command").code == 2);
  CHECK(rthy("check-order " + data("missing.json") + " " + data("shor_y.json")).code == 2);
  CHECK(rthy("check-order " + data("broken.json") + " " + data("shor_y.json")).code == 2);
  CHECK(rthy("check-order " + data("shor_x.json") + " " + data("binary_a.json")).code == 2);
  CHECK(rthy("robustness " + data("shor_x.json") + " --kind other").code == 2);
}
