#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "torilink/cli.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the tool in-process with stdout and stderr redirected to
// temporary files; only stdout is returned.
RunResult run(std::vector<std::string> args) {
  std::vector<char*> argv;
  std::string prog = "torilink";
  argv.push_back(prog.data());
  for (std::string& a : args) argv.push_back(a.data());

  std::cout.flush();
  std::cerr.flush();
  std::fflush(nullptr);
  FILE* captured = std::tmpfile();
  FILE* discarded = std::tmpfile();
  REQUIRE(captured != nullptr);
  REQUIRE(discarded != nullptr);
  const int saved_out = dup(1);
  const int saved_err = dup(2);
  dup2(fileno(captured), 1);
  dup2(fileno(discarded), 2);

  RunResult r;
  r.code = torilink::run_cli(static_cast<int>(argv.size()), argv.data());

  std::cout.flush();
  std::cerr.flush();
  std::fflush(nullptr);
  dup2(saved_out, 1);
  dup2(saved_err, 2);
  close(saved_out);
  close(saved_err);

  std::rewind(captured);
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, captured)) > 0) r.out.append(buf, n);
  std::fclose(captured);
  std::fclose(discarded);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("human cyclic report prints three betti lines") {
  const RunResult r = run({"cyclic", "--phi", "3,3,1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "b1 = 10\nb2 = inf\nb3 = 0\n");

  const RunResult inf = run({"cyclic", "--phi", "0,0,1,1,1"});
  CHECK(inf.code == 0);
  CHECK(inf.out == "b1 = inf\nb2 = inf\nb3 = inf\n");
}

TEST_CASE("human polynomial report is the bare value") {
  const RunResult r = run({"alexander", "--polynomial"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("fox matrix table in human format") {
  const RunResult r = run({"alexander"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("== fox matrix ==\n", 0) == 0);
  CHECK(contains(r.out, "relator"));
  CHECK(contains(r.out, "d/da"));
  CHECK(contains(r.out, "d/de"));
}

TEST_CASE("json output parses and carries the table contract") {
  const RunResult r = run({"--format", "json", "symmetry", "--report", "orders"});
  CHECK(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["title"] == "group orders");
  CHECK(doc[0]["columns"] == nlohmann::json({"group", "order"}));
  REQUIRE(doc[0]["rows"].size() == 3);
  CHECK(doc[0]["rows"][0] == nlohmann::json({"index group H", "20"}));
  CHECK(doc[0]["rows"][1][1] == "640");
  CHECK(doc[0]["rows"][2][1] == "48");
}

TEST_CASE("json cyclic report") {
  const RunResult r = run({"--format", "json", "cyclic", "--phi", "2,2,1,1,1"});
  CHECK(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["title"] == "cyclic cover betti");
  CHECK(doc[0]["rows"][0] == nlohmann::json({"b1", "9"}));
  CHECK(doc[0]["rows"][1] == nlohmann::json({"b2", "inf"}));
  CHECK(doc[0]["rows"][2] == nlohmann::json({"b3", "0"}));
}

TEST_CASE("csv output is deterministic") {
  const RunResult a = run({"--format", "csv", "symmetry", "--report", "orders"});
  const RunResult b = run({"--format", "csv", "symmetry", "--report", "orders"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# group orders\ngroup,order\n", 0) == 0);
  CHECK(contains(a.out, "signed group G,640\n"));
}

TEST_CASE("sweeps default to csv") {
  const RunResult r = run({"cyclic", "--table", "1..1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# cyclic cover betti table\n"
        "phi1,phi2,phi3,phi4,phi5,b1,b2,b3\n"
        "1,1,1,1,1,8,inf,0\n");

  // An explicit format wins over the sweep default.
  const RunResult j = run({"--format", "json", "cyclic", "--table", "1..1"});
  CHECK(j.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc[0]["title"] == "cyclic cover betti table");
  REQUIRE(doc[0]["rows"].size() == 1);
  CHECK(doc[0]["rows"][0][5] == "8");
}

TEST_CASE("human tables start with a title banner") {
  const RunResult r = run({"symmetry", "--report", "orders"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("== group orders ==\n", 0) == 0);
  CHECK(contains(r.out, "640"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--format", "yaml", "symmetry"}).code == 2);
  CHECK(run({"symmetry", "--report", "nonesuch"}).code == 2);
  CHECK(run({"cyclic", "--phi", "1,2"}).code == 2);
  CHECK(run({"cyclic", "--phi", "2,2,2,2,2"}).code == 2);
  CHECK(run({"cyclic", "--phi", "1,1,x,1,1"}).code == 2);
  CHECK(run({"cyclic", "--table", "5"}).code == 2);
  CHECK(run({"alexander", "--presentation", "nonesuch"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const RunResult r = run({"--help"});
  CHECK(r.code == 0);
}

TEST_CASE("verification command reports every claim as passing") {
  const RunResult r = run({"--format", "csv", "verify-paper"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# claims\n"));
  CHECK(contains(r.out, "# acceptance criteria\n"));
  CHECK(contains(r.out, ",pass,"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}
