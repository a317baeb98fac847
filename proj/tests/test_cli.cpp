#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SKEIN_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const char* f) { return std::string(TEST_DATA) + "/" + f; }

}  // namespace

TEST_CASE("cli: rt eval") {
  Run r = run("rt eval " + data("unknot.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "-1*v^4 + -1*v^-4\n");
  r = run("rt eval " + data("strand.json") + " --left 1 --right 2");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  r = run("rt eval " + data("kink.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"-1*v^6\"") != std::string::npos);
  CHECK(r.out.find("\"in\": 1") != std::string::npos);
}

TEST_CASE("cli: oq") {
  CHECK(run("oq nf 'u[2,1]*u[1,1]' --n 2").out == "(v^-4)*u[1,1]*u[2,1]\n");
  CHECK(run("oq counit 'u[1,2]'").out == "0\n");
  CHECK(run("oq rho 'u[1,1]' 'u[1,1]' --n 2").out == "v^2\n");
  CHECK(run("oq mul 'u[1,1]' 'u[2,2]'").out == "u[1,1]*u[2,2]\n");
  CHECK(run("oq delta 'u[1,2]'").out == "[u[1,1] # u[1,2]] + [u[1,2] # u[2,2]]\n");
}

TEST_CASE("cli: skein and braided") {
  CHECK(run("skein phi " + data("crossing.json")).out == "(v^-2)*u[1,1]*u[2,2]\n");
  CHECK(run("skein counit " + data("crossing.json")).out == "v^-2\n");
  CHECK(run("braided mul 'u[1,1]' 'u[1,1]'").out == "u[1,1]*u[1,1] + (-1*v^-4 + v^-12)*u[1,2]*u[2,1]\n");
  CHECK(run("braided reflect --n 2").code == 0);
}

TEST_CASE("cli: verify") {
  Run a = run("verify constants --n 5 --json");
  CHECK(a.code == 0);
  CHECK(a.out.find("\"pass\": true") != std::string::npos);
  CHECK(run("verify hecke --n 3").code == 0);
  Run b = run("verify internal --n 2 --seed 7 --json"), c = run("verify internal --n 2 --seed 7 --json");
  CHECK(b.out == c.out);
}

TEST_CASE("cli: exit code 2 on bad input") {
  CHECK(run("rt eval " + data("bad_json.json")).code == 2);
  CHECK(run("rt eval " + data("bad_kind.json")).code == 2);
  CHECK(run("rt eval /nonexistent.json").code == 2);
  CHECK(run("rt eval " + data("strand.json") + " --left 3").code == 2);
  CHECK(run("oq nf 'u[3,1]'").code == 2);
  CHECK(run("oq frob 'u[1,1]'").code == 2);
  CHECK(run("verify nope").code == 2);
  CHECK(run("verify kauffman2 --n 3").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--bogus").code == 2);
}
