#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// Exit-code and output contract of the command-line driver.

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HAWK_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(HAWK_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("check: exit 0 on acceptance, 1 on rejection, 2 on parse error") {
  RunResult ok = run("check " + data("good.haw"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("add_two_three: accepted") != std::string::npos);
  CHECK(ok.out.find("all accepted") != std::string::npos);

  RunResult rejected = run("check " + data("rejected.haw"));
  CHECK(rejected.code == 1);
  CHECK(rejected.out.find("equality at arrow sort") != std::string::npos);

  RunResult broken = run("check " + data("broken.haw"));
  CHECK(broken.code == 2);
  CHECK(broken.out.find("parse error") != std::string::npos);

  RunResult missing = run("check /no/such/path.haw");
  CHECK(missing.code == 2);
}

TEST_CASE("empty file checks clean") {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/hawk_empty.haw";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f);
  fclose(f);
  RunResult r = run("check " + tmp);
  CHECK(r.code == 0);
  CHECK(r.out.find("(0 theorems)") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("translate writes a re-checkable file") {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/hawk_out.haw";
  RunResult tr = run("translate " + data("extensional.haw") + " -o " + tmp);
  CHECK(tr.code == 0);
  CHECK(tr.out.find("funext: ok") != std::string::npos);
  RunResult rc = run("check " + tmp);
  CHECK(rc.code == 0);
  std::remove(tmp.c_str());

  // induction and existential elimination survive the round trip to disk
  RunResult hard = run("translate " + data("hard.haw") + " -o " + tmp);
  CHECK(hard.code == 0);
  RunResult hard_rc = run("check " + tmp);
  CHECK(hard_rc.code == 0);
  std::remove(tmp.c_str());

  RunResult bad = run("translate " + data("rejected.haw") + " -o " + tmp);
  CHECK(bad.code == 1);
}

TEST_CASE("normalize prints normal forms; exit 2 on type errors") {
  RunResult r = run("normalize -e '(fun (x : N) => x) 0'");
  CHECK(r.code == 0);
  CHECK(r.out.find("0 : N") != std::string::npos);

  RunResult withdefs = run(
      "normalize -e 'def add : N -> N -> N := fun (x : N) (y : N) => rec[N] x (fun (a : N) (b : "
      "N) => S a) y. add 2 3'");
  CHECK(withdefs.code == 0);
  CHECK(withdefs.out.find("S (S (S (S (S 0))))") != std::string::npos);

  RunResult traced = run("normalize --trace -e '(fun (x : N) => x) 0'");
  CHECK(traced.code == 0);
  CHECK(traced.out.find("beta") != std::string::npos);

  RunResult illtyped = run("normalize -e '0 0'");
  CHECK(illtyped.code == 2);
  RunResult unparseable = run("normalize -e 'fun ('");
  CHECK(unparseable.code == 2);
}

TEST_CASE("conjecture and corpus commands") {
  RunResult cj = run("conjecture " + data("steps.haw"));
  CHECK(cj.code == 0);
  CHECK(cj.out.find("joinable") != std::string::npos);
  CHECK(cj.out.find("summary") != std::string::npos);

  RunResult cj2 = run("conjecture " + data("steps.haw") + " --max-steps 3");
  CHECK(cj2.code == 0);

  RunResult corpus = run("corpus --filter peano4");
  CHECK(corpus.code == 0);
  CHECK(corpus.out.find("peano4\tlhaw\tcheck=ok\ttranslate=ok\tms=") == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("translate " + data("good.haw")).code == 2);  // missing -o
}

TEST_CASE("environment step budget is honored") {
  std::string cmd = "HAWK_STEP_BUDGET=2 " + std::string(HAWK_CLI_PATH) +
                    " normalize -e '(fun (x : N) => x) ((fun (y : N) => y) ((fun (z : N) => z) "
                    "0))' 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  CHECK(r.code == 1);
  CHECK(r.out.find("budget") != std::string::npos);
}
