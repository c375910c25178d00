#include <doctest.h>

#include <cstring>
#include <string>

#include "hawk.h"

namespace {

struct Ctx {
  hawk_ctx* c = hawk_ctx_new();
  ~Ctx() { hawk_ctx_free(c); }
};

constexpr const char* kGood = R"(
logic lhaw.
theorem ok : 0 = 0 := refl 0.
theorem also_ok : forall x : N. x = x := fun (x : N) => refl x.
)";

constexpr const char* kRejected = R"(
logic lhaw.
theorem arrow_eq (f : N -> N) : f = [N -> N] f := refl[N -> N] f.
)";

}  // namespace

TEST_CASE("parse and check through the shared interface") {
  Ctx ctx;
  hawk_source* src = nullptr;
  REQUIRE(hawk_parse_string(ctx.c, kGood, "good", &src) == HAWK_OK);
  hawk_report* rep = nullptr;
  REQUIRE(hawk_check(ctx.c, src, &rep) == HAWK_OK);
  CHECK(hawk_report_ok(rep) == 1);
  REQUIRE(hawk_report_item_count(rep) == 2);
  CHECK(std::string(hawk_report_item_name(rep, 0)) == "ok");
  CHECK(hawk_report_item_ok(rep, 1) == 1);
  hawk_report_free(rep);
  hawk_source_free(src);
}

TEST_CASE("semantic rejection is a verdict, not an API error") {
  Ctx ctx;
  hawk_source* src = nullptr;
  REQUIRE(hawk_parse_string(ctx.c, kRejected, "rejected", &src) == HAWK_OK);
  hawk_report* rep = nullptr;
  REQUIRE(hawk_check(ctx.c, src, &rep) == HAWK_OK);
  CHECK(hawk_report_ok(rep) == 0);
  CHECK(std::string(hawk_report_item_detail(rep, 0)).find("equality at arrow sort") !=
        std::string::npos);
  hawk_report_free(rep);
  hawk_source_free(src);
}

TEST_CASE("parse errors carry positions") {
  Ctx ctx;
  hawk_source* src = nullptr;
  CHECK(hawk_parse_string(ctx.c, "theorem broken : ( := x.", "broken", &src) == HAWK_ERR_PARSE);
  CHECK(std::string(hawk_ctx_last_error(ctx.c)).find("1:") != std::string::npos);
  CHECK(hawk_parse_file(ctx.c, "/no/such/file.haw", &src) == HAWK_ERR_USAGE);
}

TEST_CASE("translation produces a checkable lhaw file") {
  Ctx ctx;
  hawk_source* src = nullptr;
  const char* lehaw = R"(
logic lehaw.
theorem funext (f : N -> N) : f = [N -> N] f := ext[N, N](fun (x : N) => refl (f x)).
)";
  REQUIRE(hawk_parse_string(ctx.c, lehaw, "lehaw", &src) == HAWK_OK);
  hawk_report* rep = nullptr;
  REQUIRE(hawk_translate(ctx.c, src, &rep) == HAWK_OK);
  REQUIRE(hawk_report_ok(rep) == 1);
  std::string out = hawk_report_text(rep);
  CHECK(out.rfind("logic lhaw.", 0) == 0);
  hawk_source* out_src = nullptr;
  REQUIRE(hawk_parse_string(ctx.c, out.c_str(), "translated", &out_src) == HAWK_OK);
  hawk_report* out_rep = nullptr;
  REQUIRE(hawk_check(ctx.c, out_src, &out_rep) == HAWK_OK);
  CHECK(hawk_report_ok(out_rep) == 1);
  hawk_report_free(out_rep);
  hawk_source_free(out_src);
  hawk_report_free(rep);
  hawk_source_free(src);
}

TEST_CASE("normalization with definitions and trace") {
  Ctx ctx;
  hawk_report* rep = nullptr;
  const char* prog =
      "def add : N -> N -> N := fun (x : N) (y : N) => rec[N] x (fun (a : N) (b : N) => S a) y.\n"
      "add 2 3";
  REQUIRE(hawk_normalize(ctx.c, prog, 0, &rep) == HAWK_OK);
  CHECK(std::string(hawk_report_text(rep)).find("S (S (S (S (S 0))))") != std::string::npos);
  hawk_report_free(rep);

  REQUIRE(hawk_normalize(ctx.c, prog, 1, &rep) == HAWK_OK);
  CHECK(std::string(hawk_report_text(rep)).find("beta") != std::string::npos);
  hawk_report_free(rep);

  // type errors are verdicts with exit-worthy detail
  REQUIRE(hawk_normalize(ctx.c, "0 0", 0, &rep) == HAWK_OK);
  CHECK(hawk_report_ok(rep) == 0);
  hawk_report_free(rep);

  CHECK(hawk_normalize(ctx.c, "fun (x : N) =>", 0, &rep) == HAWK_ERR_PARSE);
}

TEST_CASE("step budget override surfaces defects") {
  Ctx ctx;
  hawk_ctx_set_step_budget(ctx.c, 5);
  hawk_report* rep = nullptr;
  const char* prog =
      "def add : N -> N -> N := fun (x : N) (y : N) => rec[N] x (fun (a : N) (b : N) => S a) y.\n"
      "add 5 5";
  CHECK(hawk_normalize(ctx.c, prog, 0, &rep) == HAWK_ERR_INTERNAL);
  CHECK(std::string(hawk_ctx_last_error(ctx.c)).find("budget") != std::string::npos);
  hawk_ctx_set_step_budget(ctx.c, 1000000);
  REQUIRE(hawk_normalize(ctx.c, prog, 0, &rep) == HAWK_OK);
  hawk_report_free(rep);
}

TEST_CASE("the bundled corpus runs end to end") {
  Ctx ctx;
  hawk_report* rep = nullptr;
  REQUIRE(hawk_corpus(ctx.c, "peano4", &rep) == HAWK_OK);
  CHECK(hawk_report_item_count(rep) == 1);
  CHECK(hawk_report_ok(rep) == 1);
  std::string line = hawk_report_text(rep);
  CHECK(line.find("peano4\tlhaw\tcheck=ok\ttranslate=ok\tms=") == 0);
  hawk_report_free(rep);

  REQUIRE(hawk_corpus(ctx.c, nullptr, &rep) == HAWK_OK);
  CHECK(hawk_report_ok(rep) == 1);
  CHECK(hawk_report_item_count(rep) >= 15 + 10 + 8);
  hawk_report_free(rep);
}

TEST_CASE("conjecture reports through the interface") {
  Ctx ctx;
  hawk_source* src = nullptr;
  const char* text = R"(
logic lhaw.
theorem beta : 0 = 0 := (assume k : 0 = 0 => k) (refl 0).
)";
  REQUIRE(hawk_parse_string(ctx.c, text, "cj", &src) == HAWK_OK);
  hawk_report* rep = nullptr;
  REQUIRE(hawk_conjecture(ctx.c, src, 0, &rep) == HAWK_OK);
  CHECK(hawk_report_ok(rep) == 1);
  CHECK(std::string(hawk_report_text(rep)).find("joinable") != std::string::npos);
  hawk_report_free(rep);
  hawk_source_free(src);
}
