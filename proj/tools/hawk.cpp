// Command-line driver over the shared library's C interface.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hawk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

struct CtxDeleter {
  void operator()(hawk_ctx* c) const { hawk_ctx_free(c); }
};
struct SourceDeleter {
  void operator()(hawk_source* s) const { hawk_source_free(s); }
};
struct ReportDeleter {
  void operator()(hawk_report* r) const { hawk_report_free(r); }
};
using Ctx = std::unique_ptr<hawk_ctx, CtxDeleter>;
using Source = std::unique_ptr<hawk_source, SourceDeleter>;
using ReportPtr = std::unique_ptr<hawk_report, ReportDeleter>;

int status_exit(hawk_status st, const hawk_ctx* ctx) {
  switch (st) {
    case HAWK_OK:
      return kExitOk;
    case HAWK_ERR_PARSE:
      std::cerr << "parse error: " << hawk_ctx_last_error(ctx) << "\n";
      return kExitUsage;
    case HAWK_ERR_USAGE:
      std::cerr << "error: " << hawk_ctx_last_error(ctx) << "\n";
      return kExitUsage;
    case HAWK_ERR_INTERNAL:
      std::cerr << "defect: " << hawk_ctx_last_error(ctx) << "\n";
      return kExitSemantic;
  }
  return kExitUsage;
}

Source parse_path(hawk_ctx* ctx, const std::string& path, int& exit_code) {
  hawk_source* raw = nullptr;
  hawk_status st = hawk_parse_file(ctx, path.c_str(), &raw);
  if (st != HAWK_OK) {
    exit_code = status_exit(st, ctx);
    return nullptr;
  }
  return Source(raw);
}

void print_items(const hawk_report* rep) {
  size_t n = hawk_report_item_count(rep);
  for (size_t i = 0; i < n; ++i) {
    std::cout << hawk_report_item_name(rep, i) << ": "
              << (hawk_report_item_ok(rep, i) ? "ok" : "FAIL");
    const char* detail = hawk_report_item_detail(rep, i);
    if (detail && *detail) std::cout << " (" << detail << ")";
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hawk — proof checker and proof compiler for higher-type arithmetic"};
  app.require_subcommand(1);

  uint64_t step_budget = 0;
  app.add_option("--step-budget", step_budget, "rewrite step budget (default 1000000)");

  std::string check_path;
  auto* cmd_check = app.add_subcommand("check", "check every theorem in a .haw file");
  cmd_check->add_option("file", check_path, "input .haw file")->required();

  std::string tr_path, tr_out;
  auto* cmd_translate =
      app.add_subcommand("translate", "compile a .haw file into the base logic");
  cmd_translate->add_option("file", tr_path, "input .haw file")->required();
  cmd_translate->add_option("-o,--output", tr_out, "output .haw file")->required();

  std::string expr;
  bool with_trace = false;
  auto* cmd_normalize = app.add_subcommand("normalize", "normalize a term");
  cmd_normalize->add_option("-e,--expr", expr, "term (optionally preceded by def declarations)")
      ->required();
  cmd_normalize->add_flag("--trace", with_trace, "print the rewrite trace");

  std::string cj_path;
  uint64_t max_steps = 0;
  auto* cmd_conjecture =
      app.add_subcommand("conjecture", "reduction experiment on closed peel-free proofs");
  cmd_conjecture->add_option("file", cj_path, "input .haw file")->required();
  cmd_conjecture->add_option("--max-steps", max_steps, "joinability search budget (default 10000)");

  std::string filter;
  auto* cmd_corpus = app.add_subcommand("corpus", "run the bundled corpus");
  cmd_corpus->add_option("--filter", filter, "run only items whose name contains this substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Ctx ctx(hawk_ctx_new());
  if (const char* env = std::getenv("HAWK_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) hawk_ctx_set_step_budget(ctx.get(), v);
  }
  if (step_budget > 0) hawk_ctx_set_step_budget(ctx.get(), step_budget);

  int exit_code = kExitOk;

  if (*cmd_check) {
    Source src = parse_path(ctx.get(), check_path, exit_code);
    if (!src) return exit_code;
    hawk_report* raw = nullptr;
    hawk_status st = hawk_check(ctx.get(), src.get(), &raw);
    if (st != HAWK_OK) return status_exit(st, ctx.get());
    ReportPtr rep(raw);
    std::cout << hawk_report_text(rep.get());
    std::cout << (hawk_report_ok(rep.get()) ? "all accepted" : "some theorems rejected") << " ("
              << hawk_report_item_count(rep.get()) << " theorems)\n";
    return hawk_report_ok(rep.get()) ? kExitOk : kExitSemantic;
  }

  if (*cmd_translate) {
    Source src = parse_path(ctx.get(), tr_path, exit_code);
    if (!src) return exit_code;
    hawk_report* raw = nullptr;
    hawk_status st = hawk_translate(ctx.get(), src.get(), &raw);
    if (st != HAWK_OK) return status_exit(st, ctx.get());
    ReportPtr rep(raw);
    print_items(rep.get());
    if (!hawk_report_ok(rep.get())) return kExitSemantic;
    std::ofstream out(tr_out);
    if (!out) {
      std::cerr << "error: cannot write " << tr_out << "\n";
      return kExitUsage;
    }
    out << hawk_report_text(rep.get());
    std::cout << "wrote " << tr_out << "\n";
    return kExitOk;
  }

  if (*cmd_normalize) {
    hawk_report* raw = nullptr;
    hawk_status st = hawk_normalize(ctx.get(), expr.c_str(), with_trace ? 1 : 0, &raw);
    if (st == HAWK_ERR_PARSE) return status_exit(st, ctx.get());
    if (st != HAWK_OK) return status_exit(st, ctx.get());
    ReportPtr rep(raw);
    std::cout << hawk_report_text(rep.get());
    // parse and type errors share the usage exit code for this command
    return hawk_report_ok(rep.get()) ? kExitOk : kExitUsage;
  }

  if (*cmd_conjecture) {
    Source src = parse_path(ctx.get(), cj_path, exit_code);
    if (!src) return exit_code;
    hawk_report* raw = nullptr;
    hawk_status st = hawk_conjecture(ctx.get(), src.get(), max_steps, &raw);
    if (st != HAWK_OK) return status_exit(st, ctx.get());
    ReportPtr rep(raw);
    std::cout << hawk_report_text(rep.get());
    return hawk_report_ok(rep.get()) ? kExitOk : kExitSemantic;
  }

  if (*cmd_corpus) {
    hawk_report* raw = nullptr;
    hawk_status st = hawk_corpus(ctx.get(), filter.c_str(), &raw);
    if (st != HAWK_OK) return status_exit(st, ctx.get());
    ReportPtr rep(raw);
    std::cout << hawk_report_text(rep.get());
    return hawk_report_ok(rep.get()) ? kExitOk : kExitSemantic;
  }

  return kExitUsage;
}
