#include "hawk.h"

#include <fstream>
#include <sstream>

#include "driver.hpp"

using namespace hawk;

struct hawk_ctx {
  uint64_t budget = kDefaultStepBudget;
  std::string last_error;
};

struct hawk_source {
  SourceFile file;
  std::string name;
};

struct hawk_report {
  Report report;
};

namespace {

constexpr uint64_t kDefaultConjectureBudget = 10'000;

template <typename Fn>
hawk_status guarded(hawk_ctx* ctx, Fn&& fn) {
  if (!ctx) return HAWK_ERR_USAGE;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const ParseError& e) {
    ctx->last_error = e.what();
    return HAWK_ERR_PARSE;
  } catch (const BudgetError& e) {
    ctx->last_error = e.what();
    return HAWK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return HAWK_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

hawk_ctx* hawk_ctx_new(void) { return new hawk_ctx(); }

void hawk_ctx_free(hawk_ctx* ctx) { delete ctx; }

void hawk_ctx_set_step_budget(hawk_ctx* ctx, uint64_t budget) {
  if (!ctx) return;
  ctx->budget = budget < 1 ? 1 : budget;
}

const char* hawk_ctx_last_error(const hawk_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

hawk_status hawk_parse_string(hawk_ctx* ctx, const char* text, const char* name,
                              hawk_source** out) {
  return guarded(ctx, [&]() -> hawk_status {
    if (!text || !out) {
      ctx->last_error = "null argument";
      return HAWK_ERR_USAGE;
    }
    auto* src = new hawk_source();
    try {
      src->file = parse_source(text);
    } catch (...) {
      delete src;
      throw;
    }
    src->name = name ? name : "<string>";
    *out = src;
    return HAWK_OK;
  });
}

hawk_status hawk_parse_file(hawk_ctx* ctx, const char* path, hawk_source** out) {
  return guarded(ctx, [&]() -> hawk_status {
    if (!path || !out) {
      ctx->last_error = "null argument";
      return HAWK_ERR_USAGE;
    }
    std::ifstream in(path);
    if (!in) {
      ctx->last_error = std::string("cannot read file: ") + path;
      return HAWK_ERR_USAGE;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto* src = new hawk_source();
    try {
      src->file = parse_source(text);
    } catch (...) {
      delete src;
      throw;
    }
    src->name = path;
    *out = src;
    return HAWK_OK;
  });
}

void hawk_source_free(hawk_source* source) { delete source; }

hawk_status hawk_check(hawk_ctx* ctx, const hawk_source* source, hawk_report** out) {
  return guarded(ctx, [&]() -> hawk_status {
    if (!source || !out) {
      ctx->last_error = "null argument";
      return HAWK_ERR_USAGE;
    }
    set_step_budget(ctx->budget);
    *out = new hawk_report{check_file(source->file)};
    return HAWK_OK;
  });
}

hawk_status hawk_translate(hawk_ctx* ctx, const hawk_source* source, hawk_report** out) {
  return guarded(ctx, [&]() -> hawk_status {
    if (!source || !out) {
      ctx->last_error = "null argument";
      return HAWK_ERR_USAGE;
    }
    set_step_budget(ctx->budget);
    *out = new hawk_report{translate_file(source->file)};
    return HAWK_OK;
  });
}

hawk_status hawk_normalize(hawk_ctx* ctx, const char* expr, int with_trace, hawk_report** out) {
  return guarded(ctx, [&]() -> hawk_status {
    if (!expr || !out) {
      ctx->last_error = "null argument";
      return HAWK_ERR_USAGE;
    }
    set_step_budget(ctx->budget);
    *out = new hawk_report{normalize_program_text(expr, with_trace != 0)};
    return HAWK_OK;
  });
}

hawk_status hawk_conjecture(hawk_ctx* ctx, const hawk_source* source, uint64_t max_steps,
                            hawk_report** out) {
  return guarded(ctx, [&]() -> hawk_status {
    if (!source || !out) {
      ctx->last_error = "null argument";
      return HAWK_ERR_USAGE;
    }
    set_step_budget(ctx->budget);
    *out = new hawk_report{
        conjecture_file(source->file, max_steps ? max_steps : kDefaultConjectureBudget)};
    return HAWK_OK;
  });
}

hawk_status hawk_corpus(hawk_ctx* ctx, const char* filter, hawk_report** out) {
  return guarded(ctx, [&]() -> hawk_status {
    if (!out) {
      ctx->last_error = "null argument";
      return HAWK_ERR_USAGE;
    }
    set_step_budget(ctx->budget);
    *out = new hawk_report{corpus_run(filter ? filter : "")};
    return HAWK_OK;
  });
}

int hawk_report_ok(const hawk_report* report) { return report && report->report.ok ? 1 : 0; }

size_t hawk_report_item_count(const hawk_report* report) {
  return report ? report->report.items.size() : 0;
}

const char* hawk_report_item_name(const hawk_report* report, size_t index) {
  if (!report || index >= report->report.items.size()) return "";
  return report->report.items[index].name.c_str();
}

int hawk_report_item_ok(const hawk_report* report, size_t index) {
  if (!report || index >= report->report.items.size()) return 0;
  return report->report.items[index].ok ? 1 : 0;
}

const char* hawk_report_item_detail(const hawk_report* report, size_t index) {
  if (!report || index >= report->report.items.size()) return "";
  return report->report.items[index].detail.c_str();
}

const char* hawk_report_text(const hawk_report* report) {
  return report ? report->report.text.c_str() : "";
}

void hawk_report_free(hawk_report* report) { delete report; }

}  // extern "C"
