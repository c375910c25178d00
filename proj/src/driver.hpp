#pragma once

#include "conjecture.hpp"
#include "corpus.hpp"

namespace hawk {

struct ReportItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  bool ok = true;
  std::vector<ReportItem> items;
  std::string text;  // rendered payload: translated file, normal form, report lines
};

// Checks every theorem in its file's logic.
Report check_file(const SourceFile& file);

// Translates every theorem, re-checks the output in lhaw, and renders the
// translated file; the rendered text is only produced when everything passed
// (no unchecked artifacts).
Report translate_file(const SourceFile& file);

// Parses defs + term, type-checks against the empty signature, normalizes.
Report normalize_program_text(const std::string& text, bool with_trace);

// The reduction-experiment harness; ok means no internal errors.
Report conjecture_file(const SourceFile& file, uint64_t max_steps);

// Runs the bundled corpus (optionally filtered by substring), items in
// parallel; machine-readable one-line-per-item text.
Report corpus_run(const std::string& filter);

}  // namespace hawk
