#pragma once

#include <optional>
#include <vector>

#include "kernel.hpp"

namespace hawk {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct TermDef {
  std::string name;
  Sort sort;
  Term term;
};

struct TheoremDecl {
  std::string name;
  Signature sig;
  Context ctx;
  Formula goal;
  Proof proof;
};

// A .haw file: optional `logic` pragma (default lhaw), then term defs and
// theorem declarations. Defs are inlined by substitution at parse time.
struct SourceFile {
  Logic logic = Logic::lhaw;
  std::vector<TermDef> defs;
  std::vector<TheoremDecl> theorems;
};

SourceFile parse_source(const std::string& text);

// Fragment parsers. Unknown identifiers in term position parse as free
// variables; the checker decides whether they are bound. A proof fragment is
// read relative to hypothesis names (`pvars`), mirroring how declarations
// bring names into scope in a file; unknown identifiers in argument position
// default to terms.
Term parse_term_text(const std::string& text);
Formula parse_formula_text(const std::string& text);
Proof parse_proof_text(const std::string& text, const NameSet& pvars = {});

// Zero or more `def` declarations followed by a bare term (the payload of
// `normalize -e`).
struct TermProgram {
  std::vector<TermDef> defs;
  Term term;
};
TermProgram parse_term_program(const std::string& text);

// Rendering back to .haw syntax. parse(print(file)) is alpha-equal
// declaration-wise for '#'-free inputs; reserved names print through a
// consistent per-declaration renaming.
std::string print_source(const SourceFile& file);

}  // namespace hawk
