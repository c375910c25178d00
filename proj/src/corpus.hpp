#pragma once

#include "surface.hpp"

namespace hawk {

struct CorpusTermItem {
  std::string name;
  Term term;
  Sort sort;
};

struct CorpusTheoremItem {
  std::string name;
  Judgment judgment;
};

// The bundled end-to-end corpus:
//   terms  — closed System T terms whose translations certify against eqpm;
//   lhaw   — theorems checked and translated within lhaw;
//   lehaw  — extensional theorems whose translations re-check in plain lhaw.
struct Corpus {
  std::vector<CorpusTermItem> terms;
  std::vector<CorpusTheoremItem> lhaw;
  std::vector<CorpusTheoremItem> lehaw;
};

const Corpus& bundled_corpus();

// Closed peel-free proofs with redexes, input for the reduction experiment.
const SourceFile& conjecture_corpus();

}  // namespace hawk
