#pragma once

#include <stdexcept>
#include <vector>

#include "proof.hpp"
#include "rewrite.hpp"

namespace hawk {

enum class Logic { lhaw, lehaw };

inline const char* logic_name(Logic l) { return l == Logic::lhaw ? "lhaw" : "lehaw"; }

// Ordered list of first-order variable declarations; names pairwise distinct
// in well-formed judgments. Lookup takes the rightmost binding.
struct Signature {
  std::vector<std::pair<std::string, Sort>> decls;

  const Sort* lookup(const std::string& name) const;
  bool declares(const std::string& name) const { return lookup(name) != nullptr; }
  bool distinct_names() const;
  NameSet names() const;
  void push(std::string name, Sort sort) { decls.emplace_back(std::move(name), std::move(sort)); }
};

// Ordered list of hypotheses xi : Phi.
struct Context {
  std::vector<std::pair<std::string, Formula>> hyps;

  const Formula* lookup(const std::string& name) const;
  bool distinct_names() const;
  void push(std::string name, Formula f) { hyps.emplace_back(std::move(name), std::move(f)); }
};

// First-order variables free in some hypothesis.
NameSet free_context_vars(const Context& ctx);

struct Judgment {
  Logic logic = Logic::lhaw;
  Signature sig;
  Context ctx;
  Proof proof;
  Formula goal;
};

struct SortError : std::runtime_error {
  explicit SortError(const std::string& what) : std::runtime_error(what) {}
};

// Sort inference for System T per the derivation rules; Church-style binder
// annotations make the result unique. Throws SortError.
Sort infer_sort(const Signature& sig, const Term& t);

// FV(Gamma) within Delta, names distinct, and every hypothesis well-sorted.
bool check_wf(const Signature& sig, const Context& ctx);

struct CheckReport {
  bool accepted = false;
  Formula elaborated;      // goal, on acceptance
  std::string rule;        // rule at the point of failure
  std::string reason;      // named diagnostic
  std::vector<int> path;   // child indices into the proof term
  std::string expected;    // rendered formula/sort when relevant
  std::string found;

  std::string message() const;
};

// Trusted checker for both logics; lehaw adds the extensional equality rules
// (refl/peel at every sort, ext, apppm) on top of the lhaw ones.
// Bidirectional: eliminations infer, introductions check, and the conversion
// rule is applied exactly where the two modes meet. Propagates BudgetError
// (a defect), never turns it into a verdict.
CheckReport check_proof(Logic logic, const Signature& sig, const Context& ctx, const Proof& proof,
                        const Formula& goal);

inline CheckReport check_proof(const Judgment& j) {
  return check_proof(j.logic, j.sig, j.ctx, j.proof, j.goal);
}

// Inference entry for elimination-shaped proofs (used where a construction
// needs the type of a subproof it is about to transform). Throws SortError
// on failure.
Formula infer_proof(Logic logic, const Signature& sig, const Context& ctx, const Proof& proof);

}  // namespace hawk
