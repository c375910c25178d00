#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "formula.hpp"

namespace hawk {

// Exceeding the step budget is a defect (well-typed terms normalize), never
// a semantic answer.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

uint64_t step_budget();
void set_step_budget(uint64_t budget);  // >= 1
constexpr uint64_t kDefaultStepBudget = 1'000'000;

struct RewriteStep {
  std::vector<int> path;  // child indices from the root to the redex
  std::string rule;       // beta | rec-zero | rec-succ | null-zero | null-succ
  Term before, after;     // whole-term snapshots
};
using RewriteTrace = std::vector<RewriteStep>;

// Contracts the leftmost-outermost redex; nullopt when normal.
std::optional<Term> step_term(const Term& t, std::vector<int>* redex_path = nullptr,
                              std::string* rule = nullptr);

Term normalize_term(const Term& t);
Term normalize_term_traced(const Term& t, RewriteTrace& trace);

// Decides the System T congruence on well-typed terms of a common sort.
bool term_congruent(const Term& a, const Term& b);

// Rewrites nullt at the head once the argument is normal:
//   nullt(0) -> bot -> bot ; nullt(S t) -> bot.
// Other formulas are returned unchanged; this is what exposes the head
// connective for the conversion rule.
Formula whnf_formula(const Formula& f);

// Decides the formula congruence generated by the term rules plus the two
// nullt rules, applied under every connective and binder.
bool formula_congruent(const Formula& a, const Formula& b);

}  // namespace hawk
