#include "rewrite.hpp"

#include <atomic>

namespace hawk {

namespace {
std::atomic<uint64_t> g_step_budget{kDefaultStepBudget};
}

uint64_t step_budget() { return g_step_budget.load(); }

void set_step_budget(uint64_t budget) { g_step_budget.store(budget < 1 ? 1 : budget); }

namespace {

struct StepResult {
  Term after;
  std::string rule;
};

std::optional<StepResult> step_go(const Term& t, std::vector<int>* path) {
  // root redexes first: leftmost-outermost
  if (t.kind() == TermKind::app && t.fn().kind() == TermKind::lam) {
    return StepResult{open_term(t.fn().body(), t.arg()), "beta"};
  }
  if (t.kind() == TermKind::rec) {
    if (t.rec_scrut().kind() == TermKind::zero) {
      return StepResult{t.rec_base(), "rec-zero"};
    }
    if (t.rec_scrut().kind() == TermKind::succ) {
      const Term& v = t.rec_scrut().succ_arg();
      Term unrolled = Term::app(
          Term::app(t.rec_step(), Term::rec(t.sort(), t.rec_base(), t.rec_step(), v)), v);
      return StepResult{unrolled, "rec-succ"};
    }
  }
  auto child = [&](const Term& c, int idx) -> std::optional<StepResult> {
    if (path) path->push_back(idx);
    auto r = step_go(c, path);
    if (!r && path) path->pop_back();
    return r;
  };
  switch (t.kind()) {
    case TermKind::free_var:
    case TermKind::bound_var:
    case TermKind::zero:
      return std::nullopt;
    case TermKind::succ: {
      if (auto r = child(t.succ_arg(), 0)) return StepResult{Term::succ(r->after), r->rule};
      return std::nullopt;
    }
    case TermKind::app: {
      if (auto r = child(t.fn(), 0)) return StepResult{Term::app(r->after, t.arg()), r->rule};
      if (auto r = child(t.arg(), 1)) return StepResult{Term::app(t.fn(), r->after), r->rule};
      return std::nullopt;
    }
    case TermKind::lam: {
      // step under the binder through a fresh opening
      NameSet avoid = free_term_vars(t.body());
      std::string x = fresh_name(t.name().empty() ? "x" : t.name(), avoid);
      Term opened = open_term(t.body(), Term::free_var(x));
      if (path) path->push_back(0);
      auto r = step_go(opened, path);
      if (r) return StepResult{Term::lam(x, t.sort(), r->after), r->rule};
      if (path) path->pop_back();
      return std::nullopt;
    }
    case TermKind::rec: {
      if (auto r = child(t.rec_base(), 0))
        return StepResult{Term::rec(t.sort(), r->after, t.rec_step(), t.rec_scrut()), r->rule};
      if (auto r = child(t.rec_step(), 1))
        return StepResult{Term::rec(t.sort(), t.rec_base(), r->after, t.rec_scrut()), r->rule};
      if (auto r = child(t.rec_scrut(), 2))
        return StepResult{Term::rec(t.sort(), t.rec_base(), t.rec_step(), r->after), r->rule};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Term> step_term(const Term& t, std::vector<int>* redex_path, std::string* rule) {
  if (redex_path) redex_path->clear();
  auto r = step_go(t, redex_path);
  if (!r) return std::nullopt;
  if (rule) *rule = r->rule;
  return r->after;
}

Term normalize_term(const Term& t) {
  Term cur = t;
  uint64_t budget = step_budget();
  for (uint64_t i = 0; i <= budget; ++i) {
    auto next = step_term(cur);
    if (!next) return cur;
    if (i == budget) break;
    cur = *next;
  }
  throw BudgetError("normalize_term: step budget exceeded (" + std::to_string(budget) + ")");
}

Term normalize_term_traced(const Term& t, RewriteTrace& trace) {
  Term cur = t;
  uint64_t budget = step_budget();
  for (uint64_t i = 0; i <= budget; ++i) {
    std::vector<int> path;
    std::string rule;
    auto next = step_term(cur, &path, &rule);
    if (!next) return cur;
    if (i == budget) break;
    trace.push_back(RewriteStep{std::move(path), std::move(rule), cur, *next});
    cur = *next;
  }
  throw BudgetError("normalize_term: step budget exceeded (" + std::to_string(budget) + ")");
}

bool term_congruent(const Term& a, const Term& b) {
  if (alpha_eq_term(a, b)) return true;
  return alpha_eq_term(normalize_term(a), normalize_term(b));
}

Formula whnf_formula(const Formula& f) {
  if (f.kind() != FormulaKind::null) return f;
  Term arg = normalize_term(f.null_arg());
  if (arg.kind() == TermKind::zero) return top_formula();
  if (arg.kind() == TermKind::succ) return Formula::bot();
  return Formula::null_of(arg);
}

bool formula_congruent(const Formula& a, const Formula& b) {
  if (alpha_eq_formula(a, b)) return true;
  Formula fa = whnf_formula(a);
  Formula fb = whnf_formula(b);
  if (fa.kind() != fb.kind()) return false;
  switch (fa.kind()) {
    case FormulaKind::bot:
      return true;
    case FormulaKind::eq:
      return fa.eq_sort() == fb.eq_sort() && term_congruent(fa.lhs(), fb.lhs()) &&
             term_congruent(fa.rhs(), fb.rhs());
    case FormulaKind::null:
      // both stuck
      return term_congruent(fa.null_arg(), fb.null_arg());
    case FormulaKind::imp:
    case FormulaKind::land:
      return formula_congruent(fa.left(), fb.left()) && formula_congruent(fa.right(), fb.right());
    case FormulaKind::forall:
    case FormulaKind::exists: {
      if (fa.binder_sort() != fb.binder_sort()) return false;
      NameSet avoid;
      collect_free_formula_vars(fa.body(), avoid);
      collect_free_formula_vars(fb.body(), avoid);
      Term v = Term::free_var(fresh_name(fa.binder(), avoid));
      return formula_congruent(open_formula(fa.body(), v), open_formula(fb.body(), v));
    }
  }
  return false;
}

}  // namespace hawk
