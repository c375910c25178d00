#include "kernel.hpp"

#include <sstream>

#include "printer.hpp"

namespace hawk {

const Sort* Signature::lookup(const std::string& name) const {
  for (auto it = decls.rbegin(); it != decls.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

bool Signature::distinct_names() const {
  NameSet seen;
  for (const auto& [n, _] : decls)
    if (!seen.insert(n).second) return false;
  return true;
}

NameSet Signature::names() const {
  NameSet out;
  for (const auto& [n, _] : decls) out.insert(n);
  return out;
}

const Formula* Context::lookup(const std::string& name) const {
  for (auto it = hyps.rbegin(); it != hyps.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

bool Context::distinct_names() const {
  NameSet seen;
  for (const auto& [n, _] : hyps)
    if (!seen.insert(n).second) return false;
  return true;
}

NameSet free_context_vars(const Context& ctx) {
  NameSet out;
  for (const auto& [_, f] : ctx.hyps) collect_free_formula_vars(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// sort inference

namespace {

Sort infer_sort_go(Signature& sig, const Term& t) {
  switch (t.kind()) {
    case TermKind::free_var: {
      const Sort* s = sig.lookup(t.name());
      if (!s) throw SortError("unbound variable " + t.name());
      return *s;
    }
    case TermKind::bound_var:
      throw SortError("dangling bound variable");
    case TermKind::zero:
      return Sort::nat();
    case TermKind::succ: {
      Sort s = infer_sort_go(sig, t.succ_arg());
      if (!s.is_nat()) throw SortError("successor argument must have sort N, found " + s.show());
      return Sort::nat();
    }
    case TermKind::app: {
      Sort fs = infer_sort_go(sig, t.fn());
      if (!fs.is_arrow())
        throw SortError("application of non-arrow sort " + fs.show());
      Sort as = infer_sort_go(sig, t.arg());
      if (!(as == fs.dom()))
        throw SortError("application domain mismatch: expected " + fs.dom().show() + ", found " +
                        as.show());
      return fs.cod();
    }
    case TermKind::lam: {
      NameSet avoid = sig.names();
      collect_free_term_vars(t.body(), avoid);
      std::string x = fresh_name(t.name().empty() ? "x" : t.name(), avoid);
      sig.push(x, t.sort());
      Sort body = infer_sort_go(sig, open_term(t.body(), Term::free_var(x)));
      sig.decls.pop_back();
      return Sort::arrow(t.sort(), body);
    }
    case TermKind::rec: {
      Sort base = infer_sort_go(sig, t.rec_base());
      if (!(base == t.sort()))
        throw SortError("rec base sort mismatch: expected " + t.sort().show() + ", found " +
                        base.show());
      Sort step = infer_sort_go(sig, t.rec_step());
      Sort want = Sort::arrow(t.sort(), Sort::arrow(Sort::nat(), t.sort()));
      if (!(step == want))
        throw SortError("rec step sort mismatch: expected " + want.show() + ", found " +
                        step.show());
      Sort scrut = infer_sort_go(sig, t.rec_scrut());
      if (!scrut.is_nat())
        throw SortError("rec scrutinee must have sort N, found " + scrut.show());
      return t.sort();
    }
  }
  throw SortError("malformed term");
}

}  // namespace

Sort infer_sort(const Signature& sig, const Term& t) {
  Signature scratch = sig;
  return infer_sort_go(scratch, t);
}

// ---------------------------------------------------------------------------
// proof checking

namespace {

struct CheckError {
  std::string rule;
  std::string reason;
  std::vector<int> path;
  std::string expected;
  std::string found;
};

class Checker {
 public:
  Checker(Logic logic, const Signature& sig, const Context& ctx) : logic_(logic), sig_(sig) {
    for (const auto& [n, f] : ctx.hyps) push_hyp(n, f);
  }

  Formula infer(const Proof& p);
  void check(const Proof& p, const Formula& goal);

  // Formula well-formedness over the current signature: every equality's
  // sides type-check at the equality's sort, nullt arguments at N, and in
  // lhaw mode equality only at N.
  void require_formula_wf(const Formula& f) {
    NameSet avoid = sig_.names();
    collect_free_formula_vars(f, avoid);
    formula_wf(f, avoid);
  }

 private:
  Logic logic_;
  Signature sig_;
  std::vector<std::pair<std::string, Formula>> hyps_;
  std::map<std::string, int> ctx_fv_counts_;
  std::vector<int> path_;

  [[noreturn]] void fail(const std::string& rule, const std::string& reason,
                         const std::string& expected = "", const std::string& found = "") {
    throw CheckError{rule, reason, path_, expected, found};
  }

  struct PathGuard {
    Checker& c;
    explicit PathGuard(Checker& c, int idx) : c(c) { c.path_.push_back(idx); }
    ~PathGuard() { c.path_.pop_back(); }
  };

  Formula infer_child(const Proof& p, int idx) {
    PathGuard g(*this, idx);
    return infer(p);
  }
  void check_child(const Proof& p, int idx, const Formula& goal) {
    PathGuard g(*this, idx);
    check(p, goal);
  }

  void push_hyp(const std::string& name, const Formula& f) {
    hyps_.emplace_back(name, f);
    for (const auto& v : free_formula_vars(f)) ctx_fv_counts_[v]++;
  }
  void pop_hyp() {
    for (const auto& v : free_formula_vars(hyps_.back().second)) {
      auto it = ctx_fv_counts_.find(v);
      if (--it->second == 0) ctx_fv_counts_.erase(it);
    }
    hyps_.pop_back();
  }
  const Formula* hyp_lookup(const std::string& name) const {
    for (auto it = hyps_.rbegin(); it != hyps_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
  bool ctx_mentions(const std::string& name) const { return ctx_fv_counts_.count(name) > 0; }

  NameSet everything_in_scope() const {
    NameSet s = sig_.names();
    for (const auto& [k, _] : ctx_fv_counts_) s.insert(k);
    for (const auto& [n, _] : hyps_) s.insert(n);
    return s;
  }

  Sort term_sort(const Term& t, const std::string& rule) {
    try {
      return infer_sort(sig_, t);
    } catch (const SortError& e) {
      fail(rule, e.what());
    }
  }
  void term_sort_is(const Term& t, const Sort& want, const std::string& rule) {
    Sort got = term_sort(t, rule);
    if (!(got == want)) fail(rule, "term sort mismatch", want.show(), got.show());
  }

  void formula_wf(const Formula& f, NameSet& avoid) {
    switch (f.kind()) {
      case FormulaKind::bot:
        return;
      case FormulaKind::eq: {
        if (logic_ == Logic::lhaw && !f.eq_sort().is_nat())
          fail("formula", "equality at arrow sort", "N", f.eq_sort().show());
        term_sort_is(f.lhs(), f.eq_sort(), "formula");
        term_sort_is(f.rhs(), f.eq_sort(), "formula");
        return;
      }
      case FormulaKind::null:
        term_sort_is(f.null_arg(), Sort::nat(), "formula");
        return;
      case FormulaKind::imp:
      case FormulaKind::land:
        formula_wf(f.left(), avoid);
        formula_wf(f.right(), avoid);
        return;
      case FormulaKind::forall:
      case FormulaKind::exists: {
        std::string x = fresh_name(f.binder().empty() ? "x" : f.binder(), avoid);
        avoid.insert(x);
        sig_.push(x, f.binder_sort());
        formula_wf(open_formula(f.body(), Term::free_var(x)), avoid);
        sig_.decls.pop_back();
        return;
      }
    }
  }

  // Opens a term binder per the named rules: reuses the display name when it
  // is free (not in Delta, not in FV(Gamma)); rejects when a taken name also
  // occurs free in the scope (the ambiguous capture the side conditions
  // exclude); alpha-freshens otherwise.
  std::string open_name(const std::string& display, const NameSet& scope_frees,
                        const std::string& rule) {
    std::string d = display.empty() ? "x" : display;
    bool taken = sig_.declares(d) || ctx_mentions(d);
    if (!taken) return d;
    if (scope_frees.count(d)) fail(rule, "non-fresh eigenvariable", "", d);
    NameSet avoid = everything_in_scope();
    for (const auto& v : scope_frees) avoid.insert(v);
    return fresh_name(d, avoid);
  }

  std::string fresh_pvar(const std::string& display, const Proof& body) {
    std::string d = display.empty() ? "xi" : display;
    if (!hyp_lookup(d)) return d;
    NameSet avoid = everything_in_scope();
    collect_free_proof_pvars(body, avoid);
    return fresh_name(d, avoid);
  }

  Formula head(const Formula& f) { return whnf_formula(f); }

  void convertible(const Formula& found, const Formula& goal, const std::string& rule) {
    if (!formula_congruent(found, goal))
      fail(rule, "type mismatch", show_formula(goal), show_formula(found));
  }

  Formula infer_peel(const Proof& p);
  Formula infer_ind(const Proof& p);
  Formula infer_app_pm(const Proof& p);
  Formula infer_ext(const Proof& p);
  Formula infer_ex_elim(const Proof& p);
  void check_ex_elim(const Proof& p, const Formula& goal);
};

Formula Checker::infer(const Proof& p) {
  switch (p.kind()) {
    case ProofKind::pvar_free: {
      const Formula* f = hyp_lookup(p.name());
      if (!f) fail("hypothesis", "unbound proof variable", "", p.name());
      return *f;
    }
    case ProofKind::pvar_bound:
      fail("hypothesis", "dangling bound proof variable");
    case ProofKind::refl: {
      if (logic_ == Logic::lhaw && !p.sort().is_nat())
        fail("refl", "equality at arrow sort", "N", p.sort().show());
      term_sort_is(p.t(), p.sort(), "refl");
      return Formula::eq(p.sort(), p.t(), p.t());
    }
    case ProofKind::papp: {
      Formula fn = head(infer_child(p.p(), 0));
      if (fn.kind() != FormulaKind::imp)
        fail("imp-elim", "implication expected", "", show_formula(fn));
      check_child(p.q(), 1, fn.left());
      return fn.right();
    }
    case ProofKind::proj: {
      Formula f = head(infer_child(p.p(), 0));
      if (f.kind() != FormulaKind::land)
        fail("and-elim", "conjunction expected", "", show_formula(f));
      if (p.index() != 1 && p.index() != 2) fail("and-elim", "projection index out of range");
      return p.index() == 1 ? f.left() : f.right();
    }
    case ProofKind::tapp: {
      Formula f = head(infer_child(p.p(), 0));
      if (f.kind() != FormulaKind::forall)
        fail("forall-elim", "universal expected", "", show_formula(f));
      term_sort_is(p.t(), f.binder_sort(), "forall-elim");
      return open_formula(f.body(), p.t());
    }
    case ProofKind::peel:
      return infer_peel(p);
    case ProofKind::ind:
      return infer_ind(p);
    case ProofKind::pair:
      return Formula::land(infer_child(p.p(), 0), infer_child(p.q(), 1));
    case ProofKind::plam: {
      require_formula_wf(p.formula());
      std::string xi = fresh_pvar(p.name(), p.p());
      push_hyp(xi, p.formula());
      Formula body = infer_child(open_proof_pvar(p.p(), Proof::pvar(xi)), 0);
      pop_hyp();
      return Formula::imp(p.formula(), body);
    }
    case ProofKind::tlam: {
      NameSet body_frees = free_proof_tvars(p.p());
      std::string x = open_name(p.name(), body_frees, "forall-intro");
      sig_.push(x, p.sort());
      Formula body = infer_child(open_proof_tvar(p.p(), Term::free_var(x)), 0);
      sig_.decls.pop_back();
      return Formula::forall(x, p.sort(), body);
    }
    case ProofKind::efq: {
      try {
        require_formula_wf(p.formula());
      } catch (CheckError& e) {
        if (e.reason.rfind("unbound variable", 0) == 0)
          fail("efq", "target formula has free variables outside the signature", "", e.reason);
        throw;
      }
      check_child(p.p(), 0, Formula::bot());
      return p.formula();
    }
    case ProofKind::ex_intro: {
      if (p.formula().kind() != FormulaKind::exists)
        fail("exists-intro", "existential annotation expected", "", show_formula(p.formula()));
      require_formula_wf(p.formula());
      term_sort_is(p.t(), p.formula().binder_sort(), "exists-intro");
      check_child(p.p(), 0, open_formula(p.formula().body(), p.t()));
      return p.formula();
    }
    case ProofKind::ex_elim:
      return infer_ex_elim(p);
    case ProofKind::ext_intro:
      return infer_ext(p);
    case ProofKind::app_pm:
      return infer_app_pm(p);
  }
  fail("proof", "malformed proof term");
}

Formula Checker::infer_peel(const Proof& p) {
  if (logic_ == Logic::lhaw && !p.sort().is_nat())
    fail("peel", "equality at arrow sort", "N", p.sort().show());
  term_sort_is(p.t(), p.sort(), "peel");
  term_sort_is(p.u(), p.sort(), "peel");
  // motive well-formedness under a fresh hat variable
  {
    NameSet avoid = sig_.names();
    collect_free_formula_vars(p.formula(), avoid);
    std::string z = fresh_name(p.name().empty() ? "z" : p.name(), avoid);
    sig_.push(z, p.sort());
    require_formula_wf(open_formula(p.formula(), Term::free_var(z)));
    sig_.decls.pop_back();
  }
  Formula eq = head(infer_child(p.p(), 0));
  if (eq.kind() != FormulaKind::eq) fail("peel", "equality proof expected", "", show_formula(eq));
  if (!(eq.eq_sort() == p.sort()))
    fail("peel", "equality sort annotation mismatch", p.sort().show(), eq.eq_sort().show());
  // annotations are compared up to congruence: translated output substitutes
  // into them, so they may be non-normal
  if (!term_congruent(eq.lhs(), p.t()))
    fail("peel", "motive substitution mismatch (left endpoint)", show_term(p.t()),
         show_term(eq.lhs()));
  if (!term_congruent(eq.rhs(), p.u()))
    fail("peel", "motive substitution mismatch (right endpoint)", show_term(p.u()),
         show_term(eq.rhs()));
  check_child(p.q(), 1, open_formula(p.formula(), p.t()));
  return open_formula(p.formula(), p.u());
}

Formula Checker::infer_ind(const Proof& p) {
  term_sort_is(p.t(), Sort::nat(), "ind");
  NameSet avoid = sig_.names();
  collect_free_formula_vars(p.formula(), avoid);
  std::string x = fresh_name(p.name().empty() ? "x" : p.name(), avoid);
  Term xv = Term::free_var(x);
  Formula motive_x = open_formula(p.formula(), xv);
  sig_.push(x, Sort::nat());
  require_formula_wf(motive_x);
  sig_.decls.pop_back();
  check_child(p.p(), 0, open_formula(p.formula(), Term::zero()));
  // step goal built exactly as the rule states: forall x:N. Phi -> Phi[x := S x]
  Formula step = Formula::forall(
      x, Sort::nat(), Formula::imp(motive_x, subst_formula(motive_x, {{x, Term::succ(xv)}})));
  check_child(p.r(), 1, step);
  return open_formula(p.formula(), p.t());
}

Formula Checker::infer_app_pm(const Proof& p) {
  if (logic_ == Logic::lhaw) fail("apppm", "extensional rule in lhaw mode");
  term_sort_is(p.t(), p.sort(), "apppm");
  term_sort_is(p.u(), p.sort(), "apppm");
  Formula eq = head(infer_child(p.p(), 0));
  if (eq.kind() != FormulaKind::eq)
    fail("apppm", "equality proof expected", "", show_formula(eq));
  Sort want = Sort::arrow(p.sort(), p.sort2());
  if (!(eq.eq_sort() == want))
    fail("apppm", "equality sort annotation mismatch", want.show(), eq.eq_sort().show());
  check_child(p.q(), 1, Formula::eq(p.sort(), p.t(), p.u()));
  return Formula::eq(p.sort2(), Term::app(eq.lhs(), p.t()), Term::app(eq.rhs(), p.u()));
}

Formula Checker::infer_ext(const Proof& p) {
  if (logic_ == Logic::lhaw) fail("ext", "extensional rule in lhaw mode");
  Formula f = head(infer_child(p.p(), 0));
  if (f.kind() != FormulaKind::forall || !(f.binder_sort() == p.sort()))
    fail("ext", "pointwise statement expected", "", show_formula(f));
  NameSet avoid = sig_.names();
  collect_free_formula_vars(f.body(), avoid);
  std::string x = fresh_name(f.binder(), avoid);
  Formula body = whnf_formula(open_formula(f.body(), Term::free_var(x)));
  // f and g are only recoverable when the premise is literally
  // forall x. f x = g x with x not free in f, g
  if (body.kind() != FormulaKind::eq || !(body.eq_sort() == p.sort2()))
    fail("ext", "pointwise statement expected", "", show_formula(f));
  auto head_of = [&](const Term& side) -> Term {
    if (side.kind() != TermKind::app) return Term();
    if (side.arg().kind() != TermKind::free_var || side.arg().name() != x) return Term();
    if (free_term_vars(side.fn()).count(x)) return Term();
    return side.fn();
  };
  Term fn = head_of(body.lhs()), gn = head_of(body.rhs());
  if (fn.empty() || gn.empty())
    fail("ext", "cannot infer extensionality introduction here", "", show_formula(f));
  return Formula::eq(Sort::arrow(p.sort(), p.sort2()), fn, gn);
}

Formula Checker::infer_ex_elim(const Proof& p) {
  Formula ex = head(infer_child(p.p(), 0));
  if (ex.kind() != FormulaKind::exists)
    fail("exists-elim", "existential expected", "", show_formula(ex));
  NameSet body_frees = free_proof_tvars(p.q());
  std::string x = open_name(p.name(), body_frees, "exists-elim");
  std::string xi = fresh_pvar(p.name2(), p.q());
  sig_.push(x, ex.binder_sort());
  push_hyp(xi, open_formula(ex.body(), Term::free_var(x)));
  Proof body = open_proof_pvar(open_proof_tvar(p.q(), Term::free_var(x)), Proof::pvar(xi));
  Formula result = infer_child(body, 1);
  pop_hyp();
  sig_.decls.pop_back();
  if (free_formula_vars(result).count(x))
    fail("exists-elim", "non-fresh eigenvariable", "", x);
  return result;
}

void Checker::check_ex_elim(const Proof& p, const Formula& goal) {
  Formula ex = head(infer_child(p.p(), 0));
  if (ex.kind() != FormulaKind::exists)
    fail("exists-elim", "existential expected", "", show_formula(ex));
  NameSet body_frees = free_proof_tvars(p.q());
  std::string x = open_name(p.name(), body_frees, "exists-elim");
  if (free_formula_vars(goal).count(x))
    fail("exists-elim", "non-fresh eigenvariable", "", x);
  std::string xi = fresh_pvar(p.name2(), p.q());
  sig_.push(x, ex.binder_sort());
  push_hyp(xi, open_formula(ex.body(), Term::free_var(x)));
  Proof body = open_proof_pvar(open_proof_tvar(p.q(), Term::free_var(x)), Proof::pvar(xi));
  check_child(body, 1, goal);
  pop_hyp();
  sig_.decls.pop_back();
}

void Checker::check(const Proof& p, const Formula& goal) {
  switch (p.kind()) {
    case ProofKind::plam: {
      Formula g = head(goal);
      if (g.kind() != FormulaKind::imp)
        fail("imp-intro", "implication goal expected", show_formula(goal));
      require_formula_wf(p.formula());
      if (!formula_congruent(p.formula(), g.left()))
        fail("imp-intro", "hypothesis annotation mismatch", show_formula(g.left()),
             show_formula(p.formula()));
      std::string xi = fresh_pvar(p.name(), p.p());
      push_hyp(xi, p.formula());
      check_child(open_proof_pvar(p.p(), Proof::pvar(xi)), 0, g.right());
      pop_hyp();
      return;
    }
    case ProofKind::pair: {
      Formula g = head(goal);
      if (g.kind() != FormulaKind::land)
        fail("and-intro", "conjunction goal expected", show_formula(goal));
      check_child(p.p(), 0, g.left());
      check_child(p.q(), 1, g.right());
      return;
    }
    case ProofKind::tlam: {
      Formula g = head(goal);
      if (g.kind() != FormulaKind::forall)
        fail("forall-intro", "universal goal expected", show_formula(goal));
      if (!(g.binder_sort() == p.sort()))
        fail("forall-intro", "binder sort mismatch", g.binder_sort().show(), p.sort().show());
      NameSet body_frees = free_proof_tvars(p.p());
      std::string x = open_name(p.name(), body_frees, "forall-intro");
      sig_.push(x, p.sort());
      check_child(open_proof_tvar(p.p(), Term::free_var(x)), 0,
                  open_formula(g.body(), Term::free_var(x)));
      sig_.decls.pop_back();
      return;
    }
    case ProofKind::ex_intro: {
      if (p.formula().kind() != FormulaKind::exists)
        fail("exists-intro", "existential annotation expected", "", show_formula(p.formula()));
      if (!formula_congruent(p.formula(), goal))
        fail("exists-intro", "target annotation mismatch", show_formula(goal),
             show_formula(p.formula()));
      require_formula_wf(p.formula());
      term_sort_is(p.t(), p.formula().binder_sort(), "exists-intro");
      check_child(p.p(), 0, open_formula(p.formula().body(), p.t()));
      return;
    }
    case ProofKind::ex_elim:
      check_ex_elim(p, goal);
      return;
    case ProofKind::efq: {
      try {
        require_formula_wf(p.formula());
      } catch (CheckError& e) {
        if (e.reason.rfind("unbound variable", 0) == 0)
          fail("efq", "target formula has free variables outside the signature", "", e.reason);
        throw;
      }
      if (!formula_congruent(p.formula(), goal))
        fail("efq", "target annotation mismatch", show_formula(goal), show_formula(p.formula()));
      check_child(p.p(), 0, Formula::bot());
      return;
    }
    case ProofKind::ext_intro: {
      if (logic_ == Logic::lhaw) fail("ext", "extensional rule in lhaw mode");
      Formula g = head(goal);
      if (g.kind() != FormulaKind::eq)
        fail("ext", "extensional equality goal expected", show_formula(goal));
      Sort want = Sort::arrow(p.sort(), p.sort2());
      if (!(g.eq_sort() == want))
        fail("ext", "sort annotation mismatch", g.eq_sort().show(), want.show());
      NameSet avoid = sig_.names();
      collect_free_formula_vars(g, avoid);
      std::string x = fresh_name("x", avoid);
      Term xv = Term::free_var(x);
      Formula pointwise = Formula::forall(
          x, p.sort(), Formula::eq(p.sort2(), Term::app(g.lhs(), xv), Term::app(g.rhs(), xv)));
      check_child(p.p(), 0, pointwise);
      return;
    }
    default: {
      Formula found = infer(p);
      convertible(found, goal, "conversion");
      return;
    }
  }
}

}  // namespace

bool check_wf(const Signature& sig, const Context& ctx) {
  if (!sig.distinct_names() || !ctx.distinct_names()) return false;
  NameSet declared = sig.names();
  for (const auto& v : free_context_vars(ctx))
    if (!declared.count(v)) return false;
  // hypotheses must also be well-sorted (lehaw is the permissive mode here;
  // per-logic restrictions are enforced by check_proof)
  Checker probe(Logic::lehaw, sig, Context{});
  try {
    for (const auto& [_, f] : ctx.hyps) probe.require_formula_wf(f);
  } catch (const CheckError&) {
    return false;
  }
  return true;
}

std::string CheckReport::message() const {
  if (accepted) return "accepted";
  std::ostringstream o;
  o << "rejected [" << rule << "] " << reason;
  if (!expected.empty()) o << "; expected: " << expected;
  if (!found.empty()) o << "; found: " << found;
  if (!path.empty()) {
    o << "; at path ";
    for (size_t i = 0; i < path.size(); ++i) o << (i ? "." : "") << path[i];
  }
  return o.str();
}

Formula infer_proof(Logic logic, const Signature& sig, const Context& ctx, const Proof& proof) {
  try {
    Checker checker(logic, sig, ctx);
    return checker.infer(proof);
  } catch (const CheckError& e) {
    CheckReport rep;
    rep.accepted = false;
    rep.rule = e.rule;
    rep.reason = e.reason;
    rep.path = e.path;
    rep.expected = e.expected;
    rep.found = e.found;
    throw SortError("inference failed: " + rep.message());
  }
}

CheckReport check_proof(Logic logic, const Signature& sig, const Context& ctx, const Proof& proof,
                        const Formula& goal) {
  CheckReport rep;
  auto reject = [&](const std::string& rule, const std::string& reason) {
    rep.accepted = false;
    rep.rule = rule;
    rep.reason = reason;
    return rep;
  };
  if (!sig.distinct_names()) return reject("wf", "duplicate name in signature");
  if (!ctx.distinct_names()) return reject("wf", "duplicate name in context");
  try {
    Checker wf_probe(logic, sig, Context{});
    NameSet declared = sig.names();
    for (const auto& [n, f] : ctx.hyps) {
      for (const auto& v : free_formula_vars(f))
        if (!declared.count(v))
          return reject("wf", "context not well-formed over signature (free variable " + v + ")");
      wf_probe.require_formula_wf(f);
    }
    for (const auto& v : free_formula_vars(goal))
      if (!declared.count(v))
        return reject("wf", "goal not well-formed over signature (free variable " + v + ")");
    wf_probe.require_formula_wf(goal);

    Checker checker(logic, sig, ctx);
    checker.check(proof, goal);
    rep.accepted = true;
    rep.elaborated = goal;
    return rep;
  } catch (const CheckError& e) {
    rep.accepted = false;
    rep.rule = e.rule;
    rep.reason = e.reason;
    rep.path = e.path;
    rep.expected = e.expected;
    rep.found = e.found;
    return rep;
  }
}

}  // namespace hawk
