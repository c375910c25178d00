#include "printer.hpp"

#include <sstream>

namespace hawk {

namespace {

// precedence levels
// terms:    0 fun | 1 S | 2 application | 3 atom
// formulas: 0 quantifier | 1 -> | 2 /\ | 3 atom
// proofs:   0 fun/assume/unpack | 1 application | 2 atom

struct Env {
  NameSet scope;                                   // names already visible in output
  std::map<std::string, std::string> free_rename;  // reserved '#' names -> printable
};

std::string rendered(const Env& env, const std::string& name) {
  auto it = env.free_rename.find(name);
  return it == env.free_rename.end() ? name : it->second;
}

void note_frees(Env& env, const NameSet& frees) {
  for (const auto& f : frees) {
    env.scope.insert(f);
    if (is_reserved_name(f) && !env.free_rename.count(f)) {
      std::string r = fresh_name(sanitize_name(f), env.scope);
      env.free_rename[f] = r;
      env.scope.insert(r);
    } else {
      env.scope.insert(rendered(env, f));
    }
  }
}

std::string pick_binder(Env& env, const std::string& display, const NameSet& body_frees) {
  NameSet avoid = env.scope;
  for (const auto& f : body_frees) {
    avoid.insert(f);
    avoid.insert(rendered(env, f));
  }
  std::string hint = sanitize_name(display.empty() ? "x" : display);
  return fresh_name(hint, avoid);
}

std::string wrap(bool cond, const std::string& s) { return cond ? "(" + s + ")" : s; }

std::string pr_term(const Term& t, int prec, Env& env);

std::string pr_term_lam(const Term& t, Env& env) {
  std::ostringstream out;
  out << "fun";
  Term cur = t;
  Env inner = env;
  while (cur.kind() == TermKind::lam) {
    std::string x = pick_binder(inner, cur.name(), free_term_vars(cur.body()));
    inner.scope.insert(x);
    out << " (" << x << " : " << show_sort(cur.sort()) << ")";
    cur = open_term(cur.body(), Term::free_var(x));
  }
  out << " => " << pr_term(cur, 0, inner);
  return out.str();
}

std::string pr_term(const Term& t, int prec, Env& env) {
  switch (t.kind()) {
    case TermKind::free_var:
      return rendered(env, t.name());
    case TermKind::bound_var:
      return "?" + std::to_string(t.index());  // dangling index: malformed input
    case TermKind::zero:
      return "0";
    case TermKind::succ:
      return wrap(prec > 1, "S " + pr_term(t.succ_arg(), 2, env));
    case TermKind::app: {
      std::string fn = pr_term(t.fn(), 2, env);
      std::string arg = pr_term(t.arg(), 3, env);
      return wrap(prec > 2, fn + " " + arg);
    }
    case TermKind::lam:
      return wrap(prec > 0, pr_term_lam(t, env));
    case TermKind::rec: {
      std::string s = "rec[" + show_sort(t.sort()) + "] " + pr_term(t.rec_base(), 3, env) + " " +
                      pr_term(t.rec_step(), 3, env) + " " + pr_term(t.rec_scrut(), 3, env);
      return wrap(prec > 2, s);
    }
  }
  return "?";
}

std::string pr_formula(const Formula& f, int prec, Env& env) {
  switch (f.kind()) {
    case FormulaKind::bot:
      return "bot";
    case FormulaKind::eq: {
      std::string op = f.eq_sort().is_nat() ? " = " : " = [" + f.eq_sort().show() + "] ";
      return wrap(prec > 3, pr_term(f.lhs(), 1, env) + op + pr_term(f.rhs(), 1, env));
    }
    case FormulaKind::null:
      return wrap(prec > 3, "null " + pr_term(f.null_arg(), 3, env));
    case FormulaKind::imp:
      return wrap(prec > 1, pr_formula(f.left(), 2, env) + " -> " + pr_formula(f.right(), 1, env));
    case FormulaKind::land:
      return wrap(prec > 2, pr_formula(f.left(), 3, env) + " /\\ " + pr_formula(f.right(), 2, env));
    case FormulaKind::forall:
    case FormulaKind::exists: {
      Env inner = env;
      std::string x = pick_binder(inner, f.binder(), free_formula_vars(f.body()));
      inner.scope.insert(x);
      std::string kw = f.kind() == FormulaKind::forall ? "forall " : "exists ";
      std::string body = pr_formula(open_formula(f.body(), Term::free_var(x)), 0, inner);
      return wrap(prec > 0, kw + x + " : " + show_sort(f.binder_sort()) + ". " + body);
    }
  }
  return "?";
}

std::string pr_proof(const Proof& p, int prec, Env& env);

NameSet proof_all_frees(const Proof& p) {
  NameSet s = free_proof_tvars(p);
  collect_free_proof_pvars(p, s);
  return s;
}

std::string pr_proof_tlam(const Proof& p, Env& env) {
  std::ostringstream out;
  out << "fun";
  Proof cur = p;
  Env inner = env;
  while (cur.kind() == ProofKind::tlam) {
    std::string x = pick_binder(inner, cur.name(), proof_all_frees(cur.p()));
    inner.scope.insert(x);
    out << " (" << x << " : " << show_sort(cur.sort()) << ")";
    cur = open_proof_tvar(cur.p(), Term::free_var(x));
  }
  out << " => " << pr_proof(cur, 0, inner);
  return out.str();
}

std::string pr_motive(const std::string& display, const Formula& motive, Env& env) {
  Env inner = env;
  std::string x = pick_binder(inner, display, free_formula_vars(motive));
  inner.scope.insert(x);
  return x + " => " + pr_formula(open_formula(motive, Term::free_var(x)), 0, inner);
}

std::string pr_proof(const Proof& p, int prec, Env& env) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
      return rendered(env, p.name());
    case ProofKind::pvar_bound:
      return "?" + std::to_string(p.index());
    case ProofKind::refl: {
      std::string ann = p.sort().is_nat() ? "" : "[" + show_sort(p.sort()) + "]";
      return wrap(prec > 1, "refl" + ann + " " + pr_term(p.t(), 3, env));
    }
    case ProofKind::peel: {
      std::string ann = p.sort().is_nat() ? "" : "[" + show_sort(p.sort()) + "]";
      return "peel" + ann + "(" + pr_term(p.t(), 0, env) + ", " + pr_term(p.u(), 0, env) + ", " +
             pr_proof(p.p(), 0, env) + ", " + pr_motive(p.name(), p.formula(), env) + ", " +
             pr_proof(p.q(), 0, env) + ")";
    }
    case ProofKind::efq:
      return "efq(" + pr_proof(p.p(), 0, env) + ", " + pr_formula(p.formula(), 0, env) + ")";
    case ProofKind::plam: {
      Env inner = env;
      std::string xi = pick_binder(inner, p.name().empty() ? "xi" : p.name(), proof_all_frees(p.p()));
      inner.scope.insert(xi);
      std::string body = pr_proof(open_proof_pvar(p.p(), Proof::pvar(xi)), 0, inner);
      return wrap(prec > 0,
                  "assume " + xi + " : " + pr_formula(p.formula(), 0, env) + " => " + body);
    }
    case ProofKind::papp:
      return wrap(prec > 1, pr_proof(p.p(), 1, env) + " " + pr_proof(p.q(), 2, env));
    case ProofKind::pair:
      return "(" + pr_proof(p.p(), 0, env) + ", " + pr_proof(p.q(), 0, env) + ")";
    case ProofKind::proj:
      return pr_proof(p.p(), 2, env) + "." + std::to_string(p.index());
    case ProofKind::tlam:
      return wrap(prec > 0, pr_proof_tlam(p, env));
    case ProofKind::tapp:
      return wrap(prec > 1, pr_proof(p.p(), 1, env) + " " + pr_term(p.t(), 3, env));
    case ProofKind::ex_intro:
      return "wit(" + pr_formula(p.formula(), 0, env) + ", " + pr_term(p.t(), 0, env) + ", " +
             pr_proof(p.p(), 0, env) + ")";
    case ProofKind::ex_elim: {
      Env inner = env;
      NameSet body_frees = proof_all_frees(p.q());
      std::string x = pick_binder(inner, p.name(), body_frees);
      inner.scope.insert(x);
      std::string xi = pick_binder(inner, p.name2().empty() ? "xi" : p.name2(), body_frees);
      inner.scope.insert(xi);
      Proof body = open_proof_pvar(open_proof_tvar(p.q(), Term::free_var(x)), Proof::pvar(xi));
      return wrap(prec > 0, "unpack " + pr_proof(p.p(), 1, env) + " as [" + x + ", " + xi +
                                "] in " + pr_proof(body, 0, inner));
    }
    case ProofKind::ind:
      return "ind(" + pr_motive(p.name(), p.formula(), env) + ", " + pr_proof(p.p(), 0, env) +
             ", " + pr_proof(p.r(), 0, env) + ", " + pr_term(p.t(), 0, env) + ")";
    case ProofKind::ext_intro:
      return "ext[" + show_sort(p.sort()) + ", " + show_sort(p.sort2()) + "](" +
             pr_proof(p.p(), 0, env) + ")";
    case ProofKind::app_pm:
      return "apppm[" + show_sort(p.sort()) + ", " + show_sort(p.sort2()) + "](" +
             pr_proof(p.p(), 0, env) + ", " + pr_term(p.t(), 0, env) + ", " +
             pr_term(p.u(), 0, env) + ", " + pr_proof(p.q(), 0, env) + ")";
  }
  return "?";
}

Env env_for(const NameSet& frees) {
  Env env;
  note_frees(env, frees);
  return env;
}

}  // namespace

std::string show_sort(const Sort& s) { return s.show(); }

std::string show_term(const Term& t) {
  Env env = env_for(free_term_vars(t));
  return pr_term(t, 0, env);
}

std::string show_formula(const Formula& f) {
  Env env = env_for(free_formula_vars(f));
  return pr_formula(f, 0, env);
}

std::string show_proof(const Proof& p) {
  Env env = env_for(proof_all_frees(p));
  return pr_proof(p, 0, env);
}

// ---------------------------------------------------------------------------
// canonical renderings

namespace {

void canon_sort(const Sort& s, std::ostringstream& o) { o << s.show(); }

void canon_term(const Term& t, std::ostringstream& o) {
  switch (t.kind()) {
    case TermKind::free_var: o << "$" << t.name(); return;
    case TermKind::bound_var: o << "%" << t.index(); return;
    case TermKind::zero: o << "z"; return;
    case TermKind::succ: o << "(s "; canon_term(t.succ_arg(), o); o << ")"; return;
    case TermKind::app:
      o << "(a ";
      canon_term(t.fn(), o);
      o << " ";
      canon_term(t.arg(), o);
      o << ")";
      return;
    case TermKind::lam:
      o << "(l ";
      canon_sort(t.sort(), o);
      o << " ";
      canon_term(t.body(), o);
      o << ")";
      return;
    case TermKind::rec:
      o << "(r ";
      canon_sort(t.sort(), o);
      o << " ";
      canon_term(t.rec_base(), o);
      o << " ";
      canon_term(t.rec_step(), o);
      o << " ";
      canon_term(t.rec_scrut(), o);
      o << ")";
      return;
  }
}

void canon_formula(const Formula& f, std::ostringstream& o) {
  switch (f.kind()) {
    case FormulaKind::bot: o << "F"; return;
    case FormulaKind::eq:
      o << "(= ";
      canon_sort(f.eq_sort(), o);
      o << " ";
      canon_term(f.lhs(), o);
      o << " ";
      canon_term(f.rhs(), o);
      o << ")";
      return;
    case FormulaKind::null: o << "(n "; canon_term(f.null_arg(), o); o << ")"; return;
    case FormulaKind::imp:
    case FormulaKind::land:
      o << (f.kind() == FormulaKind::imp ? "(i " : "(c ");
      canon_formula(f.left(), o);
      o << " ";
      canon_formula(f.right(), o);
      o << ")";
      return;
    case FormulaKind::forall:
    case FormulaKind::exists:
      o << (f.kind() == FormulaKind::forall ? "(A " : "(E ");
      canon_sort(f.binder_sort(), o);
      o << " ";
      canon_formula(f.body(), o);
      o << ")";
      return;
  }
}

void canon_proof(const Proof& p, std::ostringstream& o) {
  switch (p.kind()) {
    case ProofKind::pvar_free: o << "$" << p.name(); return;
    case ProofKind::pvar_bound: o << "%" << p.index(); return;
    case ProofKind::refl:
      o << "(refl ";
      canon_sort(p.sort(), o);
      o << " ";
      canon_term(p.t(), o);
      o << ")";
      return;
    case ProofKind::peel:
      o << "(peel ";
      canon_sort(p.sort(), o);
      o << " ";
      canon_term(p.t(), o);
      o << " ";
      canon_term(p.u(), o);
      o << " ";
      canon_proof(p.p(), o);
      o << " ";
      canon_formula(p.formula(), o);
      o << " ";
      canon_proof(p.q(), o);
      o << ")";
      return;
    case ProofKind::efq:
      o << "(efq ";
      canon_proof(p.p(), o);
      o << " ";
      canon_formula(p.formula(), o);
      o << ")";
      return;
    case ProofKind::plam:
      o << "(pl ";
      canon_formula(p.formula(), o);
      o << " ";
      canon_proof(p.p(), o);
      o << ")";
      return;
    case ProofKind::papp:
    case ProofKind::pair:
      o << (p.kind() == ProofKind::papp ? "(pa " : "(pr ");
      canon_proof(p.p(), o);
      o << " ";
      canon_proof(p.q(), o);
      o << ")";
      return;
    case ProofKind::proj:
      o << "(pj" << p.index() << " ";
      canon_proof(p.p(), o);
      o << ")";
      return;
    case ProofKind::tlam:
      o << "(tl ";
      canon_sort(p.sort(), o);
      o << " ";
      canon_proof(p.p(), o);
      o << ")";
      return;
    case ProofKind::tapp:
      o << "(ta ";
      canon_proof(p.p(), o);
      o << " ";
      canon_term(p.t(), o);
      o << ")";
      return;
    case ProofKind::ex_intro:
      o << "(wi ";
      canon_term(p.t(), o);
      o << " ";
      canon_proof(p.p(), o);
      o << " ";
      canon_formula(p.formula(), o);
      o << ")";
      return;
    case ProofKind::ex_elim:
      o << "(un ";
      canon_proof(p.p(), o);
      o << " ";
      canon_proof(p.q(), o);
      o << ")";
      return;
    case ProofKind::ind:
      o << "(in ";
      canon_formula(p.formula(), o);
      o << " ";
      canon_proof(p.p(), o);
      o << " ";
      canon_proof(p.r(), o);
      o << " ";
      canon_term(p.t(), o);
      o << ")";
      return;
    case ProofKind::ext_intro:
      o << "(ex ";
      canon_sort(p.sort(), o);
      o << " ";
      canon_sort(p.sort2(), o);
      o << " ";
      canon_proof(p.p(), o);
      o << ")";
      return;
    case ProofKind::app_pm:
      o << "(ap ";
      canon_sort(p.sort(), o);
      o << " ";
      canon_sort(p.sort2(), o);
      o << " ";
      canon_proof(p.p(), o);
      o << " ";
      canon_term(p.t(), o);
      o << " ";
      canon_term(p.u(), o);
      o << " ";
      canon_proof(p.q(), o);
      o << ")";
      return;
  }
}

}  // namespace

std::string show_theorem_decl(const std::string& name, const Signature& sig, const Context& ctx,
                              const Formula& goal, const Proof& proof) {
  Env env;
  NameSet frees;
  for (const auto& [n, _] : sig.decls) frees.insert(n);
  for (const auto& [n, f] : ctx.hyps) {
    frees.insert(n);
    collect_free_formula_vars(f, frees);
  }
  collect_free_formula_vars(goal, frees);
  collect_free_proof_tvars(proof, frees);
  collect_free_proof_pvars(proof, frees);
  note_frees(env, frees);

  std::ostringstream o;
  o << "theorem " << name;
  for (const auto& [n, s] : sig.decls) o << " (" << rendered(env, n) << " : " << s.show() << ")";
  for (const auto& [n, f] : ctx.hyps)
    o << "\n  [" << rendered(env, n) << " : " << pr_formula(f, 0, env) << "]";
  o << "\n  : " << pr_formula(goal, 0, env);
  o << "\n  := " << pr_proof(proof, 0, env) << ".";
  return o.str();
}

std::string canonical_term(const Term& t) {
  std::ostringstream o;
  canon_term(t, o);
  return o.str();
}

std::string canonical_formula(const Formula& f) {
  std::ostringstream o;
  canon_formula(f, o);
  return o.str();
}

std::string canonical_proof(const Proof& p) {
  std::ostringstream o;
  canon_proof(p, o);
  return o.str();
}

}  // namespace hawk
