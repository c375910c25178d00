#include "conjecture.hpp"

#include <functional>
#include <sstream>

#include "printer.hpp"
#include "rewrite.hpp"

namespace hawk {

namespace {

struct StepOut {
  Proof after;
  std::string rule;
};

std::optional<StepOut> root_redex(const Proof& p) {
  switch (p.kind()) {
    case ProofKind::papp:
      if (p.p().kind() == ProofKind::plam)
        return StepOut{open_proof_pvar(p.p().p(), p.q()), "beta-imp"};
      return std::nullopt;
    case ProofKind::tapp:
      if (p.p().kind() == ProofKind::tlam)
        return StepOut{open_proof_tvar(p.p().p(), p.t()), "beta-forall"};
      return std::nullopt;
    case ProofKind::ex_elim:
      if (p.p().kind() == ProofKind::ex_intro) {
        const Proof& w = p.p();
        return StepOut{open_proof_pvar(open_proof_tvar(p.q(), w.t()), w.p()), "beta-exists"};
      }
      return std::nullopt;
    case ProofKind::proj:
      if (p.p().kind() == ProofKind::pair)
        return StepOut{p.index() == 1 ? p.p().p() : p.p().q(), "beta-pair"};
      return std::nullopt;
    case ProofKind::ind: {
      Term s = normalize_term(p.t());
      if (s.kind() == TermKind::zero) return StepOut{p.p(), "iota-ind-zero"};
      if (s.kind() == TermKind::succ) {
        const Term& v = s.succ_arg();
        Proof rest = Proof::ind_raw(p.name(), p.formula(), p.p(), p.r(), v);
        return StepOut{Proof::papp(Proof::tapp(p.r(), v), rest), "iota-ind-succ"};
      }
      return std::nullopt;
    }
    case ProofKind::peel:
      if (p.p().kind() == ProofKind::refl) return StepOut{p.q(), "iota-peel-refl"};
      return std::nullopt;
    case ProofKind::app_pm:
      if (p.p().kind() == ProofKind::ext_intro && p.q().kind() == ProofKind::refl &&
          term_congruent(p.t(), p.u()))
        return StepOut{Proof::tapp(p.p().p(), p.t()), "iota-apppm-ext"};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// Rebuilds p with its immediate subproofs replaced.
Proof with_children(const Proof& p, const std::vector<Proof>& kids) {
  switch (p.kind()) {
    case ProofKind::peel:
      return Proof::peel_raw(p.sort(), p.t(), p.u(), kids[0], p.name(), p.formula(), kids[1]);
    case ProofKind::efq:
      return Proof::efq(kids[0], p.formula());
    case ProofKind::plam:
      return Proof::plam_raw(p.name(), p.formula(), kids[0]);
    case ProofKind::papp:
      return Proof::papp(kids[0], kids[1]);
    case ProofKind::pair:
      return Proof::pair(kids[0], kids[1]);
    case ProofKind::proj:
      return Proof::proj(p.index(), kids[0]);
    case ProofKind::tlam:
      return Proof::tlam_raw(p.name(), p.sort(), kids[0]);
    case ProofKind::tapp:
      return Proof::tapp(kids[0], p.t());
    case ProofKind::ex_intro:
      return Proof::ex_intro(p.t(), kids[0], p.formula());
    case ProofKind::ex_elim:
      return Proof::ex_elim_raw(kids[0], p.name(), p.name2(), kids[1]);
    case ProofKind::ind:
      return Proof::ind_raw(p.name(), p.formula(), kids[0], kids[1], p.t());
    case ProofKind::ext_intro:
      return Proof::ext_intro(p.sort(), p.sort2(), kids[0]);
    case ProofKind::app_pm:
      return Proof::app_pm(p.sort(), p.sort2(), kids[0], p.t(), p.u(), kids[1]);
    default:
      return p;
  }
}

std::vector<Proof> subproofs(const Proof& p) {
  switch (p.kind()) {
    case ProofKind::peel:
    case ProofKind::papp:
    case ProofKind::pair:
    case ProofKind::ex_elim:
    case ProofKind::app_pm:
      return {p.p(), p.q()};
    case ProofKind::ind:
      return {p.p(), p.r()};
    case ProofKind::efq:
    case ProofKind::plam:
    case ProofKind::proj:
    case ProofKind::tlam:
    case ProofKind::tapp:
    case ProofKind::ex_intro:
    case ProofKind::ext_intro:
      return {p.p()};
    default:
      return {};
  }
}

// Descending under a binder opens it with a fresh name, so every subterm a
// redex rule inspects is locally closed; rebuilt via the closing constructors.
template <typename Fn>
void for_each_child_context(const Proof& p, Fn&& visit) {
  // visit(child_proof, rebuild) where rebuild maps a replacement child back
  // into p
  using Rebuild = std::function<Proof(const Proof&)>;
  switch (p.kind()) {
    case ProofKind::plam: {
      NameSet avoid = free_proof_pvars(p.p());
      std::string xi = fresh_name(p.name().empty() ? "xi" : p.name(), avoid);
      Proof body = open_proof_pvar(p.p(), Proof::pvar(xi));
      visit(body, Rebuild([p, xi](const Proof& b) { return Proof::plam(xi, p.formula(), b); }));
      return;
    }
    case ProofKind::tlam: {
      NameSet avoid = free_proof_tvars(p.p());
      std::string x = fresh_name(p.name().empty() ? "x" : p.name(), avoid);
      Proof body = open_proof_tvar(p.p(), Term::free_var(x));
      visit(body, Rebuild([p, x](const Proof& b) { return Proof::tlam(x, p.sort(), b); }));
      return;
    }
    case ProofKind::ex_elim: {
      visit(p.p(), Rebuild([p](const Proof& s) {
              return Proof::ex_elim_raw(s, p.name(), p.name2(), p.q());
            }));
      NameSet tavoid = free_proof_tvars(p.q());
      NameSet pavoid = free_proof_pvars(p.q());
      std::string x = fresh_name(p.name().empty() ? "x" : p.name(), tavoid);
      std::string xi = fresh_name(p.name2().empty() ? "xi" : p.name2(), pavoid);
      Proof body = open_proof_pvar(open_proof_tvar(p.q(), Term::free_var(x)), Proof::pvar(xi));
      visit(body, Rebuild([p, x, xi](const Proof& b) {
              return Proof::ex_elim(p.p(), x, xi, b);
            }));
      return;
    }
    default: {
      std::vector<Proof> kids = subproofs(p);
      for (size_t i = 0; i < kids.size(); ++i) {
        visit(kids[i], Rebuild([p, kids, i](const Proof& c) {
                std::vector<Proof> k2 = kids;
                k2[i] = c;
                return with_children(p, k2);
              }));
      }
      return;
    }
  }
}

std::optional<StepOut> step_go(const Proof& p) {
  if (auto r = root_redex(p)) return r;
  std::optional<StepOut> found;
  for_each_child_context(p, [&](const Proof& child, const std::function<Proof(const Proof&)>& rebuild) {
    if (found) return;
    if (auto r = step_go(child)) found = StepOut{rebuild(r->after), r->rule};
  });
  return found;
}

void reducts_go(const Proof& p, const std::string&, std::vector<StepOut>& out) {
  if (auto r = root_redex(p)) out.push_back(*r);
  for_each_child_context(p, [&](const Proof& child, const std::function<Proof(const Proof&)>& rebuild) {
    std::vector<StepOut> inner;
    reducts_go(child, "", inner);
    for (auto& r : inner) out.push_back(StepOut{rebuild(r.after), r.rule});
  });
}

Formula normalize_formula_terms(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::bot:
      return f;
    case FormulaKind::eq:
      return Formula::eq(f.eq_sort(), normalize_term(f.lhs()), normalize_term(f.rhs()));
    case FormulaKind::null: {
      Formula w = whnf_formula(f);
      if (w.kind() != FormulaKind::null) return normalize_formula_terms(w);
      return w;
    }
    case FormulaKind::imp:
      return Formula::imp(normalize_formula_terms(f.left()), normalize_formula_terms(f.right()));
    case FormulaKind::land:
      return Formula::land(normalize_formula_terms(f.left()), normalize_formula_terms(f.right()));
    case FormulaKind::forall:
    case FormulaKind::exists: {
      NameSet avoid = free_formula_vars(f.body());
      std::string x = fresh_name(f.binder().empty() ? "x" : f.binder(), avoid);
      Formula body = normalize_formula_terms(open_formula(f.body(), Term::free_var(x)));
      return f.kind() == FormulaKind::forall ? Formula::forall(x, f.binder_sort(), body)
                                             : Formula::exists(x, f.binder_sort(), body);
    }
  }
  return f;
}

}  // namespace

std::optional<Proof> proof_step(const Proof& p) {
  if (auto r = step_go(p)) return r->after;
  return std::nullopt;
}

std::vector<Proof> proof_one_step_reducts(const Proof& p) {
  std::vector<StepOut> out;
  reducts_go(p, "", out);
  std::vector<Proof> reducts;
  reducts.reserve(out.size());
  for (auto& r : out) reducts.push_back(r.after);
  return reducts;
}

Proof normalize_proof_terms(const Proof& p) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
    case ProofKind::pvar_bound:
      return p;
    case ProofKind::refl:
      return Proof::refl(p.sort(), normalize_term(p.t()));
    case ProofKind::peel: {
      NameSet avoid = free_formula_vars(p.formula());
      std::string z = fresh_name(p.name().empty() ? "z" : p.name(), avoid);
      Formula motive = normalize_formula_terms(open_formula(p.formula(), Term::free_var(z)));
      return Proof::peel(p.sort(), normalize_term(p.t()), normalize_term(p.u()),
                         normalize_proof_terms(p.p()), z, motive,
                         normalize_proof_terms(p.q()));
    }
    case ProofKind::efq:
      return Proof::efq(normalize_proof_terms(p.p()), normalize_formula_terms(p.formula()));
    case ProofKind::plam:
      return Proof::plam_raw(p.name(), normalize_formula_terms(p.formula()),
                             normalize_proof_terms(p.p()));
    case ProofKind::papp:
      return Proof::papp(normalize_proof_terms(p.p()), normalize_proof_terms(p.q()));
    case ProofKind::pair:
      return Proof::pair(normalize_proof_terms(p.p()), normalize_proof_terms(p.q()));
    case ProofKind::proj:
      return Proof::proj(p.index(), normalize_proof_terms(p.p()));
    case ProofKind::tlam: {
      NameSet avoid = free_proof_tvars(p.p());
      std::string x = fresh_name(p.name().empty() ? "x" : p.name(), avoid);
      Proof body = normalize_proof_terms(open_proof_tvar(p.p(), Term::free_var(x)));
      return Proof::tlam(x, p.sort(), body);
    }
    case ProofKind::tapp:
      return Proof::tapp(normalize_proof_terms(p.p()), normalize_term(p.t()));
    case ProofKind::ex_intro:
      return Proof::ex_intro(normalize_term(p.t()), normalize_proof_terms(p.p()),
                             normalize_formula_terms(p.formula()));
    case ProofKind::ex_elim: {
      NameSet avoid = free_proof_tvars(p.q());
      std::string x = fresh_name(p.name().empty() ? "x" : p.name(), avoid);
      Proof body = normalize_proof_terms(open_proof_tvar(p.q(), Term::free_var(x)));
      return Proof::ex_elim_raw(normalize_proof_terms(p.p()), x, p.name2(),
                                close_proof_tvar(body, x));
    }
    case ProofKind::ind: {
      NameSet avoid = free_formula_vars(p.formula());
      std::string x = fresh_name(p.name().empty() ? "x" : p.name(), avoid);
      Formula motive =
          normalize_formula_terms(open_formula(p.formula(), Term::free_var(x)));
      return Proof::ind(x, motive, normalize_proof_terms(p.p()), normalize_proof_terms(p.r()),
                        normalize_term(p.t()));
    }
    case ProofKind::ext_intro:
      return Proof::ext_intro(p.sort(), p.sort2(), normalize_proof_terms(p.p()));
    case ProofKind::app_pm:
      return Proof::app_pm(p.sort(), p.sort2(), normalize_proof_terms(p.p()),
                           normalize_term(p.t()), normalize_term(p.u()),
                           normalize_proof_terms(p.q()));
  }
  return p;
}

namespace {

bool contains_peel(const Proof& p) {
  if (p.kind() == ProofKind::peel) return true;
  for (const Proof& k : subproofs(p))
    if (contains_peel(k)) return true;
  return false;
}

std::string join_key(const Proof& p) { return canonical_proof(normalize_proof_terms(p)); }

struct JoinOutcome {
  bool joinable = false;
  uint64_t steps = 0;
};

JoinOutcome joinable_search(const Proof& a, const Proof& b, uint64_t budget) {
  std::set<std::string> seen_a{join_key(a)}, seen_b{join_key(b)};
  if (seen_b.count(*seen_a.begin())) return {true, 0};
  Proof cur_a = a, cur_b = b;
  bool live_a = true, live_b = true;
  uint64_t used = 0;
  while (used < budget && (live_a || live_b)) {
    if (live_a) {
      ++used;
      if (auto n = proof_step(cur_a)) {
        cur_a = *n;
        std::string k = join_key(cur_a);
        seen_a.insert(k);
        if (seen_b.count(k)) return {true, used};
      } else {
        live_a = false;
      }
    }
    if (live_b && used < budget) {
      ++used;
      if (auto n = proof_step(cur_b)) {
        cur_b = *n;
        std::string k = join_key(cur_b);
        seen_b.insert(k);
        if (seen_a.count(k)) return {true, used};
      } else {
        live_b = false;
      }
    }
  }
  return {false, used};
}

}  // namespace

ConjectureReport run_conjecture(const SourceFile& file, uint64_t max_steps) {
  ConjectureReport rep;
  for (const auto& th : file.theorems) {
    auto skip = [&](const std::string& why) {
      ConjectureInstance inst;
      inst.theorem = th.name;
      inst.status = "skipped";
      inst.detail = why;
      rep.instances.push_back(inst);
      ++rep.skipped;
    };
    if (contains_peel(th.proof)) {
      skip("excluded by conjecture hypothesis (contains peel)");
      continue;
    }
    if (!free_proof_tvars(th.proof).empty()) {
      skip("excluded by conjecture hypothesis (free first-order variables)");
      continue;
    }
    Judgment j{file.logic, th.sig, th.ctx, th.proof, th.goal};
    std::vector<StepOut> reducts;
    reducts_go(th.proof, "", reducts);
    if (reducts.empty()) {
      skip("normal proof (no reducts)");
      continue;
    }
    for (const auto& r : reducts) {
      ConjectureInstance inst;
      inst.theorem = th.name;
      inst.rule = r.rule;
      try {
        Judgment jr = j;
        jr.proof = r.after;
        CheckReport check = check_proof(jr);
        if (!check.accepted) {
          inst.status = "error";
          inst.detail = "reduct fails to re-check: " + check.message();
          ++rep.errors;
          rep.instances.push_back(inst);
          continue;
        }
        TranslationUnit src_unit = translate_proof(j);
        TranslationUnit red_unit = translate_proof(jr);
        JoinOutcome out =
            joinable_search(src_unit.produced.proof, red_unit.produced.proof, max_steps);
        inst.steps_used = out.steps;
        if (out.joinable) {
          inst.status = "joinable";
          ++rep.joinable;
        } else {
          inst.status = "unknown";
          inst.detail = "no common reduct within budget";
          ++rep.unknown;
        }
      } catch (const std::exception& e) {
        inst.status = "error";
        inst.detail = e.what();
        ++rep.errors;
      }
      rep.instances.push_back(inst);
    }
  }
  return rep;
}

std::string render_conjecture_report(const ConjectureReport& rep) {
  std::ostringstream o;
  for (const auto& inst : rep.instances) {
    o << inst.theorem << "\t" << (inst.rule.empty() ? "-" : inst.rule) << "\t" << inst.status
      << "\tsteps=" << inst.steps_used;
    if (!inst.detail.empty()) o << "\t" << inst.detail;
    o << "\n";
  }
  o << "summary\tjoinable=" << rep.joinable << "\tunknown=" << rep.unknown
    << "\tskipped=" << rep.skipped << "\terrors=" << rep.errors << "\n";
  return o.str();
}

}  // namespace hawk
