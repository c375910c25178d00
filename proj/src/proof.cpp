#include "proof.hpp"

#include <utility>

namespace hawk {

Proof Proof::make(Node n) { return Proof(std::make_shared<const Node>(std::move(n))); }

Proof Proof::pvar(std::string name) {
  Node n;
  n.kind = ProofKind::pvar_free;
  n.name = std::move(name);
  return make(std::move(n));
}

Proof Proof::pvar_bound(int index) {
  Node n;
  n.kind = ProofKind::pvar_bound;
  n.index = index;
  return make(std::move(n));
}

Proof Proof::refl(Sort sort, Term t) {
  Node n;
  n.kind = ProofKind::refl;
  n.sort = std::move(sort);
  n.t = std::move(t);
  return make(std::move(n));
}

Proof Proof::peel_raw(Sort sort, Term t, Term u, Proof eq, std::string display, Formula motive,
                      Proof base) {
  Node n;
  n.kind = ProofKind::peel;
  n.sort = std::move(sort);
  n.t = std::move(t);
  n.u = std::move(u);
  n.p = std::move(eq);
  n.name = std::move(display);
  n.f = std::move(motive);
  n.q = std::move(base);
  return make(std::move(n));
}

Proof Proof::peel(Sort sort, Term t, Term u, Proof eq, const std::string& var, Formula motive,
                  Proof base) {
  return peel_raw(std::move(sort), std::move(t), std::move(u), std::move(eq), var,
                  close_formula(motive, var), std::move(base));
}

Proof Proof::efq(Proof p, Formula target) {
  Node n;
  n.kind = ProofKind::efq;
  n.p = std::move(p);
  n.f = std::move(target);
  return make(std::move(n));
}

Proof Proof::plam_raw(std::string display, Formula hyp, Proof body) {
  Node n;
  n.kind = ProofKind::plam;
  n.name = std::move(display);
  n.f = std::move(hyp);
  n.p = std::move(body);
  return make(std::move(n));
}

Proof Proof::plam(const std::string& name, Formula hyp, Proof body) {
  return plam_raw(name, std::move(hyp), close_proof_pvar(body, name));
}

Proof Proof::papp(Proof fn, Proof arg) {
  Node n;
  n.kind = ProofKind::papp;
  n.p = std::move(fn);
  n.q = std::move(arg);
  return make(std::move(n));
}

Proof Proof::pair(Proof l, Proof r) {
  Node n;
  n.kind = ProofKind::pair;
  n.p = std::move(l);
  n.q = std::move(r);
  return make(std::move(n));
}

Proof Proof::proj(int i, Proof p) {
  Node n;
  n.kind = ProofKind::proj;
  n.index = i;
  n.p = std::move(p);
  return make(std::move(n));
}

Proof Proof::tlam_raw(std::string display, Sort sort, Proof body) {
  Node n;
  n.kind = ProofKind::tlam;
  n.name = std::move(display);
  n.sort = std::move(sort);
  n.p = std::move(body);
  return make(std::move(n));
}

Proof Proof::tlam(const std::string& name, const Sort& sort, Proof body) {
  return tlam_raw(name, sort, close_proof_tvar(body, name));
}

Proof Proof::tapp(Proof p, Term t) {
  Node n;
  n.kind = ProofKind::tapp;
  n.p = std::move(p);
  n.t = std::move(t);
  return make(std::move(n));
}

Proof Proof::ex_intro(Term witness, Proof p, Formula target) {
  Node n;
  n.kind = ProofKind::ex_intro;
  n.t = std::move(witness);
  n.p = std::move(p);
  n.f = std::move(target);
  return make(std::move(n));
}

Proof Proof::ex_elim_raw(Proof p, std::string var_display, std::string pvar_display, Proof body) {
  Node n;
  n.kind = ProofKind::ex_elim;
  n.p = std::move(p);
  n.name = std::move(var_display);
  n.name2 = std::move(pvar_display);
  n.q = std::move(body);
  return make(std::move(n));
}

Proof Proof::ex_elim(Proof p, const std::string& var, const std::string& pvar, Proof body) {
  return ex_elim_raw(std::move(p), var, pvar,
                     close_proof_pvar(close_proof_tvar(body, var), pvar));
}

Proof Proof::ind_raw(std::string display, Formula motive, Proof base, Proof step, Term scrut) {
  Node n;
  n.kind = ProofKind::ind;
  n.name = std::move(display);
  n.f = std::move(motive);
  n.p = std::move(base);
  n.r = std::move(step);
  n.t = std::move(scrut);
  return make(std::move(n));
}

Proof Proof::ind(const std::string& var, Formula motive, Proof base, Proof step, Term scrut) {
  return ind_raw(var, close_formula(motive, var), std::move(base), std::move(step),
                 std::move(scrut));
}

Proof Proof::ext_intro(Sort dom, Sort cod, Proof p) {
  Node n;
  n.kind = ProofKind::ext_intro;
  n.sort = std::move(dom);
  n.sort2 = std::move(cod);
  n.p = std::move(p);
  return make(std::move(n));
}

Proof Proof::app_pm(Sort dom, Sort cod, Proof p, Term t, Term u, Proof q) {
  Node n;
  n.kind = ProofKind::app_pm;
  n.sort = std::move(dom);
  n.sort2 = std::move(cod);
  n.p = std::move(p);
  n.t = std::move(t);
  n.u = std::move(u);
  n.q = std::move(q);
  return make(std::move(n));
}

Proof open_proof_tvar_at(const Proof& p, int k, const Term& image) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
    case ProofKind::pvar_bound:
      return p;
    case ProofKind::refl:
      return Proof::refl(p.sort(), open_term_at(p.t(), k, image));
    case ProofKind::peel:
      return Proof::peel_raw(p.sort(), open_term_at(p.t(), k, image),
                             open_term_at(p.u(), k, image), open_proof_tvar_at(p.p(), k, image),
                             p.name(), open_formula_at(p.formula(), k + 1, image),
                             open_proof_tvar_at(p.q(), k, image));
    case ProofKind::efq:
      return Proof::efq(open_proof_tvar_at(p.p(), k, image),
                        open_formula_at(p.formula(), k, image));
    case ProofKind::plam:
      return Proof::plam_raw(p.name(), open_formula_at(p.formula(), k, image),
                             open_proof_tvar_at(p.p(), k, image));
    case ProofKind::papp:
      return Proof::papp(open_proof_tvar_at(p.p(), k, image), open_proof_tvar_at(p.q(), k, image));
    case ProofKind::pair:
      return Proof::pair(open_proof_tvar_at(p.p(), k, image), open_proof_tvar_at(p.q(), k, image));
    case ProofKind::proj:
      return Proof::proj(p.index(), open_proof_tvar_at(p.p(), k, image));
    case ProofKind::tlam:
      return Proof::tlam_raw(p.name(), p.sort(), open_proof_tvar_at(p.p(), k + 1, image));
    case ProofKind::tapp:
      return Proof::tapp(open_proof_tvar_at(p.p(), k, image), open_term_at(p.t(), k, image));
    case ProofKind::ex_intro:
      return Proof::ex_intro(open_term_at(p.t(), k, image), open_proof_tvar_at(p.p(), k, image),
                             open_formula_at(p.formula(), k, image));
    case ProofKind::ex_elim:
      return Proof::ex_elim_raw(open_proof_tvar_at(p.p(), k, image), p.name(), p.name2(),
                                open_proof_tvar_at(p.q(), k + 1, image));
    case ProofKind::ind:
      return Proof::ind_raw(p.name(), open_formula_at(p.formula(), k + 1, image),
                            open_proof_tvar_at(p.p(), k, image),
                            open_proof_tvar_at(p.r(), k, image), open_term_at(p.t(), k, image));
    case ProofKind::ext_intro:
      return Proof::ext_intro(p.sort(), p.sort2(), open_proof_tvar_at(p.p(), k, image));
    case ProofKind::app_pm:
      return Proof::app_pm(p.sort(), p.sort2(), open_proof_tvar_at(p.p(), k, image),
                           open_term_at(p.t(), k, image), open_term_at(p.u(), k, image),
                           open_proof_tvar_at(p.q(), k, image));
  }
  return p;
}

Proof close_proof_tvar_at(const Proof& p, int k, const std::string& name) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
    case ProofKind::pvar_bound:
      return p;
    case ProofKind::refl:
      return Proof::refl(p.sort(), close_term_at(p.t(), k, name));
    case ProofKind::peel:
      return Proof::peel_raw(p.sort(), close_term_at(p.t(), k, name),
                             close_term_at(p.u(), k, name), close_proof_tvar_at(p.p(), k, name),
                             p.name(), close_formula_at(p.formula(), k + 1, name),
                             close_proof_tvar_at(p.q(), k, name));
    case ProofKind::efq:
      return Proof::efq(close_proof_tvar_at(p.p(), k, name),
                        close_formula_at(p.formula(), k, name));
    case ProofKind::plam:
      return Proof::plam_raw(p.name(), close_formula_at(p.formula(), k, name),
                             close_proof_tvar_at(p.p(), k, name));
    case ProofKind::papp:
      return Proof::papp(close_proof_tvar_at(p.p(), k, name), close_proof_tvar_at(p.q(), k, name));
    case ProofKind::pair:
      return Proof::pair(close_proof_tvar_at(p.p(), k, name), close_proof_tvar_at(p.q(), k, name));
    case ProofKind::proj:
      return Proof::proj(p.index(), close_proof_tvar_at(p.p(), k, name));
    case ProofKind::tlam:
      return Proof::tlam_raw(p.name(), p.sort(), close_proof_tvar_at(p.p(), k + 1, name));
    case ProofKind::tapp:
      return Proof::tapp(close_proof_tvar_at(p.p(), k, name), close_term_at(p.t(), k, name));
    case ProofKind::ex_intro:
      return Proof::ex_intro(close_term_at(p.t(), k, name), close_proof_tvar_at(p.p(), k, name),
                             close_formula_at(p.formula(), k, name));
    case ProofKind::ex_elim:
      return Proof::ex_elim_raw(close_proof_tvar_at(p.p(), k, name), p.name(), p.name2(),
                                close_proof_tvar_at(p.q(), k + 1, name));
    case ProofKind::ind:
      return Proof::ind_raw(p.name(), close_formula_at(p.formula(), k + 1, name),
                            close_proof_tvar_at(p.p(), k, name),
                            close_proof_tvar_at(p.r(), k, name), close_term_at(p.t(), k, name));
    case ProofKind::ext_intro:
      return Proof::ext_intro(p.sort(), p.sort2(), close_proof_tvar_at(p.p(), k, name));
    case ProofKind::app_pm:
      return Proof::app_pm(p.sort(), p.sort2(), close_proof_tvar_at(p.p(), k, name),
                           close_term_at(p.t(), k, name), close_term_at(p.u(), k, name),
                           close_proof_tvar_at(p.q(), k, name));
  }
  return p;
}

Proof open_proof_pvar_at(const Proof& p, int j, const Proof& image) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
      return p;
    case ProofKind::pvar_bound:
      return p.index() == j ? image : p;
    case ProofKind::refl:
      return p;
    case ProofKind::peel:
      return Proof::peel_raw(p.sort(), p.t(), p.u(), open_proof_pvar_at(p.p(), j, image), p.name(),
                             p.formula(), open_proof_pvar_at(p.q(), j, image));
    case ProofKind::efq:
      return Proof::efq(open_proof_pvar_at(p.p(), j, image), p.formula());
    case ProofKind::plam:
      return Proof::plam_raw(p.name(), p.formula(), open_proof_pvar_at(p.p(), j + 1, image));
    case ProofKind::papp:
      return Proof::papp(open_proof_pvar_at(p.p(), j, image), open_proof_pvar_at(p.q(), j, image));
    case ProofKind::pair:
      return Proof::pair(open_proof_pvar_at(p.p(), j, image), open_proof_pvar_at(p.q(), j, image));
    case ProofKind::proj:
      return Proof::proj(p.index(), open_proof_pvar_at(p.p(), j, image));
    case ProofKind::tlam:
      return Proof::tlam_raw(p.name(), p.sort(), open_proof_pvar_at(p.p(), j, image));
    case ProofKind::tapp:
      return Proof::tapp(open_proof_pvar_at(p.p(), j, image), p.t());
    case ProofKind::ex_intro:
      return Proof::ex_intro(p.t(), open_proof_pvar_at(p.p(), j, image), p.formula());
    case ProofKind::ex_elim:
      return Proof::ex_elim_raw(open_proof_pvar_at(p.p(), j, image), p.name(), p.name2(),
                                open_proof_pvar_at(p.q(), j + 1, image));
    case ProofKind::ind:
      return Proof::ind_raw(p.name(), p.formula(), open_proof_pvar_at(p.p(), j, image),
                            open_proof_pvar_at(p.r(), j, image), p.t());
    case ProofKind::ext_intro:
      return Proof::ext_intro(p.sort(), p.sort2(), open_proof_pvar_at(p.p(), j, image));
    case ProofKind::app_pm:
      return Proof::app_pm(p.sort(), p.sort2(), open_proof_pvar_at(p.p(), j, image), p.t(), p.u(),
                           open_proof_pvar_at(p.q(), j, image));
  }
  return p;
}

Proof close_proof_pvar_at(const Proof& p, int j, const std::string& name) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
      return p.name() == name ? Proof::pvar_bound(j) : p;
    case ProofKind::pvar_bound:
    case ProofKind::refl:
      return p;
    case ProofKind::peel:
      return Proof::peel_raw(p.sort(), p.t(), p.u(), close_proof_pvar_at(p.p(), j, name), p.name(),
                             p.formula(), close_proof_pvar_at(p.q(), j, name));
    case ProofKind::efq:
      return Proof::efq(close_proof_pvar_at(p.p(), j, name), p.formula());
    case ProofKind::plam:
      return Proof::plam_raw(p.name(), p.formula(), close_proof_pvar_at(p.p(), j + 1, name));
    case ProofKind::papp:
      return Proof::papp(close_proof_pvar_at(p.p(), j, name), close_proof_pvar_at(p.q(), j, name));
    case ProofKind::pair:
      return Proof::pair(close_proof_pvar_at(p.p(), j, name), close_proof_pvar_at(p.q(), j, name));
    case ProofKind::proj:
      return Proof::proj(p.index(), close_proof_pvar_at(p.p(), j, name));
    case ProofKind::tlam:
      return Proof::tlam_raw(p.name(), p.sort(), close_proof_pvar_at(p.p(), j, name));
    case ProofKind::tapp:
      return Proof::tapp(close_proof_pvar_at(p.p(), j, name), p.t());
    case ProofKind::ex_intro:
      return Proof::ex_intro(p.t(), close_proof_pvar_at(p.p(), j, name), p.formula());
    case ProofKind::ex_elim:
      return Proof::ex_elim_raw(close_proof_pvar_at(p.p(), j, name), p.name(), p.name2(),
                                close_proof_pvar_at(p.q(), j + 1, name));
    case ProofKind::ind:
      return Proof::ind_raw(p.name(), p.formula(), close_proof_pvar_at(p.p(), j, name),
                            close_proof_pvar_at(p.r(), j, name), p.t());
    case ProofKind::ext_intro:
      return Proof::ext_intro(p.sort(), p.sort2(), close_proof_pvar_at(p.p(), j, name));
    case ProofKind::app_pm:
      return Proof::app_pm(p.sort(), p.sort2(), close_proof_pvar_at(p.p(), j, name), p.t(), p.u(),
                           close_proof_pvar_at(p.q(), j, name));
  }
  return p;
}

namespace {

struct SubstEnv {
  const TermSubst& theta;
  const ProofSubst& rho;
  NameSet term_image_fvs;  // for display refreshing at term binders
};

std::string refresh_display(const std::string& d, const NameSet& image_fvs, const Proof& scope) {
  if (!image_fvs.count(d)) return d;
  NameSet avoid = image_fvs;
  collect_free_proof_tvars(scope, avoid);
  return fresh_name(d, avoid);
}

Proof subst_proof_go(const Proof& p, const SubstEnv& env) {
  const TermSubst& th = env.theta;
  switch (p.kind()) {
    case ProofKind::pvar_free: {
      auto it = env.rho.find(p.name());
      return it == env.rho.end() ? p : it->second;
    }
    case ProofKind::pvar_bound:
      return p;
    case ProofKind::refl:
      return Proof::refl(p.sort(), subst_term(p.t(), th));
    case ProofKind::peel:
      return Proof::peel_raw(p.sort(), subst_term(p.t(), th), subst_term(p.u(), th),
                             subst_proof_go(p.p(), env),
                             refresh_display(p.name(), env.term_image_fvs, p),
                             subst_formula(p.formula(), th), subst_proof_go(p.q(), env));
    case ProofKind::efq:
      return Proof::efq(subst_proof_go(p.p(), env), subst_formula(p.formula(), th));
    case ProofKind::plam:
      return Proof::plam_raw(p.name(), subst_formula(p.formula(), th), subst_proof_go(p.p(), env));
    case ProofKind::papp:
      return Proof::papp(subst_proof_go(p.p(), env), subst_proof_go(p.q(), env));
    case ProofKind::pair:
      return Proof::pair(subst_proof_go(p.p(), env), subst_proof_go(p.q(), env));
    case ProofKind::proj:
      return Proof::proj(p.index(), subst_proof_go(p.p(), env));
    case ProofKind::tlam:
      return Proof::tlam_raw(refresh_display(p.name(), env.term_image_fvs, p), p.sort(),
                             subst_proof_go(p.p(), env));
    case ProofKind::tapp:
      return Proof::tapp(subst_proof_go(p.p(), env), subst_term(p.t(), th));
    case ProofKind::ex_intro:
      return Proof::ex_intro(subst_term(p.t(), th), subst_proof_go(p.p(), env),
                             subst_formula(p.formula(), th));
    case ProofKind::ex_elim:
      return Proof::ex_elim_raw(subst_proof_go(p.p(), env),
                                refresh_display(p.name(), env.term_image_fvs, p), p.name2(),
                                subst_proof_go(p.q(), env));
    case ProofKind::ind:
      return Proof::ind_raw(refresh_display(p.name(), env.term_image_fvs, p),
                            subst_formula(p.formula(), th), subst_proof_go(p.p(), env),
                            subst_proof_go(p.r(), env), subst_term(p.t(), th));
    case ProofKind::ext_intro:
      return Proof::ext_intro(p.sort(), p.sort2(), subst_proof_go(p.p(), env));
    case ProofKind::app_pm:
      return Proof::app_pm(p.sort(), p.sort2(), subst_proof_go(p.p(), env), subst_term(p.t(), th),
                           subst_term(p.u(), th), subst_proof_go(p.q(), env));
  }
  return p;
}

}  // namespace

Proof subst_proof(const Proof& p, const TermSubst& theta, const ProofSubst& rho) {
  if (theta.empty() && rho.empty()) return p;
  SubstEnv env{theta, rho, {}};
  for (const auto& [_, img] : theta) collect_free_term_vars(img, env.term_image_fvs);
  return subst_proof_go(p, env);
}

void collect_free_proof_tvars(const Proof& p, NameSet& out) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
    case ProofKind::pvar_bound:
      return;
    case ProofKind::refl:
      collect_free_term_vars(p.t(), out);
      return;
    case ProofKind::peel:
      collect_free_term_vars(p.t(), out);
      collect_free_term_vars(p.u(), out);
      collect_free_proof_tvars(p.p(), out);
      collect_free_formula_vars(p.formula(), out);
      collect_free_proof_tvars(p.q(), out);
      return;
    case ProofKind::efq:
      collect_free_proof_tvars(p.p(), out);
      collect_free_formula_vars(p.formula(), out);
      return;
    case ProofKind::plam:
      collect_free_formula_vars(p.formula(), out);
      collect_free_proof_tvars(p.p(), out);
      return;
    case ProofKind::papp:
    case ProofKind::pair:
      collect_free_proof_tvars(p.p(), out);
      collect_free_proof_tvars(p.q(), out);
      return;
    case ProofKind::proj:
      collect_free_proof_tvars(p.p(), out);
      return;
    case ProofKind::tlam:
      collect_free_proof_tvars(p.p(), out);
      return;
    case ProofKind::tapp:
      collect_free_proof_tvars(p.p(), out);
      collect_free_term_vars(p.t(), out);
      return;
    case ProofKind::ex_intro:
      collect_free_term_vars(p.t(), out);
      collect_free_proof_tvars(p.p(), out);
      collect_free_formula_vars(p.formula(), out);
      return;
    case ProofKind::ex_elim:
      collect_free_proof_tvars(p.p(), out);
      collect_free_proof_tvars(p.q(), out);
      return;
    case ProofKind::ind:
      collect_free_formula_vars(p.formula(), out);
      collect_free_proof_tvars(p.p(), out);
      collect_free_proof_tvars(p.r(), out);
      collect_free_term_vars(p.t(), out);
      return;
    case ProofKind::ext_intro:
      collect_free_proof_tvars(p.p(), out);
      return;
    case ProofKind::app_pm:
      collect_free_proof_tvars(p.p(), out);
      collect_free_term_vars(p.t(), out);
      collect_free_term_vars(p.u(), out);
      collect_free_proof_tvars(p.q(), out);
      return;
  }
}

NameSet free_proof_tvars(const Proof& p) {
  NameSet out;
  collect_free_proof_tvars(p, out);
  return out;
}

void collect_free_proof_pvars(const Proof& p, NameSet& out) {
  switch (p.kind()) {
    case ProofKind::pvar_free:
      out.insert(p.name());
      return;
    case ProofKind::pvar_bound:
    case ProofKind::refl:
      return;
    case ProofKind::peel:
    case ProofKind::papp:
    case ProofKind::pair:
    case ProofKind::ex_elim:
      collect_free_proof_pvars(p.p(), out);
      collect_free_proof_pvars(p.q(), out);
      return;
    case ProofKind::app_pm:
      collect_free_proof_pvars(p.p(), out);
      collect_free_proof_pvars(p.q(), out);
      return;
    case ProofKind::efq:
    case ProofKind::plam:
    case ProofKind::proj:
    case ProofKind::tlam:
    case ProofKind::tapp:
    case ProofKind::ex_intro:
    case ProofKind::ext_intro:
      collect_free_proof_pvars(p.p(), out);
      return;
    case ProofKind::ind:
      collect_free_proof_pvars(p.p(), out);
      collect_free_proof_pvars(p.r(), out);
      return;
  }
}

NameSet free_proof_pvars(const Proof& p) {
  NameSet out;
  collect_free_proof_pvars(p, out);
  return out;
}

bool alpha_eq_proof(const Proof& a, const Proof& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ProofKind::pvar_free:
      return a.name() == b.name();
    case ProofKind::pvar_bound:
      return a.index() == b.index();
    case ProofKind::refl:
      return a.sort() == b.sort() && alpha_eq_term(a.t(), b.t());
    case ProofKind::peel:
      return a.sort() == b.sort() && alpha_eq_term(a.t(), b.t()) && alpha_eq_term(a.u(), b.u()) &&
             alpha_eq_proof(a.p(), b.p()) && alpha_eq_formula(a.formula(), b.formula()) &&
             alpha_eq_proof(a.q(), b.q());
    case ProofKind::efq:
      return alpha_eq_proof(a.p(), b.p()) && alpha_eq_formula(a.formula(), b.formula());
    case ProofKind::plam:
      return alpha_eq_formula(a.formula(), b.formula()) && alpha_eq_proof(a.p(), b.p());
    case ProofKind::papp:
    case ProofKind::pair:
      return alpha_eq_proof(a.p(), b.p()) && alpha_eq_proof(a.q(), b.q());
    case ProofKind::proj:
      return a.index() == b.index() && alpha_eq_proof(a.p(), b.p());
    case ProofKind::tlam:
      return a.sort() == b.sort() && alpha_eq_proof(a.p(), b.p());
    case ProofKind::tapp:
      return alpha_eq_proof(a.p(), b.p()) && alpha_eq_term(a.t(), b.t());
    case ProofKind::ex_intro:
      return alpha_eq_term(a.t(), b.t()) && alpha_eq_proof(a.p(), b.p()) &&
             alpha_eq_formula(a.formula(), b.formula());
    case ProofKind::ex_elim:
      return alpha_eq_proof(a.p(), b.p()) && alpha_eq_proof(a.q(), b.q());
    case ProofKind::ind:
      return alpha_eq_formula(a.formula(), b.formula()) && alpha_eq_proof(a.p(), b.p()) &&
             alpha_eq_proof(a.r(), b.r()) && alpha_eq_term(a.t(), b.t());
    case ProofKind::ext_intro:
      return a.sort() == b.sort() && a.sort2() == b.sort2() && alpha_eq_proof(a.p(), b.p());
    case ProofKind::app_pm:
      return a.sort() == b.sort() && a.sort2() == b.sort2() && alpha_eq_proof(a.p(), b.p()) &&
             alpha_eq_term(a.t(), b.t()) && alpha_eq_term(a.u(), b.u()) &&
             alpha_eq_proof(a.q(), b.q());
  }
  return false;
}

}  // namespace hawk
