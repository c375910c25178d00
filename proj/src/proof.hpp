#pragma once

#include <memory>
#include <string>

#include "formula.hpp"

namespace hawk {

enum class ProofKind {
  pvar_free,
  pvar_bound,
  refl,      // refl_sigma t
  peel,      // peel_sigma^{t,u}(eq, x^.motive, base)
  efq,       // efq(p, target)
  plam,      // \xi : hyp. body
  papp,      // p q
  pair,      // (p, q)
  proj,      // p.1 / p.2
  tlam,      // \x^sigma. body
  tapp,      // p t
  ex_intro,  // [t, p] : target
  ex_elim,   // let [x, xi] := p in body
  ind,       // ind(x^.motive, base, step, scrut)
  ext_intro, // ext_{dom,cod}(p)
  app_pm     // apppm_{dom,cod}(p, t, u, q)
};

// Natural-deduction proof terms. Two separate index namespaces: term
// variables (bound by tlam, ex_elim and by the motive hats of peel/ind)
// and proof variables (bound by plam and ex_elim).
class Proof {
 public:
  Proof() = default;

  static Proof pvar(std::string name);
  static Proof pvar_bound(int index);
  static Proof refl(Sort sort, Term t);
  // motive refers to the hat variable as term index 0
  static Proof peel_raw(Sort sort, Term t, Term u, Proof eq, std::string display, Formula motive,
                        Proof base);
  static Proof peel(Sort sort, Term t, Term u, Proof eq, const std::string& var, Formula motive,
                    Proof base);
  static Proof efq(Proof p, Formula target);
  static Proof plam_raw(std::string display, Formula hyp, Proof body);
  static Proof plam(const std::string& name, Formula hyp, Proof body);
  static Proof papp(Proof fn, Proof arg);
  static Proof pair(Proof l, Proof r);
  static Proof proj(int i, Proof p);
  static Proof tlam_raw(std::string display, Sort sort, Proof body);
  static Proof tlam(const std::string& name, const Sort& sort, Proof body);
  static Proof tapp(Proof p, Term t);
  static Proof ex_intro(Term witness, Proof p, Formula target);
  static Proof ex_elim_raw(Proof p, std::string var_display, std::string pvar_display, Proof body);
  static Proof ex_elim(Proof p, const std::string& var, const std::string& pvar, Proof body);
  static Proof ind_raw(std::string display, Formula motive, Proof base, Proof step, Term scrut);
  static Proof ind(const std::string& var, Formula motive, Proof base, Proof step, Term scrut);
  static Proof ext_intro(Sort dom, Sort cod, Proof p);
  static Proof app_pm(Sort dom, Sort cod, Proof p, Term t, Term u, Proof q);

  ProofKind kind() const;
  const std::string& name() const;   // pvar_free / binder display
  const std::string& name2() const;  // ex_elim proof-var display
  int index() const;                 // pvar_bound / proj
  const Sort& sort() const;          // refl/peel sort, tlam sort, ext/app_pm dom
  const Sort& sort2() const;         // ext/app_pm cod
  const Term& t() const;  // refl t, peel t, tapp t, ex_intro witness, ind scrut, app_pm t
  const Term& u() const;  // peel u, app_pm u
  const Formula& formula() const;  // peel/ind motive, plam hyp, efq/ex_intro target
  const Proof& p() const;          // main subproof
  const Proof& q() const;          // second subproof
  const Proof& r() const;          // ind step

  bool empty() const { return n_ == nullptr; }
  bool same_node(const Proof& o) const { return n_ == o.n_; }

 private:
  struct Node;
  explicit Proof(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Proof make(Node n);
  std::shared_ptr<const Node> n_;
};

struct Proof::Node {
  ProofKind kind;
  std::string name, name2;
  int index = 0;
  Sort sort, sort2;
  Term t, u;
  Formula f;
  Proof p, q, r;
};

inline ProofKind Proof::kind() const { return n_->kind; }
inline const std::string& Proof::name() const { return n_->name; }
inline const std::string& Proof::name2() const { return n_->name2; }
inline int Proof::index() const { return n_->index; }
inline const Sort& Proof::sort() const { return n_->sort; }
inline const Sort& Proof::sort2() const { return n_->sort2; }
inline const Term& Proof::t() const { return n_->t; }
inline const Term& Proof::u() const { return n_->u; }
inline const Formula& Proof::formula() const { return n_->f; }
inline const Proof& Proof::p() const { return n_->p; }
inline const Proof& Proof::q() const { return n_->q; }
inline const Proof& Proof::r() const { return n_->r; }

using ProofSubst = std::map<std::string, Proof>;

Proof open_proof_tvar_at(const Proof& p, int k, const Term& image);
inline Proof open_proof_tvar(const Proof& body, const Term& image) {
  return open_proof_tvar_at(body, 0, image);
}
Proof close_proof_tvar_at(const Proof& p, int k, const std::string& name);
inline Proof close_proof_tvar(const Proof& p, const std::string& name) {
  return close_proof_tvar_at(p, 0, name);
}

Proof open_proof_pvar_at(const Proof& p, int j, const Proof& image);
inline Proof open_proof_pvar(const Proof& body, const Proof& image) {
  return open_proof_pvar_at(body, 0, image);
}
Proof close_proof_pvar_at(const Proof& p, int j, const std::string& name);
inline Proof close_proof_pvar(const Proof& p, const std::string& name) {
  return close_proof_pvar_at(p, 0, name);
}

// Simultaneous substitution of free term variables and free proof variables.
Proof subst_proof(const Proof& p, const TermSubst& theta, const ProofSubst& rho);

NameSet free_proof_tvars(const Proof& p);
void collect_free_proof_tvars(const Proof& p, NameSet& out);
NameSet free_proof_pvars(const Proof& p);
void collect_free_proof_pvars(const Proof& p, NameSet& out);

bool alpha_eq_proof(const Proof& a, const Proof& b);

}  // namespace hawk
