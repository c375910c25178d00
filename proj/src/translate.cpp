#include "translate.hpp"

#include <set>

namespace hawk {

namespace {

const Sort kNat = Sort::nat();

Term V(const std::string& n) { return Term::free_var(n); }
Proof PV(const std::string& n) { return Proof::pvar(n); }

// f a b c where a, b are term arguments and c a proof argument
Proof papp3(const Proof& f, const Term& a, const Term& b, const Proof& c) {
  return Proof::papp(Proof::tapp(Proof::tapp(f, a), b), c);
}

TermSubst ren_subst(const NameSet& frees, RenameTag tag) {
  TermSubst theta;
  for (const auto& v : frees) theta.emplace(v, V(renamed(v, tag)));
  return theta;
}

}  // namespace

Signature dup_sig(const Signature& sig) {
  Signature out;
  for (const auto& [n, s] : sig.decls) out.push(renamed(n, RenameTag::one), s);
  for (const auto& [n, s] : sig.decls) out.push(renamed(n, RenameTag::two), s);
  return out;
}

Term dup_term(const Term& t, RenameTag tag) {
  return subst_term(t, ren_subst(free_term_vars(t), tag));
}

Formula dup_formula(const Formula& f, RenameTag tag) {
  return subst_formula(f, ren_subst(free_formula_vars(f), tag));
}

Context sig_to_pm_context(const Signature& sig) {
  Context out;
  for (const auto& [n, s] : sig.decls)
    out.push(renamed(n, RenameTag::pm),
             eqpm(s, V(renamed(n, RenameTag::one)), V(renamed(n, RenameTag::two))));
  return out;
}

Formula eqpm(const Sort& sort, const Term& a, const Term& b) {
  if (sort.is_nat()) return Formula::eq(kNat, a, b);
  NameSet avoid = free_term_vars(a);
  collect_free_term_vars(b, avoid);
  std::string x = fresh_name("x", avoid);
  avoid.insert(x);
  std::string y = fresh_name("y", avoid);
  Term xv = V(x), yv = V(y);
  return Formula::forall(
      x, sort.dom(),
      Formula::forall(y, sort.dom(),
                      Formula::imp(eqpm(sort.dom(), xv, yv),
                                   eqpm(sort.cod(), Term::app(a, xv), Term::app(b, yv)))));
}

Formula ext_rel(const Sort& sort, const Term& a, const Term& b) {
  if (sort.is_nat()) return Formula::eq(kNat, a, b);
  NameSet avoid = free_term_vars(a);
  collect_free_term_vars(b, avoid);
  std::string x = fresh_name("x", avoid);
  Term xv = V(x);
  return Formula::forall(x, sort.dom(),
                         ext_rel(sort.cod(), Term::app(a, xv), Term::app(b, xv)));
}

// ---------------------------------------------------------------------------
// PER witnesses

namespace {

Proof sympm_app(const Sort& s, const Term& a, const Term& b, const Proof& ab) {
  return papp3(per_witness(PerWitnessKind::sympm, s), a, b, ab);
}

Proof transpm_app(const Sort& s, const Term& a, const Term& b, const Term& c, const Proof& ab,
                  const Proof& bc) {
  Proof w = per_witness(PerWitnessKind::transpm, s);
  return Proof::papp(Proof::papp(Proof::tapp(Proof::tapp(Proof::tapp(w, a), b), c), ab), bc);
}

Proof reflpm_app(const Sort& s, const Term& a, const Term& b, const Proof& ab) {
  return papp3(per_witness(PerWitnessKind::reflpm, s), a, b, ab);
}

}  // namespace

Proof per_witness(PerWitnessKind kind, const Sort& sort) {
  switch (kind) {
    case PerWitnessKind::sympm: {
      if (sort.is_nat()) {
        // \x \y \xi. peel(xi, z.(z = x), refl x)
        Term x = V("x"), y = V("y");
        return Proof::tlam(
            "x", kNat,
            Proof::tlam("y", kNat,
                        Proof::plam("xi", Formula::eq(kNat, x, y),
                                    Proof::peel(kNat, x, y, PV("xi"), "z",
                                                Formula::eq(kNat, V("z"), x),
                                                Proof::refl(kNat, x)))));
      }
      const Sort& d = sort.dom();
      const Sort& c = sort.cod();
      Term f = V("f"), g = V("g"), x = V("x"), y = V("y");
      Proof body = sympm_app(
          c, Term::app(f, y), Term::app(g, x),
          papp3(PV("xi"), y, x, sympm_app(d, x, y, PV("eta"))));
      return Proof::tlam(
          "f", sort,
          Proof::tlam(
              "g", sort,
              Proof::plam("xi", eqpm(sort, f, g),
                          Proof::tlam("x", d,
                                      Proof::tlam("y", d,
                                                  Proof::plam("eta", eqpm(d, x, y), body))))));
    }
    case PerWitnessKind::transpm: {
      if (sort.is_nat()) {
        // \x \y \z \xi \eta. peel(eta, w.(x = w), xi)
        Term x = V("x"), y = V("y"), z = V("z");
        return Proof::tlam(
            "x", kNat,
            Proof::tlam(
                "y", kNat,
                Proof::tlam(
                    "z", kNat,
                    Proof::plam(
                        "xi", Formula::eq(kNat, x, y),
                        Proof::plam("eta", Formula::eq(kNat, y, z),
                                    Proof::peel(kNat, y, z, PV("eta"), "w",
                                                Formula::eq(kNat, x, V("w")), PV("xi")))))));
      }
      // the displayed arrow clause writes trans/sym without the pm marker;
      // the intended witnesses are the pm ones
      const Sort& d = sort.dom();
      const Sort& c = sort.cod();
      Term f = V("f"), g = V("g"), h = V("h"), x = V("x"), y = V("y");
      Proof yy = transpm_app(d, y, x, y, sympm_app(d, x, y, PV("chi")), PV("chi"));
      Proof body = transpm_app(c, Term::app(f, x), Term::app(g, y), Term::app(h, y),
                               papp3(PV("xi"), x, y, PV("chi")), papp3(PV("eta"), y, y, yy));
      return Proof::tlam(
          "f", sort,
          Proof::tlam(
              "g", sort,
              Proof::tlam(
                  "h", sort,
                  Proof::plam(
                      "xi", eqpm(sort, f, g),
                      Proof::plam(
                          "eta", eqpm(sort, g, h),
                          Proof::tlam(
                              "x", d,
                              Proof::tlam("y", d,
                                          Proof::plam("chi", eqpm(d, x, y), body))))))));
    }
    case PerWitnessKind::reflpm: {
      Term x = V("x"), y = V("y");
      Proof xx = transpm_app(sort, x, y, x, PV("xi"), sympm_app(sort, x, y, PV("xi")));
      Proof yy = transpm_app(sort, y, x, y, sympm_app(sort, x, y, PV("xi")), PV("xi"));
      return Proof::tlam(
          "x", sort,
          Proof::tlam("y", sort,
                      Proof::plam("xi", eqpm(sort, x, y), Proof::pair(xx, yy))));
    }
  }
  throw TranslateError("unknown witness kind");
}

Formula per_witness_type(PerWitnessKind kind, const Sort& sort) {
  Term x = V("x"), y = V("y"), z = V("z");
  switch (kind) {
    case PerWitnessKind::sympm:
      return Formula::forall(
          "x", sort,
          Formula::forall("y", sort, Formula::imp(eqpm(sort, x, y), eqpm(sort, y, x))));
    case PerWitnessKind::transpm:
      return Formula::forall(
          "x", sort,
          Formula::forall(
              "y", sort,
              Formula::forall("z", sort,
                              Formula::imp(eqpm(sort, x, y),
                                           Formula::imp(eqpm(sort, y, z), eqpm(sort, x, z))))));
    case PerWitnessKind::reflpm:
      return Formula::forall(
          "x", sort,
          Formula::forall(
              "y", sort,
              Formula::imp(eqpm(sort, x, y),
                           Formula::land(eqpm(sort, x, x), eqpm(sort, y, y)))));
  }
  throw TranslateError("unknown witness kind");
}

// ---------------------------------------------------------------------------
// term translation

namespace {

struct TermTr {
  Signature sig;
  NameSet avoid;

  Proof go(const Term& t) {
    switch (t.kind()) {
      case TermKind::free_var:
        return PV(renamed(t.name(), RenameTag::pm));
      case TermKind::bound_var:
        throw TranslateError("dangling bound variable in term translation");
      case TermKind::zero:
        return Proof::refl(kNat, Term::zero());
      case TermKind::succ: {
        const Term& a = t.succ_arg();
        Proof ap = go(a);
        Term a1 = dup_term(a, RenameTag::one), a2 = dup_term(a, RenameTag::two);
        NameSet av = avoid;
        collect_free_term_vars(a1, av);
        std::string x = fresh_name("x", av);
        return Proof::peel(kNat, a1, a2, ap, x,
                           Formula::eq(kNat, Term::succ(a1), Term::succ(V(x))),
                           Proof::refl(kNat, Term::succ(a1)));
      }
      case TermKind::app: {
        Proof fp = go(t.fn());
        Proof ap = go(t.arg());
        return papp3(fp, dup_term(t.arg(), RenameTag::one), dup_term(t.arg(), RenameTag::two),
                     ap);
      }
      case TermKind::lam: {
        NameSet av = avoid;
        collect_free_term_vars(t.body(), av);
        std::string x = fresh_name(t.name().empty() ? "x" : t.name(), av);
        avoid.insert(x);
        sig.push(x, t.sort());
        Proof bp = go(open_term(t.body(), V(x)));
        sig.decls.pop_back();
        std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two),
                    xpm = renamed(x, RenameTag::pm);
        return Proof::tlam(
            x1, t.sort(),
            Proof::tlam(x2, t.sort(),
                        Proof::plam(xpm, eqpm(t.sort(), V(x1), V(x2)), bp)));
      }
      case TermKind::rec: {
        const Sort& s = t.sort();
        const Term &tb = t.rec_base(), &tu = t.rec_step(), &tv = t.rec_scrut();
        Proof tp = go(tb), up = go(tu), vp = go(tv);
        Term t1 = dup_term(tb, RenameTag::one), t2 = dup_term(tb, RenameTag::two);
        Term u1 = dup_term(tu, RenameTag::one), u2 = dup_term(tu, RenameTag::two);
        Term v1 = dup_term(tv, RenameTag::one), v2 = dup_term(tv, RenameTag::two);
        NameSet av = avoid;
        for (const Term* w : {&t1, &t2, &u1, &u2, &v1, &v2}) collect_free_term_vars(*w, av);
        std::string x = fresh_name("x", av);
        av.insert(x);
        std::string y = fresh_name("y", av);
        av.insert(y);
        std::string z = fresh_name("z", av);
        Term xv = V(x), yv = V(y), zv = V(z);
        auto rec1 = [&](const Term& w) { return Term::rec(s, t1, u1, w); };
        auto rec2 = [&](const Term& w) { return Term::rec(s, t2, u2, w); };
        // motive: forall y. x = y -> Rec t1 u1 x eqpm Rec t2 u2 y
        Formula motive = Formula::forall(
            y, kNat, Formula::imp(Formula::eq(kNat, xv, yv), eqpm(s, rec1(xv), rec2(yv))));
        Proof base = Proof::tlam(
            y, kNat,
            Proof::plam("xi", Formula::eq(kNat, Term::zero(), yv),
                        Proof::peel(kNat, Term::zero(), yv, PV("xi"), z,
                                    eqpm(s, t1, rec2(zv)), tp)));
        Proof eta_x = Proof::papp(Proof::tapp(PV("eta"), xv), Proof::refl(kNat, xv));
        Proof inner = Proof::papp(
            Proof::tapp(Proof::tapp(papp3(up, rec1(xv), rec2(xv), eta_x), xv), xv),
            Proof::refl(kNat, xv));
        Term lhs = Term::app(Term::app(u1, rec1(xv)), xv);
        Proof step = Proof::tlam(
            x, kNat,
            Proof::plam(
                "eta", motive,
                Proof::tlam(
                    y, kNat,
                    Proof::plam("xi", Formula::eq(kNat, Term::succ(xv), yv),
                                Proof::peel(kNat, Term::succ(xv), yv, PV("xi"), z,
                                            eqpm(s, lhs, rec2(zv)), inner)))));
        return Proof::papp(Proof::tapp(Proof::ind(x, motive, base, step, v1), v2), vp);
      }
    }
    throw TranslateError("malformed term");
  }
};

}  // namespace

Proof translate_term(const Signature& sig, const Term& t) {
  infer_sort(sig, t);  // reject ill-typed input up front
  TermTr tr;
  tr.sig = sig;
  tr.avoid = sig.names();
  collect_free_term_vars(t, tr.avoid);
  return tr.go(t);
}

Proof elim_term(int i, const Signature& sig, const std::string& z, const Sort& zsort,
                const Term& t) {
  if (i != 1 && i != 2) throw TranslateError("elim_term index must be 1 or 2");
  Signature sig2 = sig;
  sig2.push(z, zsort);
  {
    NameSet declared = sig2.names();
    for (const auto& v : free_term_vars(t))
      if (!declared.count(v))
        throw TranslateError("elim_term: free variable " + v + " outside signature plus binder");
  }
  Sort tau = infer_sort(sig2, t);
  Proof tpm = translate_term(sig2, t);
  Term t1 = dup_term(t, RenameTag::one), t2 = dup_term(t, RenameTag::two);
  std::string z1 = renamed(z, RenameTag::one), z2 = renamed(z, RenameTag::two),
              zpm = renamed(z, RenameTag::pm);
  Proof reflpair = reflpm_app(zsort, V(z1), V(z2), PV(zpm));
  Proof body;
  if (i == 1) {
    Term t1_z2 = subst_term(t1, {{z1, V(z2)}});
    Proof tpm_sub = subst_proof(tpm, {{z1, V(z2)}}, {{zpm, Proof::proj(2, reflpair)}});
    Proof sym = sympm_app(tau, t1_z2, t2, tpm_sub);
    body = transpm_app(tau, t1, t2, t1_z2, tpm, sym);
  } else {
    Term t2_z1 = subst_term(t2, {{z2, V(z1)}});
    Proof tpm_sub = subst_proof(tpm, {{z2, V(z1)}}, {{zpm, Proof::proj(1, reflpair)}});
    Proof sym = sympm_app(tau, t1, t2_z1, tpm_sub);
    body = transpm_app(tau, t2_z1, t1, t2, sym, tpm);
  }
  return Proof::tlam(
      z1, zsort,
      Proof::tlam(z2, zsort, Proof::plam(zpm, eqpm(zsort, V(z1), V(z2)), body)));
}

Formula elim_term_type(int i, const Signature& sig, const std::string& z, const Sort& zsort,
                       const Term& t) {
  Signature sig2 = sig;
  sig2.push(z, zsort);
  Sort tau = infer_sort(sig2, t);
  Term ti = dup_term(t, i == 1 ? RenameTag::one : RenameTag::two);
  std::string zi = renamed(z, i == 1 ? RenameTag::one : RenameTag::two);
  std::string z1 = renamed(z, RenameTag::one), z2 = renamed(z, RenameTag::two);
  Term at_z1 = subst_term(ti, {{zi, V(z1)}});
  Term at_z2 = subst_term(ti, {{zi, V(z2)}});
  return Formula::forall(
      z1, zsort,
      Formula::forall(z2, zsort,
                      Formula::imp(eqpm(zsort, V(z1), V(z2)), eqpm(tau, at_z1, at_z2))));
}

// ---------------------------------------------------------------------------
// formula translation

namespace {

Formula tf_impl(const Formula& f, NameSet& avoid) {
  switch (f.kind()) {
    case FormulaKind::eq:
      return eqpm(f.eq_sort(), dup_term(f.lhs(), RenameTag::one),
                  dup_term(f.rhs(), RenameTag::two));
    case FormulaKind::bot:
      return Formula::bot();
    case FormulaKind::null:
      return Formula::null_of(dup_term(f.null_arg(), RenameTag::one));
    case FormulaKind::imp:
      return Formula::imp(tf_impl(f.left(), avoid), tf_impl(f.right(), avoid));
    case FormulaKind::land:
      return Formula::land(tf_impl(f.left(), avoid), tf_impl(f.right(), avoid));
    case FormulaKind::forall:
    case FormulaKind::exists: {
      const Sort& s = f.binder_sort();
      std::string x = fresh_name(f.binder().empty() ? "x" : f.binder(), avoid);
      avoid.insert(x);
      Formula body = tf_impl(open_formula(f.body(), V(x)), avoid);
      std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two);
      Formula rel = eqpm(s, V(x1), V(x2));
      if (f.kind() == FormulaKind::forall)
        return Formula::forall(x1, s,
                               Formula::forall(x2, s, Formula::imp(rel, body)));
      return Formula::exists(x1, s, Formula::exists(x2, s, Formula::land(rel, body)));
    }
  }
  throw TranslateError("malformed formula");
}

}  // namespace

Formula translate_formula(const Formula& f) {
  NameSet avoid = free_formula_vars(f);
  return tf_impl(f, avoid);
}

Context translate_context(const Context& ctx) {
  Context out;
  for (const auto& [n, f] : ctx.hyps) {
    NameSet avoid = free_formula_vars(f);
    out.push(n, tf_impl(f, avoid));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elim_{x.Phi}

Proof elim_formula(const Signature& sig, const std::string& x, const Sort& xsort,
                   const Formula& phi) {
  {
    NameSet declared = sig.names();
    declared.insert(x);
    for (const auto& v : free_formula_vars(phi))
      if (!declared.count(v))
        throw TranslateError("elim_formula: free variable " + v +
                             " outside signature plus binder");
  }
  NameSet avoid = sig.names();
  avoid.insert(x);
  collect_free_formula_vars(phi, avoid);
  std::string y = fresh_name("y", avoid);
  avoid.insert(y);
  std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two);
  std::string y1 = renamed(y, RenameTag::one), y2 = renamed(y, RenameTag::two);
  Term x1v = V(x1), x2v = V(x2), y1v = V(y1), y2v = V(y2);

  NameSet av_phi = avoid;
  Formula phipm = tf_impl(phi, av_phi);

  // Elim+ for a subformula: the inductive call instantiated at the seven
  // outer binders
  auto elim_plus = [&](const Signature& s2, const Formula& psi) {
    Proof e = elim_formula(s2, x, xsort, psi);
    return Proof::papp(
        Proof::papp(
            Proof::tapp(Proof::tapp(Proof::tapp(Proof::tapp(e, x1v), x2v), y1v), y2v),
            PV("xi1")),
        PV("xi2"));
  };

  Proof body;
  switch (phi.kind()) {
    case FormulaKind::eq: {
      const Term &tt = phi.lhs(), &uu = phi.rhs();
      Signature sig2 = sig;
      sig2.push(x, xsort);
      Sort es = phi.eq_sort();
      Term t1 = dup_term(tt, RenameTag::one), u2 = dup_term(uu, RenameTag::two);
      Term t1y = subst_term(t1, {{x1, y1v}});
      Term u2y = subst_term(u2, {{x2, y2v}});
      Proof arg1 = papp3(elim_term(1, sig, x, xsort, tt), y1v, x1v,
                         sympm_app(xsort, x1v, y1v, PV("xi1")));
      Proof arg2 = transpm_app(es, t1, u2, u2y, PV("xi"),
                               papp3(elim_term(2, sig, x, xsort, uu), x2v, y2v, PV("xi2")));
      body = transpm_app(es, t1y, t1, u2y, arg1, arg2);
      break;
    }
    case FormulaKind::bot:
      body = PV("xi");
      break;
    case FormulaKind::null: {
      // transport nullt along the N-sorted equality Elim^1 provides
      const Term& tt = phi.null_arg();
      Term t1 = dup_term(tt, RenameTag::one);
      Term t1y = subst_term(t1, {{x1, y1v}});
      Proof eq1 = papp3(elim_term(1, sig, x, xsort, tt), x1v, y1v, PV("xi1"));
      NameSet av = avoid;
      collect_free_term_vars(t1, av);
      std::string z = fresh_name("z", av);
      body = Proof::peel(kNat, t1, t1y, eq1, z, Formula::null_of(V(z)), PV("xi"));
      break;
    }
    case FormulaKind::imp: {
      const Formula &a = phi.left(), &b = phi.right();
      // Elim- : A^pm[x1:=y1][x2:=y2] -> A^pm, via the binder renamed to y
      Formula ay = subst_formula(a, {{x, V(y)}});
      Proof eminus = Proof::papp(
          Proof::papp(Proof::tapp(Proof::tapp(Proof::tapp(Proof::tapp(elim_formula(sig, y, xsort, ay),
                                                                      y1v),
                                                          y2v),
                                              x1v),
                                  x2v),
                      sympm_app(xsort, x1v, y1v, PV("xi1"))),
          sympm_app(xsort, x2v, y2v, PV("xi2")));
      NameSet av_a = avoid;
      Formula apm = tf_impl(a, av_a);
      Formula hyp = subst_formula(apm, {{x1, y1v}, {x2, y2v}});
      body = Proof::plam("eta", hyp,
                         Proof::papp(elim_plus(sig, b),
                                     Proof::papp(PV("xi"), Proof::papp(eminus, PV("eta")))));
      break;
    }
    case FormulaKind::land:
      body = Proof::pair(Proof::papp(elim_plus(sig, phi.left()), Proof::proj(1, PV("xi"))),
                         Proof::papp(elim_plus(sig, phi.right()), Proof::proj(2, PV("xi"))));
      break;
    case FormulaKind::forall: {
      const Sort& zs = phi.binder_sort();
      std::string z = fresh_name(phi.binder().empty() ? "z" : phi.binder(), avoid);
      Formula phi0 = open_formula(phi.body(), V(z));
      Signature sig2 = sig;
      sig2.push(z, zs);
      std::string z1 = renamed(z, RenameTag::one), z2 = renamed(z, RenameTag::two),
                  zpm = renamed(z, RenameTag::pm);
      Proof inner = Proof::papp(
          elim_plus(sig2, phi0),
          papp3(PV("xi"), V(z1), V(z2), PV(zpm)));
      body = Proof::tlam(
          z1, zs,
          Proof::tlam(z2, zs, Proof::plam(zpm, eqpm(zs, V(z1), V(z2)), inner)));
      break;
    }
    case FormulaKind::exists: {
      // the display projects the intermediate existential; the corrected
      // witness projects the unpacked pair and feeds z#pm explicitly
      const Sort& zs = phi.binder_sort();
      std::string z = fresh_name(phi.binder().empty() ? "z" : phi.binder(), avoid);
      Formula phi0 = open_formula(phi.body(), V(z));
      Signature sig2 = sig;
      sig2.push(z, zs);
      std::string z1 = renamed(z, RenameTag::one), z2 = renamed(z, RenameTag::two),
                  zpm = renamed(z, RenameTag::pm);
      Formula target = subst_formula(phipm, {{x1, y1v}, {x2, y2v}});
      Proof ep = subst_proof(elim_plus(sig2, phi0), {}, {{zpm, Proof::proj(1, PV("chi"))}});
      Proof inner_pair =
          Proof::pair(Proof::proj(1, PV("chi")), Proof::papp(ep, Proof::proj(2, PV("chi"))));
      Proof wit2 = Proof::ex_intro(V(z2), inner_pair, open_formula(target.body(), V(z1)));
      Proof wit1 = Proof::ex_intro(V(z1), wit2, target);
      body = Proof::ex_elim(PV("xi"), z1, "eta",
                            Proof::ex_elim(PV("eta"), z2, "chi", wit1));
      break;
    }
  }

  return Proof::tlam(
      x1, xsort,
      Proof::tlam(
          x2, xsort,
          Proof::tlam(
              y1, xsort,
              Proof::tlam(
                  y2, xsort,
                  Proof::plam(
                      "xi1", eqpm(xsort, x1v, y1v),
                      Proof::plam("xi2", eqpm(xsort, x2v, y2v),
                                  Proof::plam("xi", phipm, body)))))));
}

Formula elim_formula_type(const Signature& sig, const std::string& x, const Sort& xsort,
                          const Formula& phi) {
  NameSet avoid = sig.names();
  avoid.insert(x);
  collect_free_formula_vars(phi, avoid);
  std::string y = fresh_name("y", avoid);
  std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two);
  std::string y1 = renamed(y, RenameTag::one), y2 = renamed(y, RenameTag::two);
  NameSet av_phi = avoid;
  av_phi.insert(y);
  Formula phipm = tf_impl(phi, av_phi);
  Formula conc = subst_formula(phipm, {{x1, V(y1)}, {x2, V(y2)}});
  return Formula::forall(
      x1, xsort,
      Formula::forall(
          x2, xsort,
          Formula::forall(
              y1, xsort,
              Formula::forall(
                  y2, xsort,
                  Formula::imp(eqpm(xsort, V(x1), V(y1)),
                               Formula::imp(eqpm(xsort, V(x2), V(y2)),
                                            Formula::imp(phipm, conc)))))));
}

// ---------------------------------------------------------------------------
// Collaps / Equiv

namespace {

Proof collaps_app(int i, const Sort& s, const Term& a, const Term& b, const Proof& arg) {
  return Proof::papp(Proof::proj(i, Proof::tapp(Proof::tapp(collaps(s), a), b)), arg);
}

}  // namespace

Proof collaps(const Sort& sort) {
  if (sort.is_nat()) {
    Term x = V("x"), y = V("y");
    Formula e = Formula::eq(kNat, x, y);
    return Proof::tlam(
        "x", kNat,
        Proof::tlam("y", kNat, Proof::pair(Proof::plam("xi", e, PV("xi")),
                                           Proof::plam("xi", e, PV("xi")))));
  }
  const Sort& d = sort.dom();
  const Sort& c = sort.cod();
  Term f = V("f"), g = V("g"), x = V("x"), y = V("y"), z = V("z");
  Proof fwd = Proof::plam(
      "xi", Formula::eq(sort, f, g),
      Proof::tlam(
          "x", d,
          Proof::tlam(
              "y", d,
              Proof::plam(
                  "eta", eqpm(d, x, y),
                  collaps_app(1, c, Term::app(f, x), Term::app(g, y),
                              Proof::app_pm(d, c, PV("xi"), x, y,
                                            collaps_app(2, d, x, y, PV("eta"))))))));
  Proof bwd = Proof::plam(
      "xi", eqpm(sort, f, g),
      Proof::ext_intro(
          d, c,
          Proof::tlam("z", d,
                      collaps_app(2, c, Term::app(f, z), Term::app(g, z),
                                  papp3(PV("xi"), z, z,
                                        collaps_app(1, d, z, z, Proof::refl(d, z)))))));
  return Proof::tlam("f", sort, Proof::tlam("g", sort, Proof::pair(fwd, bwd)));
}

Formula collaps_type(const Sort& sort) {
  Term x = V("x"), y = V("y");
  Formula prim = Formula::eq(sort, x, y);
  Formula param = eqpm(sort, x, y);
  return Formula::forall(
      "x", sort,
      Formula::forall("y", sort,
                      Formula::land(Formula::imp(prim, param), Formula::imp(param, prim))));
}

namespace {

struct EquivBuilder {
  Signature sig;
  NameSet avoid;

  Formula pm(const Formula& f) {
    NameSet av = avoid;
    return tf_impl(f, av);
  }

  Proof go(int i, const Formula& phi) {
    switch (phi.kind()) {
      case FormulaKind::eq: {
        const Sort& s = phi.eq_sort();
        Term t1 = dup_term(phi.lhs(), RenameTag::one);
        Term u1 = dup_term(phi.rhs(), RenameTag::one);
        Term u2 = dup_term(phi.rhs(), RenameTag::two);
        Proof upm = translate_term(sig, phi.rhs());
        if (i == 1) {
          Proof body =
              transpm_app(s, t1, u1, u2, collaps_app(1, s, t1, u1, PV("xi")), upm);
          return Proof::plam("xi", dup_formula(phi, RenameTag::one), body);
        }
        Proof body = collaps_app(
            2, s, t1, u1, transpm_app(s, t1, u2, u1, PV("xi"), sympm_app(s, u1, u2, upm)));
        return Proof::plam("xi", pm(phi), body);
      }
      case FormulaKind::bot:
      case FormulaKind::null: {
        // both directions are the identity: Phi^1 and Phi^pm coincide here
        Formula hyp = i == 1 ? dup_formula(phi, RenameTag::one) : pm(phi);
        return Proof::plam("xi", hyp, PV("xi"));
      }
      case FormulaKind::imp: {
        const Formula &a = phi.left(), &b = phi.right();
        Formula hyp = i == 1 ? dup_formula(phi, RenameTag::one) : pm(phi);
        Formula arg = i == 1 ? pm(a) : dup_formula(a, RenameTag::one);
        Proof body = Proof::papp(
            go(i, b), Proof::papp(PV("xi"), Proof::papp(go(3 - i, a), PV("eta"))));
        return Proof::plam("xi", hyp, Proof::plam("eta", arg, body));
      }
      case FormulaKind::land: {
        Formula hyp = i == 1 ? dup_formula(phi, RenameTag::one) : pm(phi);
        return Proof::plam(
            "xi", hyp,
            Proof::pair(Proof::papp(go(i, phi.left()), Proof::proj(1, PV("xi"))),
                        Proof::papp(go(i, phi.right()), Proof::proj(2, PV("xi")))));
      }
      case FormulaKind::forall: {
        const Sort& zs = phi.binder_sort();
        std::string z = fresh_name(phi.binder().empty() ? "z" : phi.binder(), avoid);
        avoid.insert(z);
        Formula phi0 = open_formula(phi.body(), V(z));
        std::string z1 = renamed(z, RenameTag::one), z2 = renamed(z, RenameTag::two),
                    zpm = renamed(z, RenameTag::pm);
        sig.push(z, zs);
        Proof sub = go(i, phi0);
        sig.decls.pop_back();
        if (i == 1) {
          Proof body = Proof::papp(sub, Proof::tapp(PV("xi"), V(z1)));
          return Proof::plam(
              "xi", dup_formula(phi, RenameTag::one),
              Proof::tlam(z1, zs,
                          Proof::tlam(z2, zs,
                                      Proof::plam(zpm, eqpm(zs, V(z1), V(z2)), body))));
        }
        // diagonal instantiation at z1, with eqpm(z1, z1) provided by Collaps
        Proof c = collaps_app(1, zs, V(z1), V(z1), Proof::refl(zs, V(z1)));
        Proof sub2 = subst_proof(sub, {{z2, V(z1)}}, {{zpm, c}});
        Proof arg = papp3(PV("xi"), V(z1), V(z1), c);
        return Proof::plam("xi", pm(phi), Proof::tlam(z1, zs, Proof::papp(sub2, arg)));
      }
      case FormulaKind::exists: {
        const Sort& zs = phi.binder_sort();
        std::string z = fresh_name(phi.binder().empty() ? "z" : phi.binder(), avoid);
        avoid.insert(z);
        Formula phi0 = open_formula(phi.body(), V(z));
        std::string z1 = renamed(z, RenameTag::one), z2 = renamed(z, RenameTag::two),
                    zpm = renamed(z, RenameTag::pm);
        sig.push(z, zs);
        Proof sub = go(i, phi0);
        sig.decls.pop_back();
        if (i == 1) {
          Proof c = collaps_app(1, zs, V(z1), V(z1), Proof::refl(zs, V(z1)));
          Proof sub2 = subst_proof(sub, {{z2, V(z1)}}, {{zpm, c}});
          Formula target = pm(phi);
          Proof inner = Proof::ex_intro(
              V(z1), Proof::pair(c, Proof::papp(sub2, PV("eta"))),
              open_formula(target.body(), V(z1)));
          Proof outer = Proof::ex_intro(V(z1), inner, target);
          return Proof::plam("xi", dup_formula(phi, RenameTag::one),
                             Proof::ex_elim(PV("xi"), z1, "eta", outer));
        }
        Proof sub2 = subst_proof(sub, {}, {{zpm, Proof::proj(1, PV("chi"))}});
        Proof inner = Proof::ex_intro(V(z1), Proof::papp(sub2, Proof::proj(2, PV("chi"))),
                                      dup_formula(phi, RenameTag::one));
        return Proof::plam(
            "xi", pm(phi),
            Proof::ex_elim(PV("xi"), z1, "eta",
                           Proof::ex_elim(PV("eta"), z2, "chi", inner)));
      }
    }
    throw TranslateError("malformed formula");
  }
};

}  // namespace

Proof equiv(int i, const Signature& sig, const Formula& phi) {
  if (i != 1 && i != 2) throw TranslateError("equiv index must be 1 or 2");
  {
    NameSet declared = sig.names();
    for (const auto& v : free_formula_vars(phi))
      if (!declared.count(v))
        throw TranslateError("equiv: free variable " + v + " outside signature");
  }
  EquivBuilder b;
  b.sig = sig;
  b.avoid = sig.names();
  collect_free_formula_vars(phi, b.avoid);
  return b.go(i, phi);
}

Formula equiv_type(int i, const Signature& sig, const Formula& phi) {
  (void)sig;
  Formula one = dup_formula(phi, RenameTag::one);
  Formula pmf = translate_formula(phi);
  return i == 1 ? Formula::imp(one, pmf) : Formula::imp(pmf, one);
}

// ---------------------------------------------------------------------------
// proof translation

namespace {

struct ProofTr {
  Logic logic;
  Signature sig;
  Context ctx;
  NameSet avoid;
  NameSet pavoid;
  std::set<std::string>* notes;

  void note(const std::string& s) {
    if (notes) notes->insert(s);
  }

  Formula pm(const Formula& f) {
    NameSet av = avoid;
    return tf_impl(f, av);
  }

  std::string fresh_tvar(const std::string& hint) {
    std::string x = fresh_name(hint.empty() ? "x" : hint, avoid);
    avoid.insert(x);
    return x;
  }
  std::string fresh_pvar(const std::string& hint) {
    std::string xi = fresh_name(hint.empty() ? "xi" : hint, pavoid);
    pavoid.insert(xi);
    return xi;
  }

  Proof go(const Proof& m) {
    switch (m.kind()) {
      case ProofKind::pvar_free:
        return m;
      case ProofKind::pvar_bound:
        throw TranslateError("dangling bound proof variable");
      case ProofKind::refl:
        return translate_term(sig, m.t());
      case ProofKind::plam: {
        std::string xi = fresh_pvar(m.name());
        ctx.push(xi, m.formula());
        Proof body = go(open_proof_pvar(m.p(), PV(xi)));
        ctx.hyps.pop_back();
        return Proof::plam(xi, pm(m.formula()), body);
      }
      case ProofKind::papp:
        return Proof::papp(go(m.p()), go(m.q()));
      case ProofKind::pair:
        return Proof::pair(go(m.p()), go(m.q()));
      case ProofKind::proj:
        return Proof::proj(m.index(), go(m.p()));
      case ProofKind::tlam: {
        std::string x = fresh_tvar(m.name());
        sig.push(x, m.sort());
        Proof body = go(open_proof_tvar(m.p(), V(x)));
        sig.decls.pop_back();
        std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two),
                    xpm = renamed(x, RenameTag::pm);
        return Proof::tlam(
            x1, m.sort(),
            Proof::tlam(x2, m.sort(),
                        Proof::plam(xpm, eqpm(m.sort(), V(x1), V(x2)), body)));
      }
      case ProofKind::tapp:
        return papp3(go(m.p()), dup_term(m.t(), RenameTag::one),
                     dup_term(m.t(), RenameTag::two), translate_term(sig, m.t()));
      case ProofKind::ex_intro: {
        note("existential witness duplicated into a nested pair");
        Formula target = pm(m.formula());
        Term w1 = dup_term(m.t(), RenameTag::one), w2 = dup_term(m.t(), RenameTag::two);
        Proof inner = Proof::ex_intro(
            w2, Proof::pair(translate_term(sig, m.t()), go(m.p())),
            open_formula(target.body(), w1));
        return Proof::ex_intro(w1, inner, target);
      }
      case ProofKind::ex_elim: {
        note("existential unpacking nested, the relatedness hypothesis fed by chi.1");
        Formula exf = whnf_formula(infer_proof(logic, sig, ctx, m.p()));
        if (exf.kind() != FormulaKind::exists)
          throw TranslateError("existential elimination over a non-existential");
        Proof mp = go(m.p());
        std::string x = fresh_tvar(m.name());
        std::string xi = fresh_pvar(m.name2());
        sig.push(x, exf.binder_sort());
        ctx.push(xi, open_formula(exf.body(), V(x)));
        Proof body =
            go(open_proof_pvar(open_proof_tvar(m.q(), V(x)), PV(xi)));
        ctx.hyps.pop_back();
        sig.decls.pop_back();
        std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two),
                    xpm = renamed(x, RenameTag::pm);
        std::string eta = fresh_pvar("eta");
        std::string chi = fresh_pvar("chi");
        Proof body2 = subst_proof(
            body, {}, {{xpm, Proof::proj(1, PV(chi))}, {xi, Proof::proj(2, PV(chi))}});
        return Proof::ex_elim(mp, x1, eta, Proof::ex_elim(PV(eta), x2, chi, body2));
      }
      case ProofKind::efq:
        return Proof::efq(go(m.p()), pm(m.formula()));
      case ProofKind::peel:
        return go_peel(m);
      case ProofKind::ind:
        return go_ind(m);
      case ProofKind::ext_intro: {
        note("ext erased into the three-abstraction eta-expansion");
        std::string b = fresh_tvar("x");
        std::string b1 = renamed(b, RenameTag::one), b2 = renamed(b, RenameTag::two),
                    bpm = renamed(b, RenameTag::pm);
        Proof mp = go(m.p());
        return Proof::tlam(
            b1, m.sort(),
            Proof::tlam(b2, m.sort(),
                        Proof::plam(bpm, eqpm(m.sort(), V(b1), V(b2)),
                                    papp3(mp, V(b1), V(b2), PV(bpm)))));
      }
      case ProofKind::app_pm:
        note("apppm erased into the three applications");
        return papp3(go(m.p()), dup_term(m.t(), RenameTag::one),
                     dup_term(m.u(), RenameTag::two), go(m.q()));
    }
    throw TranslateError("malformed proof term");
  }

  Proof go_peel(const Proof& m) {
    const Sort& s = m.sort();
    Term t1 = dup_term(m.t(), RenameTag::one), t2 = dup_term(m.t(), RenameTag::two);
    Term u1 = dup_term(m.u(), RenameTag::one), u2 = dup_term(m.u(), RenameTag::two);
    Proof ep = go(m.p());
    Proof tpm = translate_term(sig, m.t());
    Proof upm = translate_term(sig, m.u());
    Proof basep = go(m.q());
    // proof of t1 eqpm u1 and of t2 eqpm u2 from the translated equality
    Proof h1 = transpm_app(s, t1, u2, u1, ep, sympm_app(s, u1, u2, upm));
    Proof h2 = transpm_app(s, t2, t1, u2, sympm_app(s, t1, t2, tpm), ep);
    NameSet av = avoid;
    collect_free_formula_vars(m.formula(), av);
    std::string x = fresh_name(m.name().empty() ? "x" : m.name(), av);
    Formula phix = open_formula(m.formula(), V(x));
    std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two);
    if (logic == Logic::lhaw) {
      note("peel translated as two nested peels over transported endpoint equalities");
      NameSet av2 = avoid;
      av2.insert(x);
      Formula phipm = tf_impl(phix, av2);
      Proof inner =
          Proof::peel(kNat, t1, u1, h1, x1, subst_formula(phipm, {{x2, t2}}), basep);
      return Proof::peel(kNat, t2, u2, h2, x2, subst_formula(phipm, {{x1, u1}}), inner);
    }
    note("peel at higher sort translated through Elim on the motive");
    Proof elim = elim_formula(sig, x, s, phix);
    Proof applied = Proof::tapp(
        Proof::tapp(Proof::tapp(Proof::tapp(elim, t1), t2), u1), u2);
    return Proof::papp(Proof::papp(Proof::papp(applied, h1), h2), basep);
  }

  Proof go_ind(const Proof& m) {
    NameSet av = avoid;
    collect_free_formula_vars(m.formula(), av);
    std::string x = fresh_name(m.name().empty() ? "x" : m.name(), av);
    av.insert(x);
    std::string y = fresh_name("y", av);
    av.insert(y);
    std::string z = fresh_name("z", av);
    Term xv = V(x), yv = V(y), zv = V(z);
    Formula phix = open_formula(m.formula(), xv);
    NameSet av2 = avoid;
    av2.insert(x);
    Formula phipm = tf_impl(phix, av2);
    std::string x1 = renamed(x, RenameTag::one), x2 = renamed(x, RenameTag::two);
    Proof basep = go(m.p());
    Proof stepp = go(m.r());
    std::string xi = fresh_pvar("xi");
    std::string eta = fresh_pvar("eta");
    // motive: forall y. x = y -> Phi^pm[x1 := x][x2 := y]
    Formula motive = Formula::forall(
        y, kNat,
        Formula::imp(Formula::eq(kNat, xv, yv), subst_formula(phipm, {{x1, xv}, {x2, yv}})));
    Proof base = Proof::tlam(
        y, kNat,
        Proof::plam(xi, Formula::eq(kNat, Term::zero(), yv),
                    Proof::peel(kNat, Term::zero(), yv, PV(xi), z,
                                subst_formula(phipm, {{x1, Term::zero()}, {x2, zv}}), basep)));
    Proof use_step = Proof::papp(
        Proof::papp(Proof::tapp(Proof::tapp(stepp, xv), xv), Proof::refl(kNat, xv)),
        Proof::papp(Proof::tapp(PV(eta), xv), Proof::refl(kNat, xv)));
    Proof step = Proof::tlam(
        x, kNat,
        Proof::plam(
            eta, motive,
            Proof::tlam(
                y, kNat,
                Proof::plam(
                    xi, Formula::eq(kNat, Term::succ(xv), yv),
                    Proof::peel(kNat, Term::succ(xv), yv, PV(xi), z,
                                subst_formula(phipm, {{x1, Term::succ(xv)}, {x2, zv}}),
                                use_step)))));
    note("ind translated with the generalized motive forall y. x = y -> Phi^pm");
    return Proof::papp(
        Proof::tapp(Proof::ind(x, motive, base, step, dup_term(m.t(), RenameTag::one)),
                    dup_term(m.t(), RenameTag::two)),
        translate_term(sig, m.t()));
  }
};

}  // namespace

TranslationUnit translate_proof(const Judgment& source) {
  CheckReport src = check_proof(source);
  if (!src.accepted)
    throw TranslateError("source judgment rejected: " + src.message());

  TranslationUnit unit;
  unit.source = source;

  std::set<std::string> notes;
  ProofTr tr;
  tr.logic = source.logic;
  tr.sig = source.sig;
  tr.ctx = source.ctx;
  tr.notes = &notes;
  tr.avoid = source.sig.names();
  for (const auto& [_, f] : source.ctx.hyps) collect_free_formula_vars(f, tr.avoid);
  collect_free_formula_vars(source.goal, tr.avoid);
  collect_free_proof_tvars(source.proof, tr.avoid);
  for (const auto& [n, _] : source.ctx.hyps) tr.pavoid.insert(n);
  collect_free_proof_pvars(source.proof, tr.pavoid);

  Judgment out;
  out.logic = Logic::lhaw;
  out.sig = dup_sig(source.sig);
  out.ctx = sig_to_pm_context(source.sig);
  for (const auto& [n, f] : translate_context(source.ctx).hyps) out.ctx.push(n, f);
  out.goal = translate_formula(source.goal);
  out.proof = tr.go(source.proof);
  unit.produced = out;
  unit.notes.assign(notes.begin(), notes.end());
  return unit;
}

}  // namespace hawk
