#include <doctest.h>

#include "formula.hpp"
#include "gens.hpp"
#include "named_oracle.hpp"
#include "proof.hpp"

using namespace hawk;

namespace {
Term V(const std::string& n) { return Term::free_var(n); }
const Sort N = Sort::nat();
}  // namespace

TEST_CASE("alpha equivalence ignores bound names") {
  Term a = Term::lam("x", N, V("x"));
  Term b = Term::lam("y", N, V("y"));
  Term c = Term::lam("x", N, Term::zero());
  CHECK(alpha_eq_term(a, b));
  CHECK_FALSE(alpha_eq_term(a, c));

  Formula fa = Formula::forall("x", N, Formula::eq(N, V("x"), V("x")));
  Formula fb = Formula::forall("y", N, Formula::eq(N, V("y"), V("y")));
  CHECK(alpha_eq_formula(fa, fb));

  Proof pa = Proof::tlam("x", N, Proof::refl(N, V("x")));
  Proof pb = Proof::tlam("y", N, Proof::refl(N, V("y")));
  CHECK(alpha_eq_proof(pa, pb));
}

TEST_CASE("substitution on terms") {
  CHECK(alpha_eq_term(subst_term(V("x"), {{"x", Term::zero()}}), Term::zero()));

  Term id = Term::lam("x", N, V("x"));
  CHECK(alpha_eq_term(subst_term(id, {{"x", Term::zero()}}), id));

  // (\y. x)[x := y] must not capture: the result binds nothing in its body
  Term t = Term::lam("y", N, V("x"));
  Term got = subst_term(t, {{"x", V("y")}});
  Term want = Term::lam("w", N, V("y"));
  CHECK(alpha_eq_term(got, want));
  CHECK(alpha_eq_term(got, oracle::subst_via_named(t, {{"x", V("y")}})));
}

TEST_CASE("substitution on formulas and proofs") {
  Formula f = Formula::eq(N, V("x"), Term::zero());
  Formula got = subst_formula(f, {{"x", Term::succ(V("y"))}});
  CHECK(alpha_eq_formula(got, Formula::eq(N, Term::succ(V("y")), Term::zero())));

  Formula all = Formula::forall("x", N, Formula::eq(N, V("x"), V("y")));
  Formula got2 = subst_formula(all, {{"y", V("x")}});
  Formula want2 = Formula::forall("a", N, Formula::eq(N, V("a"), V("x")));
  CHECK(alpha_eq_formula(got2, want2));

  Proof p = Proof::refl(N, V("x"));
  CHECK(alpha_eq_proof(subst_proof(p, {{"x", Term::zero()}}, {}),
                       Proof::refl(N, Term::zero())));
}

TEST_CASE("free variables") {
  CHECK(free_term_vars(Term::lam("x", N, V("x"))).empty());
  NameSet fv = free_formula_vars(Formula::forall("x", N, Formula::eq(N, V("x"), V("y"))));
  CHECK(fv == NameSet{"y"});

  // the motive binder scopes over the motive only
  Proof peel = Proof::peel(N, V("t"), V("u"), Proof::pvar("xi"), "x",
                           Formula::eq(N, V("x"), V("z")), Proof::pvar("n0"));
  NameSet pfv = free_proof_tvars(peel);
  CHECK(pfv.count("z") == 1);
  CHECK(pfv.count("x") == 0);
}

TEST_CASE("derived connectives expand canonically") {
  CHECK(alpha_eq_formula(top_formula(), Formula::imp(Formula::bot(), Formula::bot())));
  CHECK(alpha_eq_formula(neq_formula(V("x"), V("y")),
                         Formula::imp(Formula::eq(N, V("x"), V("y")), Formula::bot())));
  Formula phi = Formula::eq(N, V("a"), Term::zero());
  Formula psi = Formula::bot();
  Formula disj = or_formula(phi, psi);
  Term z = V("zz");
  Formula want = Formula::exists(
      "zz", N,
      Formula::land(Formula::imp(Formula::eq(N, z, Term::zero()), phi),
                    Formula::imp(Formula::imp(Formula::eq(N, z, Term::zero()), Formula::bot()),
                                 psi)));
  CHECK(alpha_eq_formula(disj, want));
  // the chosen witness variable is fresh for both disjuncts
  Formula tricky = or_formula(Formula::eq(N, V("z"), Term::zero()), psi);
  CHECK(free_formula_vars(tricky).count("z") == 1);
}

TEST_CASE("alpha_eq is an equivalence on generated terms") {
  gen::Rng rng(20240801);
  for (int i = 0; i < 200; ++i) {
    Term a = gen::arbitrary_term(rng, 4);
    Term b = gen::arbitrary_term(rng, 4);
    Term c = gen::arbitrary_term(rng, 4);
    CHECK(alpha_eq_term(a, a));
    CHECK(alpha_eq_term(a, b) == alpha_eq_term(b, a));
    if (alpha_eq_term(a, b) && alpha_eq_term(b, c)) CHECK(alpha_eq_term(a, c));
  }
}

TEST_CASE("substitution respects alpha and satisfies the standard laws") {
  gen::Rng rng(20240802);
  for (int i = 0; i < 300; ++i) {
    Term t = gen::arbitrary_term(rng, 4);
    Term u = gen::arbitrary_term(rng, 2);
    Term v = numeral(static_cast<unsigned>(rng.upto(4)));  // closed, so x not free in v
    TermSubst theta{{"x", u}};

    // oracle agreement
    CHECK(alpha_eq_term(subst_term(t, theta), oracle::subst_via_named(t, theta)));

    // composition: t[x:=u][y:=v] == t[y:=v][x:=u[y:=v]] when x not in FV(v)
    Term lhs = subst_term(subst_term(t, {{"x", u}}), {{"y", v}});
    Term rhs = subst_term(subst_term(t, {{"y", v}}), {{"x", subst_term(u, {{"y", v}})}});
    CHECK(alpha_eq_term(lhs, rhs));

    // FV(t[x:=u]) within (FV(t) - {x}) + FV(u)
    NameSet ft = free_term_vars(t);
    ft.erase("x");
    for (const auto& n : free_term_vars(u)) ft.insert(n);
    for (const auto& n : free_term_vars(subst_term(t, theta))) CHECK(ft.count(n) == 1);
  }
}

TEST_CASE("open and close are mutually inverse") {
  gen::Rng rng(20240803);
  for (int i = 0; i < 200; ++i) {
    Term body = gen::arbitrary_term(rng, 3);
    NameSet avoid = free_term_vars(body);
    std::string x = fresh_name("x", avoid);
    Term lam = Term::lam(x, N, body);  // close on a fresh name is identity-ish
    Term reopened = open_term(lam.body(), V(x));
    // reopening with the same fresh name reproduces the named body exactly
    // whenever x did not occur (it did not: x was fresh)
    CHECK(alpha_eq_term(reopened, body));
  }
}

TEST_CASE("numerals") {
  unsigned v = 0;
  CHECK(is_numeral(numeral(7), &v));
  CHECK(v == 7);
  CHECK_FALSE(is_numeral(Term::succ(V("x"))));
}
