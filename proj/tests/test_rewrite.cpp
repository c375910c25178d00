#include <doctest.h>

#include "gens.hpp"
#include "rewrite.hpp"

using namespace hawk;

namespace {

Term V(const std::string& n) { return Term::free_var(n); }
const Sort N = Sort::nat();

Term mk_add() {
  return Term::lam(
      "x", N,
      Term::lam("y", N,
                Term::rec(N, V("x"), Term::lam("a", N, Term::lam("b", N, Term::succ(V("a")))),
                          V("y"))));
}

// Independent evaluator for closed terms, used as the normalization oracle.
// Values are either numbers or closures.
struct Value;
using ValuePtr = std::shared_ptr<Value>;
struct Value {
  bool is_num = false;
  unsigned num = 0;
  // closure
  Term body;
  std::map<std::string, ValuePtr> env;
  std::string param;
};

ValuePtr eval(const Term& t, std::map<std::string, ValuePtr> env);

ValuePtr apply_value(const ValuePtr& f, const ValuePtr& a) {
  auto env = f->env;
  env[f->param] = a;
  return eval(open_term(f->body, Term::free_var(f->param)), env);
}

ValuePtr eval(const Term& t, std::map<std::string, ValuePtr> env) {
  switch (t.kind()) {
    case TermKind::free_var:
      return env.at(t.name());
    case TermKind::zero: {
      auto v = std::make_shared<Value>();
      v->is_num = true;
      return v;
    }
    case TermKind::succ: {
      auto v = eval(t.succ_arg(), env);
      auto out = std::make_shared<Value>();
      out->is_num = true;
      out->num = v->num + 1;
      return out;
    }
    case TermKind::lam: {
      auto v = std::make_shared<Value>();
      NameSet avoid = free_term_vars(t.body());
      for (const auto& [k, _] : env) avoid.insert(k);
      v->param = fresh_name(t.name().empty() ? "x" : t.name(), avoid);
      v->body = close_term(open_term(t.body(), Term::free_var(v->param)), v->param);
      v->env = env;
      return v;
    }
    case TermKind::app:
      return apply_value(eval(t.fn(), env), eval(t.arg(), env));
    case TermKind::rec: {
      auto scrut = eval(t.rec_scrut(), env);
      ValuePtr acc = eval(t.rec_base(), env);
      ValuePtr step = eval(t.rec_step(), env);
      for (unsigned i = 0; i < scrut->num; ++i) {
        auto iv = std::make_shared<Value>();
        iv->is_num = true;
        iv->num = i;
        acc = apply_value(apply_value(step, acc), iv);
      }
      return acc;
    }
    default:
      throw std::runtime_error("eval: unexpected term");
  }
}

unsigned eval_closed_nat(const Term& t) { return eval(t, {})->num; }

// All one-step reducts, for the confluence spot check.
std::vector<Term> term_reducts(const Term& t) {
  std::vector<Term> out;
  if (t.kind() == TermKind::app && t.fn().kind() == TermKind::lam)
    out.push_back(open_term(t.fn().body(), t.arg()));
  if (t.kind() == TermKind::rec && t.rec_scrut().kind() == TermKind::zero)
    out.push_back(t.rec_base());
  if (t.kind() == TermKind::rec && t.rec_scrut().kind() == TermKind::succ) {
    const Term& v = t.rec_scrut().succ_arg();
    out.push_back(Term::app(
        Term::app(t.rec_step(), Term::rec(t.sort(), t.rec_base(), t.rec_step(), v)), v));
  }
  auto child = [&](const Term& c, auto rebuild) {
    for (const Term& r : term_reducts(c)) out.push_back(rebuild(r));
  };
  switch (t.kind()) {
    case TermKind::succ:
      child(t.succ_arg(), [&](const Term& r) { return Term::succ(r); });
      break;
    case TermKind::app:
      child(t.fn(), [&](const Term& r) { return Term::app(r, t.arg()); });
      child(t.arg(), [&](const Term& r) { return Term::app(t.fn(), r); });
      break;
    case TermKind::lam: {
      NameSet avoid = free_term_vars(t.body());
      std::string x = fresh_name("x", avoid);
      Term opened = open_term(t.body(), Term::free_var(x));
      for (const Term& r : term_reducts(opened)) out.push_back(Term::lam(x, t.sort(), r));
      break;
    }
    case TermKind::rec:
      child(t.rec_base(), [&](const Term& r) { return Term::rec(t.sort(), r, t.rec_step(), t.rec_scrut()); });
      child(t.rec_step(), [&](const Term& r) { return Term::rec(t.sort(), t.rec_base(), r, t.rec_scrut()); });
      child(t.rec_scrut(), [&](const Term& r) { return Term::rec(t.sort(), t.rec_base(), t.rec_step(), r); });
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

TEST_CASE("single steps contract the leftmost-outermost redex") {
  Term id0 = Term::app(Term::lam("x", N, V("x")), Term::zero());
  std::string rule;
  auto r = step_term(id0, nullptr, &rule);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_term(*r, Term::zero()));
  CHECK(rule == "beta");

  Term rz = Term::rec(N, Term::zero(), V("u"), Term::zero());
  r = step_term(rz, nullptr, &rule);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_term(*r, Term::zero()));
  CHECK(rule == "rec-zero");

  Term rs = Term::rec(N, V("t"), V("u"), Term::succ(V("v")));
  r = step_term(rs, nullptr, &rule);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_term(*r, Term::app(Term::app(V("u"), Term::rec(N, V("t"), V("u"), V("v"))),
                                    V("v"))));
  CHECK(rule == "rec-succ");

  CHECK_FALSE(step_term(Term::zero()).has_value());
}

TEST_CASE("normalization agrees with the independent evaluator") {
  Term add = mk_add();
  Term sum = Term::app(Term::app(add, numeral(2)), numeral(3));
  CHECK(eval_closed_nat(sum) == 5);  // oracle
  CHECK(alpha_eq_term(normalize_term(sum), numeral(5)));

  CHECK(alpha_eq_term(normalize_term(Term::zero()), Term::zero()));

  Term inner = Term::lam("x", N, Term::app(Term::lam("y", N, V("y")), V("x")));
  CHECK(alpha_eq_term(normalize_term(inner), Term::lam("x", N, V("x"))));
}

TEST_CASE("normalize is idempotent and a fixpoint of step") {
  gen::Rng rng(20240811);
  for (int i = 0; i < 150; ++i) {
    Term t = gen::random_closed_term(rng, gen::random_sort(rng, 2), 3);
    Term nf = normalize_term(t);
    CHECK_FALSE(step_term(nf).has_value());
    CHECK(alpha_eq_term(normalize_term(nf), nf));
  }
}

TEST_CASE("closed normal forms have the expected shapes") {
  gen::Rng rng(20240812);
  for (int i = 0; i < 150; ++i) {
    Sort s = gen::random_sort(rng, 2);
    Term nf = normalize_term(gen::random_closed_term(rng, s, 3));
    if (s.is_nat()) {
      CHECK(is_numeral(nf));
    } else {
      CHECK(nf.kind() == TermKind::lam);
    }
  }
}

TEST_CASE("random strategies reach the same normal form") {
  gen::Rng rng(20240813);
  for (int i = 0; i < 80; ++i) {
    Term t = gen::random_closed_term(rng, gen::random_sort(rng, 2), 3);
    Term nf = normalize_term(t);
    Term cur = t;
    for (int steps = 0; steps < 4000; ++steps) {
      std::vector<Term> rs = term_reducts(cur);
      if (rs.empty()) break;
      cur = rs[static_cast<size_t>(rng.upto(static_cast<int>(rs.size())))];
    }
    CHECK(alpha_eq_term(normalize_term(cur), nf));
  }
}

TEST_CASE("congruence is stable under substitution") {
  gen::Rng rng(20240814);
  for (int i = 0; i < 150; ++i) {
    Signature sig;
    sig.push("v0", N);
    sig.push("v1", Sort::arrow(N, N));
    int ctr = 0;
    Term t = gen::random_typed_term(rng, sig, N, 3, &ctr);
    Term u = normalize_term(t);
    REQUIRE(term_congruent(t, u));
    TermSubst theta{{"v0", gen::random_closed_term(rng, N, 2)},
                    {"v1", gen::random_closed_term(rng, Sort::arrow(N, N), 2)}};
    CHECK(term_congruent(subst_term(t, theta), subst_term(u, theta)));
  }
}

TEST_CASE("term congruence decides conversion") {
  Term id0 = Term::app(Term::lam("x", N, V("x")), Term::zero());
  CHECK(term_congruent(id0, Term::zero()));
  CHECK_FALSE(term_congruent(Term::succ(Term::zero()), Term::zero()));
  Term add = mk_add();
  CHECK(term_congruent(Term::app(Term::app(add, Term::zero()), V("y")),
                       Term::rec(N, Term::zero(),
                                 Term::lam("a", N, Term::lam("b", N, Term::succ(V("a")))),
                                 V("y"))));
}

TEST_CASE("formula congruence includes the nullt rules") {
  CHECK(formula_congruent(Formula::null_of(Term::zero()), top_formula()));
  CHECK(formula_congruent(Formula::null_of(Term::succ(V("x"))), Formula::bot()));
  Term id0 = Term::app(Term::lam("x", N, V("x")), Term::zero());
  CHECK(formula_congruent(Formula::eq(N, id0, Term::zero()),
                          Formula::eq(N, Term::zero(), Term::zero())));
  // under connectives and binders
  Formula a = Formula::forall("x", N, Formula::imp(Formula::null_of(Term::zero()),
                                                   Formula::eq(N, V("x"), V("x"))));
  Formula b = Formula::forall("y", N, Formula::imp(top_formula(), Formula::eq(N, V("y"), V("y"))));
  CHECK(formula_congruent(a, b));
  // a nullt argument that must be reduced before the rule applies
  Term red = Term::app(Term::lam("x", N, V("x")), Term::succ(Term::zero()));
  CHECK(formula_congruent(Formula::null_of(red), Formula::bot()));
  CHECK_FALSE(formula_congruent(Formula::null_of(V("x")), Formula::bot()));
  CHECK_FALSE(formula_congruent(Formula::eq(N, Term::zero(), Term::zero()),
                                Formula::eq(N, Term::zero(), Term::succ(Term::zero()))));
}

TEST_CASE("the step budget guards divergence as a defect") {
  // ill-typed self-application loops; the budget must fire, not hang
  Term omega = Term::lam("x", N, Term::app(V("x"), V("x")));
  Term loop = Term::app(omega, omega);
  uint64_t saved = step_budget();
  set_step_budget(1000);
  CHECK_THROWS_AS((void)normalize_term(loop), BudgetError);
  set_step_budget(saved);
}

TEST_CASE("traces replay") {
  Term add = mk_add();
  Term sum = Term::app(Term::app(add, numeral(1)), numeral(1));
  RewriteTrace trace;
  Term nf = normalize_term_traced(sum, trace);
  REQUIRE_FALSE(trace.empty());
  CHECK(alpha_eq_term(trace.front().before, sum));
  CHECK(alpha_eq_term(trace.back().after, nf));
  for (size_t i = 0; i + 1 < trace.size(); ++i)
    CHECK(alpha_eq_term(trace[i].after, trace[i + 1].before));
}
