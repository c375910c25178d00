#include <doctest.h>

#include "conjecture.hpp"
#include "corpus.hpp"
#include "printer.hpp"

using namespace hawk;

namespace {
Term V(const std::string& n) { return Term::free_var(n); }
const Sort N = Sort::nat();
}  // namespace

TEST_CASE("proof reduction rules") {
  Formula zz = Formula::eq(N, Term::zero(), Term::zero());

  // (\xi. xi) (refl 0) ~> refl 0
  Proof beta = Proof::papp(Proof::plam("xi", zz, Proof::pvar("xi")), Proof::refl(N, Term::zero()));
  auto r = proof_step(beta);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::refl(N, Term::zero())));

  // (fun x => refl x) 0 ~> refl 0
  Proof tbeta = Proof::tapp(Proof::tlam("x", N, Proof::refl(N, V("x"))), Term::zero());
  r = proof_step(tbeta);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::refl(N, Term::zero())));

  // (M1, M2).2 ~> M2
  Proof pr = Proof::proj(2, Proof::pair(Proof::refl(N, Term::zero()),
                                        Proof::refl(N, numeral(1))));
  r = proof_step(pr);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::refl(N, numeral(1))));

  // unpack a witness
  Formula target = Formula::exists("x", N, Formula::eq(N, V("x"), Term::zero()));
  Proof unpack = Proof::ex_elim(
      Proof::ex_intro(Term::zero(), Proof::refl(N, Term::zero()), target), "x", "xi",
      Proof::refl(N, Term::zero()));
  r = proof_step(unpack);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::refl(N, Term::zero())));

  // induction on 0 and on a successor
  Formula motive = Formula::eq(N, V("w"), V("w"));
  Proof step = Proof::tlam("w", N, Proof::plam("xi", motive, Proof::refl(N, Term::succ(V("w")))));
  Proof ind0 = Proof::ind("w", motive, Proof::refl(N, Term::zero()), step, Term::zero());
  r = proof_step(ind0);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::refl(N, Term::zero())));

  Proof ind1 = Proof::ind("w", motive, Proof::refl(N, Term::zero()), step, numeral(1));
  r = proof_step(ind1);
  REQUIRE(r.has_value());
  CHECK(r->kind() == ProofKind::papp);  // N t applied to the smaller induction

  // a scrutinee reduced before matching
  Term redex = Term::app(Term::lam("x", N, V("x")), Term::zero());
  Proof ind_red = Proof::ind("w", motive, Proof::refl(N, Term::zero()), step, redex);
  r = proof_step(ind_red);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::refl(N, Term::zero())));

  // peel on refl
  Proof peel = Proof::peel(N, Term::zero(), Term::zero(), Proof::refl(N, Term::zero()), "z",
                           Formula::eq(N, V("z"), V("z")), Proof::refl(N, Term::zero()));
  r = proof_step(peel);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::refl(N, Term::zero())));

  // apppm over ext on equal endpoints
  Proof body = Proof::tlam("z", N, Proof::refl(N, V("z")));
  Proof ap = Proof::app_pm(N, N, Proof::ext_intro(N, N, body), Term::zero(), Term::zero(),
                           Proof::refl(N, Term::zero()));
  r = proof_step(ap);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::tapp(body, Term::zero())));

  // normal proofs do not step
  CHECK_FALSE(proof_step(Proof::refl(N, Term::zero())).has_value());
}

TEST_CASE("one-step reducts enumerate every position") {
  Formula zz = Formula::eq(N, Term::zero(), Term::zero());
  Proof inner = Proof::papp(Proof::plam("b", zz, Proof::pvar("b")), Proof::pvar("a"));
  Proof outer = Proof::papp(Proof::plam("a", zz, inner), Proof::refl(N, Term::zero()));
  std::vector<Proof> rs = proof_one_step_reducts(outer);
  CHECK(rs.size() == 2);
}

TEST_CASE("stepping under binders keeps indices straight") {
  // fun (y : N) => (fun (x : N) => refl x) y  ~>  fun (y : N) => refl y
  Proof p = Proof::tlam(
      "y", N, Proof::tapp(Proof::tlam("x", N, Proof::refl(N, V("x"))), V("y")));
  auto r = proof_step(p);
  REQUIRE(r.has_value());
  CHECK(alpha_eq_proof(*r, Proof::tlam("y", N, Proof::refl(N, V("y")))));
}

TEST_CASE("the harness skips what the conjecture excludes") {
  const char* text = R"(
logic lhaw.
theorem has_peel (x : N) [h : x = 0] : 0 = x :=
  (assume k : 0 = x => k) (peel(x, 0, h, z => z = x, refl x)).
theorem open_proof (x : N) : x = x := (assume k : x = x => k) (refl x).
theorem normal_proof : 0 = 0 := refl 0.
)";
  SourceFile file = parse_source(text);
  ConjectureReport rep = run_conjecture(file, 200);
  REQUIRE(rep.instances.size() == 3);
  CHECK(rep.instances[0].status == "skipped");
  CHECK(rep.instances[0].detail.find("peel") != std::string::npos);
  CHECK(rep.instances[1].status == "skipped");
  CHECK(rep.instances[1].detail.find("free first-order") != std::string::npos);
  CHECK(rep.instances[2].status == "skipped");
  CHECK(rep.skipped == 3);
  CHECK(rep.errors == 0);
}

TEST_CASE("the bundled experiment runs without internal errors") {
  ConjectureReport rep = run_conjecture(conjecture_corpus(), 10'000);
  CHECK(rep.errors == 0);
  int steps = rep.joinable + rep.unknown;
  CHECK(steps >= 20);
  // exploratory: record, and expect the beta cases to join
  CHECK(rep.joinable > 0);
  std::string rendered = render_conjecture_report(rep);
  CHECK(rendered.find("summary") != std::string::npos);
}
