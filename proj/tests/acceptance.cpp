// Acceptance suite: one line per criterion, nonzero exit if a gating
// criterion fails. Runtime bounds are part of the criteria and enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "conjecture.hpp"
#include "corpus.hpp"
#include "driver.hpp"
#include "printer.hpp"
#include "support/gens.hpp"
#include "support/named_oracle.hpp"

using namespace hawk;

namespace {

Term V(const std::string& n) { return Term::free_var(n); }
const Sort N = Sort::nat();
const Sort NN = Sort::arrow(Sort::nat(), Sort::nat());

struct Line {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Line> lines;
bool overall = true;

void run(int id, const std::string& name, double budget_seconds,
         const std::function<std::pair<bool, std::string>()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    auto [p, d] = body();
    pass = p;
    detail = d;
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    pass = false;
    detail += " [over time budget]";
  }
  lines.push_back(Line{id, name, pass, detail, secs});
  overall = overall && pass;
}

CheckReport certify_term(const Term& t, const Sort& s) {
  Signature empty;
  return check_proof(Logic::lhaw, empty, Context{}, translate_term(empty, t), eqpm(s, t, t));
}

// ---------------------------------------------------------------------------

std::pair<bool, std::string> criterion1() {
  const Corpus& corpus = bundled_corpus();
  if (corpus.terms.size() < 15)
    return {false, "corpus has only " + std::to_string(corpus.terms.size()) + " terms"};
  int pass = 0;
  std::string first_fail;
  for (const auto& item : corpus.terms) {
    CheckReport r = certify_term(item.term, item.sort);
    if (r.accepted) ++pass;
    else if (first_fail.empty()) first_fail = item.name + ": " + r.message();
  }
  std::ostringstream d;
  d << pass << "/" << corpus.terms.size() << " closed terms certified at eqpm";
  if (!first_fail.empty()) d << "; first failure: " << first_fail;
  return {pass == static_cast<int>(corpus.terms.size()), d.str()};
}

std::pair<bool, std::string> trans_suite(const std::vector<CorpusTheoremItem>& items,
                                         size_t minimum) {
  if (items.size() < minimum)
    return {false, "suite has only " + std::to_string(items.size()) + " theorems"};
  int pass = 0;
  std::string first_fail;
  for (const auto& item : items) {
    CheckReport src = check_proof(item.judgment);
    if (!src.accepted) {
      if (first_fail.empty()) first_fail = item.name + " (source): " + src.message();
      continue;
    }
    TranslationUnit unit = translate_proof(item.judgment);
    CheckReport out = check_proof(unit.produced);
    if (out.accepted && unit.produced.logic == Logic::lhaw) ++pass;
    else if (first_fail.empty()) first_fail = item.name + " (translated): " + out.message();
  }
  std::ostringstream d;
  d << pass << "/" << items.size() << " theorems translated and re-checked in lhaw";
  if (!first_fail.empty()) d << "; first failure: " << first_fail;
  return {pass == static_cast<int>(items.size()), d.str()};
}

std::pair<bool, std::string> criterion3() {
  auto [ok, detail] = trans_suite(bundled_corpus().lehaw, 8);
  // the suite must exercise every extensional rule
  bool has_refl = false, has_peel = false, has_ext = false, has_apppm = false, has_ind = false;
  std::function<void(const Proof&)> scan = [&](const Proof& p) {
    switch (p.kind()) {
      case ProofKind::refl: has_refl = has_refl || p.sort().is_arrow(); break;
      case ProofKind::peel: has_peel = has_peel || p.sort().is_arrow(); break;
      case ProofKind::ext_intro: has_ext = true; break;
      case ProofKind::app_pm: has_apppm = true; break;
      case ProofKind::ind: has_ind = true; break;
      default: break;
    }
    for (const Proof* sub : {&p.p(), &p.q(), &p.r()})
      if (!sub->empty()) scan(*sub);
  };
  for (const auto& item : bundled_corpus().lehaw) scan(item.judgment.proof);
  if (!(has_refl && has_peel && has_ext && has_apppm && has_ind))
    return {false, detail + "; extensional rule coverage incomplete"};
  return {ok, detail + "; covers refl/peel at arrow, ext, apppm, ind"};
}

std::pair<bool, std::string> criterion4() {
  std::vector<Sort> sorts = gen::sorts_up_to_depth(3);
  Signature empty;
  Context none;
  int witness_pass = 0, witness_total = 0;
  int elim_pass = 0, elim_total = 0;
  std::string first_fail;
  auto note_fail = [&](const std::string& what, const CheckReport& r) {
    if (first_fail.empty()) first_fail = what + ": " + r.message();
  };
  for (const Sort& s : sorts) {
    for (auto kind : {PerWitnessKind::sympm, PerWitnessKind::transpm, PerWitnessKind::reflpm}) {
      ++witness_total;
      CheckReport r =
          check_proof(Logic::lhaw, empty, none, per_witness(kind, s), per_witness_type(kind, s));
      if (r.accepted) ++witness_pass;
      else note_fail("witness at " + s.show(), r);
    }
    ++witness_total;
    CheckReport rc = check_proof(Logic::lehaw, empty, none, collaps(s), collaps_type(s));
    if (rc.accepted) ++witness_pass;
    else note_fail("collaps at " + s.show(), rc);

    // generated elim family over a binder of this sort
    Signature sig;
    sig.push("w", s);
    sig.push("n", N);
    Term x = V("x"), w = V("w"), n = V("n");
    std::vector<Formula> family = {
        Formula::eq(s, x, w),
        Formula::bot(),
        Formula::null_of(n),
        Formula::imp(Formula::eq(s, x, x), Formula::bot()),
        Formula::land(Formula::eq(s, x, w), Formula::eq(s, w, x)),
        Formula::forall("u", s, Formula::eq(s, x, V("u"))),
        Formula::exists("u", s, Formula::eq(s, x, V("u"))),
    };
    if (s.is_nat()) family.push_back(Formula::null_of(x));
    for (const Formula& phi : family) {
      ++elim_total;
      CheckReport r = check_proof(Logic::lhaw, dup_sig(sig), sig_to_pm_context(sig),
                                  elim_formula(sig, "x", s, phi),
                                  elim_formula_type(sig, "x", s, phi));
      if (r.accepted) ++elim_pass;
      else note_fail("elim at " + s.show(), r);
    }
  }
  std::ostringstream d;
  d << sorts.size() << " sorts; witnesses+collaps " << witness_pass << "/" << witness_total
    << "; elim family " << elim_pass << "/" << elim_total;
  if (!first_fail.empty()) d << "; first failure: " << first_fail;
  return {witness_pass == witness_total && elim_pass == elim_total, d.str()};
}

std::pair<bool, std::string> criterion5() {
  Signature empty;
  Context none;
  std::vector<Formula> closed = {
      Formula::eq(N, Term::zero(), Term::zero()),
      Formula::imp(Formula::bot(), Formula::bot()),
      Formula::land(Formula::eq(N, Term::zero(), Term::zero()), Formula::null_of(Term::zero())),
      Formula::forall("x", N, Formula::eq(N, V("x"), V("x"))),
      Formula::exists("x", N, Formula::eq(N, V("x"), Term::zero())),
      Formula::eq(NN, Term::lam("x", N, V("x")), Term::lam("x", N, V("x"))),
      Formula::forall("f", NN, Formula::eq(NN, V("f"), V("f"))),
  };
  int pass = 0;
  std::string first_fail;
  for (const Formula& phi : closed) {
    Proof both = Proof::pair(equiv(1, empty, phi), equiv(2, empty, phi));
    Formula ty = Formula::land(equiv_type(1, empty, phi), equiv_type(2, empty, phi));
    CheckReport r = check_proof(Logic::lehaw, empty, none, both, ty);
    if (r.accepted) ++pass;
    else if (first_fail.empty()) first_fail = show_formula(phi) + ": " + r.message();
  }
  std::ostringstream d;
  d << pass << "/" << closed.size() << " equivalences certified";
  if (!first_fail.empty()) d << "; first failure: " << first_fail;
  return {pass == static_cast<int>(closed.size()), d.str()};
}

struct PropertyStats {
  int failures = 0;
  std::string first;
  void fail(const std::string& what) {
    ++failures;
    if (first.empty()) first = what;
  }
};

std::pair<bool, std::string> criterion6() {
  constexpr int kCases = 500;
  PropertyStats stats;
  gen::Rng rng(424242);

  // duplication/translation commute with congruence and substitution
  for (int i = 0; i < kCases; ++i) {
    Signature sig;
    sig.push("x", N);
    sig.push("v", NN);
    int ctr = 0;
    Term t = gen::random_typed_term(rng, sig, gen::random_sort(rng, 1), 3, &ctr);
    Term u = normalize_term(t);
    for (RenameTag tag : {RenameTag::one, RenameTag::two})
      if (!term_congruent(dup_term(t, tag), dup_term(u, tag))) stats.fail("congruence after duplication");
    Term img = gen::random_closed_term(rng, N, 2);
    for (RenameTag tag : {RenameTag::one, RenameTag::two}) {
      Term lhs = dup_term(subst_term(t, {{"x", img}}), tag);
      Term rhs = subst_term(dup_term(t, tag), {{renamed("x", tag), dup_term(img, tag)}});
      if (!alpha_eq_term(lhs, rhs)) stats.fail("duplication vs term substitution");
    }
    Formula phi = gen::random_wf_formula(rng, sig, 2, false, &ctr);
    Formula l3l = translate_formula(subst_formula(phi, {{"x", img}}));
    Formula l3r = subst_formula(
        translate_formula(phi),
        {{"x#1", dup_term(img, RenameTag::one)}, {"x#2", dup_term(img, RenameTag::two)}});
    if (!alpha_eq_formula(l3l, l3r)) stats.fail("translation vs formula substitution");
  }

  // typing weakening and congruence under substitution
  for (int i = 0; i < kCases; ++i) {
    Signature sig;
    sig.push("a", N);
    int ctr = 0;
    Sort s = gen::random_sort(rng, 1);
    Term t = gen::random_typed_term(rng, sig, s, 3, &ctr);
    Signature wider = sig;
    wider.push("zzz_fresh", gen::random_sort(rng, 1));
    try {
      if (!(infer_sort(wider, t) == s)) stats.fail("typing weakening");
    } catch (...) {
      stats.fail("typing weakening");
    }
    Term u = normalize_term(t);
    TermSubst theta{{"a", gen::random_closed_term(rng, N, 2)}};
    if (!term_congruent(subst_term(t, theta), subst_term(u, theta))) stats.fail("congruence under substitution");
  }

  // goal containment, weakening, substitution stability, and cut over
  // accepted judgments
  for (int i = 0; i < kCases; ++i) {
    Logic logic = rng.chance(50) ? Logic::lhaw : Logic::lehaw;
    Judgment j = gen::random_accepted_judgment(rng, logic);
    CheckReport accepted = check_proof(j);
    if (!accepted.accepted) {
      stats.fail("generator produced a rejected judgment");
      continue;
    }
    NameSet declared = j.sig.names();
    for (const auto& v : free_formula_vars(accepted.elaborated))
      if (!declared.count(v)) stats.fail("goal containment");
    // weakening by a fresh declaration and hypothesis
    NameSet taken = gen::all_names(j);
    Judgment wide = j;
    std::string w = fresh_name("wk_x", taken);
    wide.sig.push(w, N);
    wide.ctx.push(fresh_name("wk_h", taken), Formula::eq(N, V(w), V(w)));
    if (!check_proof(wide).accepted) stats.fail("judgment weakening");
    // a well-sorted closed instance of the whole judgment
    TermSubst theta;
    for (const auto& [n, s] : j.sig.decls) theta.emplace(n, gen::random_closed_term(rng, s, 2));
    Judgment inst;
    inst.logic = j.logic;
    for (const auto& [n, f] : j.ctx.hyps) inst.ctx.push(n, subst_formula(f, theta));
    inst.proof = subst_proof(j.proof, theta, {});
    inst.goal = subst_formula(j.goal, theta);
    if (!check_proof(inst).accepted) stats.fail("substitution stability");
    // cut: splice the derivation in for a hypothesis
    Judgment with_hyp = j;
    with_hyp.ctx.push("cut_h", j.goal);
    with_hyp.proof = Proof::pair(Proof::pvar("cut_h"), Proof::pvar("cut_h"));
    with_hyp.goal = Formula::land(j.goal, j.goal);
    Judgment cut = j;
    cut.proof = subst_proof(with_hyp.proof, {}, {{"cut_h", j.proof}});
    cut.goal = with_hyp.goal;
    if (!(check_proof(with_hyp).accepted && check_proof(cut).accepted))
      stats.fail("cut admissibility");
  }

  // alpha / substitution laws with the named oracle
  for (int i = 0; i < kCases; ++i) {
    Term t = gen::arbitrary_term(rng, 4);
    Term u = gen::arbitrary_term(rng, 2);
    TermSubst theta{{"x", u}};
    if (!alpha_eq_term(t, t)) stats.fail("alpha reflexivity");
    if (!alpha_eq_term(subst_term(t, theta), oracle::subst_via_named(t, theta)))
      stats.fail("substitution oracle");
    Term v = numeral(static_cast<unsigned>(rng.upto(3)));
    Term lhs = subst_term(subst_term(t, {{"x", u}}), {{"y", v}});
    Term rhs = subst_term(subst_term(t, {{"y", v}}), {{"x", subst_term(u, {{"y", v}})}});
    if (!alpha_eq_term(lhs, rhs)) stats.fail("substitution composition");
  }

  // normal-form shapes
  for (int i = 0; i < kCases; ++i) {
    Sort s = gen::random_sort(rng, 2);
    Term nf = normalize_term(gen::random_closed_term(rng, s, 3));
    if (s.is_nat() ? !is_numeral(nf) : nf.kind() != TermKind::lam)
      stats.fail("normal form shape");
  }

  std::ostringstream d;
  d << kCases << " cases per law, " << stats.failures << " failures";
  if (stats.failures) d << "; first: " << stats.first;
  return {stats.failures == 0, d.str()};
}

std::pair<bool, std::string> criterion7() {
  Signature empty;
  Context none;
  struct Negative {
    std::string name;
    Judgment j;
    std::string needle;  // must appear in the rendered diagnostic
  };
  std::vector<Negative> cases;

  {
    Signature sf;
    sf.push("f", NN);
    cases.push_back({"refl at arrow sort in lhaw",
                     {Logic::lhaw, sf, none, Proof::refl(NN, V("f")),
                      Formula::eq(NN, V("f"), V("f"))},
                     "equality at arrow sort"});
  }
  {
    Signature sx;
    sx.push("x", N);
    Context cx;
    cx.push("h", Formula::eq(N, V("x"), Term::zero()));
    cases.push_back({"eigenvariable capture in forall-intro",
                     {Logic::lhaw, sx, cx, Proof::tlam_raw("x", N, Proof::refl(N, V("x"))),
                      Formula::forall("y", N, Formula::eq(N, V("y"), V("y")))},
                     "non-fresh eigenvariable"});
  }
  {
    Signature sx;
    sx.push("x", N);
    Context cx;
    cx.push("h", Formula::eq(N, V("x"), Term::zero()));
    cases.push_back({"motive mismatch in peel",
                     {Logic::lhaw, sx, cx,
                      Proof::peel(N, V("x"), Term::zero(), Proof::pvar("h"), "z",
                                  Formula::eq(N, V("z"), V("z")), Proof::refl(N, numeral(1))),
                      Formula::eq(N, Term::zero(), Term::zero())},
                     "type mismatch"});
  }
  {
    Signature sx;
    sx.push("x", N);
    Context cx;
    cx.push("h", Formula::eq(N, Term::zero(), V("x")));
    cases.push_back({"peel endpoint annotation mismatch",
                     {Logic::lhaw, sx, cx,
                      Proof::peel(N, numeral(1), V("x"), Proof::pvar("h"), "z",
                                  Formula::eq(N, V("z"), V("z")), Proof::refl(N, numeral(1))),
                      Formula::eq(N, V("x"), V("x"))},
                     "motive substitution mismatch"});
  }
  {
    Context cb;
    cb.push("h", Formula::bot());
    cases.push_back({"efq target outside signature",
                     {Logic::lhaw, empty, cb,
                      Proof::efq(Proof::pvar("h"), Formula::eq(N, V("u"), V("u"))),
                      Formula::bot()},
                     "free variables outside the signature"});
  }
  {
    Term bad_rec = Term::rec(
        N, Term::zero(),
        Term::lam("a", N, Term::lam("b", N, Term::lam("c", N, Term::zero()))), Term::zero());
    cases.push_back({"ill-sorted rec",
                     {Logic::lhaw, empty, none, Proof::refl(N, bad_rec),
                      Formula::eq(N, Term::zero(), Term::zero())},
                     "rec step sort mismatch"});
  }
  cases.push_back({"unbound term variable",
                   {Logic::lhaw, empty, none, Proof::refl(N, V("ghost")),
                    Formula::eq(N, Term::zero(), Term::zero())},
                   "unbound variable"});
  cases.push_back({"unbound proof variable",
                   {Logic::lhaw, empty, none, Proof::pvar("ghost"),
                    Formula::imp(Formula::bot(), Formula::bot())},
                   "unbound proof variable"});
  cases.push_back({"application of a non-arrow",
                   {Logic::lhaw, empty, none,
                    Proof::refl(N, Term::app(Term::zero(), Term::zero())),
                    Formula::eq(N, Term::zero(), Term::zero())},
                   "application of non-arrow"});
  {
    Signature sf;
    sf.push("f", NN);
    Proof ext = Proof::ext_intro(N, N,
                                 Proof::tlam("x", N, Proof::refl(N, Term::app(V("f"), V("x")))));
    cases.push_back({"ext in lhaw mode",
                     {Logic::lhaw, sf, none, ext, Formula::eq(NN, V("f"), V("f"))},
                     "equality at arrow sort"});
    Judgment ap{Logic::lhaw, sf, none,
                Proof::app_pm(N, N, Proof::pvar("h"), Term::zero(), Term::zero(),
                              Proof::refl(N, Term::zero())),
                Formula::eq(N, Term::zero(), Term::zero())};
    cases.push_back({"apppm in lhaw mode", ap, "extensional rule in lhaw mode"});
  }
  {
    Context cex;
    cex.push("h", Formula::exists("v", N,
                                  Formula::land(Formula::eq(N, V("v"), Term::zero()),
                                                Formula::eq(N, V("v"), Term::zero()))));
    Signature sx;
    Proof escape = Proof::proj(1, Proof::ex_elim(Proof::pvar("h"), "v", "k", Proof::pvar("k")));
    cases.push_back({"existential eigenvariable escape",
                     {Logic::lhaw, sx, cex, escape, Formula::bot()},
                     "non-fresh eigenvariable"});
  }
  {
    Signature dup;
    dup.push("x", N);
    dup.push("x", N);
    cases.push_back({"duplicate signature name",
                     {Logic::lhaw, dup, none, Proof::refl(N, V("x")),
                      Formula::eq(N, V("x"), V("x"))},
                     "duplicate name in signature"});
  }
  {
    Context loose;
    loose.push("h", Formula::eq(N, V("y"), V("y")));
    cases.push_back({"context outside signature",
                     {Logic::lhaw, empty, loose, Proof::pvar("h"),
                      Formula::imp(Formula::bot(), Formula::bot())},
                     "not well-formed over signature"});
  }

  int pass = 0;
  std::string first_fail;
  for (const auto& c : cases) {
    CheckReport r = check_proof(c.j);
    bool ok = !r.accepted && r.message().find(c.needle) != std::string::npos;
    if (ok) ++pass;
    else if (first_fail.empty())
      first_fail = c.name + " -> " + (r.accepted ? "accepted" : r.message());
  }
  std::ostringstream d;
  d << pass << "/" << cases.size() << " rejected with the named diagnostic";
  if (!first_fail.empty()) d << "; first failure: " << first_fail;
  return {pass == static_cast<int>(cases.size()), d.str()};
}

std::pair<bool, std::string> criterion8() {
  gen::Rng rng(515151);
  int total = 0, pass = 0;
  std::string first_fail;
  for (int i = 0; i < 400; ++i) {
    Term t = gen::arbitrary_term(rng, 4);
    ++total;
    if (alpha_eq_term(parse_term_text(show_term(t)), t)) ++pass;
    else if (first_fail.empty()) first_fail = "term: " + show_term(t);
  }
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::arbitrary_formula(rng, 4);
    ++total;
    if (alpha_eq_formula(parse_formula_text(show_formula(f)), f)) ++pass;
    else if (first_fail.empty()) first_fail = "formula: " + show_formula(f);
  }
  for (int i = 0; i < 300; ++i) {
    Proof p = gen::arbitrary_proof(rng, 4);
    ++total;
    if (alpha_eq_proof(parse_proof_text(show_proof(p), NameSet(gen::pvar_pool().begin(), gen::pvar_pool().end())), p)) ++pass;
    else if (first_fail.empty()) first_fail = "proof: " + show_proof(p);
  }
  std::ostringstream d;
  d << pass << "/" << total << " parse(print(ast)) alpha-identical";
  if (!first_fail.empty()) d << "; first failure: " << first_fail;
  return {pass == total, d.str()};
}

std::pair<bool, std::string> criterion9() {
  ConjectureReport rep = run_conjecture(conjecture_corpus(), 10'000);
  int steps = rep.joinable + rep.unknown;
  double rate = steps ? 100.0 * rep.joinable / steps : 0.0;
  std::ostringstream d;
  d << steps << " steps, " << rep.joinable << " joinable (" << rate << "%), " << rep.unknown
    << " unknown, " << rep.errors << " internal errors";
  if (rate < 80.0) d << " [below the 80% reference; recorded, non-gating]";
  bool pass = rep.errors == 0 && steps >= 20;
  return {pass, d.str()};
}

}  // namespace

int main() {
  run(1, "closed-term translations certify at eqpm", 10.0, criterion1);
  run(2, "lhaw theorems translate and re-check", 30.0,
      [] { return trans_suite(bundled_corpus().lhaw, 10); });
  run(3, "lehaw theorems compile to lhaw (relative consistency)", 30.0, criterion3);
  run(4, "witness family certifies at every sort of depth <= 3", 60.0, criterion4);
  run(5, "equivalence family characterizes the image", 0.0, criterion5);
  run(6, "randomized metatheory properties", 0.0, criterion6);
  run(7, "broken inputs rejected with named diagnostics", 0.0, criterion7);
  run(8, "parse/print round trip", 0.0, criterion8);
  run(9, "reduction experiment (exploratory)", 0.0, criterion9);

  for (const auto& l : lines) {
    std::printf("[%d] %-55s %s (%.2fs) %s\n", l.id, l.name.c_str(),
                l.pass ? "PASS" : "FAIL", l.seconds, l.detail.c_str());
  }
  std::printf("%s\n", overall ? "acceptance: all criteria satisfied"
                              : "acceptance: FAILURES present");
  return overall ? 0 : 1;
}
