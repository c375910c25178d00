#pragma once

#include <vector>

#include "kernel.hpp"

namespace hawk {

struct TranslateError : std::runtime_error {
  explicit TranslateError(const std::string& what) : std::runtime_error(what) {}
};

// --- duplication and renaming -----------------------------------------------

// Delta^1 followed by Delta^2: every x : sigma renamed to x#i : sigma.
Signature dup_sig(const Signature& sig);

// Renames every free variable x to x#i; bound structure untouched.
Term dup_term(const Term& t, RenameTag tag);
Formula dup_formula(const Formula& f, RenameTag tag);

// Delta^pm: one hypothesis x#pm : eqpm(sigma, x#1, x#2) per declaration.
Context sig_to_pm_context(const Signature& sig);

// --- relation builders -------------------------------------------------------

// eqpm at N is plain equality; at sigma -> tau it relates functions that send
// related inputs to related outputs. ext extends equality pointwise instead.
Formula eqpm(const Sort& sort, const Term& a, const Term& b);
Formula ext_rel(const Sort& sort, const Term& a, const Term& b);

// --- partial-equivalence witnesses -------------------------------------------

enum class PerWitnessKind { sympm, transpm, reflpm };

// Closed proof of, respectively, symmetry, transitivity, and
// forall x y. x eqpm y -> (x eqpm x /\ y eqpm y), all at the given sort.
Proof per_witness(PerWitnessKind kind, const Sort& sort);
Formula per_witness_type(PerWitnessKind kind, const Sort& sort);

// --- the term translation ----------------------------------------------------

// t^pm with Delta^1, Delta^2; Delta^pm |- t^pm : eqpm(sigma, t^1, t^2).
Proof translate_term(const Signature& sig, const Term& t);

// Elim^i_{z.t}: congruence of duplicated terms in a distinguished variable.
Proof elim_term(int i, const Signature& sig, const std::string& z, const Sort& zsort,
                const Term& t);
Formula elim_term_type(int i, const Signature& sig, const std::string& z, const Sort& zsort,
                       const Term& t);

// --- the formula/context/proof translation -----------------------------------

Formula translate_formula(const Formula& f);
Context translate_context(const Context& ctx);

struct TranslationUnit {
  Judgment source;
  Judgment produced;
  std::vector<std::string> notes;  // which clause produced what, corrections applied
};

// Translates a kernel-accepted judgment (either logic) into an lhaw judgment
// Delta^1,Delta^2 ; Delta^pm,Gamma^pm |- M^pm : Phi^pm. Throws TranslateError
// if the source judgment is rejected.
TranslationUnit translate_proof(const Judgment& source);

// Elim_{x.Phi}: transport of Phi^pm along eqpm in a distinguished variable,
// built by induction on the formula.
Proof elim_formula(const Signature& sig, const std::string& x, const Sort& xsort,
                   const Formula& phi);
Formula elim_formula_type(const Signature& sig, const std::string& x, const Sort& xsort,
                          const Formula& phi);

// --- collapse and equivalence (lehaw side) -----------------------------------

// Closed lehaw proof of forall x y. (x =_s y -> x eqpm y) /\ (x eqpm y -> x =_s y).
Proof collaps(const Sort& sort);
Formula collaps_type(const Sort& sort);

// Equiv^1_Phi : Phi^1 -> Phi^pm and Equiv^2_Phi : Phi^pm -> Phi^1, lehaw proofs
// under Delta^1,Delta^2 ; Delta^pm.
Proof equiv(int i, const Signature& sig, const Formula& phi);
Formula equiv_type(int i, const Signature& sig, const Formula& phi);

}  // namespace hawk
