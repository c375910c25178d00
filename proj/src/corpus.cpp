#include "corpus.hpp"

namespace hawk {

namespace {

constexpr const char* kTermPrelude = R"(
def add : N -> N -> N := fun (x : N) (y : N) => rec[N] x (fun (a : N) (b : N) => S a) y.
def mult : N -> N -> N := fun (x : N) (y : N) => rec[N] 0 (fun (a : N) (b : N) => add a x) y.
)";

const std::pair<const char*, const char*> kTermItems[] = {
    {"num0", "0"},
    {"num1", "1"},
    {"num2", "2"},
    {"num3", "3"},
    {"num4", "4"},
    {"num5", "5"},
    {"id", "fun (x : N) => x"},
    {"add", "add"},
    {"mult", "mult"},
    {"pred", "fun (x : N) => rec[N] 0 (fun (a : N) (b : N) => b) x"},
    {"compose", "fun (f : N -> N) (g : N -> N) (x : N) => f (g x)"},
    {"iterate", "fun (f : N -> N) (n : N) (x : N) => rec[N] x (fun (a : N) (b : N) => f a) n"},
    {"plus_by_arrow_rec",
     "fun (n : N) => rec[N -> N] (fun (x : N) => x) "
     "(fun (g : N -> N) (m : N) => fun (x : N) => S (g x)) n"},
    {"const_fst", "fun (x : N) (y : N) => x"},
    {"double", "fun (x : N) => add x x"},
    {"apply_twice", "fun (f : N -> N) (x : N) => f (f x)"},
    {"is_zero", "fun (x : N) => rec[N] 1 (fun (a : N) (b : N) => 0) x"},
    {"add_2_3", "add 2 3"},
};

constexpr const char* kLhawCorpus = R"(
logic lhaw.

def add : N -> N -> N := fun (x : N) (y : N) => rec[N] x (fun (a : N) (b : N) => S a) y.

theorem refl_all : forall x : N. x = x := fun (x : N) => refl x.

theorem eq_sym : forall x : N. forall y : N. x = y -> y = x :=
  fun (x : N) (y : N) => assume xi : x = y =>
    peel(x, y, xi, z => z = x, refl x).

theorem eq_trans : forall x : N. forall y : N. forall z : N. x = y -> y = z -> x = z :=
  fun (x : N) (y : N) (z : N) => assume xi : x = y => assume eta : y = z =>
    peel(y, z, eta, w => x = w, xi).

theorem peano4 : forall x : N. S x != 0 :=
  fun (x : N) => assume xi : S x = 0 =>
    peel(S x, 0, xi, z => null z -> bot, assume e : null (S x) => e)
      (assume e : bot => e).

theorem add_zero_r : forall x : N. add x 0 = x := fun (x : N) => refl x.

theorem add_zero_r_ind : forall x : N. add x 0 = x :=
  fun (x : N) =>
    ind(w => add w 0 = w,
        refl 0,
        fun (w : N) => assume xi : add w 0 = w => refl (S w),
        x).

theorem add_zero_l : forall x : N. add 0 x = x :=
  fun (x : N) =>
    ind(w => add 0 w = w,
        refl 0,
        fun (w : N) => assume xi : add 0 w = w =>
          peel(add 0 w, w, xi, z => S (add 0 w) = S z, refl (S (add 0 w))),
        x).

theorem add_succ_l : forall x : N. forall y : N. add (S x) y = S (add x y) :=
  fun (x : N) (y : N) =>
    ind(w => add (S x) w = S (add x w),
        refl (S x),
        fun (w : N) => assume xi : add (S x) w = S (add x w) =>
          peel(add (S x) w, S (add x w), xi,
               z => S (add (S x) w) = S z,
               refl (S (add (S x) w))),
        y).

theorem exists_zero : exists x : N. x = 0 := wit(exists x : N. x = 0, 0, refl 0).

theorem exists_succ_absurd : (exists x : N. S x = 0) -> bot :=
  assume xi : (exists x : N. S x = 0) =>
    unpack xi as [x, eta] in
      peel(S x, 0, eta, z => null z -> bot, assume e : null (S x) => e)
        (assume e : bot => e).

theorem efq_example : bot -> 0 = 1 := assume xi : bot => efq(xi, 0 = 1).

theorem conversion_example : (fun (x : N) => x) 0 = 0 := refl 0.

theorem null_zero : null 0 := assume e : bot => e.

theorem null_succ : forall x : N. null (S x) -> bot :=
  fun (x : N) => assume e : null (S x) => e.

theorem swap_and : forall x : N. forall y : N. x = y /\ y = x -> y = x /\ x = y :=
  fun (x : N) (y : N) => assume xi : (x = y /\ y = x) => (xi.2, xi.1).

theorem add_2_3 : add 2 3 = 5 := refl 5.

theorem proj_use : forall x : N. x = 0 /\ null 0 -> x = 0 :=
  fun (x : N) => assume xi : (x = 0 /\ null 0) => xi.1.

def mult : N -> N -> N := fun (x : N) (y : N) => rec[N] 0 (fun (a : N) (b : N) => add a x) y.

theorem mult_zero_r : forall x : N. mult x 0 = 0 := fun (x : N) => refl 0.

theorem zero_or_succ : forall x : N. x = 0 \/ (x != 0) :=
  fun (x : N) =>
    ind(w => (w = 0 \/ (w != 0)),
        wit(0 = 0 \/ (0 != 0), 0,
            (assume e : 0 = 0 => refl 0,
             assume e : (0 = 0 -> bot) => e)),
        fun (w : N) => assume ih : (w = 0 \/ (w != 0)) =>
          wit(S w = 0 \/ (S w != 0), 1,
              (assume e : 1 = 0 =>
                 efq(peel(1, 0, e, y => null y -> bot, assume k : null 1 => k)
                       (assume k : bot => k),
                     S w = 0),
               assume e : (1 = 0 -> bot) => assume k : S w = 0 =>
                 peel(S w, 0, k, y => null y -> bot, assume q : null (S w) => q)
                   (assume q : bot => q))),
        x).
)";

constexpr const char* kLehawCorpus = R"(
logic lehaw.

def idf : N -> N := fun (x : N) => x.
def add : N -> N -> N := fun (x : N) (y : N) => rec[N] x (fun (a : N) (b : N) => S a) y.
def iter_id : N -> N -> N :=
  fun (n : N) => rec[N -> N] (fun (x : N) => x) (fun (g : N -> N) (m : N) => g) n.

theorem refl_arrow : idf = [N -> N] idf := refl[N -> N] idf.

theorem ext_refl (f : N -> N) : f = [N -> N] f :=
  ext[N, N](fun (x : N) => refl (f x)).

theorem ext_add_zero : (fun (x : N) => add x 0) = [N -> N] idf :=
  ext[N, N](fun (x : N) => refl x).

theorem ext_succ_shift : (fun (x : N) => S x) = [N -> N] (fun (x : N) => add x 1) :=
  ext[N, N](fun (x : N) => refl (S x)).

theorem apppm_use (f : N -> N) (g : N -> N) (x : N) (y : N)
  [xi : f = [N -> N] g] [eta : x = y]
  : f x = g y := apppm[N, N](xi, x, y, eta).

theorem peel_arrow (f : N -> N) (g : N -> N)
  [xi : f = [N -> N] g] [eta : f 0 = 0]
  : g 0 = 0 := peel[N -> N](f, g, xi, h => h 0 = 0, eta).

theorem sym_arrow : forall f : N -> N. forall g : N -> N. f = [N -> N] g -> g = [N -> N] f :=
  fun (f : N -> N) (g : N -> N) => assume xi : f = [N -> N] g =>
    peel[N -> N](f, g, xi, h => h = [N -> N] f, refl[N -> N] f).

theorem pointwise_to_related :
  forall f : N -> N. forall g : N -> N.
    (forall x : N. f x = g x) -> forall x : N. forall y : N. x = y -> f x = g y :=
  fun (f : N -> N) (g : N -> N) => assume xi : (forall x : N. f x = g x) =>
    fun (x : N) (y : N) => assume eta : x = y =>
      apppm[N, N](ext[N, N](xi), x, y, eta).

theorem ind_arrow : forall n : N. iter_id n = [N -> N] idf :=
  fun (n : N) =>
    ind(w => iter_id w = [N -> N] idf,
        refl[N -> N] idf,
        fun (w : N) => assume xi : iter_id w = [N -> N] idf => xi,
        n).
)";

constexpr const char* kConjectureCorpus = R"(
logic lehaw.

def idf : N -> N := fun (x : N) => x.

theorem cj_beta_imp : 0 = 0 := (assume xi : 0 = 0 => xi) (refl 0).

theorem cj_beta_forall : 0 = 0 := (fun (x : N) => refl x) 0.

theorem cj_beta_under_binder : forall y : N. y = y :=
  fun (y : N) => (fun (x : N) => refl x) y.

theorem cj_pair_fst : 0 = 0 := (refl 0, refl 1).1.

theorem cj_pair_snd : 1 = 1 := (refl 0, refl 1).2.

theorem cj_pair_both : 0 = 0 /\ 1 = 1 := ((refl 0, refl 1).1, (refl 0, refl 1).2).

theorem cj_ind_zero : 0 = 0 :=
  ind(w => w = w, refl 0, fun (w : N) => assume xi : w = w => refl (S w), 0).

theorem cj_ind_one : 1 = 1 :=
  ind(w => w = w, refl 0, fun (w : N) => assume xi : w = w => refl (S w), 1).

theorem cj_ind_two : 2 = 2 :=
  ind(w => w = w, refl 0, fun (w : N) => assume xi : w = w => refl (S w), 2).

theorem cj_unpack : 0 = 0 :=
  unpack wit(exists x : N. x = 0, 0, refl 0) as [x, xi] in refl 0.

theorem cj_unpack_use : 0 = 0 :=
  unpack wit(exists x : N. x = x, 0, refl 0) as [x, xi] in refl 0.

theorem cj_apppm_ext : idf 0 = idf 0 :=
  apppm[N, N](ext[N, N](fun (z : N) => refl (idf z)), 0, 0, refl 0).

theorem cj_apppm_ext_one : idf 1 = idf 1 :=
  apppm[N, N](ext[N, N](fun (z : N) => refl (idf z)), 1, 1, refl 1).

theorem cj_nested_imp : 0 = 0 :=
  (assume a : 0 = 0 => (assume b : 0 = 0 => b) a) (refl 0).

theorem cj_triple_imp : 0 = 0 :=
  (assume a : 0 = 0 => (assume b : 0 = 0 => (assume c : 0 = 0 => c) b) a) (refl 0).

theorem cj_curried : 1 = 1 := (fun (x : N) (y : N) => refl x) 1 2.

theorem cj_pair_of_beta : 0 = 0 /\ 0 = 0 :=
  ((assume a : 0 = 0 => a) (refl 0), (fun (x : N) => refl x) 0).

theorem cj_tapp_pair : 0 = 0 /\ 0 = 0 :=
  (fun (x : N) => (refl x, refl x)) 0.
)";

Corpus build_corpus() {
  Corpus c;
  for (const auto& [name, text] : kTermItems) {
    TermProgram prog = parse_term_program(std::string(kTermPrelude) + text);
    Signature empty;
    c.terms.push_back(CorpusTermItem{name, prog.term, infer_sort(empty, prog.term)});
  }
  SourceFile lhaw = parse_source(kLhawCorpus);
  for (const auto& th : lhaw.theorems)
    c.lhaw.push_back(CorpusTheoremItem{th.name, {lhaw.logic, th.sig, th.ctx, th.proof, th.goal}});
  SourceFile lehaw = parse_source(kLehawCorpus);
  for (const auto& th : lehaw.theorems)
    c.lehaw.push_back(
        CorpusTheoremItem{th.name, {lehaw.logic, th.sig, th.ctx, th.proof, th.goal}});
  return c;
}

}  // namespace

const Corpus& bundled_corpus() {
  static const Corpus corpus = build_corpus();
  return corpus;
}

const SourceFile& conjecture_corpus() {
  static const SourceFile file = parse_source(kConjectureCorpus);
  return file;
}

}  // namespace hawk
