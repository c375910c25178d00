#pragma once

#include <optional>

#include "surface.hpp"
#include "translate.hpp"

namespace hawk {

// One beta/iota step on proof terms, leftmost-outermost. Embedded scrutinee
// terms are normalized for iota matching. Rules:
//   (\x. M) t            ~> M[x := t]
//   (\xi. M) N           ~> M[xi := N]
//   unpack [t, M] in N   ~> N[x := t][xi := M]
//   (M1, M2).i           ~> Mi
//   ind(_, M, N, 0)      ~> M
//   ind(_, M, N, S t)    ~> N t ind(_, M, N, t)
//   peel(refl t, _, N)   ~> N
//   apppm(ext(M), t, t, refl t) ~> M t
std::optional<Proof> proof_step(const Proof& p);

// Every single-step reduct, one per redex position.
std::vector<Proof> proof_one_step_reducts(const Proof& p);

// Embedded System T terms brought to normal form (proof structure untouched).
Proof normalize_proof_terms(const Proof& p);

struct ConjectureInstance {
  std::string theorem;
  std::string rule;        // proof rule that fired for this source step
  std::string status;      // joinable | unknown | skipped | error
  std::string detail;
  uint64_t steps_used = 0;
};

struct ConjectureReport {
  std::vector<ConjectureInstance> instances;
  int joinable = 0;
  int unknown = 0;
  int skipped = 0;
  int errors = 0;
};

// For each theorem whose proof is closed in its first-order variables and
// peel-free, enumerates the single steps M ~> N and searches for a common
// reduct of M^pm and N^pm within max_steps. Budget exhaustion is reported
// as unknown, never as a refutation.
ConjectureReport run_conjecture(const SourceFile& file, uint64_t max_steps);

std::string render_conjecture_report(const ConjectureReport& rep);

}  // namespace hawk
