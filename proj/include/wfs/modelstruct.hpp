#pragma once

#include "wfs/lifting.hpp"

namespace wfs {

// Two WFS on the same category: outer = (C, F~), inner = (C~, F).
struct CompatiblePair {
  WfsCandidate outer;
  WfsCandidate inner;
};

// CP1: C~ ⊆ C and F~ ⊆ F (both inclusions checked independently and
// cross-checked). CP2: two-out-of-three for F~ within F over composable
// pairs. CP3: c ∈ C~, f ∈ F with f∘c ∈ C~ forces f ∈ F~.
Report check_compatible(const Category& cat, const CompatiblePair& pair);

// First factorization alpha = f~ ∘ c~ through a universe object, with
// c~ ∈ C~ and f~ ∈ F~, in canonical order; absent if none exists.
std::optional<std::pair<int, int>> w_membership(const Category& cat,
                                                const CompatiblePair& pair,
                                                int alpha);

// Backend-supplied membership decision for W, for universes whose truncation
// hides the intermediate object of a factorization alpha = f~ ∘ c~.
using WOracle = std::function<bool(int)>;

// Membership table of W = {alpha | alpha = f~ ∘ c~} over all morphisms.
// Without an oracle, membership is decided by in-universe search.
MorphismClass materialize_w(const Category& cat, const CompatiblePair& pair,
                            const WOracle& oracle = {});

// C~ = C ∩ W and F~ = F ∩ W.
Report check_class_lemma(const Category& cat, const CompatiblePair& pair,
                         const MorphismClass& w);

// (a) g = f∘h ∈ W with f ∈ F~ forces h ∈ W, granted the pullback of f along
// g exists; (b) dually with h ∈ C~ and the pushout of g along h. Missing
// limits downgrade the affected instance to inconclusive.
Report check_w_pullback_pushout_lemma(const Category& cat,
                                      const CompatiblePair& pair,
                                      const MorphismClass& w);

Report check_two_out_of_three(const Category& cat, const MorphismClass& w);

struct ModelStructure {
  MorphismClass c, w, f;
  bool hereditary = false;
};

struct AssemblyResult {
  std::optional<ModelStructure> model;
  Report report;
};

// Verifies, in order: both candidates are WFS, compatibility, existence of
// pushouts along C and pullbacks along F, the Frobenius property of (C~, F),
// left cancellation of C and C~; then materializes W, checks both class
// identities and two-out-of-three, and returns the certified triple
// (C, W, F) with hereditary = true. Factor hooks replace the in-universe
// factorization search of the respective WFS clause.
AssemblyResult assemble_theorem_c(const Category& cat, const CompatiblePair& pair,
                                  const FactorFn& outer_factor = {},
                                  const FactorFn& inner_factor = {},
                                  const WOracle& w_oracle = {});

// With (C, W, F) certified, any competing class making (C, W_other, F) a
// model structure must equal W; reports not-applicable when W_other fails
// the model structure axioms.
Report check_uniqueness_of_w(const Category& cat, const CompatiblePair& pair,
                             const ModelStructure& model,
                             const MorphismClass& w_other);

}  // namespace wfs
