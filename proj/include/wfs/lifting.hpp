#pragma once

#include "wfs/category.hpp"

namespace wfs {

struct WfsCandidate {
  MorphismClass left;   // C
  MorphismClass right;  // F
};

// Result of a backend factorization strategy for one morphism. Either an
// in-universe pair (c, f) of morphism indices, or a constructed witness that
// passes through an intermediate outside the enumerated universe; constructed
// witnesses carry a description and must arrive pre-verified by the backend's
// class predicates.
struct FactorWitness {
  bool in_universe = true;
  int c = -1, f = -1;
  bool verified = false;
  nlohmann::json description;
};
using FactorFn = std::function<std::optional<FactorWitness>(int)>;

// Diagonal filler for a commuting square, first in morphism order.
std::optional<int> has_lift(const Category& cat, const CommutingSquare& sq);

// True iff r has the right lifting property against l; on failure returns the
// first commuting square without a filler.
std::optional<CommutingSquare> rlp_counterexample(const Category& cat, int l, int r);
bool has_rlp(const Category& cat, int l, int r);

MorphismClass right_orthogonal(const Category& cat, const MorphismClass& c);
MorphismClass left_orthogonal(const Category& cat, const MorphismClass& f);

// Def of WFS: C^□ = F, ^□F = C, and every morphism factors as f ∘ c.
// factor_fn, when given, replaces the in-universe factorization search.
Report check_wfs(const Category& cat, const WfsCandidate& cand,
                 const FactorFn& factor_fn = {});

Report check_left_cancellation(const Category& cat, const MorphismClass& c);
Report check_right_cancellation(const Category& cat, const MorphismClass& f);

// Members of cls are preserved under pullback along members of along.
Report check_frobenius(const Category& cat, const MorphismClass& cls,
                       const MorphismClass& along);

Report check_closure_properties(const Category& cat, const WfsCandidate& cand);

}  // namespace wfs
