#pragma once

#include "wfs/modcat.hpp"

namespace wfs {

// Nonnegatively graded chain complex truncated at top degree n.
struct ChainComplex {
  i64 modulus = 0;
  int n = 0;
  std::vector<ModuleObj> comps;   // degrees 0..n
  std::vector<ModMorphism> diffs; // diffs[k-1] = d_k : comps[k] -> comps[k-1]

  const ModuleObj& comp(int k) const { return comps[k]; }
  // d_k, with zero maps outside 1..n
  ModMorphism d(int k) const;
  bool validate() const;  // well-defined differentials with d∘d = 0
  bool operator==(const ChainComplex& o) const;
  std::string name() const;  // components top to bottom, e.g. "Z/4|Z/2|0"
  nlohmann::json to_json() const;
  static ChainComplex from_json(const nlohmann::json& j);
};

struct ChainMap {
  ChainComplex src, dst;
  std::vector<ModMorphism> levels;  // degrees 0..n

  const ModMorphism& level(int k) const { return levels[k]; }
  bool validate() const;  // commutes with the differentials
  bool operator==(const ChainMap& o) const {
    return src == o.src && dst == o.dst && levels == o.levels;
  }
  nlohmann::json to_json() const;
};

ChainMap identity_chain(const ChainComplex& x);
ChainMap compose_chain(const ChainMap& g, const ChainMap& f);
ChainMap zero_chain(const ChainComplex& x, const ChainComplex& y);
// The same complex with zero components appended up to top degree n.
ChainComplex extend_complex(const ChainComplex& x, int n);
ChainMap extend_chain_map(const ChainMap& f, int n);

// H_k = ker(coker(d_{k+1}) -> X_{k-1}) via the induced differential.
ModuleObj homology(const ChainComplex& x, int k);
// Induced map H_k(f), computed by descending to the cokernel presentation
// and lifting into the kernel.
ModMorphism homology_map(const ChainMap& f, int k);

struct ChainClassify {
  bool cofibration = false;       // levelwise mono with projective cokernel
  bool fibration = false;         // levelwise epi in degrees >= 1
  bool weak_equivalence = false;  // iso on homology in every degree
};
ChainClassify classify(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

// Degreewise algebraic limits with the induced differentials.
struct ChainSpanLimit {
  ChainComplex obj;
  ChainMap leg1, leg2;
};
ChainSpanLimit chain_pullback(const ChainMap& f, const ChainMap& g);
ChainSpanLimit chain_pushout(const ChainMap& f, const ChainMap& g);

// f = p ∘ i with i a trivial cofibration (disk attachment) and p a
// fibration; both legs re-verified by classify.
std::pair<ChainMap, ChainMap> factor_trivcof_fib(const ChainMap& f);

struct ChainFactorOutcome {
  std::optional<std::pair<ChainMap, ChainMap>> factors;  // (i, p), p ∘ i = f
  Report report;  // bound-exhausted diagnostics when absent
};

// f = p ∘ i with i a cofibration and p a trivial fibration, working in
// degrees up to n + headroom. The surjective quasi-isomorphism resolutions
// involved need not close within the bound for non-semisimple moduli; that
// case is reported as bound-exhausted, never silently wrong. The shortcut
// takes a complex with projective components as its own resolution.
ChainFactorOutcome factor_cof_trivfib(const ChainMap& f, int headroom,
                                      bool projective_shortcut = true);

// Builds P with a surjective quasi-isomorphism eps: P -> Y, degreewise free,
// supported in degrees 0..n_build; absent when the truncation cannot match
// the homology of Y.
std::optional<ChainMap> free_chain_resolution(const ChainComplex& y, int n_build,
                                              bool projective_shortcut);

// Every complex with components of at most max_factors cyclic factors per
// degree and every chain map between them.
class ChainCategory : public Category {
 public:
  ChainCategory(i64 modulus, int n, int max_factors);

  i64 modulus() const { return modulus_; }
  int top_degree() const { return n_; }
  int max_factors() const { return max_factors_; }

  const ChainComplex& object(int o) const { return objects_[o]; }
  const ChainMap& morphism(int m) const { return mors_[m]; }
  int object_index(const ChainComplex& x) const;
  std::optional<int> morphism_index(const ChainMap& f) const;

  int num_objects() const override { return (int)objects_.size(); }
  int num_morphisms() const override { return (int)mors_.size(); }
  int dom(int m) const override { return mor_dom_[m]; }
  int cod(int m) const override { return mor_cod_[m]; }
  int identity(int obj) const override { return idents_[obj]; }
  int compose(int g, int f) const override;
  const std::vector<int>& hom(int x, int y) const override;
  std::string object_name(int o) const override;
  std::string morphism_name(int m) const override;

  LimitGuarantee limit_guarantee() const override { return LimitGuarantee::AllFinite; }
  std::optional<Cone> pullback(int f, int g) const override;
  std::optional<Cone> pushout(int f, int g) const override;

  MorphismClass cofibrations() const;
  MorphismClass fibrations() const;
  MorphismClass weak_equivalences() const;
  MorphismClass trivial_cofibrations() const;
  MorphismClass trivial_fibrations() const;

 private:
  i64 modulus_;
  int n_, max_factors_;
  std::vector<ChainComplex> objects_;
  std::vector<ChainMap> mors_;
  std::vector<int> mor_dom_, mor_cod_, idents_;
  std::vector<std::vector<int>> hom_lists_;
  std::map<std::vector<i64>, int> mor_index_;
  std::vector<ChainClassify> flags_;
};

// W membership through factor_trivcof_fib: alpha = p ∘ i with i a trivial
// cofibration, so alpha lies in W exactly when p is a quasi-isomorphism.
WOracle chain_w_oracle(const ChainCategory& cat);

// Frobenius property of (C~, F): the base change of a trivial cofibration
// along a fibration is a trivial cofibration, with the comparison map between
// base-changed and original cokernels verified to be an isomorphism on every
// pullback square.
Report chain_frobenius(const ChainCategory& cat);

// CP1-CP3 of the projective classes, left cancellation of the cofibrations
// and trivial cofibrations, the Frobenius property of (C~, F) with the
// comparison map between base-changed and original cokernels verified to be
// an isomorphism on every pullback square, and agreement of W with the
// quasi-isomorphism predicate.
Report prop33_suite(const ChainCategory& cat);

}  // namespace wfs
