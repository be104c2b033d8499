#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wfs/snf.hpp"

namespace wfs {

// Finitely generated Z/m-module in canonical form: a direct sum of cyclic
// groups Z/d_1 ⊕ ... ⊕ Z/d_k with each d_i > 1 dividing m, sorted descending.
// The empty tuple is the zero module.
struct ModuleObj {
  i64 modulus = 0;
  std::vector<i64> factors;

  ModuleObj() = default;
  ModuleObj(i64 m, std::vector<i64> f);

  int rank() const { return (int)factors.size(); }
  i64 order() const;
  bool is_zero() const { return factors.empty(); }
  bool operator==(const ModuleObj& o) const {
    return modulus == o.modulus && factors == o.factors;
  }
  bool operator<(const ModuleObj& o) const;
  std::string name() const;  // e.g. "Z/4+Z/2", "0"
  nlohmann::json to_json() const;
};

// Morphism between canonical modules: integer matrix (dst.rank x src.rank)
// with entries a_ji reduced mod d'_j, well-defined when a_ji * d_i ≡ 0
// (mod d'_j).
struct ModMorphism {
  ModuleObj src, dst;
  std::vector<i64> a;  // row-major, dst.rank rows x src.rank cols

  ModMorphism() = default;
  ModMorphism(ModuleObj s, ModuleObj d);  // zero morphism
  ModMorphism(ModuleObj s, ModuleObj d, std::vector<i64> entries);

  i64& at(int j, int i) { return a[(size_t)j * src.rank() + i]; }
  i64 at(int j, int i) const { return a[(size_t)j * src.rank() + i]; }
  void reduce();  // entries into [0, d'_j)
  bool well_defined() const;
  bool operator==(const ModMorphism& o) const {
    return src == o.src && dst == o.dst && a == o.a;
  }
  bool is_zero_map() const;
  Mat matrix() const;
  nlohmann::json to_json() const;
};

ModMorphism identity_morphism(const ModuleObj& x);
ModMorphism compose(const ModMorphism& g, const ModMorphism& f);  // g ∘ f
ModMorphism add(const ModMorphism& f, const ModMorphism& g);
ModMorphism negate(const ModMorphism& f);

// Pontryagin-style dual: X* has the same factors; (f*)_ij = f_ji * e_i / d_j.
ModuleObj dual_obj(const ModuleObj& x);
ModMorphism dual_map(const ModMorphism& f);

struct KernelData {
  ModuleObj obj;
  ModMorphism inclusion;  // obj -> src(f), mono
};
struct CokernelData {
  ModuleObj obj;
  ModMorphism projection;  // dst(f) -> obj, epi
};

KernelData kernel(const ModMorphism& f);
CokernelData cokernel(const ModMorphism& f);

i64 kernel_order(const ModMorphism& f);
bool is_mono(const ModMorphism& f);
bool is_epi(const ModMorphism& f);
bool is_iso(const ModMorphism& f);

struct BiproductData {
  ModuleObj obj;  // canonical form of X ⊕ Y
  ModMorphism inj1, inj2;    // X -> obj, Y -> obj
  ModMorphism proj1, proj2;  // obj -> X, obj -> Y
};
BiproductData biproduct(const ModuleObj& x, const ModuleObj& y);

// h with m ∘ h = g, for m mono and g factoring through the image of m.
std::optional<ModMorphism> lift_through_mono(const ModMorphism& m,
                                             const ModMorphism& g);
// h with h ∘ e = g, for e epi and g vanishing on ker(e).
std::optional<ModMorphism> descend_through_epi(const ModMorphism& e,
                                               const ModMorphism& g);

// Element-level helpers (test oracles and brute-force scans).
std::vector<std::vector<i64>> elements(const ModuleObj& x);
std::vector<i64> apply(const ModMorphism& f, const std::vector<i64>& x);

// All well-defined morphisms X -> Y in canonical (mixed-radix) order.
std::vector<ModMorphism> hom_set(const ModuleObj& x, const ModuleObj& y);
i64 hom_count(const ModuleObj& x, const ModuleObj& y);
// Position of f within hom_set(src, dst) without materializing the list.
i64 hom_position(const ModMorphism& f);
ModMorphism hom_at(const ModuleObj& x, const ModuleObj& y, i64 pos);

}  // namespace wfs
