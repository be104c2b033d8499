#pragma once

#include "wfs/modmod.hpp"

namespace wfs {

// Ext^1(C, F) computed from a projective presentation 0 -> K -> P -> C -> 0
// with P free (one generator per cyclic factor), as
// coker(Hom(P, F) -> Hom(K, F)).
i64 ext1_order(const ModuleObj& c, const ModuleObj& f);
bool ext1_vanishes(const ModuleObj& c, const ModuleObj& f);

// Independent oracle: enumerate every extension 0 -> F -> E -> C -> 0 up to
// the image subgroup (a short exact sequence splits iff the image of F is a
// direct summand of E, iff it is a pure subgroup). Returns true iff every
// enumerated extension splits. Feasible for |C|·|F| <= 256.
bool ext1_vanishes_bruteforce(const ModuleObj& c, const ModuleObj& f);

// All canonical factor tuples with the given order and factors dividing m.
std::vector<ModuleObj> module_types_of_order(i64 m, i64 order);

}  // namespace wfs
