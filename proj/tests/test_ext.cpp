#include <doctest.h>

#include "wfs/ext.hpp"

using namespace wfs;

TEST_CASE("ext1 spec examples over Z/4") {
  ModuleObj z4(4, {4}), z2(4, {2}), zero(4, {});
  CHECK(ext1_vanishes(z4, z2));        // free source
  CHECK(!ext1_vanishes(z2, z2));       // non-split Z/4 extension
  CHECK(ext1_vanishes(z2, z4));        // Z/4 self-injective
  CHECK(ext1_vanishes(zero, z2));
  CHECK(ext1_vanishes(z2, zero));
  CHECK(ext1_order(z2, z2) == 2);
}

TEST_CASE("ext1 cyclic formula Ext(Z/a, Z/b) = Z/gcd(a,b)") {
  for (i64 m : {i64{8}}) {
    std::vector<i64> divs = {2, 4, 8};
    for (i64 a : divs)
      for (i64 b : divs) {
        i64 expected = gcd_i64(a, b);
        if (a == m) expected = 1;  // free source
        // Ext^1(Z/a, Z/b) over Z/m: presentation 0 -> Z/(m/a) -> Z/m -> Z/a -> 0
        // gives Hom(Z/(m/a), Z/b)/im = Z/gcd(a, b, m/a * stuff)...
        // use the classical value over Z/m: gcd(a,b) unless a invertible-free.
        // Direct check against brute force instead of the closed form:
        ModuleObj c(m, {a}), f(m, {b});
        CHECK(ext1_vanishes(c, f) == ext1_vanishes_bruteforce(c, f));
        (void)expected;
      }
  }
}

TEST_CASE("ext1 additivity in both arguments") {
  ModuleObj z2(4, {2}), z4(4, {4}), both(4, {4, 2});
  CHECK(ext1_order(both, z2) == ext1_order(z4, z2) * ext1_order(z2, z2));
  CHECK(ext1_order(z2, both) == ext1_order(z2, z4) * ext1_order(z2, z2));
}

TEST_CASE("module_types_of_order enumerates canonical types") {
  auto t16 = module_types_of_order(4, 16);
  // over Z/4: (4,4), (4,2,2), (2,2,2,2)
  CHECK(t16.size() == 3);
  auto t8 = module_types_of_order(8, 8);
  // over Z/8: (8), (4,2), (2,2,2)
  CHECK(t8.size() == 3);
}

TEST_CASE("presentation ext agrees with brute-force splitting oracle") {
  for (i64 m : {i64{4}, i64{8}}) {
    std::vector<ModuleObj> small;
    for (i64 ord : {i64{1}, i64{2}, i64{4}, i64{8}, i64{16}})
      for (const auto& t : module_types_of_order(m, ord)) small.push_back(t);
    for (const auto& c : small)
      for (const auto& f : small) {
        bool pres = ext1_vanishes(c, f);
        bool brute = ext1_vanishes_bruteforce(c, f);
        INFO("m=", m, " C=", c.name(), " F=", f.name());
        CHECK(pres == brute);
      }
  }
}
