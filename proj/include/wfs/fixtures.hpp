#pragma once

#include "wfs/category.hpp"

namespace wfs {

// Table category of finite sets with set-theoretic pullbacks and pushouts
// (absent when the resulting set exceeds the size bound).
class FinSetCategory : public TableCategory {
 public:
  std::vector<std::vector<int>> maps;  // per morphism: image of each element

  int map_index(int domsize, int codsize, const std::vector<int>& img) const;
  std::optional<Cone> pullback(int f, int g) const override;
  std::optional<Cone> pushout(int f, int g) const override;
};

// The category of finite sets {0..n-1} for n <= max_size, with all functions.
struct FinSetData {
  FinSetCategory cat;

  MorphismClass surjections() const;
  MorphismClass injections() const;
  MorphismClass isos() const;
};

FinSetData build_finset(int max_size);

// Trivial one-object one-morphism category.
TableCategory build_terminal_category();

// Finite poset as a category: one morphism x -> y per relation x <= y.
// rel holds the full order relation (reflexive, transitive).
TableCategory build_poset_category(int n, const std::vector<std::pair<int, int>>& leq);

}  // namespace wfs
