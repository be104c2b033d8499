#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wfs/report.hpp"

namespace wfs {

struct Cone {
  int obj;   // apex object index
  int leg1;  // morphism paired with the first input
  int leg2;  // morphism paired with the second input
};

// Whether the backend can produce all finite limits (computed algebraically in
// an ambient bicomplete category) or only finds them by exhaustive search
// within the declared universe.
enum class LimitGuarantee { SearchOnly, AllFinite };

// Read-only finite category interface. Implementations are immutable after
// construction; all methods are safe to call concurrently.
class Category {
 public:
  virtual ~Category() = default;

  virtual int num_objects() const = 0;
  virtual int num_morphisms() const = 0;
  virtual int dom(int m) const = 0;
  virtual int cod(int m) const = 0;
  virtual int identity(int obj) const = 0;
  virtual int compose(int g, int f) const = 0;  // g ∘ f, cod(f) = dom(g)
  virtual const std::vector<int>& hom(int x, int y) const = 0;

  virtual std::string object_name(int o) const;
  virtual std::string morphism_name(int m) const;

  virtual LimitGuarantee limit_guarantee() const { return LimitGuarantee::SearchOnly; }
  // Limit of the cospan (f, g) with cod(f) = cod(g); legs satisfy
  // f ∘ leg1 = g ∘ leg2. Default: exhaustive search with the universal
  // property verified against every competing cone; lowest object index wins.
  virtual std::optional<Cone> pullback(int f, int g) const;
  // Colimit of the span (f, g) with dom(f) = dom(g); legs satisfy
  // leg1 ∘ f = leg2 ∘ g.
  virtual std::optional<Cone> pushout(int f, int g) const;

  bool is_identity(int m) const;
  bool is_iso(int m) const;
  std::optional<int> inverse(int m) const;
};

// Named membership table for a class of morphisms.
struct MorphismClass {
  std::string name;
  std::vector<char> member;  // indexed by morphism

  MorphismClass() = default;
  MorphismClass(std::string n, int num_morphisms)
      : name(std::move(n)), member(num_morphisms, 0) {}
  static MorphismClass from_predicate(const Category& cat, std::string name,
                                      const std::function<bool(int)>& pred);
  bool contains(int m) const { return member[m] != 0; }
  int size() const;
  bool operator==(const MorphismClass& o) const { return member == o.member; }
  std::vector<int> members() const;
};

struct CommutingSquare {
  int l, r, f, g;  // r ∘ f = g ∘ l;  l: A->B, r: C->D, f: A->C, g: B->D
};

// Explicit table-backed category.
class TableCategory : public Category {
 public:
  std::vector<std::string> obj_names;
  std::vector<std::string> mor_names;
  std::vector<int> mor_dom, mor_cod;
  std::vector<int> idents;                     // per object; -1 if missing
  std::vector<std::vector<int>> compose_table; // [g][f], -1 if undefined

  int num_objects() const override { return (int)obj_names.size(); }
  int num_morphisms() const override { return (int)mor_names.size(); }
  int dom(int m) const override { return mor_dom[m]; }
  int cod(int m) const override { return mor_cod[m]; }
  int identity(int obj) const override { return idents[obj]; }
  int compose(int g, int f) const override;
  const std::vector<int>& hom(int x, int y) const override;
  std::string object_name(int o) const override { return obj_names[o]; }
  std::string morphism_name(int m) const override { return mor_names[m]; }

  void finalize();  // build hom lists after tables are filled

  static TableCategory from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<std::vector<int>> hom_lists_;  // [x * num_objects + y]
};

// Associativity, unit laws and dom/cod coherence, checked exhaustively.
Report validate_category(const TableCategory& cat);

// True iff alpha is a retract of beta in the arrow category.
bool is_retract(const Category& cat, int alpha, int beta);

// Small deterministic parallel helper: runs fn(i) for i in [0, n) on up to
// WFSFORGE_THREADS threads (default: hardware concurrency). Results must be
// written to pre-sized per-index slots by the caller.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace wfs
