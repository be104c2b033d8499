#include "wfs/category.hpp"

#include <cassert>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace wfs {

std::string Category::object_name(int o) const { return "X" + std::to_string(o); }
std::string Category::morphism_name(int m) const { return "m" + std::to_string(m); }

bool Category::is_identity(int m) const { return identity(dom(m)) == m; }

std::optional<int> Category::inverse(int m) const {
  for (int g : hom(cod(m), dom(m))) {
    if (compose(g, m) == identity(dom(m)) && compose(m, g) == identity(cod(m)))
      return g;
  }
  return std::nullopt;
}

bool Category::is_iso(int m) const { return inverse(m).has_value(); }

std::optional<Cone> Category::pullback(int f, int g) const {
  assert(cod(f) == cod(g));
  int a = dom(f), b = dom(g);
  for (int p = 0; p < num_objects(); ++p) {
    for (int p1 : hom(p, a)) {
      for (int p2 : hom(p, b)) {
        if (compose(f, p1) != compose(g, p2)) continue;
        // universal property against every competing cone
        bool universal = true;
        for (int q = 0; q < num_objects() && universal; ++q) {
          for (int q1 : hom(q, a)) {
            if (!universal) break;
            for (int q2 : hom(q, b)) {
              if (compose(f, q1) != compose(g, q2)) continue;
              int count = 0;
              for (int u : hom(q, p)) {
                if (compose(p1, u) == q1 && compose(p2, u) == q2) ++count;
              }
              if (count != 1) {
                universal = false;
                break;
              }
            }
          }
        }
        if (universal) return Cone{p, p1, p2};
      }
    }
  }
  return std::nullopt;
}

std::optional<Cone> Category::pushout(int f, int g) const {
  assert(dom(f) == dom(g));
  int a = cod(f), b = cod(g);
  for (int p = 0; p < num_objects(); ++p) {
    for (int i1 : hom(a, p)) {
      for (int i2 : hom(b, p)) {
        if (compose(i1, f) != compose(i2, g)) continue;
        bool universal = true;
        for (int q = 0; q < num_objects() && universal; ++q) {
          for (int j1 : hom(a, q)) {
            if (!universal) break;
            for (int j2 : hom(b, q)) {
              if (compose(j1, f) != compose(j2, g)) continue;
              int count = 0;
              for (int u : hom(p, q)) {
                if (compose(u, i1) == j1 && compose(u, i2) == j2) ++count;
              }
              if (count != 1) {
                universal = false;
                break;
              }
            }
          }
        }
        if (universal) return Cone{p, i1, i2};
      }
    }
  }
  return std::nullopt;
}

MorphismClass MorphismClass::from_predicate(const Category& cat, std::string name,
                                            const std::function<bool(int)>& pred) {
  MorphismClass c(std::move(name), cat.num_morphisms());
  for (int m = 0; m < cat.num_morphisms(); ++m) c.member[m] = pred(m) ? 1 : 0;
  return c;
}

int MorphismClass::size() const {
  int n = 0;
  for (char c : member) n += c;
  return n;
}

std::vector<int> MorphismClass::members() const {
  std::vector<int> out;
  for (int i = 0; i < (int)member.size(); ++i)
    if (member[i]) out.push_back(i);
  return out;
}

int TableCategory::compose(int g, int f) const {
  int r = compose_table[g][f];
  assert(r >= 0);
  return r;
}

const std::vector<int>& TableCategory::hom(int x, int y) const {
  return hom_lists_[(size_t)x * num_objects() + y];
}

void TableCategory::finalize() {
  hom_lists_.assign((size_t)num_objects() * num_objects(), {});
  for (int m = 0; m < num_morphisms(); ++m)
    hom_lists_[(size_t)mor_dom[m] * num_objects() + mor_cod[m]].push_back(m);
}

TableCategory TableCategory::from_json(const nlohmann::json& j) {
  TableCategory cat;
  std::map<std::string, int> oid, mid;
  for (const auto& name : j.at("objects")) {
    std::string n = name.get<std::string>();
    if (oid.count(n)) throw std::runtime_error("duplicate object name: " + n);
    oid[n] = (int)cat.obj_names.size();
    cat.obj_names.push_back(n);
  }
  for (const auto& mor : j.at("morphisms")) {
    std::string n = mor.at("name").get<std::string>();
    if (mid.count(n)) throw std::runtime_error("duplicate morphism name: " + n);
    std::string dn = mor.at("dom").get<std::string>();
    std::string cn = mor.at("cod").get<std::string>();
    if (!oid.count(dn)) throw std::runtime_error("dangling dom reference: " + dn);
    if (!oid.count(cn)) throw std::runtime_error("dangling cod reference: " + cn);
    mid[n] = (int)cat.mor_names.size();
    cat.mor_names.push_back(n);
    cat.mor_dom.push_back(oid[dn]);
    cat.mor_cod.push_back(oid[cn]);
  }
  cat.idents.assign(cat.obj_names.size(), -1);
  for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it) {
    if (!oid.count(it.key()))
      throw std::runtime_error("identity for unknown object: " + it.key());
    std::string mn = it.value().get<std::string>();
    if (!mid.count(mn)) throw std::runtime_error("dangling identity reference: " + mn);
    cat.idents[oid[it.key()]] = mid[mn];
  }
  cat.compose_table.assign(cat.mor_names.size(),
                           std::vector<int>((int)cat.mor_names.size(), -1));
  for (const auto& triple : j.at("compose")) {
    std::string gn = triple.at(0).get<std::string>();
    std::string fn = triple.at(1).get<std::string>();
    std::string hn = triple.at(2).get<std::string>();
    for (const auto& n : {gn, fn, hn})
      if (!mid.count(n)) throw std::runtime_error("dangling compose reference: " + n);
    cat.compose_table[mid[gn]][mid[fn]] = mid[hn];
  }
  cat.finalize();
  return cat;
}

nlohmann::json TableCategory::to_json() const {
  nlohmann::json j;
  j["objects"] = obj_names;
  nlohmann::json mors = nlohmann::json::array();
  for (int m = 0; m < num_morphisms(); ++m)
    mors.push_back({{"name", mor_names[m]},
                    {"dom", obj_names[mor_dom[m]]},
                    {"cod", obj_names[mor_cod[m]]}});
  j["morphisms"] = mors;
  nlohmann::json ids;
  for (int o = 0; o < num_objects(); ++o)
    if (idents[o] >= 0) ids[obj_names[o]] = mor_names[idents[o]];
  j["identities"] = ids;
  nlohmann::json comp = nlohmann::json::array();
  for (int g = 0; g < num_morphisms(); ++g)
    for (int f = 0; f < num_morphisms(); ++f)
      if (compose_table[g][f] >= 0)
        comp.push_back({mor_names[g], mor_names[f], mor_names[compose_table[g][f]]});
  j["compose"] = comp;
  return j;
}

Report validate_category(const TableCategory& cat) {
  Report r = Report::pass("validate_category");
  int n = cat.num_morphisms();
  for (int o = 0; o < cat.num_objects(); ++o) {
    int id = cat.idents[o];
    if (id < 0)
      return Report::fail("validate_category",
                          {{"missing_identity", cat.object_name(o)}});
    if (cat.mor_dom[id] != o || cat.mor_cod[id] != o)
      return Report::fail("validate_category",
                          {{"identity_not_endomorphism", cat.object_name(o)}});
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      bool composable = cat.mor_cod[f] == cat.mor_dom[g];
      int gf = cat.compose_table[g][f];
      if (composable && gf < 0)
        return Report::fail("validate_category",
                            {{"missing_composite",
                              {cat.morphism_name(g), cat.morphism_name(f)}}});
      if (!composable && gf >= 0)
        return Report::fail("validate_category",
                            {{"composite_of_noncomposable",
                              {cat.morphism_name(g), cat.morphism_name(f)}}});
      if (composable) {
        if (cat.mor_dom[gf] != cat.mor_dom[f] || cat.mor_cod[gf] != cat.mor_cod[g])
          return Report::fail("validate_category",
                              {{"dom_cod_incoherent",
                                {cat.morphism_name(g), cat.morphism_name(f)}}});
      }
    }
  for (int f = 0; f < n; ++f) {
    if (cat.compose_table[cat.idents[cat.mor_cod[f]]][f] != f ||
        cat.compose_table[f][cat.idents[cat.mor_dom[f]]] != f)
      return Report::fail("validate_category",
                          {{"unit_law_violated", cat.morphism_name(f)}});
  }
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (cat.mor_cod[g] != cat.mor_dom[h]) continue;
      int hg = cat.compose_table[h][g];
      for (int f = 0; f < n; ++f) {
        if (cat.mor_cod[f] != cat.mor_dom[g]) continue;
        if (cat.compose_table[hg][f] !=
            cat.compose_table[h][cat.compose_table[g][f]])
          return Report::fail(
              "validate_category",
              {{"associativity_violated",
                {cat.morphism_name(h), cat.morphism_name(g), cat.morphism_name(f)}}});
      }
    }
  r.note("associativity, units and coherence verified exhaustively");
  return r;
}

bool is_retract(const Category& cat, int alpha, int beta) {
  int a = cat.dom(alpha), b = cat.cod(alpha);
  int c = cat.dom(beta), d = cat.cod(beta);
  // split pairs (u: A->C, s: C->A) with s∘u = id_A
  std::vector<std::pair<int, int>> dompairs, codpairs;
  for (int u : cat.hom(a, c))
    for (int s : cat.hom(c, a))
      if (cat.compose(s, u) == cat.identity(a)) dompairs.push_back({u, s});
  for (int v : cat.hom(b, d))
    for (int t : cat.hom(d, b))
      if (cat.compose(t, v) == cat.identity(b)) codpairs.push_back({v, t});
  for (auto [u, s] : dompairs)
    for (auto [v, t] : codpairs) {
      if (cat.compose(beta, u) == cat.compose(v, alpha) &&
          cat.compose(alpha, s) == cat.compose(t, beta))
        return true;
    }
  return false;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int threads = (int)std::thread::hardware_concurrency();
  if (const char* env = std::getenv("WFSFORGE_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) threads = t;
  }
  if (threads < 1) threads = 1;
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k) {
    pool.emplace_back([&, k] {
      for (int i = k; i < n; i += threads) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wfs
