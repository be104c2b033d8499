#include "wfs/fixtures.hpp"

#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace wfs {

namespace {

std::string map_name(int domsize, int codsize, const std::vector<int>& img) {
  std::ostringstream os;
  os << "f" << domsize << "to" << codsize << "_";
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) os << ",";
    os << img[i];
  }
  if (img.empty()) os << "e";
  return os.str();
}

int ipow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

int FinSetCategory::map_index(int domsize, int codsize,
                              const std::vector<int>& img) const {
  int maxs = num_objects() - 1;
  int base = 0;
  for (int d = 0; d <= maxs; ++d)
    for (int c = 0; c <= maxs; ++c) {
      if (d > 0 && c == 0) continue;
      if (d == domsize && c == codsize) {
        int pos = 0;
        for (int x : img) pos = pos * codsize + x;
        return base + pos;
      }
      base += ipow(c, d);
    }
  return -1;
}

std::optional<Cone> FinSetCategory::pullback(int f, int g) const {
  assert(mor_cod[f] == mor_cod[g]);
  int a = mor_dom[f], b = mor_dom[g];
  std::vector<int> xs, ys;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      if (maps[f][x] == maps[g][y]) {
        xs.push_back(x);
        ys.push_back(y);
      }
  int p = (int)xs.size();
  if (p > num_objects() - 1) return std::nullopt;
  return Cone{p, map_index(p, a, xs), map_index(p, b, ys)};
}

std::optional<Cone> FinSetCategory::pushout(int f, int g) const {
  assert(mor_dom[f] == mor_dom[g]);
  int a = mor_dom[f], b = mor_cod[f], c = mor_cod[g];
  std::vector<int> up(b + c);
  for (int i = 0; i < b + c; ++i) up[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (up[i] != i) i = up[i] = up[up[i]];
    return i;
  };
  for (int x = 0; x < a; ++x) up[find(maps[f][x])] = find(b + maps[g][x]);
  std::vector<int> label(b + c, -1);
  int p = 0;
  for (int i = 0; i < b + c; ++i) {
    int r = find(i);
    if (label[r] < 0) label[r] = p++;
  }
  if (p > num_objects() - 1) return std::nullopt;
  std::vector<int> img1(b), img2(c);
  for (int i = 0; i < b; ++i) img1[i] = label[find(i)];
  for (int j = 0; j < c; ++j) img2[j] = label[find(b + j)];
  return Cone{p, map_index(b, p, img1), map_index(c, p, img2)};
}

FinSetData build_finset(int max_size) {
  FinSetData fs;
  FinSetCategory& cat = fs.cat;
  for (int n = 0; n <= max_size; ++n)
    cat.obj_names.push_back("S" + std::to_string(n));

  // All functions {0..d-1} -> {0..c-1}, lexicographic per (dom, cod).
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int d = 0; d <= max_size; ++d)
    for (int c = 0; c <= max_size; ++c) {
      if (d > 0 && c == 0) continue;  // no map from nonempty to empty
      std::vector<int> img(d, 0);
      for (;;) {
        int id = (int)cat.mor_names.size();
        cat.mor_names.push_back(map_name(d, c, img));
        cat.mor_dom.push_back(d);
        cat.mor_cod.push_back(c);
        cat.maps.push_back(img);
        index[{d, c, img}] = id;
        int i = d - 1;
        while (i >= 0) {
          if (++img[i] < c) break;
          img[i] = 0;
          --i;
        }
        if (i < 0) break;
      }
    }

  cat.idents.assign(cat.obj_names.size(), -1);
  for (int n = 0; n <= max_size; ++n) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    cat.idents[n] = index.at({n, n, id});
  }

  int nm = (int)cat.mor_names.size();
  cat.compose_table.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (cat.mor_cod[f] != cat.mor_dom[g]) continue;
      std::vector<int> img(cat.mor_dom[f]);
      for (int i = 0; i < cat.mor_dom[f]; ++i) img[i] = cat.maps[g][cat.maps[f][i]];
      cat.compose_table[g][f] = index.at({cat.mor_dom[f], cat.mor_cod[g], img});
    }
  cat.finalize();
  return fs;
}

MorphismClass FinSetData::surjections() const {
  return MorphismClass::from_predicate(cat, "surjections", [&](int m) {
    std::set<int> img(cat.maps[m].begin(), cat.maps[m].end());
    return (int)img.size() == cat.mor_cod[m];
  });
}

MorphismClass FinSetData::injections() const {
  return MorphismClass::from_predicate(cat, "injections", [&](int m) {
    std::set<int> img(cat.maps[m].begin(), cat.maps[m].end());
    return (int)img.size() == cat.mor_dom[m];
  });
}

MorphismClass FinSetData::isos() const {
  return MorphismClass::from_predicate(cat, "isos",
                                       [&](int m) { return cat.is_iso(m); });
}

TableCategory build_terminal_category() {
  TableCategory cat;
  cat.obj_names = {"*"};
  cat.mor_names = {"id"};
  cat.mor_dom = {0};
  cat.mor_cod = {0};
  cat.idents = {0};
  cat.compose_table = {{0}};
  cat.finalize();
  return cat;
}

TableCategory build_poset_category(int n, const std::vector<std::pair<int, int>>& leq) {
  TableCategory cat;
  for (int i = 0; i < n; ++i) cat.obj_names.push_back("P" + std::to_string(i));
  std::map<std::pair<int, int>, int> idx;
  std::set<std::pair<int, int>> rel(leq.begin(), leq.end());
  for (int i = 0; i < n; ++i) rel.insert({i, i});
  for (auto [a, b] : rel) {
    idx[{a, b}] = (int)cat.mor_names.size();
    cat.mor_names.push_back("le" + std::to_string(a) + "_" + std::to_string(b));
    cat.mor_dom.push_back(a);
    cat.mor_cod.push_back(b);
  }
  cat.idents.assign(n, -1);
  for (int i = 0; i < n; ++i) cat.idents[i] = idx.at({i, i});
  int nm = (int)cat.mor_names.size();
  cat.compose_table.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (cat.mor_cod[f] != cat.mor_dom[g]) continue;
      auto it = idx.find({cat.mor_dom[f], cat.mor_cod[g]});
      if (it != idx.end()) cat.compose_table[g][f] = it->second;
      // a missing transitive composite is surfaced by validate_category
    }
  cat.finalize();
  return cat;
}

}  // namespace wfs
