#include "wfs/modmod.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace wfs {

ModuleObj::ModuleObj(i64 m, std::vector<i64> f) : modulus(m), factors(std::move(f)) {
  assert(m > 1);
  std::sort(factors.begin(), factors.end(), std::greater<i64>());
  for (i64 d : factors) {
    assert(d > 1 && m % d == 0);
    (void)d;
  }
}

i64 ModuleObj::order() const {
  i64 r = 1;
  for (i64 d : factors) r *= d;
  return r;
}

bool ModuleObj::operator<(const ModuleObj& o) const {
  if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
  return factors < o.factors;
}

std::string ModuleObj::name() const {
  if (factors.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "+";
    os << "Z/" << factors[i];
  }
  return os.str();
}

nlohmann::json ModuleObj::to_json() const {
  return nlohmann::json{{"modulus", modulus}, {"factors", factors}};
}

ModMorphism::ModMorphism(ModuleObj s, ModuleObj d)
    : src(std::move(s)), dst(std::move(d)),
      a((size_t)dst.rank() * src.rank(), 0) {}

ModMorphism::ModMorphism(ModuleObj s, ModuleObj d, std::vector<i64> entries)
    : src(std::move(s)), dst(std::move(d)), a(std::move(entries)) {
  assert((int)a.size() == dst.rank() * src.rank());
  reduce();
}

void ModMorphism::reduce() {
  for (int j = 0; j < dst.rank(); ++j)
    for (int i = 0; i < src.rank(); ++i) at(j, i) = mod_pos(at(j, i), dst.factors[j]);
}

bool ModMorphism::well_defined() const {
  if (src.modulus != dst.modulus) return false;
  for (int j = 0; j < dst.rank(); ++j)
    for (int i = 0; i < src.rank(); ++i)
      if ((at(j, i) * src.factors[i]) % dst.factors[j] != 0) return false;
  return true;
}

bool ModMorphism::is_zero_map() const {
  return std::all_of(a.begin(), a.end(), [](i64 v) { return v == 0; });
}

Mat ModMorphism::matrix() const {
  Mat m(dst.rank(), src.rank());
  m.a = a;
  return m;
}

nlohmann::json ModMorphism::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 0; j < dst.rank(); ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < src.rank(); ++i) row.push_back(at(j, i));
    rows.push_back(row);
  }
  return nlohmann::json{{"src", src.to_json()}, {"dst", dst.to_json()}, {"matrix", rows}};
}

ModMorphism identity_morphism(const ModuleObj& x) {
  ModMorphism f(x, x);
  for (int i = 0; i < x.rank(); ++i) f.at(i, i) = 1;
  return f;
}

ModMorphism compose(const ModMorphism& g, const ModMorphism& f) {
  assert(f.dst == g.src);
  ModMorphism r(f.src, g.dst);
  for (int j = 0; j < g.dst.rank(); ++j)
    for (int i = 0; i < f.src.rank(); ++i) {
      i64 s = 0;
      for (int k = 0; k < f.dst.rank(); ++k) s += g.at(j, k) * f.at(k, i);
      r.at(j, i) = mod_pos(s, g.dst.factors[j]);
    }
  return r;
}

ModMorphism add(const ModMorphism& f, const ModMorphism& g) {
  assert(f.src == g.src && f.dst == g.dst);
  ModMorphism r = f;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += g.a[i];
  r.reduce();
  return r;
}

ModMorphism negate(const ModMorphism& f) {
  ModMorphism r = f;
  for (auto& v : r.a) v = -v;
  r.reduce();
  return r;
}

ModuleObj dual_obj(const ModuleObj& x) { return x; }

ModMorphism dual_map(const ModMorphism& f) {
  // f: X -> Y; f*: Y* -> X* with (f*)_ij = f_ji * e_i / d_j where e = X
  // factors, d = Y factors. Integrality follows from well-definedness of f.
  ModMorphism r(f.dst, f.src);
  for (int i = 0; i < f.src.rank(); ++i)
    for (int j = 0; j < f.dst.rank(); ++j) {
      i64 num = f.at(j, i) * f.src.factors[i];
      assert(num % f.dst.factors[j] == 0);
      r.at(i, j) = num / f.dst.factors[j];
    }
  r.reduce();
  assert(r.well_defined());
  return r;
}

CokernelData cokernel(const ModMorphism& f) {
  const ModuleObj& y = f.dst;
  int ry = y.rank(), rx = f.src.rank();
  Mat rel(ry, rx + ry);
  for (int j = 0; j < ry; ++j) {
    for (int i = 0; i < rx; ++i) rel.at(j, i) = f.at(j, i);
    rel.at(j, rx + j) = y.factors[j];
  }
  SmithResult sm = smith(rel);
  std::vector<std::pair<i64, int>> kept;  // (invariant factor, row index)
  for (int i = 0; i < ry; ++i) {
    i64 s = sm.diag[i];
    assert(s > 0);  // diag(d_j) block gives full row rank
    assert(y.modulus % s == 0);
    if (s > 1) kept.push_back({s, i});
  }
  // SNF order is ascending divisibility; canonical form wants descending.
  std::reverse(kept.begin(), kept.end());

  std::vector<i64> qf;
  for (auto& [s, i] : kept) qf.push_back(s);
  CokernelData out;
  out.obj = ModuleObj(y.modulus, qf);
  out.projection = ModMorphism(y, out.obj);
  for (size_t k = 0; k < kept.size(); ++k) {
    int i = kept[k].second;
    for (int j = 0; j < ry; ++j) out.projection.at((int)k, j) = sm.u.at(i, j);
  }
  out.projection.reduce();
  assert(out.projection.well_defined());
  assert(compose(out.projection, f).is_zero_map());
  return out;
}

i64 coker_order(const ModMorphism& f) {
  const ModuleObj& y = f.dst;
  int ry = y.rank(), rx = f.src.rank();
  Mat rel(ry, rx + ry);
  for (int j = 0; j < ry; ++j) {
    for (int i = 0; i < rx; ++i) rel.at(j, i) = f.at(j, i);
    rel.at(j, rx + j) = y.factors[j];
  }
  SmithResult sm = smith(rel);
  i64 r = 1;
  for (int i = 0; i < ry; ++i) r *= sm.diag[i];
  return r;
}

i64 kernel_order(const ModMorphism& f) {
  // |ker| = |src| * |coker| / |dst|
  return f.src.order() * coker_order(f) / f.dst.order();
}

bool is_mono(const ModMorphism& f) { return kernel_order(f) == 1; }
bool is_epi(const ModMorphism& f) { return coker_order(f) == 1; }
bool is_iso(const ModMorphism& f) { return is_mono(f) && is_epi(f); }

KernelData kernel(const ModMorphism& f) {
  CokernelData ck = cokernel(dual_map(f));
  KernelData out;
  out.obj = dual_obj(ck.obj);
  out.inclusion = dual_map(ck.projection);
  assert(compose(f, out.inclusion).is_zero_map());
  assert(is_mono(out.inclusion));
  assert(out.obj.order() == kernel_order(f));
  return out;
}

BiproductData biproduct(const ModuleObj& x, const ModuleObj& y) {
  assert(x.modulus == y.modulus);
  i64 m = x.modulus;
  struct Slot { i64 d; int origin; int idx; };
  std::vector<Slot> slots;
  for (int i = 0; i < x.rank(); ++i) slots.push_back({x.factors[i], 0, i});
  for (int i = 0; i < y.rank(); ++i) slots.push_back({y.factors[i], 1, i});
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.d > b.d; });
  std::vector<i64> fs;
  for (auto& s : slots) fs.push_back(s.d);
  BiproductData out;
  out.obj = ModuleObj(m, fs);
  out.inj1 = ModMorphism(x, out.obj);
  out.inj2 = ModMorphism(y, out.obj);
  out.proj1 = ModMorphism(out.obj, x);
  out.proj2 = ModMorphism(out.obj, y);
  for (int k = 0; k < (int)slots.size(); ++k) {
    if (slots[k].origin == 0) {
      out.inj1.at(k, slots[k].idx) = 1;
      out.proj1.at(slots[k].idx, k) = 1;
    } else {
      out.inj2.at(k, slots[k].idx) = 1;
      out.proj2.at(slots[k].idx, k) = 1;
    }
  }
  return out;
}

std::optional<ModMorphism> lift_through_mono(const ModMorphism& m,
                                             const ModMorphism& g) {
  assert(m.dst == g.dst);
  const ModuleObj& A = m.src;
  const ModuleObj& B = m.dst;
  const ModuleObj& T = g.src;
  ModMorphism h(T, A);
  int ra = A.rank(), rb = B.rank();
  for (int i = 0; i < T.rank(); ++i) {
    // Solve M x ≡ g_col_i (mod B), plus well-definedness rows
    // t_i * x_j ≡ 0 (mod e_j).
    Mat fmat(rb + ra, ra);
    std::vector<i64> b(rb + ra, 0), mods(rb + ra);
    for (int j = 0; j < rb; ++j) {
      for (int k = 0; k < ra; ++k) fmat.at(j, k) = m.at(j, k);
      b[j] = g.at(j, i);
      mods[j] = B.factors[j];
    }
    for (int j = 0; j < ra; ++j) {
      fmat.at(rb + j, j) = T.factors[i];
      mods[rb + j] = A.factors[j];
    }
    auto x = solve_mod(fmat, b, mods);
    if (!x) return std::nullopt;
    for (int j = 0; j < ra; ++j) h.at(j, i) = (*x)[j];
  }
  h.reduce();
  if (!h.well_defined()) return std::nullopt;
  if (!(compose(m, h) == g)) return std::nullopt;
  return h;
}

std::optional<ModMorphism> descend_through_epi(const ModMorphism& e,
                                               const ModMorphism& g) {
  assert(e.src == g.src);
  auto hd = lift_through_mono(dual_map(e), dual_map(g));
  if (!hd) return std::nullopt;
  ModMorphism h = dual_map(*hd);
  if (!(compose(h, e) == g)) return std::nullopt;
  return h;
}

std::vector<std::vector<i64>> elements(const ModuleObj& x) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> cur(x.rank(), 0);
  for (;;) {
    out.push_back(cur);
    int i = x.rank() - 1;
    while (i >= 0) {
      if (++cur[i] < x.factors[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<i64> apply(const ModMorphism& f, const std::vector<i64>& x) {
  std::vector<i64> y(f.dst.rank(), 0);
  for (int j = 0; j < f.dst.rank(); ++j) {
    i64 s = 0;
    for (int i = 0; i < f.src.rank(); ++i) s += f.at(j, i) * x[i];
    y[j] = mod_pos(s, f.dst.factors[j]);
  }
  return y;
}

i64 hom_count(const ModuleObj& x, const ModuleObj& y) {
  i64 n = 1;
  for (int j = 0; j < y.rank(); ++j)
    for (int i = 0; i < x.rank(); ++i) n *= gcd_i64(y.factors[j], x.factors[i]);
  return n;
}

ModMorphism hom_at(const ModuleObj& x, const ModuleObj& y, i64 pos) {
  ModMorphism f(x, y);
  // Row-major mixed radix, last entry varying fastest.
  for (int j = y.rank() - 1; j >= 0; --j)
    for (int i = x.rank() - 1; i >= 0; --i) {
      i64 g = gcd_i64(y.factors[j], x.factors[i]);
      i64 step = y.factors[j] / g;
      f.at(j, i) = (pos % g) * step;
      pos /= g;
    }
  assert(pos == 0);
  return f;
}

i64 hom_position(const ModMorphism& f) {
  i64 pos = 0;
  for (int j = 0; j < f.dst.rank(); ++j)
    for (int i = 0; i < f.src.rank(); ++i) {
      i64 g = gcd_i64(f.dst.factors[j], f.src.factors[i]);
      i64 step = f.dst.factors[j] / g;
      assert(f.at(j, i) % step == 0);
      pos = pos * g + f.at(j, i) / step;
    }
  return pos;
}

std::vector<ModMorphism> hom_set(const ModuleObj& x, const ModuleObj& y) {
  i64 n = hom_count(x, y);
  std::vector<ModMorphism> out;
  out.reserve((size_t)n);
  for (i64 p = 0; p < n; ++p) out.push_back(hom_at(x, y, p));
  return out;
}

}  // namespace wfs
