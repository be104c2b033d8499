#include "wfs/ext.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_set>

namespace wfs {

namespace {

// Coordinates of Hom(A, B): one coordinate per matrix slot (j, i) with radix
// gcd(b_j, a_i); slot value = coord * (b_j / radix).
struct HomCoords {
  ModuleObj a, b;
  std::vector<i64> radix;  // row-major over (j, i)

  explicit HomCoords(ModuleObj a_, ModuleObj b_) : a(std::move(a_)), b(std::move(b_)) {
    for (int j = 0; j < b.rank(); ++j)
      for (int i = 0; i < a.rank(); ++i)
        radix.push_back(gcd_i64(b.factors[j], a.factors[i]));
  }
  int dim() const { return (int)radix.size(); }

  ModMorphism basis_hom(int k) const {
    ModMorphism f(a, b);
    int j = a.rank() ? k / a.rank() : 0;
    int i = a.rank() ? k % a.rank() : 0;
    f.at(j, i) = b.factors[j] / radix[k];
    return f;
  }
  std::vector<i64> coords_of(const ModMorphism& f) const {
    std::vector<i64> out(radix.size());
    int k = 0;
    for (int j = 0; j < b.rank(); ++j)
      for (int i = 0; i < a.rank(); ++i, ++k) {
        i64 step = b.factors[j] / radix[k];
        assert(f.at(j, i) % step == 0);
        out[k] = f.at(j, i) / step;
      }
    return out;
  }
};

}  // namespace

i64 ext1_order(const ModuleObj& c, const ModuleObj& f) {
  assert(c.modulus == f.modulus);
  i64 m = c.modulus;
  if (c.is_zero() || f.is_zero()) return 1;
  // Free cover P = (Z/m)^rank(C), epsilon = diag(1).
  ModuleObj p(m, std::vector<i64>(c.rank(), m));
  ModMorphism eps(p, c);
  for (int i = 0; i < c.rank(); ++i) eps.at(i, i) = 1;
  KernelData k = kernel(eps);
  if (k.obj.is_zero()) return 1;  // C free

  HomCoords hp(p, f), hk(k.obj, f);
  // Precomposition with the kernel inclusion, expressed on coordinates.
  Mat t(hk.dim(), hp.dim());
  for (int col = 0; col < hp.dim(); ++col) {
    ModMorphism psi = compose(hp.basis_hom(col), k.inclusion);
    std::vector<i64> cs = hk.coords_of(psi);
    for (int row = 0; row < hk.dim(); ++row) t.at(row, col) = cs[row];
  }
  // Ext^1 = coker of t modulo the target radices.
  Mat rel(hk.dim(), hp.dim() + hk.dim());
  for (int r = 0; r < hk.dim(); ++r) {
    for (int cidx = 0; cidx < hp.dim(); ++cidx) rel.at(r, cidx) = t.at(r, cidx);
    rel.at(r, hp.dim() + r) = hk.radix[r];
  }
  SmithResult sm = smith(rel);
  i64 order = 1;
  for (int i = 0; i < hk.dim(); ++i) order *= sm.diag[i];
  return order;
}

bool ext1_vanishes(const ModuleObj& c, const ModuleObj& f) {
  return ext1_order(c, f) == 1;
}

std::vector<ModuleObj> module_types_of_order(i64 m, i64 order) {
  std::vector<i64> divs;
  for (i64 d = 2; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  std::sort(divs.begin(), divs.end(), std::greater<i64>());
  std::vector<ModuleObj> out;
  std::vector<i64> cur;
  std::function<void(i64, size_t)> rec = [&](i64 left, size_t start) {
    if (left == 1) {
      out.push_back(ModuleObj(m, cur));
      return;
    }
    for (size_t i = start; i < divs.size(); ++i) {
      if (left % divs[i] != 0) continue;
      cur.push_back(divs[i]);
      rec(left / divs[i], i);
      cur.pop_back();
    }
  };
  if (order == 1) {
    out.push_back(ModuleObj(m, {}));
  } else {
    rec(order, 0);
  }
  return out;
}

namespace {

// ---- brute-force oracle over subgroup lattices ----

using Mask = std::array<uint64_t, 4>;  // bitset over <=256 elements

struct MaskHash {
  size_t operator()(const Mask& m) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : m) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }
};

inline void set_bit(Mask& m, int i) { m[i >> 6] |= 1ull << (i & 63); }
inline bool get_bit(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1; }
inline int popcount(const Mask& m) {
  int c = 0;
  for (uint64_t w : m) c += __builtin_popcountll(w);
  return c;
}
inline Mask mask_and(const Mask& a, const Mask& b) {
  Mask r;
  for (int i = 0; i < 4; ++i) r[i] = a[i] & b[i];
  return r;
}

struct SubgroupInfo {
  std::vector<i64> stype;  // invariant factors of S
  std::vector<i64> qtype;  // invariant factors of E/S
  bool pure;               // pure subgroup <=> direct summand (finite case)
};

struct SubgroupTable {
  // Keyed by (S type, E/S type): does any such subgroup exist, and is any
  // such subgroup non-pure (i.e. some extension with these ends non-split)?
  std::map<std::pair<std::vector<i64>, std::vector<i64>>, std::pair<bool, bool>>
      classes;
};

struct GroupCtx {
  std::vector<i64> factors;
  i64 p;  // prime (factors are powers of p)
  int n;  // group order
  std::vector<std::vector<int>> add;  // addition on element indices
  std::vector<int> pmul;              // index of p*x
  std::vector<Mask> pkE;              // masks of p^k * E, k = 0..
  int max_exp;

  explicit GroupCtx(const std::vector<i64>& fs) : factors(fs) {
    n = 1;
    for (i64 d : fs) n *= (int)d;
    p = 2;
    if (!fs.empty()) {
      i64 d = fs[0];
      for (i64 q = 2; q <= d; ++q)
        if (d % q == 0) {
          p = q;
          break;
        }
    }
    // element index <-> tuple, mixed radix (last factor fastest)
    auto decode = [&](int idx) {
      std::vector<i64> t(fs.size());
      for (int i = (int)fs.size() - 1; i >= 0; --i) {
        t[i] = idx % fs[i];
        idx /= (int)fs[i];
      }
      return t;
    };
    auto encode = [&](const std::vector<i64>& t) {
      int idx = 0;
      for (size_t i = 0; i < fs.size(); ++i) idx = idx * (int)fs[i] + (int)t[i];
      return idx;
    };
    add.assign(n, std::vector<int>(n));
    std::vector<std::vector<i64>> tuples(n);
    for (int i = 0; i < n; ++i) tuples[i] = decode(i);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<i64> t(fs.size());
        for (size_t k = 0; k < fs.size(); ++k)
          t[k] = (tuples[i][k] + tuples[j][k]) % fs[k];
        add[i][j] = encode(t);
      }
    pmul.resize(n);
    for (int i = 0; i < n; ++i) {
      std::vector<i64> t(fs.size());
      for (size_t k = 0; k < fs.size(); ++k) t[k] = (tuples[i][k] * p) % fs[k];
      pmul[i] = encode(t);
    }
    max_exp = 0;
    for (i64 d : fs) {
      int e = 0;
      while (d > 1) {
        d /= p;
        ++e;
      }
      max_exp = std::max(max_exp, e);
    }
    Mask all{};
    for (int i = 0; i < n; ++i) set_bit(all, i);
    pkE.push_back(all);
    for (int k = 1; k <= max_exp; ++k) {
      Mask m{};
      for (int i = 0; i < n; ++i)
        if (get_bit(pkE[k - 1], i)) set_bit(m, pmul[i]);
      pkE.push_back(m);
    }
  }

  Mask shift(const Mask& s, int g) const {
    Mask r{};
    for (int w = 0; w < 4; ++w) {
      uint64_t bits = s[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        set_bit(r, add[w * 64 + b][g]);
      }
    }
    return r;
  }

  Mask closure(const Mask& s, int g) const {
    Mask h = s;
    int x = g;
    while (!get_bit(h, x)) {
      Mask sh = shift(s, x);
      for (int w = 0; w < 4; ++w) h[w] |= sh[w];
      x = add[x][g];
    }
    return h;
  }

  std::vector<i64> type_from_torsion(const std::vector<int>& tk) const {
    // tk[k] = |S[p^k]|; number of cyclic factors with exponent >= k is
    // log_p(tk[k]/tk[k-1]).
    std::vector<int> geq(max_exp + 2, 0);
    for (int k = 1; k <= max_exp; ++k) {
      int q = tk[k] / tk[k - 1];
      int e = 0;
      while (q > 1) {
        q /= (int)p;
        ++e;
      }
      geq[k] = e;
    }
    std::vector<i64> type;
    for (int k = max_exp; k >= 1; --k) {
      int exactly = geq[k] - geq[k + 1];
      i64 pk = 1;
      for (int t = 0; t < k; ++t) pk *= p;
      for (int c = 0; c < exactly; ++c) type.push_back(pk);
    }
    std::sort(type.begin(), type.end(), std::greater<i64>());
    return type;
  }

  SubgroupInfo analyze(const Mask& s) const {
    SubgroupInfo info;
    int sorder = popcount(s);
    // S type from torsion counts.
    std::vector<int> tk(max_exp + 1);
    tk[0] = 1;
    for (int k = 1; k <= max_exp; ++k) {
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (!get_bit(s, i)) continue;
        int x = i;
        for (int t = 0; t < k; ++t) x = pmul[x];
        if (x == 0) ++c;
      }
      tk[k] = c;
    }
    info.stype = type_from_torsion(tk);
    // E/S type from |(E/S)[p^k]| = |{x : p^k x in S}| / |S|.
    std::vector<int> qk(max_exp + 1);
    qk[0] = 1;
    for (int k = 1; k <= max_exp; ++k) {
      int c = 0;
      for (int i = 0; i < n; ++i) {
        int x = i;
        for (int t = 0; t < k; ++t) x = pmul[x];
        if (get_bit(s, x)) ++c;
      }
      qk[k] = c / sorder;
    }
    info.qtype = type_from_torsion(qk);
    // Purity: S ∩ p^k E = p^k S for all k.
    info.pure = true;
    Mask pks = s;
    for (int k = 1; k <= max_exp && info.pure; ++k) {
      Mask next{};
      for (int i = 0; i < n; ++i)
        if (get_bit(pks, i)) set_bit(next, pmul[i]);
      pks = next;
      if (mask_and(s, pkE[k]) != pks) info.pure = false;
    }
    return info;
  }
};

// Subgroups larger than this are never needed: the oracle only classifies
// kernels of order <= 16 (pairs with |C|, |F| <= 16).
constexpr int kMaxSubgroupOrder = 16;

std::map<std::vector<i64>, SubgroupTable> g_subgroup_cache;
std::mutex g_subgroup_mutex;

const SubgroupTable& subgroup_table(const std::vector<i64>& factors) {
  std::lock_guard<std::mutex> lock(g_subgroup_mutex);
  auto it = g_subgroup_cache.find(factors);
  if (it != g_subgroup_cache.end()) return it->second;

  GroupCtx ctx(factors);
  SubgroupTable table;
  std::unordered_set<Mask, MaskHash> seen;
  std::vector<Mask> frontier;
  Mask zero{};
  set_bit(zero, 0);
  seen.insert(zero);
  frontier.push_back(zero);
  std::vector<Mask> all_subgroups{zero};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (const Mask& s : frontier) {
      if (popcount(s) >= kMaxSubgroupOrder) continue;
      for (int g = 1; g < ctx.n; ++g) {
        if (get_bit(s, g)) continue;
        Mask t = ctx.closure(s, g);
        if (popcount(t) > kMaxSubgroupOrder) continue;
        if (seen.insert(t).second) {
          next.push_back(t);
          all_subgroups.push_back(t);
        }
      }
    }
    frontier = std::move(next);
  }
  for (const Mask& s : all_subgroups) {
    SubgroupInfo info = ctx.analyze(s);
    auto& entry = table.classes[{info.stype, info.qtype}];
    entry.first = true;
    if (!info.pure) entry.second = true;
  }
  return g_subgroup_cache.emplace(factors, std::move(table)).first->second;
}

}  // namespace

bool ext1_vanishes_bruteforce(const ModuleObj& c, const ModuleObj& f) {
  assert(c.modulus == f.modulus);
  if (c.is_zero() || f.is_zero()) return true;
  i64 target = c.order() * f.order();
  assert(target <= 256);
  assert(f.order() <= kMaxSubgroupOrder);
  for (const ModuleObj& e : module_types_of_order(c.modulus, target)) {
    const SubgroupTable& table = subgroup_table(e.factors);
    auto it = table.classes.find({f.factors, c.factors});
    if (it != table.classes.end() && it->second.second) return false;  // non-split found
  }
  return true;
}

}  // namespace wfs
