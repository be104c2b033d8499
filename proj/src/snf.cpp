#include "wfs/snf.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace wfs {

i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mod_pos(i64 a, i64 m) {
  assert(m > 0);
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::mul(const Mat& o) const {
  assert(cols == o.rows);
  Mat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      i64 v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace {

constexpr i64 kOverflowGuard = (i64)1 << 40;

void check_entries(const Mat& m) {
  for (i64 v : m.a) assert(std::llabs(v) < kOverflowGuard);
}

// Row op: row_i += q * row_j on S and U; inverse column op on Uinv.
void row_add(Mat& s, Mat& u, Mat& uinv, int i, int j, i64 q) {
  for (int c = 0; c < s.cols; ++c) s.at(i, c) += q * s.at(j, c);
  for (int c = 0; c < u.cols; ++c) u.at(i, c) += q * u.at(j, c);
  for (int r = 0; r < uinv.rows; ++r) uinv.at(r, j) -= q * uinv.at(r, i);
}

void row_swap(Mat& s, Mat& u, Mat& uinv, int i, int j) {
  for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
  for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
}

void row_negate(Mat& s, Mat& u, Mat& uinv, int i) {
  for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
  for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
}

void col_add(Mat& s, Mat& v, Mat& vinv, int i, int j, i64 q) {
  // col_i += q * col_j
  for (int r = 0; r < s.rows; ++r) s.at(r, i) += q * s.at(r, j);
  for (int r = 0; r < v.rows; ++r) v.at(r, i) += q * v.at(r, j);
  for (int c = 0; c < vinv.cols; ++c) vinv.at(j, c) -= q * vinv.at(i, c);
}

void col_swap(Mat& s, Mat& v, Mat& vinv, int i, int j) {
  for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
  for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
}

}  // namespace

SmithResult smith(const Mat& a) {
  SmithResult res;
  res.s = a;
  res.u = Mat::identity(a.rows);
  res.uinv = Mat::identity(a.rows);
  res.v = Mat::identity(a.cols);
  res.vinv = Mat::identity(a.cols);
  Mat& s = res.s;

  int n = std::min(a.rows, a.cols);
  for (int t = 0; t < n; ++t) {
    // Find a nonzero pivot of minimal absolute value in the submatrix.
    int pr = -1, pc = -1;
    i64 best = 0;
    for (int i = t; i < s.rows; ++i)
      for (int j = t; j < s.cols; ++j) {
        i64 v = std::llabs(s.at(i, j));
        if (v && (pr < 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // submatrix is zero
    if (pr != t) row_swap(s, res.u, res.uinv, t, pr);
    if (pc != t) col_swap(s, res.v, res.vinv, t, pc);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < s.rows; ++i) {
        if (s.at(i, t) == 0) continue;
        i64 q = s.at(i, t) / s.at(t, t);
        row_add(s, res.u, res.uinv, i, t, -q);
        if (s.at(i, t) != 0) {
          row_swap(s, res.u, res.uinv, t, i);  // smaller remainder up
          clean = false;
        }
      }
      for (int j = t + 1; j < s.cols; ++j) {
        if (s.at(t, j) == 0) continue;
        i64 q = s.at(t, j) / s.at(t, t);
        col_add(s, res.v, res.vinv, j, t, -q);
        if (s.at(t, j) != 0) {
          col_swap(s, res.v, res.vinv, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot divides everything in its row/col; enforce divisibility of the
      // remaining submatrix: if pivot does not divide some entry, fold that
      // row in and restart.
      bool divides_all = true;
      for (int i = t + 1; i < s.rows && divides_all; ++i)
        for (int j = t + 1; j < s.cols; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            row_add(s, res.u, res.uinv, t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s.at(t, t) < 0) row_negate(s, res.u, res.uinv, t);
    check_entries(s);
  }

  res.diag.resize(n);
  for (int i = 0; i < n; ++i) res.diag[i] = s.at(i, i);
  return res;
}

std::optional<std::vector<i64>> solve_mod(const Mat& f,
                                          const std::vector<i64>& b,
                                          const std::vector<i64>& dst_moduli) {
  assert((int)b.size() == f.rows);
  assert((int)dst_moduli.size() == f.rows);
  // Augment with the moduli relations: [F | diag(d)] z = b over Z.
  int extra = 0;
  for (i64 d : dst_moduli)
    if (d != 0) ++extra;
  Mat aug(f.rows, f.cols + extra);
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j) aug.at(i, j) = f.at(i, j);
  int col = f.cols;
  for (int i = 0; i < f.rows; ++i)
    if (dst_moduli[i] != 0) aug.at(i, col++) = dst_moduli[i];

  SmithResult sm = smith(aug);
  // aug = Uinv S Vinv;  solve S y = U b, then z = V y.
  std::vector<i64> ub(f.rows, 0);
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.rows; ++j) ub[i] += sm.u.at(i, j) * b[j];
  std::vector<i64> y(aug.cols, 0);
  int n = std::min(aug.rows, aug.cols);
  for (int i = 0; i < aug.rows; ++i) {
    i64 si = i < n ? sm.diag[i] : 0;
    if (si == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % si != 0) return std::nullopt;
      y[i] = ub[i] / si;
    }
  }
  std::vector<i64> z(aug.cols, 0);
  for (int i = 0; i < aug.cols; ++i)
    for (int j = 0; j < aug.cols; ++j) z[i] += sm.v.at(i, j) * y[j];
  return std::vector<i64>(z.begin(), z.begin() + f.cols);
}

}  // namespace wfs
