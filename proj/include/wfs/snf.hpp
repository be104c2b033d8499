#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wfs {

using i64 = long long;

// Dense integer matrix, row-major.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<i64> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  i64& at(int r, int c) { return a[(size_t)r * cols + c]; }
  i64 at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static Mat identity(int n);
  Mat mul(const Mat& other) const;
  Mat transpose() const;
};

// U * A * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ..., s_i >= 0.
struct SmithResult {
  Mat u, uinv, v, vinv, s;
  std::vector<i64> diag;  // min(rows, cols) entries of S
};

SmithResult smith(const Mat& a);

// One particular solution x of  F x ≡ b (mod dst_moduli)  where F is
// dst x src; entries of x are arbitrary integers (caller reduces).
// dst_moduli[j] = 0 means the j-th row is an equation over Z.
std::optional<std::vector<i64>> solve_mod(const Mat& f,
                                          const std::vector<i64>& b,
                                          const std::vector<i64>& dst_moduli);

i64 gcd_i64(i64 a, i64 b);
i64 mod_pos(i64 a, i64 m);  // representative in [0, m)

}  // namespace wfs
