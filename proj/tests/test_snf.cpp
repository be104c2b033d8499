#include <doctest.h>

#include <random>

#include "wfs/snf.hpp"

using namespace wfs;

namespace {

bool is_identity(const Mat& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void check_smith(const Mat& a) {
  SmithResult r = smith(a);
  CHECK(is_identity(r.u.mul(r.uinv)));
  CHECK(is_identity(r.uinv.mul(r.u)));
  CHECK(is_identity(r.v.mul(r.vinv)));
  CHECK(is_identity(r.vinv.mul(r.v)));
  Mat uav = r.u.mul(a).mul(r.v);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      CHECK(uav.at(i, j) == r.s.at(i, j));
  // diagonal, nonnegative, divisibility chain
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (i != j) CHECK(r.s.at(i, j) == 0);
  for (size_t i = 0; i < r.diag.size(); ++i) {
    CHECK(r.diag[i] >= 0);
    if (i + 1 < r.diag.size() && r.diag[i + 1] != 0) {
      CHECK(r.diag[i] != 0);
      CHECK(r.diag[i + 1] % r.diag[i] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form on random small matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + (int)(rng() % 5);
    int cols = 1 + (int)(rng() % 5);
    Mat a(rows, cols);
    for (auto& v : a.a) v = (i64)(rng() % 17) - 8;
    check_smith(a);
  }
}

TEST_CASE("smith handles zero and identity") {
  Mat z(3, 2);
  check_smith(z);
  check_smith(Mat::identity(4));
}

TEST_CASE("smith known invariant factors") {
  // [[2,4],[6,8]]: invariant factors 2, 4 (det = -8, gcd = 2)
  Mat a(2, 2);
  a.at(0, 0) = 2; a.at(0, 1) = 4; a.at(1, 0) = 6; a.at(1, 1) = 8;
  SmithResult r = smith(a);
  CHECK(r.diag == std::vector<i64>{2, 4});
}

TEST_CASE("solve_mod finds modular solutions") {
  // 2x ≡ 2 (mod 4): x = 1 works
  Mat f(1, 1);
  f.at(0, 0) = 2;
  auto x = solve_mod(f, {2}, {4});
  REQUIRE(x.has_value());
  CHECK(mod_pos(2 * (*x)[0], 4) == 2);

  // 2x ≡ 1 (mod 4): no solution
  CHECK(!solve_mod(f, {1}, {4}).has_value());
}

TEST_CASE("solve_mod multi-equation") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 1 + (int)(rng() % 3);
    int cols = 1 + (int)(rng() % 3);
    Mat f(rows, cols);
    for (auto& v : f.a) v = (i64)(rng() % 8);
    std::vector<i64> mods(rows);
    for (auto& m : mods) m = 2 + (i64)(rng() % 7);
    std::vector<i64> x0(cols);
    for (auto& v : x0) v = (i64)(rng() % 8);
    std::vector<i64> b(rows, 0);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) b[i] += f.at(i, j) * x0[j];
      b[i] = mod_pos(b[i], mods[i]);
    }
    auto x = solve_mod(f, b, mods);
    REQUIRE(x.has_value());
    for (int i = 0; i < rows; ++i) {
      i64 s = 0;
      for (int j = 0; j < cols; ++j) s += f.at(i, j) * (*x)[j];
      CHECK(mod_pos(s - b[i], mods[i]) == 0);
    }
  }
}
