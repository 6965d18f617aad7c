#include <gtest/gtest.h>

#include <random>

#include "hombra/errors.hpp"
#include "hombra/linalg.hpp"
#include "support.hpp"

using namespace hombra;
using hombra::test::random_map;
using hombra::test::random_vec;

namespace {

const LinMap kAlpha2d{{2, 0}, {-1, 1}};

// Textbook Gauss-Jordan on the augmented matrix, written independently of the
// block solver. Returns nullopt when inconsistent, else (particular, pivots).
std::optional<std::pair<Vec, std::vector<std::size_t>>> oracle_rref(LinMap a, Vec b) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
    std::swap(b[p], b[r]);
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = 0; j < n; ++j) a(r, j) = a(r, j) * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j) - f * a(r, j);
      b[i] = b[i] - f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  Vec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return std::make_pair(x, pivots);
}

}  // namespace

TEST(LinMap, IdentityIsNeutral) {
  std::mt19937 rng(1);
  const LinMap f = random_map(rng, 3, 4);
  EXPECT_EQ(compose(LinMap::identity(3), f), f);
  EXPECT_EQ(compose(f, LinMap::identity(4)), f);
  EXPECT_THROW(compose(f, f), DimensionMismatch);
}

TEST(LinMap, AlphaSquaredOf2dExample) {
  EXPECT_EQ(compose(kAlpha2d, kAlpha2d), (LinMap{{4, 0}, {-3, 1}}));
  EXPECT_EQ(power(kAlpha2d, 2), (LinMap{{4, 0}, {-3, 1}}));
  EXPECT_EQ(power(kAlpha2d, 0), LinMap::identity(2));
  EXPECT_TRUE(is_invertible(kAlpha2d));
}

TEST(LinMap, KronBasics) {
  EXPECT_EQ(kron(LinMap::identity(2), LinMap::identity(2)), LinMap::identity(4));
  std::mt19937 rng(2);
  const LinMap f = random_map(rng, 3, 2), g = random_map(rng, 2, 3);
  const Vec e0 = Vec::basis(2, 0), e1 = Vec::basis(3, 1);
  EXPECT_EQ(kron(f, g).apply(tensor(e0, e1)), tensor(f.apply(e0), g.apply(e1)));
}

TEST(LinMap, KronOfAlpha2d) {
  const LinMap k = kron(kAlpha2d, kAlpha2d);
  const Vec a = kAlpha2d.column(0);  // 2e1 - e2
  EXPECT_EQ(k.column(0), tensor(a, a));
  EXPECT_EQ(k.column(0), (Vec{4, -2, -2, 1}));
}

TEST(LinMap, FlipSwapsLegs) {
  const Vec u{1, 2}, v{3, 5, 7};
  EXPECT_EQ(flip(2, 3).apply(tensor(u, v)), tensor(v, u));
}

TEST(LinMap, Rank) {
  EXPECT_EQ(rank(LinMap{{1, 1}, {2, 2}}), 1u);
  EXPECT_EQ(rank(LinMap::zero(3, 3)), 0u);
  EXPECT_FALSE(is_invertible(LinMap{{1, 1}, {2, 2}}));
}

TEST(Solve, Identity) {
  const Vec v{3, Scalar(-1, 2)};
  const auto s = solve_affine(LinMap::identity(2), v);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, v);
  EXPECT_EQ(s->nullspace_dim(), 0u);
}

TEST(Solve, ZeroSystem) {
  const auto s = solve_affine(LinMap::zero(2, 2), Vec(2));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, Vec(2));
  EXPECT_EQ(s->nullspace_dim(), 2u);
}

TEST(Solve, RankOneExample) {
  const auto s = solve_affine(LinMap{{1, 1}, {2, 2}}, Vec{1, 2});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (Vec{1, 0}));
  ASSERT_EQ(s->nullspace_dim(), 1u);
  EXPECT_EQ(s->nullspace_vector(0), (Vec{-1, 1}));
}

TEST(Solve, Inconsistent) { EXPECT_FALSE(solve_affine(LinMap{{1, 1}, {2, 2}}, Vec{1, 3})); }

TEST(LinalgProperty, CompositionAssociative) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> d(1, 4);
    const std::size_t a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    const LinMap f = random_map(rng, a, b), g = random_map(rng, b, c), h = random_map(rng, c, e);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST(LinalgProperty, KronMixedProduct) {
  std::mt19937 rng(12);
  for (int t = 0; t < 40; ++t) {
    const LinMap f = random_map(rng, 2, 3), g = random_map(rng, 3, 2);
    const LinMap h = random_map(rng, 3, 2), k = random_map(rng, 2, 2);
    EXPECT_EQ(compose(kron(f, h), kron(g, k)), kron(compose(f, g), compose(h, k)));
  }
}

TEST(LinalgProperty, SolutionsAreValidAndCanonical) {
  std::mt19937 rng(13);
  for (int t = 0; t < 150; ++t) {
    std::uniform_int_distribution<std::size_t> d(1, 6);
    const std::size_t m = d(rng), n = d(rng);
    const LinMap a = random_map(rng, m, n, 0.4);
    // half the right-hand sides are made consistent on purpose
    const Vec b = t % 2 == 0 ? a.apply(random_vec(rng, n)) : random_vec(rng, m);
    const auto got = solve_affine(a, b);
    const auto want = oracle_rref(a, b);
    ASSERT_EQ(got.has_value(), want.has_value()) << "trial " << t;
    if (!got) continue;
    EXPECT_EQ(a.apply(got->particular), b);
    EXPECT_EQ(got->particular, want->first);
    EXPECT_EQ(got->nullspace_dim(), n - want->second.size());
    for (std::size_t i = 0; i < got->nullspace_dim(); ++i) EXPECT_TRUE(a.apply(got->nullspace_vector(i)).is_zero());
    EXPECT_EQ(rank(a), want->second.size());
  }
}

TEST(LinalgProperty, SparseSystemMatchesDense) {
  std::mt19937 rng(14);
  for (int t = 0; t < 50; ++t) {
    // block-diagonal systems exercise the split into coupled unknowns
    const LinMap a1 = random_map(rng, 3, 3, 0.5), a2 = random_map(rng, 2, 3, 0.5);
    LinMap a(5, 6);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = a1(r, c);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 3; ++c) a(3 + r, 3 + c) = a2(r, c);
    const Vec b = a.apply(random_vec(rng, 6));
    SparseSystem sys;
    sys.num_vars = 6;
    for (std::size_t r = 0; r < 5; ++r) {
      SparseVec row;
      for (std::size_t c = 0; c < 6; ++c) row.add(c, a(r, c));
      sys.add_equation(row, b[r]);
    }
    const auto s = solve_affine(sys);
    const auto d = solve_affine(a, b);
    ASSERT_TRUE(s && d);
    EXPECT_EQ(s->particular, d->particular);
    EXPECT_EQ(s->nullspace_dim(), d->nullspace_dim());
    EXPECT_EQ(s->particular, oracle_rref(a, b)->first);
  }
}
