#include <gtest/gtest.h>

#include "qsym/errors.hpp"
#include "qsym/linalg.hpp"

using namespace qsym;

namespace {

DenseVec V(std::initializer_list<int> xs) {
  DenseVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Sparse, RoundTripAndAddScaled) {
  DenseVec d = V({0, 3, 0, -1});
  SparseVec s = sparse_from_dense(d);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(dense_from_sparse(s, 4), d);

  SparseVec t = sparse_from_dense(V({1, 3, 0, 0}));
  SparseVec r = add_scaled(s, t, Rational(-1));
  EXPECT_EQ(dense_from_sparse(r, 4), V({-1, 0, 0, -1}));
  // Cancelled entries are dropped.
  EXPECT_EQ(r.size(), 2u);
}

TEST(RowEchelon, RankAndMembership) {
  RowEchelon e(3);
  EXPECT_TRUE(e.insert(V({1, 2, 3})));
  EXPECT_TRUE(e.insert(V({2, 4, 7})));
  EXPECT_FALSE(e.insert(V({3, 6, 10})));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains(V({0, 0, 5})));
  EXPECT_FALSE(e.contains(V({0, 1, 0})));
  EXPECT_EQ(e.free_columns(), (std::vector<std::size_t>{1}));
}

TEST(RowEchelon, ResidueIsCanonical) {
  RowEchelon e(4);
  e.insert(V({1, 1, 0, 0}));
  e.insert(V({0, 1, 1, 0}));
  DenseVec a = e.reduce(V({5, 0, 0, 2}));
  DenseVec shifted = V({5, 0, 0, 2});
  shifted[0] += 3;
  shifted[1] += 3;  // + 3 * (1,1,0,0)
  EXPECT_EQ(e.reduce(shifted), a);
  for (std::size_t p : e.pivots()) EXPECT_EQ(a[p], 0);
  EXPECT_THROW(e.reduce(V({1})), InvalidArgument);
}

TEST(RationalRoots, SplitsOverQ) {
  // (x - 1)(x + 1)(2x - 1) = 2x^3 - x^2 - 2x + 1
  UniPoly p = {Rational(1), Rational(-2), Rational(-1), Rational(2)};
  RootSplit r = rational_roots(p);
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_EQ(r.roots[0], -1);
  EXPECT_EQ(r.roots[1], Rational(1, 2));
  EXPECT_EQ(r.roots[2], 1);
  EXPECT_EQ(r.remainder.size(), 1u);
}

TEST(RationalRoots, ReportsIrreducibleCofactor) {
  // x (x^2 + x + 1)
  UniPoly p = {Rational(0), Rational(1), Rational(1), Rational(1)};
  RootSplit r = rational_roots(p);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0], 0);
  EXPECT_EQ(uni_poly_to_string(r.remainder), "x^2 + x + 1");
}

TEST(RationalRoots, RepeatedRoots) {
  // (x - 2)^2
  UniPoly p = {Rational(4), Rational(-4), Rational(1)};
  RootSplit r = rational_roots(p);
  EXPECT_EQ(r.roots, (std::vector<Rational>{2, 2}));
  EXPECT_THROW(rational_roots(UniPoly{Rational(0)}), InvalidArgument);
}

TEST(UniPoly, Printing) {
  EXPECT_EQ(uni_poly_to_string({Rational(-1), Rational(0), Rational(1)}), "x^2 - 1");
  EXPECT_EQ(uni_poly_to_string({Rational(1, 2), Rational(-3)}), "-3x + 1/2");
  EXPECT_EQ(uni_poly_to_string({}), "0");
}
