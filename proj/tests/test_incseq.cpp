#include <gtest/gtest.h>

#include "qsym/errors.hpp"
#include "qsym/incseq.hpp"

using namespace qsym;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(AllSequences, LexicographicTwoOfFour) {
  auto seqs = all_sequences(2, 4);
  std::vector<std::vector<int>> want = {{1, 2}, {1, 3}, {1, 4},
                                        {2, 3}, {2, 4}, {3, 4}};
  ASSERT_EQ(seqs.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(seqs[i].values, want[i]);
}

TEST(AllSequences, EdgeLengths) {
  auto full = all_sequences(4, 4);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].values, (std::vector<int>{1, 2, 3, 4}));
  auto empty = all_sequences(0, 3);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].values.empty());
  EXPECT_THROW(all_sequences(4, 3), InvalidArgument);
}

TEST(AllSequences, CountIsBinomial) {
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      EXPECT_EQ(all_sequences(k, n).size(), binomial(n, k)) << k << "," << n;
}

TEST(IncreasingSequence, RejectsInvalidValues) {
  EXPECT_THROW(IncreasingSequence(4, {2, 2}), InvalidArgument);
  EXPECT_THROW(IncreasingSequence(4, {3, 1}), InvalidArgument);
  EXPECT_THROW(IncreasingSequence(4, {0, 1}), InvalidArgument);
  EXPECT_THROW(IncreasingSequence(4, {1, 5}), InvalidArgument);
  EXPECT_THROW(IncreasingSequence(1, {1, 2}), InvalidArgument);
}

TEST(MatrixRep, PlacesOnesAtValueRows) {
  auto a = matrix_rep(IncreasingSequence(4, {1, 2}));
  EXPECT_EQ(a.to_string(), "[[1,0],[0,1],[0,0],[0,0]]");
  auto b = matrix_rep(IncreasingSequence(4, {3, 4}));
  EXPECT_EQ(b.to_string(), "[[0,0],[0,0],[1,0],[0,1]]");
  auto c = matrix_rep(IncreasingSequence(3, {2}));
  EXPECT_EQ(c.to_string(), "[[0],[1],[0]]");
}

TEST(MatrixRep, ColumnsArePartitionsAndSupportIncreases) {
  for (const auto& s : all_sequences(3, 6)) {
    auto a = matrix_rep(s);
    int last_row = -1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      int sum = 0, row = -1;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        sum += a(r, c);
        if (a(r, c)) row = static_cast<int>(r);
      }
      EXPECT_EQ(sum, 1);
      EXPECT_GT(row, last_row);
      last_row = row;
    }
  }
}

TEST(CompleteDiagram, HandExamples) {
  EXPECT_TRUE(complete_diagram(IncreasingSequence(4, {1, 2})).is_identity());
  EXPECT_EQ(complete_diagram(IncreasingSequence(4, {3, 4})),
            Permutation::from_cycles(4, "(13)(24)"));
  EXPECT_EQ(complete_diagram(IncreasingSequence(4, {2, 3})),
            Permutation::from_cycles(4, "(123)"));
}

TEST(CompleteDiagram, RestrictsToSequence) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& s : all_sequences(k, n)) {
        Permutation p = complete_diagram(s);
        for (std::size_t l = 0; l < k; ++l)
          EXPECT_EQ(static_cast<int>(p(l)) + 1, s.values[l]);
        // The tail is increasing too.
        for (std::size_t l = k + 1; l < n; ++l) EXPECT_LT(p(l - 1), p(l));
      }
}

TEST(CompleteFormula, HandExamples) {
  EXPECT_TRUE(complete_formula(IncreasingSequence(4, {1, 2})).is_identity());
  EXPECT_EQ(complete_formula(IncreasingSequence(4, {3, 4})),
            Permutation::from_cycles(4, "(13)(24)"));
}

TEST(CompleteFormula, AgreesWithDiagramOnTwoOfFour) {
  for (const auto& s : all_sequences(2, 4))
    EXPECT_EQ(complete_formula(s), complete_diagram(s));
}

TEST(CompleteFormula, AgreesWithDiagramUpToSeven) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& s : all_sequences(k, n))
        ASSERT_EQ(complete_formula(s), complete_diagram(s))
            << "k=" << k << " n=" << n;
}

TEST(CompletionImages, ZeroOutsideTheBand) {
  const std::size_t k = 2, n = 5;
  auto u = completion_images(k, n);
  for (std::size_t m = 1; m <= n - k; ++m)
    for (std::size_t i = 1; i <= n; ++i)
      if (i < m || i > m + k) {
        const auto& f = u[i - 1][k + m - 1];
        EXPECT_EQ(f.constant, 0);
        EXPECT_TRUE(f.coeffs.empty());
      }
}

TEST(GeneratedGroup, Examples) {
  EXPECT_EQ(generated_completion_group(2, 4).order(), 24u);
  EXPECT_EQ(generated_completion_group(1, 3).order(), 6u);
  EXPECT_EQ(generated_completion_group(4, 4).order(), 1u);
  EXPECT_EQ(generated_completion_group(0, 4).order(), 1u);
}

TEST(GeneratedGroup, FullSymmetricForProperLengths) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      EXPECT_EQ(generated_completion_group(k, n).order(), factorial(n))
          << k << "," << n;
}

TEST(GeneratedGroup, BoundEnforced) {
  EXPECT_THROW(generated_completion_group(2, 8), BoundExceeded);
  EXPECT_NO_THROW(generated_completion_group(1, 2, 2));
  EXPECT_THROW(generated_completion_group(1, 3, 2), BoundExceeded);
}
