#pragma once

// Increasing sequences, their 0/1 matrix representations, and the completion
// of an increasing sequence to a permutation. The completion is computed two
// independent ways: the dot-diagram procedure and the evaluation of the
// quantum completion map's generator formula at the classical character.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qsym/matrix.hpp"
#include "qsym/perm.hpp"

namespace qsym {

struct IncreasingSequence {
  std::size_t n = 0;        ///< alphabet bound
  std::vector<int> values;  ///< strictly increasing, 1-based, within [1, n]

  /// Validates the invariant; throws InvalidArgument.
  IncreasingSequence(std::size_t n, std::vector<int> values);

  std::size_t k() const { return values.size(); }

  bool operator==(const IncreasingSequence&) const = default;
};

/// All C(n, k) sequences in lexicographic order. Throws InvalidArgument when
/// k > n.
std::vector<IncreasingSequence> all_sequences(std::size_t k, std::size_t n);

/// n x k matrix with entry (values[l], l) = 1 (1-based), zeros elsewhere.
BinaryRectMatrix matrix_rep(const IncreasingSequence& s);

/// Dot-diagram completion: l -> values[l] for l <= k, and k+j goes to the
/// j-th smallest point missing from the sequence.
Permutation complete_diagram(const IncreasingSequence& s);

/// Integer linear combination of the rectangular generators p_{i,j}
/// (1-based, 1 <= i <= n, 1 <= j <= k) plus a constant multiple of the unit.
struct LinearForm {
  int constant = 0;
  std::map<std::pair<int, int>, int> coeffs;

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);

  /// Value at the character p_{i,j} -> a(i, j) of a 0/1 matrix a.
  int evaluate(const BinaryRectMatrix& a) const;
};

/// Images of the square generators u_{i,j} (row-major, 1-based indices mapped
/// to [i-1][j-1]) under the completion homomorphism, as symbolic linear
/// forms in the p_{i,j}. Boundary symbols reduce as p_{0,0} = 1 and
/// p_{0,j} = p_{i,0} = p_{i,k+1} = 0 for i, j >= 1.
std::vector<std::vector<LinearForm>> completion_images(std::size_t k,
                                                       std::size_t n);

/// Completion through the generator formula. Throws EvaluationNotPermutation
/// when the evaluated square matrix is not a permutation matrix.
Permutation complete_formula(const IncreasingSequence& s);

inline constexpr std::size_t kDefaultCompletionBound = 7;

/// Group generated by the diagram completions of all of I_{k,n}. Throws
/// BoundExceeded when n exceeds max_n and InvalidArgument when k > n.
PermGroup generated_completion_group(std::size_t k, std::size_t n,
                                     std::size_t max_n = kDefaultCompletionBound);

}  // namespace qsym
