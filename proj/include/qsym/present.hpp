#pragma once

// Klein-bidegree sign calculus and exhaustive character solvers for the
// matrix presentations O_-1(2), SO_-1(3), S_n^+ and I^+_{k,n}.
//
// The generator in row i, column j of a twisted orthogonal grid carries the
// bidegree (t_i, t_j) in K x K, where K is the Klein group with elements
// t0 = 1, t1, t2, t3 = t1 t2 indexed by bitmask.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/matrix.hpp"
#include "qsym/perm.hpp"
#include "qsym/twist.hpp"

namespace qsym {

struct Bidegree {
  std::uint8_t left = 0;   ///< Klein element, 0..3
  std::uint8_t right = 0;  ///< Klein element, 0..3

  Bidegree operator*(Bidegree o) const {
    return {static_cast<std::uint8_t>(left ^ o.left),
            static_cast<std::uint8_t>(right ^ o.right)};
  }
  auto operator<=>(const Bidegree&) const = default;
  bool operator==(const Bidegree&) const = default;
};

/// Bidegree of the generator at 1-based grid position (i, j).
Bidegree generator_bidegree(std::size_t i, std::size_t j);

/// c with [u][v] = c [v][u] for homogeneous u of degree d1 and v of degree
/// d2: sigma(g,g') sigma(h,h') sigma(g',g) sigma(h',h). sigma must be the
/// +-1 valued table of a cocycle on the Klein group algebra.
int commutation_sign(const Cocycle2& sigma, Bidegree d1, Bidegree d2);

/// Commutation signs among the nine generators of the 3 x 3 grid.
/// entries[(3(i-1) + j-1) * 9 + 3(k-1) + l-1] is the sign for (i,j), (k,l).
struct SignTable {
  std::vector<int> entries;

  int at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return entries[((i - 1) * 3 + (j - 1)) * 9 + (k - 1) * 3 + (l - 1)];
  }
  /// Number of entries equal to -1.
  std::size_t negative_count() const;
};

/// The expected pattern: -1 iff the generators share exactly one index.
int expected_commutation_sign(std::size_t i, std::size_t j, std::size_t k,
                              std::size_t l);

/// Full table. Throws PatternMismatch on any deviation from the expected
/// pattern.
SignTable relation_sign_table(const Cocycle2& sigma);
/// Same table without the pattern assertion.
SignTable compute_sign_table(const Cocycle2& sigma);

/// Sign s with [x_1 ... x_r] = s [x_1] ... [x_r] for homogeneous classical
/// factors of the given bidegrees.
int product_sign(const Cocycle2& sigma, const std::vector<Bidegree>& factors);

struct PermanentSign {
  Permutation tau;
  int sign = 1;      ///< s(tau)
  int combined = 1;  ///< sgn(tau) * s(tau)
};

/// s(tau) for the diagonal product x_{1,tau(1)} ... x_{n,tau(n)}, for every
/// tau in S_size, in sorted order. Throws InvalidArgument unless size is 2 or
/// 3, and SignMismatch when some combined sign is not +1.
std::vector<PermanentSign> determinant_to_permanent_signs(std::size_t size,
                                                          const Cocycle2& sigma);

// ---------------------------------------------------------------------------

struct PresentationSpec {
  enum class Tag { O2Minus, SO3Minus, SnPlus, IncSeq, O2, SO3 };

  Tag tag = Tag::O2Minus;
  std::size_t n = 2;  ///< rows
  std::size_t k = 2;  ///< columns

  static PresentationSpec o2minus() { return {Tag::O2Minus, 2, 2}; }
  static PresentationSpec so3minus() { return {Tag::SO3Minus, 3, 3}; }
  static PresentationSpec o2() { return {Tag::O2, 2, 2}; }
  static PresentationSpec so3() { return {Tag::SO3, 3, 3}; }
  static PresentationSpec snplus(std::size_t n);
  /// n x k grid of p_{i,j}; throws InvalidArgument when k > n.
  static PresentationSpec incseq(std::size_t k, std::size_t n);

  /// Accepts "o2minus", "so3minus", "o2", "so3", "snplus:<n>" and
  /// "incseq:<k>:<n>". Throws ParseError.
  static PresentationSpec parse(std::string_view name);

  std::size_t rows() const { return n; }
  std::size_t cols() const { return k; }
  /// Inverse of parse.
  std::string name() const;
  /// Identifiers of the defining relations, in presentation order.
  std::vector<std::string> relations() const;

  bool operator==(const PresentationSpec&) const = default;
};

struct CharacterSolution {
  IntMatrix matrix;
  PresentationSpec presentation;
};

inline constexpr std::size_t kMaxGrid = 5;

/// Every one-dimensional representation, sorted by matrix. Throws
/// InfiniteCharacterSpace for O2 and SO3 and BoundExceeded when a grid
/// dimension exceeds kMaxGrid.
std::vector<CharacterSolution> solve_characters(const PresentationSpec& p);

struct PresentedCharacterGroup {
  std::vector<IntMatrix> elements;  ///< sorted
  /// table[a][b] = index of elements[a] * elements[b]
  std::vector<std::vector<std::size_t>> table;
  PermGroup group;                ///< left-regular action
  std::optional<GroupType> type;  ///< present for order <= 24
};

/// Matrix-product group of the characters of O2Minus, SO3Minus or SnPlus.
/// Throws InvalidArgument for other tags and ClosureFailure when products or
/// transposes leave the solution set.
PresentedCharacterGroup character_group_of(const PresentationSpec& p);

/// Same, for an explicit matrix set.
PresentedCharacterGroup matrix_group(std::vector<IntMatrix> elements);

}  // namespace qsym
