#pragma once

// Finite-dimensional Hopf *-algebras over Q, stored as sparse structure
// tensors on a fixed basis, together with Hopf maps, axiom verification and
// the character group.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/perm.hpp"
#include "qsym/rational.hpp"

namespace qsym {

struct ComultTerm {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  Rational coeff;

  bool operator==(const ComultTerm&) const = default;
};

/// Hopf *-algebra of dimension dim. Linear maps (antipode, star) are stored by
/// column: antipode[i] is the image of basis element i. Products are
/// row-major: mult[i * dim + j] is b_i b_j. Coefficient conjugation is the
/// identity, so star is a linear map on the rational basis.
struct FDHopf {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  SparseVec unit;
  std::vector<SparseVec> mult;
  std::vector<std::vector<ComultTerm>> comult;
  DenseVec counit;
  std::vector<SparseVec> antipode;
  std::vector<SparseVec> star;

  const SparseVec& product(std::size_t i, std::size_t j) const {
    return mult[i * dim + j];
  }

  /// Bilinear product of arbitrary vectors.
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  SparseVec apply_antipode(const SparseVec& a) const;
  SparseVec apply_star(const SparseVec& a) const;
  Rational apply_counit(const SparseVec& a) const;

  /// Throws InvalidArgument when table sizes disagree with dim or indices
  /// are out of range.
  void validate_shape() const;

  /// Sorts and merges comultiplication terms, drops zeros.
  void canonicalize();

  bool is_commutative() const;
  bool is_cocommutative() const;
  /// First (i, j) in row-major order with b_i b_j != b_j b_i.
  std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair() const;

  /// Equality of every structure tensor; labels are ignored.
  bool same_structure(const FDHopf& other) const;
};

/// Basis {g}, g h = gh, Delta(g) = g (x) g, eps(g) = 1, S(g) = g* = g^-1.
FDHopf group_algebra(const PermGroup& g);

/// Basis {delta_g}, pointwise product, Delta(delta_g) = sum_{ab=g}
/// delta_a (x) delta_b, eps(delta_g) = [g = e], S(delta_g) = delta_{g^-1},
/// delta_g* = delta_g.
FDHopf function_algebra(const PermGroup& g);

/// Group algebra of (Z/2)^rank with basis t_m for bitmasks m, t_a t_b =
/// t_{a xor b}. For rank 2 this is the Klein group algebra with basis
/// t0, t1, t2, t3 = t1 t2.
FDHopf elementary_abelian_group_algebra(std::size_t rank);

// ---------------------------------------------------------------------------

struct HopfAxiomReport {
  bool associativity = true;  ///< includes the two-sided unit law
  bool coassociativity = true;
  bool counit = true;
  bool bialgebra = true;  ///< Delta and eps are unital algebra maps
  bool antipode = true;
  bool star = true;  ///< involutive, anti-multiplicative, Delta-compatible
  std::vector<std::string> failures;

  bool all() const {
    return associativity && coassociativity && counit && bialgebra &&
           antipode && star;
  }
};

/// Exhaustive check over basis tuples. Failures are reported, not thrown.
HopfAxiomReport verify_hopf_axioms(const FDHopf& h);

/// One line per nonzero tensor entry, e.g. "m[i][j] -> k : num/den".
std::string dump_structure(const FDHopf& h);

// ---------------------------------------------------------------------------

/// Linear map between Hopf algebras, stored by column images.
struct HopfMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<SparseVec> images;

  SparseVec apply(const SparseVec& v) const;
  std::size_t rank() const;
};

/// g after f. Throws InvalidArgument when dimensions do not chain.
HopfMap compose(const HopfMap& g, const HopfMap& f);

HopfMap identity_map(std::size_t dim);

/// Empty string when f intertwines unit, product, coproduct, counit, antipode
/// and star; otherwise the first violated law.
std::string hopf_map_violation(const FDHopf& source, const FDHopf& target,
                               const HopfMap& f);

inline bool is_hopf_map(const FDHopf& source, const FDHopf& target,
                        const HopfMap& f) {
  return hopf_map_violation(source, target, f).empty();
}

/// Throws NotAHopfMap with the violated law.
void require_hopf_map(const FDHopf& source, const FDHopf& target,
                      const HopfMap& f);

/// C(G) -> C(V), delta_g -> delta_g for g in V and 0 otherwise. Indices
/// follow the element order of each group. Throws NotASubgroup unless V is a
/// subgroup of G.
HopfMap restriction_surjection(const PermGroup& g, const PermGroup& v);

/// Action of the dual character with bitmask m on v, given an ordered basis
/// of the elementary abelian 2-group V: (-1)^{popcount(m & coords(v))}.
int dual_character_value(const PermGroup& v,
                         const std::vector<Permutation>& basis,
                         std::uint32_t mask, const Permutation& x);

/// Fourier isomorphism C(V) -> elementary_abelian_group_algebra(rank),
/// delta_v -> |V|^-1 sum_m chi_m(v) t_m, with chi_m as in
/// dual_character_value. An empty basis selects the greedy basis in element
/// order. Throws InvalidArgument unless V is elementary abelian of exponent
/// at most 2 and basis is an independent generating set.
HopfMap fourier_iso(const PermGroup& v, std::vector<Permutation> basis = {});

/// Inverse of fourier_iso: t_m -> sum_v chi_m(v) delta_v.
HopfMap fourier_iso_inverse(const PermGroup& v,
                            std::vector<Permutation> basis = {});

/// Basis used by fourier_iso when none is given.
std::vector<Permutation> greedy_basis(const PermGroup& v);

// ---------------------------------------------------------------------------

/// Multiplicative unital *-compatible functional, by its values on the basis.
using Character = DenseVec;

/// All characters, sorted lexicographically by value vector. Works by
/// splitting the abelianization into primitive idempotents. Throws
/// NonSplitQuotient when a minimal polynomial has an irrational factor,
/// NonSemisimpleQuotient on repeated roots, BoundExceeded when dim > 64.
std::vector<Character> characters(const FDHopf& h);

/// (chi1 (x) chi2) o Delta
Character convolve(const FDHopf& h, const Character& a, const Character& b);

struct CharacterGroup {
  std::vector<Character> elements;
  /// table[a][b] = index of elements[a] * elements[b]
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  PermGroup group;  ///< left-regular action on elements
  std::optional<GroupType> type;  ///< present for order <= 24
};

/// Convolution group of the characters. Throws ClosureFailure when a
/// convolution, the counit or an inverse chi o S is not among the characters.
CharacterGroup character_group(const FDHopf& h);
CharacterGroup character_group(const FDHopf& h, std::vector<Character> chars);

}  // namespace qsym
