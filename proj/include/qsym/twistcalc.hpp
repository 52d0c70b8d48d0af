#pragma once

// Identity checking in the twisted function algebras Pol(O_-1(2)) and
// Pol(SO_-1(3)).
//
// An element is a sum of Klein-bihomogeneous classical polynomials in the
// grid coordinates x_{i,j}; x_{i,j} has bidegree (t_i, t_j). The twisted
// product of homogeneous pieces of degrees (g,h) and (g',h') is
// sigma(g,g') sigma^-1(h,h') times the commutative product. Equality is
// decided per bidegree on the classical group through exact rational
// parametrizations, so no term order or Groebner basis is involved.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsym/hopf.hpp"
#include "qsym/matrix.hpp"
#include "qsym/perm.hpp"
#include "qsym/poly.hpp"
#include "qsym/present.hpp"
#include "qsym/twist.hpp"

namespace qsym {

enum class TwistedKind { O2Minus, SO3Minus };

/// 2 or 3.
std::size_t grid_size(TwistedKind kind);

/// Bidegree of a grid monomial; variable (i-1) n + (j-1) is x_{i,j}.
Bidegree monomial_bidegree(std::size_t n, const Monomial& m);

class TwistedElement {
 public:
  TwistedElement() = default;
  explicit TwistedElement(TwistedKind kind) : kind_(kind) {}

  TwistedKind kind() const { return kind_; }
  const std::map<Bidegree, Polynomial>& components() const { return components_; }

  /// Adds p to the component of degree d. Throws InvalidArgument when a
  /// monomial of p has a different bidegree.
  void add(Bidegree d, const Polynomial& p);

  TwistedElement& operator+=(const TwistedElement& o);
  TwistedElement& operator-=(const TwistedElement& o);
  TwistedElement& operator*=(const Rational& c);

  /// No nonzero coefficient at all (stronger than vanishing as a function).
  bool is_empty() const { return components_.empty(); }

  std::string to_string() const;

  bool operator==(const TwistedElement&) const = default;

 private:
  TwistedKind kind_ = TwistedKind::O2Minus;
  std::map<Bidegree, Polynomial> components_;
};

TwistedElement operator+(TwistedElement a, const TwistedElement& b);
TwistedElement operator-(TwistedElement a, const TwistedElement& b);
TwistedElement operator*(const Rational& c, TwistedElement a);

class TwistedAlgebra {
 public:
  /// The sign table is injectable; sigma must be a +-1 table on the Klein
  /// group algebra.
  explicit TwistedAlgebra(TwistedKind kind, Cocycle2 sigma = klein_bicharacter());

  TwistedKind kind() const { return kind_; }
  std::size_t size() const { return grid_size(kind_); }
  const Cocycle2& sigma() const { return sigma_; }

  TwistedElement zero() const { return TwistedElement(kind_); }
  TwistedElement scalar(const Rational& c) const;
  TwistedElement unit() const { return scalar(Rational(1)); }
  /// [x_{i,j}], 1-based.
  TwistedElement generator(std::size_t i, std::size_t j) const;

  TwistedElement mul(const TwistedElement& u, const TwistedElement& v) const;

  /// Every component vanishes on the classical group.
  bool is_zero(const TwistedElement& u) const;

  /// chi(u) for the character with chi([x_{i,j}]) = m(i-1, j-1).
  Rational character_value(const TwistedElement& u, const IntMatrix& m) const;

 private:
  TwistedKind kind_;
  Cocycle2 sigma_;
};

// Zero tests on the classical groups --------------------------------------

/// The nine entries of the rotation matrix of the quaternion (a,b,c,d),
/// row-major, as polynomials in 4 variables.
const std::vector<Polynomial>& quaternion_rotation();

/// Normal form modulo a^2 + b^2 + c^2 + d^2 - 1: degree at most 1 in d.
Polynomial sphere_reduce(const Polynomial& p);

/// p in x11, x12, x21, x22 vanishes on O(2): both circle branches through
/// c = (1-t^2)/(1+t^2), s = 2t/(1+t^2), plus the points with c = -1.
bool vanishes_on_o2(const Polynomial& p);

/// p in the nine x_{i,j} vanishes on SO(3).
bool vanishes_on_so3(const Polynomial& p);

// Relations ---------------------------------------------------------------

struct RelationCheck {
  std::string relation;  ///< orthogonality, row-anticommutation, ...
  std::string instance;  ///< e.g. "a11 a12 + a12 a11"
  bool holds = true;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_hold() const;
  /// nullptr when everything holds.
  const RelationCheck* first_failure() const;
};

/// Checks the relations of O_-1(2) (2 x 2 images) or SO_-1(3) (3 x 3 images,
/// including the permanent relation) on the given generator images.
RelationReport check_presentation_relations(
    const TwistedAlgebra& target, const std::vector<std::vector<TwistedElement>>& images);

/// Throws RelationFailure naming the first failing relation.
void require_relations(const RelationReport& report);

/// The twisted generators satisfy the quantum presentation. Throws
/// RelationFailure.
RelationReport verify_twisted_presentation(const TwistedAlgebra& algebra);
RelationReport verify_twisted_presentation(TwistedKind kind);

// rho, normalizer, automorphisms, embeddings ------------------------------

/// The permutation action on (1,1,1,1)^perp in the basis
/// u1 = (1,-1,-1,1)/2, u2 = (1,-1,1,-1)/2, u3 = (1,1,-1,-1)/2. Throws
/// InvalidArgument unless x has degree 4.
IntMatrix rho(const Permutation& x);

/// {1, diag(-1,1,-1), diag(1,-1,-1), diag(-1,-1,1)}, sorted.
std::vector<IntMatrix> diagonal_klein_matrices();

/// Characters of O_-1(2) and SO_-1(3), sorted.
const std::vector<IntMatrix>& o2minus_characters();
const std::vector<IntMatrix>& so3minus_characters();

struct NormalizerEntry {
  IntMatrix f;
  Permutation x;  ///< f = sign * rho(x)
  int sign = 1;
  /// Action A -> f^T A f on the three nontrivial diagonal Klein matrices,
  /// as a permutation of their sorted order.
  Permutation klein_action;
};

/// Determinant-one signed permutation matrices normalizing the diagonal
/// Klein set, sorted by matrix. Throws CountMismatch unless there are 24 and
/// they match rho(S4) bijectively up to sign.
std::vector<NormalizerEntry> klein_normalizer_so3();

struct AutomorphismReport {
  Permutation x;
  IntMatrix rho;
  RelationReport relations;
  /// M -> rho^T M rho on the indices of so3minus_characters().
  Permutation character_action;
};

/// The map A -> rho(x)^T A rho(x). Throws RelationFailure when the images
/// break a relation and CharacterActionMismatch when the induced map on
/// characters is not that conjugation or leaves the character set.
AutomorphismReport automorphism_check(const Permutation& x);

/// rho(x) blockdiag(A~, perm(A~)) rho(x)^T as a 3 x 3 table over O_-1(2),
/// without checking relations.
std::vector<std::vector<TwistedElement>> phi_images(const Permutation& x);

struct EmbeddingReport {
  Permutation x;
  std::vector<std::vector<TwistedElement>> images;
  RelationReport relations;
};

/// Throws RelationFailure.
EmbeddingReport phi_embedding(const Permutation& x);

struct EmbeddingImages {
  std::vector<Permutation> xs;         ///< S4, sorted
  std::vector<std::size_t> image_of;   ///< per x, index into distinct
  std::vector<std::vector<IntMatrix>> distinct;  ///< sorted sets, sorted
  std::vector<GroupType> types;        ///< per distinct image
  PermGroup stabilizer;                ///< x with the image of the identity
  /// (a, b, n) with n E_a n^T = E_b, for a < b, n in so3minus_characters().
  struct Conjugacy {
    std::size_t a, b;
    IntMatrix n;
  };
  std::vector<Conjugacy> conjugacies;
};

/// Character images of every phi_x. Throws NotASubgroup when an image is not
/// a subgroup of type D4 containing the diagonal Klein set.
EmbeddingImages embedding_character_images();

/// The permutation g whose matrix is M(i,j) = chi(sum over h with h(j) = i of
/// delta_h), for a character chi of a twist of C(G). Throws InvalidArgument
/// when M is not a permutation matrix.
Permutation character_permutation(const PermGroup& g, const Character& chi);

struct GenerationReport {
  PermGroup tau_characters;               ///< via character_permutation
  std::optional<std::size_t> matching_image;  ///< into distinct images
  PermGroup generated_dd;  ///< <D u D>
  PermGroup generated_ds4;  ///< <D u S4>
};

/// D is the D4 realized both by the twisted C(S4) characters and by an
/// embedding image, identified with S4 through rho.
GenerationReport generation_counterexample(const CharacterGroup& tau_chars,
                                           const EmbeddingImages& images);

}  // namespace qsym
