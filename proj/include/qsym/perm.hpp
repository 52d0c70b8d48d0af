#pragma once

// Exact permutation-group machinery at desk scale: composition, closure,
// exhaustive subgroup enumeration and small isomorphism-type detection.
//
// Composition convention (project-wide): (a * b)(i) = a(b(i)), i.e. the
// right factor acts first. Cycle strings use 1-based points.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

class Permutation {
 public:
  Permutation() = default;

  /// Identity on n points.
  static Permutation identity(std::size_t n);

  /// From 0-based images; throws InvalidArgument if not a bijection.
  static Permutation from_images(std::vector<std::uint8_t> images);

  /// From 1-based images, e.g. {2, 3, 1} for 1->2, 2->3, 3->1.
  static Permutation from_one_based(std::span<const int> images);

  /// Parses cycle notation such as "(12)(34)" or "(1 10)(2 3)". Points with
  /// more than one digit need separators inside the cycle.
  static Permutation from_cycles(std::size_t n, std::string_view cycles);

  std::size_t degree() const { return images_.size(); }

  /// 0-based image of a 0-based point.
  std::size_t operator()(std::size_t i) const { return images_[i]; }

  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  std::size_t order() const;

  /// Disjoint cycle notation with 1-based points; "id" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<std::uint8_t> images)
      : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

/// (a * b)(i) = a(b(i)). Throws DegreeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

/// Finite permutation group with its elements held sorted.
class PermGroup {
 public:
  PermGroup() = default;

  /// Wraps an already closed element set. Throws NotASubgroup when the set is
  /// not closed under composition or lacks the identity.
  PermGroup(std::size_t degree, std::vector<Permutation> elements,
            std::vector<Permutation> generators = {});

  static PermGroup symmetric(std::size_t n);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_abelian() const;

  /// Position of p in elements(), or npos.
  std::size_t index_of(const Permutation& p) const;

  /// g H g^-1 as a group.
  PermGroup conjugate_by(const Permutation& g) const;

  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Tag for element lists already known to be sorted, unique and closed.
  struct Closed {};
  PermGroup(std::size_t degree, std::vector<Permutation> sorted,
            std::vector<Permutation> generators, Closed);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Smallest subgroup of S_degree containing gens (breadth-first closure).
PermGroup generate(std::size_t degree, std::span<const Permutation> gens);

/// Isomorphism type of a group of order at most 24, decided by order,
/// commutativity and the element-order profile.
struct GroupType {
  enum class Tag {
    Trivial, Z2, Z3, Z4, Klein, S3, D4, Q8, Z8, Z2xZ2xZ2, Z2xZ4, A4, S4, Other
  };

  Tag tag = Tag::Trivial;
  std::size_t order = 1;
  bool abelian = true;
  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> profile;

  static GroupType of(Tag t);

  std::string name() const;

  /// Tags compare directly; Other compares order, abelian flag and profile.
  bool operator==(const GroupType& other) const;
};

/// Isomorphism type of G. Throws BoundExceeded for |G| > 24.
GroupType isomorphism_type(const PermGroup& g);

/// Every subgroup of G, each exactly once, ordered by (order, elements).
/// Throws BoundExceeded for |G| > 48.
std::vector<PermGroup> all_subgroups(const PermGroup& g);

/// Subgroups of G of isomorphism type t. Throws BoundExceeded for |G| > 48.
std::vector<PermGroup> subgroups_of_type(const PermGroup& g,
                                         const GroupType& t);

/// True iff g H g^-1 = H for all g in G. Deciding characteristic-ness this
/// way is only sound when Aut(G) = Inn(G) (the case for S_4, which is the
/// only group this is applied to). Throws NotASubgroup.
bool is_characteristic_under_inner(const PermGroup& g, const PermGroup& h);

/// Some g in G with g H1 g^-1 = H2, scanning G in sorted order (so the
/// identity is returned when H1 = H2). Throws NotASubgroup.
std::optional<Permutation> are_conjugate(const PermGroup& g,
                                         const PermGroup& h1,
                                         const PermGroup& h2);

/// Left-regular action of an abstract group given by its multiplication
/// table (table[a][b] = index of a*b): element a acts by b -> a*b.
PermGroup regular_action(const std::vector<std::vector<std::size_t>>& table);

}  // namespace qsym

template <>
struct std::hash<qsym::Permutation> {
  std::size_t operator()(const qsym::Permutation& p) const noexcept;
};
