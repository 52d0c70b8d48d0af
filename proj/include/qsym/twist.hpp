#pragma once

// Two-cocycles on finite-dimensional Hopf algebras and the cocycle twist.
//
// With Sweedler legs from the stored coproduct, a cocycle sigma satisfies
//   sigma(x1, y1) sigma(x2 y2, z) = sigma(y1, z1) sigma(x, y2 z2),
//   sigma(x, 1) = eps(x) = sigma(1, x),
// and has a convolution inverse. The twisted algebra keeps the coalgebra and
// multiplies by
//   [x][y] = sigma(x1, y1) sigma^-1(x3, y3) [x2 y2].

#include <cstddef>
#include <string>
#include <vector>

#include "qsym/hopf.hpp"

namespace qsym {

struct Cocycle2 {
  std::size_t dim = 0;
  std::vector<Rational> table;          ///< table[i * dim + j] = sigma(b_i, b_j)
  std::vector<Rational> inverse_table;  ///< convolution inverse, same layout

  const Rational& value(std::size_t i, std::size_t j) const {
    return table[i * dim + j];
  }
  const Rational& inverse(std::size_t i, std::size_t j) const {
    return inverse_table[i * dim + j];
  }
};

/// eps (x) eps.
Cocycle2 trivial_cocycle(const FDHopf& h);

/// Bicharacter on elementary_abelian_group_algebra(2) with value -1 exactly
/// at (t1,t1), (t1,t3), (t2,t1), (t2,t2), (t3,t2), (t3,t3). Self-inverse.
Cocycle2 klein_bicharacter();

struct CocycleReport {
  bool unital = true;
  bool inverse_law = true;
  bool cocycle_identity = true;
  std::string failure;  ///< first violation, empty when valid

  bool valid() const { return unital && inverse_law && cocycle_identity; }
};

CocycleReport check_cocycle(const FDHopf& h, const Cocycle2& sigma);

inline bool verify_cocycle(const FDHopf& h, const Cocycle2& sigma) {
  return check_cocycle(h, sigma).valid();
}

/// sigma o (pi (x) pi) for a Hopf map pi: source -> target, with the inverse
/// pulled back the same way. Throws NotAHopfMap.
Cocycle2 pullback(const Cocycle2& sigma, const FDHopf& target,
                  const FDHopf& source, const HopfMap& pi);

enum class StarConvention {
  /// [x]* = sum alpha(x1) beta(x3) [x2*], alpha = sigma o Delta,
  /// beta = sigma^-1 o Delta. Reduces to [x]* = [x*] for the trivial
  /// cocycle.
  Compensated,
  /// [x]* = [x*] with no correction.
  Plain,
};

/// The twisted Hopf *-algebra. Throws InvalidCocycle when sigma fails
/// check_cocycle and TwistNotHopf when the result fails an axiom suite.
FDHopf twist(const FDHopf& h, const Cocycle2& sigma,
             StarConvention star = StarConvention::Compensated);

/// Same construction without the cocycle and axiom checks.
FDHopf twist_unchecked(const FDHopf& h, const Cocycle2& sigma,
                       StarConvention star = StarConvention::Compensated);

/// C(G) together with the Klein bicharacter pulled back along
/// C(G) -> C(V) -> Q[V^], for a Klein subgroup V with ordered basis.
struct InducedCocycle {
  FDHopf algebra;
  Cocycle2 cocycle;
  HopfMap projection;  ///< C(G) -> Q[V^]
};

InducedCocycle induced_klein_cocycle(const PermGroup& g, const PermGroup& v,
                                     const std::vector<Permutation>& basis);

/// The easy Klein subgroup {id, (12), (34), (12)(34)} and its ordered basis
/// ((12), (34)).
PermGroup s4tau_klein();
std::vector<Permutation> s4tau_basis();

/// C(S4) twisted by the cocycle induced from s4tau_klein().
FDHopf s4tau();

}  // namespace qsym
