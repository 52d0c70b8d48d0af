#pragma once

// Commutative multivariate polynomials over Q in a fixed number of
// variables. Terms are kept canonical: exponent vectors sorted, no zero
// coefficients.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

using Monomial = std::vector<std::uint8_t>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  std::size_t degree() const;
  /// Highest exponent of one variable.
  std::size_t degree_in(std::size_t index) const;

  /// Adds c * m, dropping the term if it cancels. Throws InvalidArgument on a
  /// monomial of the wrong length.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  Polynomial pow(unsigned e) const;

  /// Substitutes images[i] for variable i; every image must share one
  /// variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Terms from highest monomial down, e.g. "2*x0^2*x1 - 1/3".
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);

}  // namespace qsym
