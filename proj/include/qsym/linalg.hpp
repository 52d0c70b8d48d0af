#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

/// Sparse coefficient vector: (index, value) pairs, sorted by index, with no
/// zero values.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

using DenseVec = std::vector<Rational>;

SparseVec sparse_from_dense(const DenseVec& v);
DenseVec dense_from_sparse(const SparseVec& v, std::size_t dim);
SparseVec unit_vector(std::uint32_t index);

/// a + scale * b
SparseVec add_scaled(const SparseVec& a, const SparseVec& b,
                     const Rational& scale);

/// Incrementally maintained reduced row echelon basis of a subspace of Q^dim.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(DenseVec v);

  /// Canonical residue of v modulo the span (zero on every pivot column).
  DenseVec reduce(DenseVec v) const;

  bool contains(const DenseVec& v) const;

  const std::vector<DenseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Columns that are not pivots, ascending; a basis of the quotient.
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t dim_;
  std::vector<DenseVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Univariate polynomial, coefficients from degree 0 upward.
using UniPoly = std::vector<Rational>;

void trim(UniPoly& p);
std::string uni_poly_to_string(const UniPoly& p, char var = 'x');

/// Rational roots (with multiplicity) of a nonzero polynomial and the
/// cofactor left after dividing them out.
struct RootSplit {
  std::vector<Rational> roots;
  UniPoly remainder;  ///< monic, degree 0 when p splits over Q
};

RootSplit rational_roots(const UniPoly& p);

}  // namespace qsym
