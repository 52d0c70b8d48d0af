#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qsym {

/// Small dense integer matrix, row-major. Used for character matrices of
/// presentations (entries in {-1, 0, 1}) and increasing-sequence matrices
/// (entries in {0, 1}).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<int> data);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// 0-based access.
  int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<int>& data() const { return data_; }

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  int determinant() const;

  /// Exactly one nonzero entry per row and column, and it is +1 or -1.
  bool is_signed_permutation() const;
  /// Signed permutation with all nonzero entries equal to +1.
  bool is_permutation_matrix() const;

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

  auto operator<=>(const IntMatrix&) const = default;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Square matrix over {-1, 0, 1}.
using SignedMatrix = IntMatrix;
/// Rectangular matrix over {0, 1}.
using BinaryRectMatrix = IntMatrix;

}  // namespace qsym
