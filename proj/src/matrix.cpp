#include "qsym/matrix.hpp"

#include <cstdlib>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw InvalidArgument("matrix data size does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

namespace {

long long det_rec(const std::vector<long long>& m, std::size_t n) {
  if (n == 1) return m[0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c] == 0) continue;
    std::vector<long long> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) minor.push_back(m[r * n + cc]);
    long long term = m[c] * det_rec(minor, n - 1);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

int IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of non-square matrix");
  if (rows_ == 0) return 1;
  std::vector<long long> m(data_.begin(), data_.end());
  return static_cast<int>(det_rec(m, rows_));
}

bool IntMatrix::is_signed_permutation() const {
  if (rows_ != cols_) return false;
  std::vector<int> col_count(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int row_count = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      int v = (*this)(r, c);
      if (v == 0) continue;
      if (std::abs(v) != 1) return false;
      ++row_count;
      ++col_count[c];
    }
    if (row_count != 1) return false;
  }
  for (int cnt : col_count)
    if (cnt != 1) return false;
  return true;
}

bool IntMatrix::is_permutation_matrix() const {
  if (!is_signed_permutation()) return false;
  for (int v : data_)
    if (v < 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c)
      out << (c ? "," : "") << (*this)(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      int v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

}  // namespace qsym
