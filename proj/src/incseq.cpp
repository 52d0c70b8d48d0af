#include "qsym/incseq.hpp"

#include <algorithm>
#include <numeric>

#include "qsym/errors.hpp"

namespace qsym {

IncreasingSequence::IncreasingSequence(std::size_t n_, std::vector<int> values_)
    : n(n_), values(std::move(values_)) {
  if (values.size() > n) throw InvalidArgument("sequence longer than alphabet");
  for (std::size_t l = 0; l < values.size(); ++l) {
    if (values[l] < 1 || static_cast<std::size_t>(values[l]) > n)
      throw InvalidArgument("sequence value out of range");
    if (l > 0 && values[l] <= values[l - 1])
      throw InvalidArgument("sequence is not strictly increasing");
  }
}

std::vector<IncreasingSequence> all_sequences(std::size_t k, std::size_t n) {
  if (k > n) throw InvalidArgument("k must not exceed n");
  std::vector<IncreasingSequence> out;
  std::vector<int> current(k);
  std::iota(current.begin(), current.end(), 1);
  for (;;) {
    out.emplace_back(n, current);
    // Advance to the next combination in lexicographic order.
    std::size_t l = k;
    while (l > 0 && static_cast<std::size_t>(current[l - 1]) == n - k + l) --l;
    if (l == 0) break;
    ++current[l - 1];
    for (std::size_t r = l; r < k; ++r) current[r] = current[r - 1] + 1;
  }
  return out;
}

BinaryRectMatrix matrix_rep(const IncreasingSequence& s) {
  BinaryRectMatrix a(s.n, s.k());
  for (std::size_t l = 0; l < s.k(); ++l)
    a(static_cast<std::size_t>(s.values[l] - 1), l) = 1;
  return a;
}

Permutation complete_diagram(const IncreasingSequence& s) {
  std::vector<bool> connected(s.n, false);
  std::vector<std::uint8_t> images(s.n);
  for (std::size_t l = 0; l < s.k(); ++l) {
    images[l] = static_cast<std::uint8_t>(s.values[l] - 1);
    connected[s.values[l] - 1] = true;
  }
  std::size_t next = s.k();
  for (std::size_t bottom = 0; bottom < s.n; ++bottom)
    if (!connected[bottom]) images[next++] = static_cast<std::uint8_t>(bottom);
  return Permutation::from_images(std::move(images));
}

// ---------------------------------------------------------------------------

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  constant += other.constant;
  for (const auto& [key, c] : other.coeffs) {
    if ((coeffs[key] += c) == 0) coeffs.erase(key);
  }
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  constant -= other.constant;
  for (const auto& [key, c] : other.coeffs) {
    if ((coeffs[key] -= c) == 0) coeffs.erase(key);
  }
  return *this;
}

int LinearForm::evaluate(const BinaryRectMatrix& a) const {
  int value = constant;
  for (const auto& [key, c] : coeffs)
    value += c * a(static_cast<std::size_t>(key.first - 1),
                   static_cast<std::size_t>(key.second - 1));
  return value;
}

namespace {

// p_{i,j} with the boundary conventions applied.
LinearForm p_symbol(int i, int j, int k) {
  LinearForm f;
  if (i == 0 && j == 0) {
    f.constant = 1;
  } else if (i == 0 || j == 0 || j == k + 1) {
    // zero
  } else {
    f.coeffs[{i, j}] = 1;
  }
  return f;
}

}  // namespace

std::vector<std::vector<LinearForm>> completion_images(std::size_t k,
                                                       std::size_t n) {
  if (k > n) throw InvalidArgument("k must not exceed n");
  const int ki = static_cast<int>(k);
  const int ni = static_cast<int>(n);
  std::vector<std::vector<LinearForm>> u(n, std::vector<LinearForm>(n));

  for (int i = 1; i <= ni; ++i)
    for (int j = 1; j <= ki; ++j) u[i - 1][j - 1] = p_symbol(i, j, ki);

  for (int m = 1; m <= ni - ki; ++m) {
    const int col = ki + m;
    // Rows i < m and i > m + k stay zero; rows m + p for 0 <= p <= k:
    for (int p = 0; p <= ki; ++p) {
      LinearForm image;
      for (int i = 0; i <= m + p - 1; ++i) {
        image += p_symbol(i, p, ki);
        image -= p_symbol(i + 1, p + 1, ki);
      }
      u[m + p - 1][col - 1] = image;
    }
  }
  return u;
}

Permutation complete_formula(const IncreasingSequence& s) {
  const auto images = completion_images(s.k(), s.n);
  const auto a = matrix_rep(s);

  IntMatrix evaluated(s.n, s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      evaluated(i, j) = images[i][j].evaluate(a);

  if (!evaluated.is_permutation_matrix())
    throw EvaluationNotPermutation("completion formula evaluated to " +
                                   evaluated.to_string());

  // Column j carries the upper dot j to the lower dot i with entry (i, j) = 1.
  std::vector<std::uint8_t> perm(s.n);
  for (std::size_t j = 0; j < s.n; ++j)
    for (std::size_t i = 0; i < s.n; ++i)
      if (evaluated(i, j) == 1) perm[j] = static_cast<std::uint8_t>(i);
  return Permutation::from_images(std::move(perm));
}

PermGroup generated_completion_group(std::size_t k, std::size_t n,
                                     std::size_t max_n) {
  if (n > max_n)
    throw BoundExceeded("completion sweep bound is n <= " +
                        std::to_string(max_n));
  std::vector<Permutation> gens;
  for (const auto& s : all_sequences(k, n)) gens.push_back(complete_diagram(s));
  return generate(n, gens);
}

}  // namespace qsym
