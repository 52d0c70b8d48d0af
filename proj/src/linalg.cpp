#include "qsym/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

SparseVec sparse_from_dense(const DenseVec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

DenseVec dense_from_sparse(const SparseVec& v, std::size_t dim) {
  DenseVec out(dim);
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

SparseVec unit_vector(std::uint32_t index) { return {{index, Rational(1)}}; }

SparseVec add_scaled(const SparseVec& a, const SparseVec& b,
                     const Rational& scale) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = scale * b[j].second;
      if (sgn(v) != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second + scale * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

DenseVec RowEchelon::reduce(DenseVec v) const {
  if (v.size() != dim_) throw InvalidArgument("vector dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    Rational factor = v[p];
    for (std::size_t c = 0; c < dim_; ++c)
      if (sgn(rows_[r][c]) != 0) v[c] -= factor * rows_[r][c];
  }
  return v;
}

bool RowEchelon::insert(DenseVec v) {
  v = reduce(std::move(v));
  std::size_t pivot = dim_;
  for (std::size_t c = 0; c < dim_; ++c)
    if (sgn(v[c]) != 0) {
      pivot = c;
      break;
    }
  if (pivot == dim_) return false;
  Rational inv = 1 / v[pivot];
  for (auto& x : v) x *= inv;
  for (auto& row : rows_) {
    if (sgn(row[pivot]) == 0) continue;
    Rational factor = row[pivot];
    for (std::size_t c = 0; c < dim_; ++c)
      if (sgn(v[c]) != 0) row[c] -= factor * v[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) -
             pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowEchelon::contains(const DenseVec& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------

void trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::string uni_poly_to_string(const UniPoly& p, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = p.size(); d-- > 0;) {
    if (sgn(p[d]) == 0) continue;
    Rational c = p[d];
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    Rational a = abs(c);
    bool unit = (a == 1);
    if (!unit || d == 0) out << a.get_str();
    if (d >= 1) out << var;
    if (d >= 2) out << '^' << d;
    first = false;
  }
  return first ? "0" : out.str();
}

namespace {

Rational eval(const UniPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t d = p.size(); d-- > 0;) acc = acc * x + p[d];
  return acc;
}

// p / (x - r) assuming r is a root.
UniPoly deflate(const UniPoly& p, const Rational& r) {
  UniPoly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t d = p.size(); d-- > 1;) {
    carry = carry * r + p[d];
    q[d - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  // Character values met in practice are tiny; cap the trial division so a
  // pathological input fails loudly rather than hanging.
  const mpz_class limit = 10'000'000;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (d > limit) throw BoundExceeded("rational root search: constant too large");
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RootSplit rational_roots(const UniPoly& input) {
  UniPoly p = input;
  trim(p);
  if (p.empty()) throw InvalidArgument("zero polynomial has no root split");

  RootSplit out;
  // Roots at zero.
  while (p.size() > 1 && sgn(p[0]) == 0) {
    out.roots.push_back(0);
    p.erase(p.begin());
  }

  while (p.size() > 1) {
    // Integer-scale to apply the rational root theorem.
    mpz_class lcm_den = 1;
    for (const auto& c : p) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<mpz_class> ints;
    for (const auto& c : p) ints.push_back(mpz_class(c * lcm_den));

    bool found = false;
    for (const auto& num : positive_divisors(ints.front())) {
      for (const auto& den : positive_divisors(ints.back())) {
        for (int s : {1, -1}) {
          Rational cand(num * s, den);
          cand.canonicalize();
          if (sgn(eval(p, cand)) == 0) {
            out.roots.push_back(cand);
            p = deflate(p, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  out.remainder = std::move(p);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace qsym
