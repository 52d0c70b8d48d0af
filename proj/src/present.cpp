#include "qsym/present.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

int sign_of(const Rational& q) {
  if (q == 1) return 1;
  if (q == -1) return -1;
  throw InvalidArgument("cocycle value " + q.get_str() + " is not +-1");
}

void require_klein(const Cocycle2& sigma) {
  if (sigma.dim != 4 || sigma.table.size() != 16 || sigma.inverse_table.size() != 16)
    throw InvalidArgument("sign calculus needs a cocycle on the Klein group algebra");
}

}  // namespace

Bidegree generator_bidegree(std::size_t i, std::size_t j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw InvalidArgument("generator index out of range");
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

int commutation_sign(const Cocycle2& sigma, Bidegree d1, Bidegree d2) {
  require_klein(sigma);
  return sign_of(sigma.value(d1.left, d2.left)) * sign_of(sigma.value(d1.right, d2.right)) *
         sign_of(sigma.value(d2.left, d1.left)) * sign_of(sigma.value(d2.right, d1.right));
}

std::size_t SignTable::negative_count() const {
  return static_cast<std::size_t>(std::count(entries.begin(), entries.end(), -1));
}

int expected_commutation_sign(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return ((i == k) != (j == l)) ? -1 : 1;
}

SignTable compute_sign_table(const Cocycle2& sigma) {
  SignTable t;
  t.entries.reserve(81);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t l = 1; l <= 3; ++l)
          t.entries.push_back(
              commutation_sign(sigma, generator_bidegree(i, j), generator_bidegree(k, l)));
  return t;
}

SignTable relation_sign_table(const Cocycle2& sigma) {
  SignTable t = compute_sign_table(sigma);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t l = 1; l <= 3; ++l)
          if (t.at(i, j, k, l) != expected_commutation_sign(i, j, k, l))
            throw PatternMismatch("commutation sign of a" + std::to_string(i) +
                                  std::to_string(j) + " and a" + std::to_string(k) +
                                  std::to_string(l) + " is " +
                                  std::to_string(t.at(i, j, k, l)));
  return t;
}

int product_sign(const Cocycle2& sigma, const std::vector<Bidegree>& factors) {
  require_klein(sigma);
  // [p][x] = sigma(deg_l p, deg_l x) sigma^-1(deg_r p, deg_r x) [p x]; the
  // inverse of a +-1 coefficient is itself.
  int s = 1;
  Bidegree acc;
  for (const Bidegree& d : factors) {
    s *= sign_of(sigma.value(acc.left, d.left)) * sign_of(sigma.inverse(acc.right, d.right));
    acc = acc * d;
  }
  return s;
}

std::vector<PermanentSign> determinant_to_permanent_signs(std::size_t size,
                                                          const Cocycle2& sigma) {
  if (size != 2 && size != 3) throw InvalidArgument("size must be 2 or 3");
  std::vector<PermanentSign> out;
  const PermGroup sym = PermGroup::symmetric(size);
  for (const Permutation& tau : sym.elements()) {
    std::vector<Bidegree> factors;
    for (std::size_t r = 0; r < size; ++r) factors.push_back(generator_bidegree(r + 1, tau(r) + 1));
    int s = product_sign(sigma, factors);
    PermanentSign ps{tau, s, s * tau.sign()};
    if (ps.combined != 1)
      throw SignMismatch("sgn(tau) s(tau) = -1 for tau = " + tau.to_cycle_string());
    out.push_back(ps);
  }
  return out;
}

// ---------------------------------------------------------------------------

PresentationSpec PresentationSpec::snplus(std::size_t n) {
  if (n == 0) throw InvalidArgument("snplus needs n >= 1");
  return {Tag::SnPlus, n, n};
}

PresentationSpec PresentationSpec::incseq(std::size_t k, std::size_t n) {
  if (k > n) throw InvalidArgument("incseq needs k <= n");
  return {Tag::IncSeq, n, k};
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParseError("bad number in presentation name '" + std::string(whole) + "'");
  return v;
}

}  // namespace

PresentationSpec PresentationSpec::parse(std::string_view name) {
  if (name == "o2minus") return o2minus();
  if (name == "so3minus") return so3minus();
  if (name == "o2") return o2();
  if (name == "so3") return so3();
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == ':') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  try {
    if (parts.size() == 2 && parts[0] == "snplus") return snplus(parse_size(parts[1], name));
    if (parts.size() == 3 && parts[0] == "incseq")
      return incseq(parse_size(parts[1], name), parse_size(parts[2], name));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(name) + "'");
  }
  throw ParseError("unknown presentation '" + std::string(name) + "'");
}

std::string PresentationSpec::name() const {
  switch (tag) {
    case Tag::O2Minus: return "o2minus";
    case Tag::SO3Minus: return "so3minus";
    case Tag::O2: return "o2";
    case Tag::SO3: return "so3";
    case Tag::SnPlus: return "snplus:" + std::to_string(n);
    case Tag::IncSeq: return "incseq:" + std::to_string(k) + ":" + std::to_string(n);
  }
  return "";
}

std::vector<std::string> PresentationSpec::relations() const {
  switch (tag) {
    case Tag::O2Minus:
      return {"orthogonality", "row-anticommutation", "column-anticommutation", "commutation"};
    case Tag::SO3Minus:
      return {"orthogonality", "row-anticommutation", "column-anticommutation", "commutation",
              "permanent"};
    case Tag::O2: return {"orthogonality", "commutative"};
    case Tag::SO3: return {"orthogonality", "commutative", "determinant"};
    case Tag::SnPlus: return {"projection", "row-sums", "column-sums"};
    case Tag::IncSeq: return {"projection", "column-sums", "increasing"};
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

int permanent3(const IntMatrix& a) {
  static const PermGroup s3 = PermGroup::symmetric(3);
  int total = 0;
  for (const Permutation& t : s3.elements())
    total += a(0, t(0)) * a(1, t(1)) * a(2, t(2));
  return total;
}

// Scalar form of every relation on a complete assignment. Anticommutation
// xy = -xy over a field of characteristic zero forces xy = 0.
bool satisfies(const PresentationSpec& p, const IntMatrix& a) {
  const std::size_t n = p.rows(), k = p.cols();
  switch (p.tag) {
    case PresentationSpec::Tag::O2Minus:
    case PresentationSpec::Tag::SO3Minus: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l)
            if (l != j && (a(i, j) * a(i, l) != 0 || a(j, i) * a(l, i) != 0)) return false;
      const IntMatrix at = a.transpose();
      if (a * at != IntMatrix::identity(n) || at * a != IntMatrix::identity(n)) return false;
      return p.tag == PresentationSpec::Tag::O2Minus || permanent3(a) == 1;
    }
    case PresentationSpec::Tag::SnPlus:
      for (std::size_t i = 0; i < n; ++i) {
        int row = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j) {
          row += a(i, j);
          col += a(j, i);
        }
        if (row != 1 || col != 1) return false;
      }
      return true;
    case PresentationSpec::Tag::IncSeq:
      for (std::size_t j = 0; j < k; ++j) {
        int col = 0;
        for (std::size_t i = 0; i < n; ++i) col += a(i, j);
        if (col != 1) return false;
      }
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t jj = j + 1; jj < k; ++jj)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t ii = 0; ii <= i; ++ii)
              if (a(i, j) * a(ii, jj) != 0) return false;
      return true;
    default:
      return false;
  }
}

// Row-major backtracking. The domain is {-1, 0, 1} for the orthogonal grids
// (zero products leave one nonzero per row, and orthogonality squares it to
// 1) and {0, 1} for projections. Pruning only discards partial assignments
// that already violate a zero-product or sum bound.
class Solver {
 public:
  explicit Solver(const PresentationSpec& p)
      : p_(p), a_(p.rows(), p.cols()), row_support_(p.rows(), 0), col_support_(p.cols(), 0) {
    signed_ = p.tag == PresentationSpec::Tag::O2Minus || p.tag == PresentationSpec::Tag::SO3Minus;
  }

  std::vector<IntMatrix> run() {
    step(0);
    return std::move(found_);
  }

 private:
  bool admissible(std::size_t i, std::size_t j) const {
    switch (p_.tag) {
      case PresentationSpec::Tag::IncSeq:
        if (col_support_[j]) return false;
        // p_{i,j} p_{i',j'} = 0 for j < j', i >= i'; earlier rows hold the
        // smaller i, so check both orientations against placed entries.
        for (std::size_t ii = 0; ii < p_.rows(); ++ii)
          for (std::size_t jj = 0; jj < p_.cols(); ++jj) {
            if (a_(ii, jj) == 0 || (ii == i && jj == j)) continue;
            if (jj < j && ii >= i) return false;
            if (j < jj && i >= ii) return false;
          }
        return true;
      default:
        return !row_support_[i] && !col_support_[j];
    }
  }

  void step(std::size_t cell) {
    const std::size_t rows = p_.rows(), cols = p_.cols();
    if (cell == rows * cols) {
      if (satisfies(p_, a_)) found_.push_back(a_);
      return;
    }
    const std::size_t i = cell / cols, j = cell % cols;
    step(cell + 1);
    if (!admissible(i, j)) return;
    ++row_support_[i];
    ++col_support_[j];
    for (int v : signed_ ? std::vector<int>{-1, 1} : std::vector<int>{1}) {
      a_(i, j) = v;
      step(cell + 1);
    }
    a_(i, j) = 0;
    --row_support_[i];
    --col_support_[j];
  }

  const PresentationSpec& p_;
  IntMatrix a_;
  std::vector<int> row_support_;
  std::vector<int> col_support_;
  bool signed_ = false;
  std::vector<IntMatrix> found_;
};

}  // namespace

std::vector<CharacterSolution> solve_characters(const PresentationSpec& p) {
  if (p.tag == PresentationSpec::Tag::O2 || p.tag == PresentationSpec::Tag::SO3)
    throw InfiniteCharacterSpace(p.name() + " has a continuum of characters");
  if (p.rows() > kMaxGrid || p.cols() > kMaxGrid)
    throw BoundExceeded("grid of " + p.name() + " exceeds " + std::to_string(kMaxGrid) + " x " +
                        std::to_string(kMaxGrid));
  std::vector<IntMatrix> found = Solver(p).run();
  std::sort(found.begin(), found.end());
  std::vector<CharacterSolution> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back({std::move(m), p});
  return out;
}

PresentedCharacterGroup matrix_group(std::vector<IntMatrix> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw ClosureFailure("empty matrix set");
  auto index = [&](const IntMatrix& m) {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || *it != m)
      throw ClosureFailure("matrix " + m.to_string() + " is outside the set");
    return static_cast<std::size_t>(it - elements.begin());
  };
  index(IntMatrix::identity(elements.front().rows()));
  PresentedCharacterGroup g;
  g.table.assign(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    index(elements[a].transpose());
    for (std::size_t b = 0; b < elements.size(); ++b)
      g.table[a][b] = index(elements[a] * elements[b]);
  }
  g.group = regular_action(g.table);
  if (g.group.order() <= 24) g.type = isomorphism_type(g.group);
  g.elements = std::move(elements);
  return g;
}

PresentedCharacterGroup character_group_of(const PresentationSpec& p) {
  using Tag = PresentationSpec::Tag;
  if (p.tag != Tag::O2Minus && p.tag != Tag::SO3Minus && p.tag != Tag::SnPlus)
    throw InvalidArgument(p.name() + " has no matrix-product character group");
  std::vector<IntMatrix> mats;
  for (auto& s : solve_characters(p)) mats.push_back(std::move(s.matrix));
  return matrix_group(std::move(mats));
}

}  // namespace qsym
