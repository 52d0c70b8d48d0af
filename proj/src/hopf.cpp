#include "qsym/hopf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

// Dense accumulator over a flat index range that remembers touched slots, so
// extraction and reset cost is proportional to the support.
class Accumulator {
 public:
  explicit Accumulator(std::size_t size) : values_(size), touched_(size, 0) {}

  void add(std::size_t i, const Rational& a) {
    mark(i);
    values_[i] += a;
  }
  void add_product(std::size_t i, const Rational& a, const Rational& b) {
    mark(i);
    qsym::add_product(values_[i], a, b);
  }
  void sub_product(std::size_t i, const Rational& a, const Rational& b) {
    mark(i);
    values_[i] -= a * b;
  }

  SparseVec take() {
    std::sort(index_.begin(), index_.end());
    SparseVec out;
    out.reserve(index_.size());
    for (std::size_t i : index_) {
      if (sgn(values_[i]) != 0)
        out.emplace_back(static_cast<std::uint32_t>(i), values_[i]);
      values_[i] = 0;
      touched_[i] = 0;
    }
    index_.clear();
    return out;
  }

  /// True when every touched slot is zero; resets.
  bool all_zero_and_reset() {
    bool zero = true;
    for (std::size_t i : index_) {
      if (sgn(values_[i]) != 0) zero = false;
      values_[i] = 0;
      touched_[i] = 0;
    }
    index_.clear();
    return zero;
  }

 private:
  void mark(std::size_t i) {
    if (!touched_[i]) {
      touched_[i] = 1;
      index_.push_back(i);
    }
  }

  std::vector<Rational> values_;
  std::vector<char> touched_;
  std::vector<std::size_t> index_;
};

SparseVec apply_columns(const std::vector<SparseVec>& columns,
                        std::size_t target_dim, const SparseVec& v) {
  Accumulator acc(target_dim);
  for (const auto& [i, a] : v)
    for (const auto& [k, c] : columns[i]) acc.add_product(k, a, c);
  return acc.take();
}

}  // namespace

// ---------------------------------------------------------------------------

SparseVec FDHopf::multiply(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(dim);
  Rational ab;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      ab = x * y;
      for (const auto& [k, c] : product(i, j)) acc.add_product(k, ab, c);
    }
  return acc.take();
}

SparseVec FDHopf::apply_antipode(const SparseVec& a) const {
  return apply_columns(antipode, dim, a);
}

SparseVec FDHopf::apply_star(const SparseVec& a) const {
  return apply_columns(star, dim, a);
}

Rational FDHopf::apply_counit(const SparseVec& a) const {
  Rational out = 0;
  for (const auto& [i, c] : a) add_product(out, c, counit[i]);
  return out;
}

void FDHopf::validate_shape() const {
  auto bad = [](const std::string& what) {
    throw InvalidArgument("malformed Hopf data: " + what);
  };
  if (dim == 0) bad("dimension 0");
  if (labels.size() != dim) bad("label count");
  if (mult.size() != dim * dim) bad("multiplication table size");
  if (comult.size() != dim) bad("comultiplication table size");
  if (counit.size() != dim) bad("counit size");
  if (antipode.size() != dim) bad("antipode size");
  if (star.size() != dim) bad("star size");
  auto check_vec = [&](const SparseVec& v) {
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t].first >= dim) bad("index out of range");
      if (t > 0 && v[t - 1].first >= v[t].first) bad("unsorted vector");
    }
  };
  check_vec(unit);
  for (const auto& v : mult) check_vec(v);
  for (const auto& v : antipode) check_vec(v);
  for (const auto& v : star) check_vec(v);
  for (const auto& terms : comult)
    for (const auto& t : terms)
      if (t.left >= dim || t.right >= dim) bad("comultiplication index");
}

void FDHopf::canonicalize() {
  for (auto& terms : comult) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> merged;
    for (const auto& t : terms) merged[{t.left, t.right}] += t.coeff;
    terms.clear();
    for (const auto& [key, c] : merged)
      if (sgn(c) != 0) terms.push_back({key.first, key.second, c});
  }
}

bool FDHopf::is_commutative() const { return !noncommuting_pair().has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> FDHopf::noncommuting_pair()
    const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (product(i, j) != product(j, i)) return std::pair{i, j};
  return std::nullopt;
}

bool FDHopf::is_cocommutative() const {
  for (const auto& terms : comult) {
    std::vector<ComultTerm> flipped;
    for (const auto& t : terms) flipped.push_back({t.right, t.left, t.coeff});
    std::sort(flipped.begin(), flipped.end(),
              [](const ComultTerm& a, const ComultTerm& b) {
                return std::pair{a.left, a.right} < std::pair{b.left, b.right};
              });
    if (flipped != terms) return false;
  }
  return true;
}

bool FDHopf::same_structure(const FDHopf& o) const {
  return dim == o.dim && unit == o.unit && mult == o.mult &&
         comult == o.comult && counit == o.counit && antipode == o.antipode &&
         star == o.star;
}

// ---------------------------------------------------------------------------

FDHopf group_algebra(const PermGroup& g) {
  FDHopf h;
  const auto& el = g.elements();
  h.dim = el.size();
  for (const auto& x : el) h.labels.push_back(x.to_cycle_string());
  h.unit = unit_vector(static_cast<std::uint32_t>(g.index_of(Permutation::identity(g.degree()))));
  h.mult.resize(h.dim * h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      h.mult[i * h.dim + j] =
          unit_vector(static_cast<std::uint32_t>(g.index_of(el[i] * el[j])));
  h.comult.resize(h.dim);
  h.counit.assign(h.dim, Rational(1));
  h.antipode.resize(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    const auto u = static_cast<std::uint32_t>(i);
    h.comult[i] = {{u, u, Rational(1)}};
    h.antipode[i] =
        unit_vector(static_cast<std::uint32_t>(g.index_of(el[i].inverse())));
  }
  h.star = h.antipode;
  return h;
}

FDHopf function_algebra(const PermGroup& g) {
  FDHopf h;
  const auto& el = g.elements();
  h.dim = el.size();
  for (const auto& x : el) h.labels.push_back("d" + x.to_cycle_string());
  h.mult.resize(h.dim * h.dim);
  h.comult.resize(h.dim);
  h.counit.assign(h.dim, Rational(0));
  h.antipode.resize(h.dim);
  h.star.resize(h.dim);
  const std::size_t e = g.index_of(Permutation::identity(g.degree()));
  for (std::size_t i = 0; i < h.dim; ++i) {
    const auto u = static_cast<std::uint32_t>(i);
    h.unit.emplace_back(u, Rational(1));
    h.mult[i * h.dim + i] = unit_vector(u);
    for (std::size_t a = 0; a < h.dim; ++a) {
      // a * b = g_i  <=>  b = a^-1 g_i
      std::size_t b = g.index_of(el[a].inverse() * el[i]);
      h.comult[i].push_back(
          {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), Rational(1)});
    }
    h.antipode[i] =
        unit_vector(static_cast<std::uint32_t>(g.index_of(el[i].inverse())));
    h.star[i] = unit_vector(u);
  }
  h.counit[e] = 1;
  h.canonicalize();
  return h;
}

FDHopf elementary_abelian_group_algebra(std::size_t rank) {
  if (rank > 6) throw BoundExceeded("elementary abelian rank above 6");
  FDHopf h;
  h.dim = std::size_t{1} << rank;
  for (std::size_t m = 0; m < h.dim; ++m) h.labels.push_back("t" + std::to_string(m));
  h.unit = unit_vector(0);
  h.mult.resize(h.dim * h.dim);
  h.comult.resize(h.dim);
  h.counit.assign(h.dim, Rational(1));
  h.antipode.resize(h.dim);
  for (std::size_t a = 0; a < h.dim; ++a) {
    const auto u = static_cast<std::uint32_t>(a);
    for (std::size_t b = 0; b < h.dim; ++b)
      h.mult[a * h.dim + b] = unit_vector(static_cast<std::uint32_t>(a ^ b));
    h.comult[a] = {{u, u, Rational(1)}};
    h.antipode[a] = unit_vector(u);
  }
  h.star = h.antipode;
  return h;
}

// ---------------------------------------------------------------------------

std::string dump_structure(const FDHopf& h) {
  std::ostringstream out;
  out << "dim " << h.dim << "\n";
  for (std::size_t i = 0; i < h.dim; ++i) out << "label[" << i << "] " << h.labels[i] << "\n";
  for (const auto& [i, c] : h.unit) out << "unit[" << i << "] : " << to_fraction_string(c) << "\n";
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (const auto& [k, c] : h.product(i, j))
        out << "m[" << i << "][" << j << "] -> " << k << " : " << to_fraction_string(c)
            << "\n";
  for (std::size_t i = 0; i < h.dim; ++i)
    for (const auto& t : h.comult[i])
      out << "d[" << i << "] -> " << t.left << "," << t.right << " : "
          << to_fraction_string(t.coeff) << "\n";
  for (std::size_t i = 0; i < h.dim; ++i)
    if (sgn(h.counit[i]) != 0)
      out << "e[" << i << "] : " << to_fraction_string(h.counit[i]) << "\n";
  for (std::size_t i = 0; i < h.dim; ++i)
    for (const auto& [k, c] : h.antipode[i])
      out << "S[" << i << "] -> " << k << " : " << to_fraction_string(c) << "\n";
  for (std::size_t i = 0; i < h.dim; ++i)
    for (const auto& [k, c] : h.star[i])
      out << "star[" << i << "] -> " << k << " : " << to_fraction_string(c) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

SparseVec HopfMap::apply(const SparseVec& v) const {
  return apply_columns(images, target_dim, v);
}

std::size_t HopfMap::rank() const {
  RowEchelon e(target_dim);
  for (const auto& col : images) e.insert(dense_from_sparse(col, target_dim));
  return e.rank();
}

HopfMap compose(const HopfMap& g, const HopfMap& f) {
  if (f.target_dim != g.source_dim)
    throw InvalidArgument("Hopf maps do not compose: dimension mismatch");
  HopfMap out{f.source_dim, g.target_dim, {}};
  out.images.reserve(f.images.size());
  for (const auto& col : f.images) out.images.push_back(g.apply(col));
  return out;
}

HopfMap identity_map(std::size_t dim) {
  HopfMap out{dim, dim, {}};
  for (std::size_t i = 0; i < dim; ++i)
    out.images.push_back(unit_vector(static_cast<std::uint32_t>(i)));
  return out;
}

std::string hopf_map_violation(const FDHopf& s, const FDHopf& t,
                               const HopfMap& f) {
  if (f.source_dim != s.dim || f.target_dim != t.dim || f.images.size() != s.dim)
    return "dimension mismatch";
  if (f.apply(s.unit) != t.unit) return "unit not preserved";
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j)
      if (f.apply(s.product(i, j)) != t.multiply(f.images[i], f.images[j]))
        return "product not preserved on " + s.labels[i] + ", " + s.labels[j];
  const std::size_t m = t.dim;
  Accumulator acc(m * m);
  for (std::size_t i = 0; i < s.dim; ++i) {
    for (const auto& term : s.comult[i])
      for (const auto& [p, x] : f.images[term.left])
        for (const auto& [q, y] : f.images[term.right])
          acc.add_product(p * m + q, term.coeff, x * y);
    for (const auto& [k, c] : f.images[i])
      for (const auto& term : t.comult[k])
        acc.sub_product(term.left * m + term.right, c, term.coeff);
    if (!acc.all_zero_and_reset()) return "coproduct not preserved on " + s.labels[i];
    if (t.apply_counit(f.images[i]) != s.counit[i])
      return "counit not preserved on " + s.labels[i];
    if (f.apply(s.antipode[i]) != t.apply_antipode(f.images[i]))
      return "antipode not preserved on " + s.labels[i];
    if (f.apply(s.star[i]) != t.apply_star(f.images[i]))
      return "star not preserved on " + s.labels[i];
  }
  return {};
}

void require_hopf_map(const FDHopf& s, const FDHopf& t, const HopfMap& f) {
  std::string why = hopf_map_violation(s, t, f);
  if (!why.empty()) throw NotAHopfMap(why);
}

HopfMap restriction_surjection(const PermGroup& g, const PermGroup& v) {
  if (!v.is_subgroup_of(g)) throw NotASubgroup("restriction target is not a subgroup");
  HopfMap out{g.order(), v.order(), {}};
  for (const auto& x : g.elements()) {
    std::size_t k = v.index_of(x);
    out.images.push_back(k == PermGroup::npos
                             ? SparseVec{}
                             : unit_vector(static_cast<std::uint32_t>(k)));
  }
  return out;
}

namespace {

// Coordinates of each element of V (by index) in the given ordered basis.
std::vector<std::uint32_t> coordinates(const PermGroup& v,
                                       const std::vector<Permutation>& basis) {
  for (const auto& x : v.elements())
    if (!(x * x).is_identity())
      throw InvalidArgument("group is not elementary abelian of exponent 2");
  if (!v.is_abelian()) throw InvalidArgument("group is not abelian");
  if (basis.size() > 6 || (std::size_t{1} << basis.size()) != v.order())
    throw InvalidArgument("basis size does not match the group order");
  std::vector<std::uint32_t> coords(v.order(), ~0u);
  for (std::uint32_t c = 0; c < (1u << basis.size()); ++c) {
    Permutation x = Permutation::identity(v.degree());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c >> i & 1u) x = x * basis[i];
    std::size_t k = v.index_of(x);
    if (k == PermGroup::npos) throw InvalidArgument("basis element outside the group");
    if (coords[k] != ~0u) throw InvalidArgument("basis is not independent");
    coords[k] = c;
  }
  return coords;
}

}  // namespace

std::vector<Permutation> greedy_basis(const PermGroup& v) {
  std::vector<Permutation> basis;
  std::vector<Permutation> span = {Permutation::identity(v.degree())};
  for (const auto& x : v.elements()) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    basis.push_back(x);
    std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] * x);
    if (span.size() == v.order()) break;
  }
  return basis;
}

int dual_character_value(const PermGroup& v,
                         const std::vector<Permutation>& basis,
                         std::uint32_t mask, const Permutation& x) {
  auto coords = coordinates(v, basis);
  std::size_t k = v.index_of(x);
  if (k == PermGroup::npos) throw InvalidArgument("element outside the group");
  return std::popcount(mask & coords[k]) % 2 ? -1 : 1;
}

HopfMap fourier_iso(const PermGroup& v, std::vector<Permutation> basis) {
  if (basis.empty()) basis = greedy_basis(v);
  auto coords = coordinates(v, basis);
  const std::size_t n = v.order();
  HopfMap out{n, n, {}};
  const Rational scale(1, static_cast<long>(n));
  for (std::size_t k = 0; k < n; ++k) {
    SparseVec col;
    for (std::uint32_t m = 0; m < n; ++m)
      col.emplace_back(m, std::popcount(m & coords[k]) % 2 ? -scale : scale);
    out.images.push_back(std::move(col));
  }
  return out;
}

HopfMap fourier_iso_inverse(const PermGroup& v, std::vector<Permutation> basis) {
  if (basis.empty()) basis = greedy_basis(v);
  auto coords = coordinates(v, basis);
  const std::size_t n = v.order();
  HopfMap out{n, n, {}};
  for (std::uint32_t m = 0; m < n; ++m) {
    SparseVec col;
    for (std::size_t k = 0; k < n; ++k)
      col.emplace_back(static_cast<std::uint32_t>(k),
                       Rational(std::popcount(m & coords[k]) % 2 ? -1 : 1));
    out.images.push_back(std::move(col));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Commutative quotient algebra on coordinates 0..q-1.
struct Quotient {
  std::size_t q = 0;
  std::vector<DenseVec> mult;  // q*q products, dense
  DenseVec unit;

  DenseVec multiply(const DenseVec& a, const DenseVec& b) const {
    DenseVec out(q);
    for (std::size_t i = 0; i < q; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < q; ++j) {
        if (sgn(b[j]) == 0) continue;
        Rational ab = a[i] * b[j];
        const DenseVec& p = mult[i * q + j];
        for (std::size_t k = 0; k < q; ++k)
          if (sgn(p[k]) != 0) add_product(out[k], ab, p[k]);
      }
    }
    return out;
  }
};

// Minimal polynomial of a in the algebra with unit e (a lies in eB).
UniPoly minimal_polynomial(const Quotient& b, const DenseVec& e, const DenseVec& a) {
  const std::size_t q = b.q;
  RowEchelon krylov(q + q + 1);
  DenseVec power = e;
  for (std::size_t d = 0; d <= q; ++d) {
    DenseVec aug(q + q + 1);
    std::copy(power.begin(), power.end(), aug.begin());
    aug[q + d] = 1;
    DenseVec residue = krylov.reduce(aug);
    if (std::all_of(residue.begin(), residue.begin() + static_cast<long>(q),
                    [](const Rational& x) { return sgn(x) == 0; })) {
      UniPoly mu(residue.begin() + static_cast<long>(q),
                 residue.begin() + static_cast<long>(q + d + 1));
      trim(mu);
      return mu;
    }
    krylov.insert(std::move(aug));
    power = b.multiply(power, a);
  }
  throw InvalidArgument("minimal polynomial search did not terminate");
}

}  // namespace

std::vector<Character> characters(const FDHopf& h) {
  h.validate_shape();
  const std::size_t n = h.dim;
  if (n > 64) throw BoundExceeded("character search supports dim <= 64");

  // Two-sided commutator ideal as a fixed point of linear closure.
  RowEchelon ideal(n);
  std::vector<SparseVec> pending;
  auto offer = [&](const SparseVec& v) {
    if (v.empty()) return;
    if (ideal.insert(dense_from_sparse(v, n))) pending.push_back(v);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      offer(add_scaled(h.product(i, j), h.product(j, i), Rational(-1)));
  while (!pending.empty()) {
    SparseVec v = std::move(pending.back());
    pending.pop_back();
    for (std::size_t k = 0; k < n; ++k) {
      SparseVec bk = unit_vector(static_cast<std::uint32_t>(k));
      offer(h.multiply(bk, v));
      offer(h.multiply(v, bk));
    }
  }

  // Quotient on the free columns.
  const auto free = ideal.free_columns();
  Quotient b;
  b.q = free.size();
  if (b.q == 0) return {};
  auto project = [&](const SparseVec& v) {
    DenseVec r = ideal.reduce(dense_from_sparse(v, n));
    DenseVec out(b.q);
    for (std::size_t c = 0; c < b.q; ++c) out[c] = r[free[c]];
    return out;
  };
  b.mult.resize(b.q * b.q);
  for (std::size_t i = 0; i < b.q; ++i)
    for (std::size_t j = 0; j < b.q; ++j)
      b.mult[i * b.q + j] = project(h.product(free[i], free[j]));
  b.unit = project(h.unit);

  // Split the unit into primitive idempotents.
  std::vector<DenseVec> done;
  std::vector<DenseVec> work = {b.unit};
  while (!work.empty()) {
    DenseVec e = std::move(work.back());
    work.pop_back();
    bool split = false;
    for (std::size_t k = 0; k < b.q && !split; ++k) {
      DenseVec basis_k(b.q);
      basis_k[k] = 1;
      DenseVec a = b.multiply(e, basis_k);
      UniPoly mu = minimal_polynomial(b, e, a);
      if (mu.size() <= 2) continue;
      RootSplit rs = rational_roots(mu);
      if (rs.remainder.size() > 1)
        throw NonSplitQuotient("abelianization does not split over Q: factor " +
                               uni_poly_to_string(rs.remainder));
      for (std::size_t t = 1; t < rs.roots.size(); ++t)
        if (rs.roots[t] == rs.roots[t - 1])
          throw NonSemisimpleQuotient("repeated root " + rs.roots[t].get_str() +
                                      " in a minimal polynomial");
      for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        DenseVec idem = e;
        for (std::size_t j = 0; j < rs.roots.size(); ++j) {
          if (j == i) continue;
          DenseVec factor = a;
          const Rational inv = 1 / (rs.roots[i] - rs.roots[j]);
          for (std::size_t c = 0; c < b.q; ++c) {
            factor[c] -= rs.roots[j] * e[c];
            factor[c] *= inv;
          }
          idem = b.multiply(idem, factor);
        }
        work.push_back(std::move(idem));
      }
      split = true;
    }
    if (!split) done.push_back(std::move(e));
  }

  std::vector<Character> out;
  for (const auto& e : done) {
    std::size_t pivot = 0;
    while (sgn(e[pivot]) == 0) ++pivot;
    Character chi(n);
    for (std::size_t i = 0; i < n; ++i) {
      DenseVec x = b.multiply(e, project(unit_vector(static_cast<std::uint32_t>(i))));
      chi[i] = x[pivot] / e[pivot];
    }
    // Unital by construction; kept as a guard against a broken quotient.
    Rational at_unit = 0;
    for (const auto& [i, c] : h.unit) add_product(at_unit, c, chi[i]);
    if (at_unit != 1) throw InvalidArgument("character extraction produced a non-unital functional");
    bool star_ok = true;
    for (std::size_t i = 0; i < n && star_ok; ++i) {
      Rational v = 0;
      for (const auto& [k, c] : h.star[i]) add_product(v, c, chi[k]);
      star_ok = (v == chi[i]);
    }
    if (star_ok) out.push_back(std::move(chi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Character convolve(const FDHopf& h, const Character& a, const Character& b) {
  Character out(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (const auto& t : h.comult[i])
      add_product(out[i], t.coeff, a[t.left] * b[t.right]);
  return out;
}

CharacterGroup character_group(const FDHopf& h) {
  return character_group(h, characters(h));
}

CharacterGroup character_group(const FDHopf& h, std::vector<Character> chars) {
  CharacterGroup g;
  g.elements = std::move(chars);
  std::sort(g.elements.begin(), g.elements.end());
  auto find = [&](const Character& c) {
    auto it = std::lower_bound(g.elements.begin(), g.elements.end(), c);
    if (it == g.elements.end() || *it != c) return PermGroup::npos;
    return static_cast<std::size_t>(it - g.elements.begin());
  };
  const std::size_t m = g.elements.size();
  if (m == 0) throw ClosureFailure("no characters");
  g.identity = find(h.counit);
  if (g.identity == PermGroup::npos) throw ClosureFailure("counit is not a character");
  g.table.assign(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t k = find(convolve(h, g.elements[a], g.elements[c]));
      if (k == PermGroup::npos)
        throw ClosureFailure("convolution of characters " + std::to_string(a) + " and " +
                             std::to_string(c) + " is not a character");
      g.table[a][c] = k;
    }
  for (std::size_t a = 0; a < m; ++a) {
    Character inv(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i)
      for (const auto& [k, c] : h.antipode[i]) add_product(inv[i], c, g.elements[a][k]);
    std::size_t k = find(inv);
    if (k == PermGroup::npos || g.table[a][k] != g.identity)
      throw ClosureFailure("chi o S is not the inverse of character " + std::to_string(a));
  }
  if (m > 255) throw BoundExceeded("character group too large for a permutation action");
  g.group = regular_action(g.table);
  if (g.group.order() <= 24) g.type = isomorphism_type(g.group);
  return g;
}

}  // namespace qsym
