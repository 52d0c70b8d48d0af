#include "qsym/twist.hpp"

#include <map>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

using Terms = std::vector<std::pair<std::uint32_t, Rational>>;

// Iterated coproduct (Delta (x) id) Delta(x), grouped by the outer legs.
struct OuterGroup {
  std::uint32_t first = 0;
  std::uint32_t third = 0;
  Terms middle;  // (second leg, coefficient)
};

struct DoubleCoproduct {
  std::size_t dim = 0;
  std::vector<std::vector<OuterGroup>> groups;  // per basis element
  std::vector<std::vector<int>> lookup;         // per element: first*dim+third -> group or -1

  explicit DoubleCoproduct(const FDHopf& h) : dim(h.dim), groups(h.dim), lookup(h.dim) {
    for (std::size_t x = 0; x < dim; ++x) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::map<std::uint32_t, Rational>> acc;
      for (const auto& t : h.comult[x])
        for (const auto& s : h.comult[t.left])
          acc[{s.left, t.right}][s.right] += s.coeff * t.coeff;
      lookup[x].assign(dim * dim, -1);
      for (auto& [key, mid] : acc) {
        OuterGroup g{key.first, key.second, {}};
        for (auto& [k, c] : mid)
          if (sgn(c) != 0) g.middle.emplace_back(k, c);
        if (g.middle.empty()) continue;
        lookup[x][key.first * dim + key.second] = static_cast<int>(groups[x].size());
        groups[x].push_back(std::move(g));
      }
    }
  }

  const OuterGroup* find(std::size_t x, std::size_t first, std::size_t third) const {
    int k = lookup[x][first * dim + third];
    return k < 0 ? nullptr : &groups[x][static_cast<std::size_t>(k)];
  }
};

// Nonzero entries per row of a dim x dim table.
std::vector<Terms> sparse_rows(const std::vector<Rational>& table, std::size_t dim) {
  std::vector<Terms> rows(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(table[i * dim + j]) != 0)
        rows[i].emplace_back(static_cast<std::uint32_t>(j), table[i * dim + j]);
  return rows;
}

std::vector<Terms> sparse_cols(const std::vector<Rational>& table, std::size_t dim) {
  std::vector<Terms> cols(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(table[i * dim + j]) != 0)
        cols[j].emplace_back(static_cast<std::uint32_t>(i), table[i * dim + j]);
  return cols;
}

SparseVec from_dense(const DenseVec& d) { return sparse_from_dense(d); }

// sum over Delta(x) of f(x1, x2)
template <typename F>
Rational sum_over_coproduct(const FDHopf& h, std::size_t x, F f) {
  Rational out = 0;
  for (const auto& t : h.comult[x]) add_product(out, t.coeff, f(t.left, t.right));
  return out;
}

}  // namespace

Cocycle2 trivial_cocycle(const FDHopf& h) {
  Cocycle2 s;
  s.dim = h.dim;
  s.table.resize(h.dim * h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) s.table[i * h.dim + j] = h.counit[i] * h.counit[j];
  s.inverse_table = s.table;
  return s;
}

Cocycle2 klein_bicharacter() {
  Cocycle2 s;
  s.dim = 4;
  s.table.assign(16, Rational(1));
  for (auto [i, j] : {std::pair{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 2}, {3, 3}})
    s.table[static_cast<std::size_t>(i * 4 + j)] = -1;
  s.inverse_table = s.table;
  return s;
}

CocycleReport check_cocycle(const FDHopf& h, const Cocycle2& s) {
  h.validate_shape();
  CocycleReport r;
  const std::size_t n = h.dim;
  if (s.dim != n || s.table.size() != n * n || s.inverse_table.size() != n * n) {
    r.unital = r.inverse_law = r.cocycle_identity = false;
    r.failure = "cocycle tables do not match the algebra dimension";
    return r;
  }
  const auto& L = h.labels;

  // Unitality.
  for (std::size_t x = 0; x < n && r.unital; ++x) {
    Rational right = 0, left = 0;
    for (const auto& [i, c] : h.unit) {
      add_product(right, c, s.value(x, i));
      add_product(left, c, s.value(i, x));
    }
    if (right != h.counit[x] || left != h.counit[x]) {
      r.unital = false;
      r.failure = "sigma(" + L[x] + ", 1) or sigma(1, " + L[x] + ") differs from eps";
    }
  }

  // Convolution inverse, both orders.
  for (std::size_t x = 0; x < n && r.inverse_law; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational a = 0, b = 0;
      for (const auto& t : h.comult[x])
        for (const auto& u : h.comult[y]) {
          Rational cd = t.coeff * u.coeff;
          add_product(a, cd, s.value(t.left, u.left) * s.inverse(t.right, u.right));
          add_product(b, cd, s.inverse(t.left, u.left) * s.value(t.right, u.right));
        }
      const Rational want = h.counit[x] * h.counit[y];
      if (a != want || b != want) {
        r.inverse_law = false;
        r.failure = "convolution inverse fails on (" + L[x] + ", " + L[y] + ")";
        break;
      }
    }

  // Cocycle identity as a full tensor over (x, y, z).
  const auto rows = sparse_rows(s.table, n);
  const auto cols = sparse_cols(s.table, n);
  std::vector<Rational> diff(n * n * n);
  Rational coeff;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      // sigma(x1, y1) sigma(x2 y2, z)
      Rational* slot = &diff[(x * n + y) * n];
      for (const auto& t : h.comult[x]) {
        if (rows[t.left].empty()) continue;
        for (const auto& u : h.comult[y]) {
          const Rational& s1 = s.value(t.left, u.left);
          if (sgn(s1) == 0) continue;
          coeff = t.coeff * u.coeff * s1;
          for (const auto& [k, e] : h.product(t.right, u.right)) {
            Rational ce = coeff * e;
            for (const auto& [z, v] : rows[k]) add_product(slot[z], ce, v);
          }
        }
      }
    }
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      // sigma(y1, z1) sigma(x, y2 z2)
      for (const auto& t : h.comult[y]) {
        if (rows[t.left].empty()) continue;
        for (const auto& u : h.comult[z]) {
          const Rational& s1 = s.value(t.left, u.left);
          if (sgn(s1) == 0) continue;
          coeff = t.coeff * u.coeff * s1;
          for (const auto& [k, e] : h.product(t.right, u.right)) {
            Rational ce = coeff * e;
            for (const auto& [x, v] : cols[k]) diff[(x * n + y) * n + z] -= ce * v;
          }
        }
      }
    }
  for (std::size_t idx = 0; idx < diff.size(); ++idx)
    if (sgn(diff[idx]) != 0) {
      r.cocycle_identity = false;
      const std::size_t z = idx % n, y = (idx / n) % n, x = idx / (n * n);
      r.failure = "cocycle identity fails on (" + L[x] + ", " + L[y] + ", " + L[z] + ")";
      break;
    }
  return r;
}

Cocycle2 pullback(const Cocycle2& sigma, const FDHopf& target,
                  const FDHopf& source, const HopfMap& pi) {
  require_hopf_map(source, target, pi);
  if (sigma.dim != target.dim) throw InvalidArgument("cocycle lives on a different algebra");
  Cocycle2 out;
  out.dim = source.dim;
  const std::size_t n = source.dim;
  out.table.assign(n * n, Rational(0));
  out.inverse_table.assign(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [p, a] : pi.images[i])
        for (const auto& [q, b] : pi.images[j]) {
          Rational ab = a * b;
          add_product(out.table[i * n + j], ab, sigma.value(p, q));
          add_product(out.inverse_table[i * n + j], ab, sigma.inverse(p, q));
        }
  return out;
}

FDHopf twist_unchecked(const FDHopf& h, const Cocycle2& s, StarConvention star) {
  h.validate_shape();
  const std::size_t n = h.dim;
  if (s.dim != n) throw InvalidArgument("cocycle lives on a different algebra");
  const DoubleCoproduct d2(h);
  const auto rows = sparse_rows(s.table, n);
  const auto inv_rows = sparse_rows(s.inverse_table, n);

  FDHopf out = h;

  // [x][y] = sigma(x1, y1) sigma^-1(x3, y3) [x2 y2]
  DenseVec acc(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(acc.begin(), acc.end(), Rational(0));
      for (const auto& gx : d2.groups[x]) {
        for (const auto& [y1, s1] : rows[gx.first]) {
          for (const auto& [y3, s3] : inv_rows[gx.third]) {
            const OuterGroup* gy = d2.find(y, y1, y3);
            if (!gy) continue;
            Rational ss = s1 * s3;
            for (const auto& [x2, c] : gx.middle)
              for (const auto& [y2, e] : gy->middle) {
                Rational w = ss * c * e;
                for (const auto& [k, m] : h.product(x2, y2)) add_product(acc[k], w, m);
              }
          }
        }
      }
      out.mult[x * n + y] = from_dense(acc);
    }

  // S^sigma(x) = sum L(x1) S(x2) R(x3) with L(u) = sigma(u1, S u2) and
  // R(v) = sigma^-1(S v1, v2).
  DenseVec left(n), right(n);
  for (std::size_t u = 0; u < n; ++u) {
    left[u] = sum_over_coproduct(h, u, [&](std::size_t a, std::size_t b) {
      Rational v = 0;
      for (const auto& [k, c] : h.antipode[b]) add_product(v, c, s.value(a, k));
      return v;
    });
    right[u] = sum_over_coproduct(h, u, [&](std::size_t a, std::size_t b) {
      Rational v = 0;
      for (const auto& [k, c] : h.antipode[a]) add_product(v, c, s.inverse(k, b));
      return v;
    });
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(acc.begin(), acc.end(), Rational(0));
    for (const auto& g : d2.groups[x]) {
      Rational lr = left[g.first] * right[g.third];
      if (sgn(lr) == 0) continue;
      for (const auto& [w, c] : g.middle) {
        Rational lrc = lr * c;
        for (const auto& [k, m] : h.antipode[w]) add_product(acc[k], lrc, m);
      }
    }
    out.antipode[x] = from_dense(acc);
  }

  if (star == StarConvention::Compensated) {
    DenseVec alpha(n), beta(n);
    for (std::size_t u = 0; u < n; ++u) {
      alpha[u] = sum_over_coproduct(h, u, [&](std::size_t a, std::size_t b) { return s.value(a, b); });
      beta[u] = sum_over_coproduct(h, u, [&](std::size_t a, std::size_t b) { return s.inverse(a, b); });
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::fill(acc.begin(), acc.end(), Rational(0));
      for (const auto& g : d2.groups[x]) {
        Rational ab = alpha[g.first] * beta[g.third];
        if (sgn(ab) == 0) continue;
        for (const auto& [w, c] : g.middle) {
          Rational abc = ab * c;
          for (const auto& [k, m] : h.star[w]) add_product(acc[k], abc, m);
        }
      }
      out.star[x] = from_dense(acc);
    }
  }
  return out;
}

FDHopf twist(const FDHopf& h, const Cocycle2& sigma, StarConvention star) {
  CocycleReport cr = check_cocycle(h, sigma);
  if (!cr.valid()) throw InvalidCocycle(cr.failure);
  FDHopf out = twist_unchecked(h, sigma, star);
  HopfAxiomReport ar = verify_hopf_axioms(out);
  if (!ar.all()) {
    std::string why;
    for (const auto& f : ar.failures) why += (why.empty() ? "" : "; ") + f;
    throw TwistNotHopf("twisted algebra fails: " + why);
  }
  return out;
}

InducedCocycle induced_klein_cocycle(const PermGroup& g, const PermGroup& v,
                                     const std::vector<Permutation>& basis) {
  if (v.order() != 4) throw InvalidArgument("induced cocycle needs a Klein subgroup");
  InducedCocycle out;
  out.algebra = function_algebra(g);
  out.projection = compose(fourier_iso(v, basis), restriction_surjection(g, v));
  out.cocycle = pullback(klein_bicharacter(), elementary_abelian_group_algebra(2),
                         out.algebra, out.projection);
  return out;
}

PermGroup s4tau_klein() {
  return generate(4, s4tau_basis());
}

std::vector<Permutation> s4tau_basis() {
  return {Permutation::from_cycles(4, "(12)"), Permutation::from_cycles(4, "(34)")};
}

FDHopf s4tau() {
  const PermGroup g = PermGroup::symmetric(4);
  InducedCocycle ic = induced_klein_cocycle(g, s4tau_klein(), s4tau_basis());
  return twist(ic.algebra, ic.cocycle);
}

}  // namespace qsym
