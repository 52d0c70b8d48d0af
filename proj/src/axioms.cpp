// Exhaustive Hopf *-algebra axiom verification.
//
// The suites are written once over a scalar type. When every structure
// constant has a small common denominator D, the tensors are scaled by D and
// checked in 128-bit integers; each identity is then compared with the power
// of D that balances the number of tensor factors on each side. Otherwise the
// same code runs over exact rationals with D = 1.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qsym/hopf.hpp"

namespace qsym {

namespace {

using Wide = __int128;

inline void accumulate(Rational& acc, const Rational& a, const Rational& b) {
  add_product(acc, a, b);
}
inline void accumulate(Wide& acc, Wide a, Wide b) { acc += a * b; }

inline bool is_nonzero(const Rational& x) { return sgn(x) != 0; }
inline bool is_nonzero(Wide x) { return x != 0; }

template <typename T>
using Vec = std::vector<std::pair<std::uint32_t, T>>;

template <typename T>
struct Term3 {
  std::uint32_t left, right;
  T coeff;
};

template <typename T>
struct Tensors {
  std::size_t n = 0;
  T scale;  // D
  Vec<T> unit;
  std::vector<Vec<T>> mult;
  std::vector<std::vector<Term3<T>>> comult;
  std::vector<T> counit;
  std::vector<Vec<T>> antipode;
  std::vector<Vec<T>> star;
};

template <typename T>
class Acc {
 public:
  explicit Acc(std::size_t size) : values_(size), touched_(size, 0) {}

  void add(std::size_t i, const T& a, const T& b) {
    mark(i);
    accumulate(values_[i], a, b);
  }
  void add(std::size_t i, const T& a) {
    mark(i);
    values_[i] += a;
  }
  void sub(std::size_t i, const T& a) {
    mark(i);
    values_[i] -= a;
  }

  Vec<T> take() {
    std::sort(index_.begin(), index_.end());
    Vec<T> out;
    for (std::size_t i : index_) {
      if (is_nonzero(values_[i])) out.emplace_back(static_cast<std::uint32_t>(i), values_[i]);
      values_[i] = T(0);
      touched_[i] = 0;
    }
    index_.clear();
    return out;
  }

  bool all_zero_and_reset() {
    bool zero = true;
    for (std::size_t i : index_) {
      if (is_nonzero(values_[i])) zero = false;
      values_[i] = T(0);
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
  std::vector<T> values_;
  std::vector<char> touched_;
  std::vector<std::size_t> index_;
};

template <typename T>
Vec<T> times(const Vec<T>& v, const T& s) {
  Vec<T> out;
  for (const auto& [i, c] : v) out.emplace_back(i, c * s);
  return out;
}

template <typename T>
class Suites {
 public:
  Suites(const Tensors<T>& t, const std::vector<std::string>& labels)
      : t_(t), L_(labels), n_(t.n), acc_(t.n), acc2_(t.n * t.n) {}

  HopfAxiomReport run() {
    associativity();
    coassociativity();
    counit();
    bialgebra();
    antipode();
    star();
    return r_;
  }

 private:
  const Vec<T>& product(std::size_t i, std::size_t j) const { return t_.mult[i * n_ + j]; }

  Vec<T> multiply(const Vec<T>& a, const Vec<T>& b) {
    T ab;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) {
        ab = x * y;
        for (const auto& [k, c] : product(i, j)) acc_.add(k, ab, c);
      }
    return acc_.take();
  }

  Vec<T> apply(const std::vector<Vec<T>>& cols, const Vec<T>& v) {
    for (const auto& [i, a] : v)
      for (const auto& [k, c] : cols[i]) acc_.add(k, a, c);
    return acc_.take();
  }

  Vec<T> basis(std::size_t i, const T& coeff) const {
    return {{static_cast<std::uint32_t>(i), coeff}};
  }

  void fail(bool& flag, std::string msg) {
    if (flag) r_.failures.push_back(std::move(msg));
    flag = false;
  }

  // Scaled tensors carry one factor D each; comparisons below balance the
  // factor counts per side.

  void associativity() {
    const T one(1);
    const T d2 = t_.scale * t_.scale;
    for (std::size_t i = 0; i < n_ && r_.associativity; ++i) {
      if (multiply(t_.unit, basis(i, one)) != basis(i, d2) ||
          multiply(basis(i, one), t_.unit) != basis(i, d2))
        fail(r_.associativity, "unit law fails on " + L_[i]);
      for (std::size_t j = 0; j < n_ && r_.associativity; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          if (multiply(product(i, j), basis(k, one)) !=
              multiply(basis(i, one), product(j, k))) {
            fail(r_.associativity, "(" + L_[i] + " " + L_[j] + ") " + L_[k] +
                                       " != " + L_[i] + " (" + L_[j] + " " + L_[k] + ")");
            break;
          }
        }
    }
  }

  void coassociativity() {
    Acc<T> acc3(n_ * n_ * n_);
    for (std::size_t b = 0; b < n_; ++b) {
      for (const auto& t : t_.comult[b]) {
        for (const auto& s : t_.comult[t.left])
          acc3.add((s.left * n_ + s.right) * n_ + t.right, t.coeff, s.coeff);
        for (const auto& s : t_.comult[t.right]) {
          T neg = -t.coeff;
          acc3.add((t.left * n_ + s.left) * n_ + s.right, neg, s.coeff);
        }
      }
      if (!acc3.all_zero_and_reset()) {
        fail(r_.coassociativity, "coassociativity fails on " + L_[b]);
        return;
      }
    }
  }

  void counit() {
    const T d2 = t_.scale * t_.scale;
    for (std::size_t b = 0; b < n_; ++b)
      for (int side = 0; side < 2; ++side) {
        for (const auto& t : t_.comult[b]) {
          if (side == 0) acc_.add(t.right, t.coeff, t_.counit[t.left]);
          else acc_.add(t.left, t.coeff, t_.counit[t.right]);
        }
        if (acc_.take() != basis(b, d2)) {
          fail(r_.counit, std::string(side == 0 ? "left" : "right") +
                              " counit law fails on " + L_[b]);
          return;
        }
      }
  }

  void bialgebra() {
    const T d = t_.scale;
    const T d2 = d * d;
    for (const auto& [i, a] : t_.unit)
      for (const auto& t : t_.comult[i]) acc2_.add(t.left * n_ + t.right, a, t.coeff);
    for (const auto& [i, a] : t_.unit)
      for (const auto& [j, b] : t_.unit) acc2_.add(i * n_ + j, -a, b);
    if (!acc2_.all_zero_and_reset()) fail(r_.bialgebra, "Delta(1) != 1 (x) 1");
    T eps_unit(0);
    for (const auto& [i, c] : t_.unit) accumulate(eps_unit, c, t_.counit[i]);
    if (eps_unit != d2) fail(r_.bialgebra, "eps(1) != 1");

    T cc, xy;
    for (std::size_t i = 0; i < n_ && r_.bialgebra; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const Vec<T>& ij = product(i, j);
        T eps_ij(0);
        for (const auto& [k, c] : ij) accumulate(eps_ij, c, t_.counit[k]);
        if (eps_ij != T(t_.counit[i] * t_.counit[j])) {
          fail(r_.bialgebra, "eps not multiplicative on " + L_[i] + ", " + L_[j]);
          break;
        }
        // D^2 * (M C) versus C C M M.
        for (const auto& [k, c] : ij) {
          T cd = c * d2;
          for (const auto& t : t_.comult[k]) acc2_.add(t.left * n_ + t.right, cd, t.coeff);
        }
        for (const auto& s : t_.comult[i])
          for (const auto& t : t_.comult[j]) {
            const Vec<T>& left = product(s.left, t.left);
            if (left.empty()) continue;
            const Vec<T>& right = product(s.right, t.right);
            if (right.empty()) continue;
            cc = -(s.coeff * t.coeff);
            for (const auto& [p, x] : left) {
              xy = cc * x;
              for (const auto& [q, y] : right) acc2_.add(p * n_ + q, xy, y);
            }
          }
        if (!acc2_.all_zero_and_reset()) {
          fail(r_.bialgebra, "Delta not multiplicative on " + L_[i] + ", " + L_[j]);
          break;
        }
      }
  }

  void antipode() {
    const T one(1);
    for (std::size_t b = 0; b < n_; ++b) {
      // D * eps(b) 1 versus sum C S M.
      const Vec<T> expected = times(t_.unit, T(t_.counit[b] * t_.scale));
      for (int side = 0; side < 2; ++side) {
        Vec<T> sum;
        for (const auto& t : t_.comult[b]) {
          Vec<T> x = side == 0 ? multiply(t_.antipode[t.left], basis(t.right, one))
                               : multiply(basis(t.left, one), t_.antipode[t.right]);
          for (const auto& [k, c] : x) acc2_.add(k, t.coeff, c);
        }
        for (const auto& [k, c] : expected) acc2_.sub(k, c);
        if (!acc2_.all_zero_and_reset()) {
          fail(r_.antipode, std::string(side == 0 ? "m(S (x) id)" : "m(id (x) S)") +
                                " Delta != eps 1 on " + L_[b]);
          return;
        }
      }
    }
  }

  void star() {
    const T d = t_.scale;
    const T d2 = d * d;
    for (std::size_t i = 0; i < n_ && r_.star; ++i)
      if (apply(t_.star, t_.star[i]) != basis(i, d2))
        fail(r_.star, "star not involutive on " + L_[i]);
    for (std::size_t i = 0; i < n_ && r_.star; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (times(apply(t_.star, product(i, j)), d) != multiply(t_.star[j], t_.star[i])) {
          fail(r_.star, "star not anti-multiplicative on " + L_[i] + ", " + L_[j]);
          break;
        }
    for (std::size_t b = 0; b < n_ && r_.star; ++b) {
      for (const auto& [k, c] : t_.star[b]) {
        T cd = c * d;
        for (const auto& t : t_.comult[k]) acc2_.add(t.left * n_ + t.right, cd, t.coeff);
      }
      for (const auto& t : t_.comult[b])
        for (const auto& [p, x] : t_.star[t.left]) {
          T cx = -(t.coeff * x);
          for (const auto& [q, y] : t_.star[t.right]) acc2_.add(p * n_ + q, cx, y);
        }
      if (!acc2_.all_zero_and_reset())
        fail(r_.star, "Delta o star != (star (x) star) o Delta on " + L_[b]);
    }
  }

  const Tensors<T>& t_;
  const std::vector<std::string>& L_;
  std::size_t n_;
  Acc<T> acc_;
  Acc<T> acc2_;
  HopfAxiomReport r_;
};

template <typename T, typename Conv>
Tensors<T> convert(const FDHopf& h, T scale, Conv conv) {
  Tensors<T> t;
  t.n = h.dim;
  t.scale = scale;
  auto vec = [&](const SparseVec& v) {
    Vec<T> out;
    for (const auto& [i, c] : v) out.emplace_back(i, conv(c));
    return out;
  };
  t.unit = vec(h.unit);
  for (const auto& v : h.mult) t.mult.push_back(vec(v));
  for (const auto& terms : h.comult) {
    std::vector<Term3<T>> out;
    for (const auto& x : terms) out.push_back({x.left, x.right, conv(x.coeff)});
    t.comult.push_back(std::move(out));
  }
  for (const auto& c : h.counit) t.counit.push_back(conv(c));
  for (const auto& v : h.antipode) t.antipode.push_back(vec(v));
  for (const auto& v : h.star) t.star.push_back(vec(v));
  return t;
}

// Common denominator of every structure constant, if the scaled tensors fit
// the integer path: entries and D below 2^20 keep every accumulated sum
// (at most dim^4 terms of four factors, times D^2) well inside 128 bits.
bool integer_scale(const FDHopf& h, mpz_class& d) {
  d = 1;
  mpz_class max_num = 0;
  auto visit = [&](const Rational& c) {
    d = lcm(d, c.get_den());
    if (abs(c.get_num()) > max_num) max_num = abs(c.get_num());
  };
  for (const auto& [i, c] : h.unit) visit(c);
  for (const auto& v : h.mult)
    for (const auto& [i, c] : v) visit(c);
  for (const auto& terms : h.comult)
    for (const auto& x : terms) visit(x.coeff);
  for (const auto& c : h.counit) visit(c);
  for (const auto& v : h.antipode)
    for (const auto& [i, c] : v) visit(c);
  for (const auto& v : h.star)
    for (const auto& [i, c] : v) visit(c);
  const mpz_class limit = mpz_class(1) << 20;
  return h.dim <= 64 && d < limit && max_num * d < limit;
}

}  // namespace

HopfAxiomReport verify_hopf_axioms(const FDHopf& h) {
  h.validate_shape();
  mpz_class d;
  if (integer_scale(h, d)) {
    const long dl = d.get_si();
    auto conv = [&](const Rational& c) {
      mpz_class scaled = c.get_num() * (d / c.get_den());
      return static_cast<Wide>(scaled.get_si());
    };
    Tensors<Wide> t = convert<Wide>(h, static_cast<Wide>(dl), conv);
    return Suites<Wide>(t, h.labels).run();
  }
  Tensors<Rational> t = convert<Rational>(h, Rational(1), [](const Rational& c) { return c; });
  return Suites<Rational>(t, h.labels).run();
}

}  // namespace qsym
