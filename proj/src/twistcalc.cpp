#include "qsym/twistcalc.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "qsym/errors.hpp"

namespace qsym {

std::size_t grid_size(TwistedKind kind) { return kind == TwistedKind::O2Minus ? 2 : 3; }

namespace {

std::size_t var(std::size_t n, std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); }

std::string gen_name(std::size_t i, std::size_t j) {
  return "a" + std::to_string(i) + std::to_string(j);
}

}  // namespace

Bidegree monomial_bidegree(std::size_t n, const Monomial& m) {
  if (m.size() != n * n) throw InvalidArgument("monomial does not match the grid");
  Bidegree d;
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v] & 1u) d = d * Bidegree{static_cast<std::uint8_t>(v / n + 1),
                                    static_cast<std::uint8_t>(v % n + 1)};
  return d;
}

// TwistedElement ------------------------------------------------------------

void TwistedElement::add(Bidegree d, const Polynomial& p) {
  const std::size_t n = grid_size(kind_);
  if (p.nvars() != n * n) throw InvalidArgument("component uses the wrong variable count");
  for (const auto& [m, c] : p.terms())
    if (monomial_bidegree(n, m) != d)
      throw InvalidArgument("component is not homogeneous of its bidegree");
  if (p.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(d, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) components_.erase(it);
  }
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& o) {
  if (o.kind_ != kind_) throw InvalidArgument("elements of different algebras");
  for (const auto& [d, p] : o.components_) add(d, p);
  return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& o) {
  if (o.kind_ != kind_) throw InvalidArgument("elements of different algebras");
  for (const auto& [d, p] : o.components_) add(d, -p);
  return *this;
}

TwistedElement& TwistedElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) components_.clear();
  for (auto& [d, p] : components_) p *= c;
  return *this;
}

TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }
TwistedElement operator*(const Rational& c, TwistedElement a) { return a *= c; }

std::string TwistedElement::to_string() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [d, p] : components_) {
    if (!out.empty()) out += " + ";
    out += "[(t" + std::to_string(d.left) + ",t" + std::to_string(d.right) + "): " +
           p.to_string() + "]";
  }
  return out;
}

// TwistedAlgebra ------------------------------------------------------------

TwistedAlgebra::TwistedAlgebra(TwistedKind kind, Cocycle2 sigma)
    : kind_(kind), sigma_(std::move(sigma)) {
  if (sigma_.dim != 4 || sigma_.table.size() != 16 || sigma_.inverse_table.size() != 16)
    throw InvalidArgument("twisted algebra needs a sign table on the Klein group algebra");
  for (std::size_t i = 0; i < 16; ++i)
    if (abs(sigma_.table[i]) != 1 || abs(sigma_.inverse_table[i]) != 1)
      throw InvalidArgument("twisted algebra needs +-1 sign tables");
}

TwistedElement TwistedAlgebra::scalar(const Rational& c) const {
  TwistedElement e(kind_);
  const std::size_t n = size();
  e.add(Bidegree{}, Polynomial::constant(n * n, c));
  return e;
}

TwistedElement TwistedAlgebra::generator(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidArgument("generator index out of range");
  TwistedElement e(kind_);
  e.add(generator_bidegree(i, j), Polynomial::variable(n * n, var(n, i, j)));
  return e;
}

TwistedElement TwistedAlgebra::mul(const TwistedElement& u, const TwistedElement& v) const {
  if (u.kind() != kind_ || v.kind() != kind_) throw InvalidArgument("elements of another algebra");
  TwistedElement out(kind_);
  for (const auto& [d1, p1] : u.components())
    for (const auto& [d2, p2] : v.components()) {
      Rational s = sigma_.value(d1.left, d2.left) * sigma_.inverse(d1.right, d2.right);
      out.add(d1 * d2, s * (p1 * p2));
    }
  return out;
}

bool TwistedAlgebra::is_zero(const TwistedElement& u) const {
  if (u.kind() != kind_) throw InvalidArgument("element of another algebra");
  for (const auto& [d, p] : u.components()) {
    const bool zero = kind_ == TwistedKind::O2Minus ? vanishes_on_o2(p) : vanishes_on_so3(p);
    if (!zero) return false;
  }
  return true;
}

Rational TwistedAlgebra::character_value(const TwistedElement& u, const IntMatrix& m) const {
  const std::size_t n = size();
  if (m.rows() != n || m.cols() != n) throw InvalidArgument("character matrix has the wrong size");
  Rational total = 0;
  std::vector<Bidegree> factors;
  for (const auto& [d, p] : u.components())
    for (const auto& [mono, c] : p.terms()) {
      // [x_1 ... x_r] = s [x_1] ... [x_r] with s = +-1, and chi is
      // multiplicative on the twisted product.
      factors.clear();
      int value = 1;
      for (std::size_t v = 0; v < mono.size(); ++v)
        for (std::uint8_t e = 0; e < mono[v]; ++e) {
          factors.push_back({static_cast<std::uint8_t>(v / n + 1),
                             static_cast<std::uint8_t>(v % n + 1)});
          value *= m(v / n, v % n);
        }
      if (value != 0) total += c * (product_sign(sigma_, factors) * value);
    }
  return total;
}

// Zero tests ------------------------------------------------------------------

const std::vector<Polynomial>& quaternion_rotation() {
  static const std::vector<Polynomial> r = [] {
    auto q = [](std::size_t i) { return Polynomial::variable(4, i); };
    const Polynomial a = q(0), b = q(1), c = q(2), d = q(3);
    const Rational two(2);
    return std::vector<Polynomial>{
        a * a + b * b - c * c - d * d, two * (b * c - a * d),         two * (b * d + a * c),
        two * (b * c + a * d),         a * a - b * b + c * c - d * d, two * (c * d - a * b),
        two * (b * d - a * c),         two * (c * d + a * b),         a * a - b * b - c * c + d * d};
  }();
  return r;
}

Polynomial sphere_reduce(const Polynomial& p) {
  if (p.nvars() != 4) throw InvalidArgument("sphere reduction expects 4 variables");
  static const Polynomial rest = [] {
    Polynomial r = Polynomial::constant(4, Rational(1));
    for (std::size_t i = 0; i < 3; ++i) {
      Polynomial v = Polynomial::variable(4, i);
      r -= v * v;
    }
    return r;
  }();
  Polynomial out(4);
  std::vector<std::pair<Monomial, Rational>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    if (m[3] < 2) {
      out.add_term(m, c);
      continue;
    }
    m[3] = static_cast<std::uint8_t>(m[3] - 2);
    for (const auto& [rm, rc] : rest.terms()) {
      Monomial t = m;
      for (std::size_t i = 0; i < 4; ++i) t[i] = static_cast<std::uint8_t>(t[i] + rm[i]);
      work.emplace_back(std::move(t), c * rc);
    }
  }
  return out;
}

bool vanishes_on_o2(const Polynomial& p) {
  if (p.nvars() != 4) throw InvalidArgument("O(2) test expects 4 variables");
  if (p.is_zero()) return true;
  const Polynomial t = Polynomial::variable(1, 0);
  const Polynomial one = Polynomial::constant(1, Rational(1));
  const Polynomial nc = one - t * t;  // numerator of c
  const Polynomial ns = Rational(2) * t;  // numerator of s
  const Polynomial q = one + t * t;
  const std::size_t deg = p.degree();
  // Rotations [[c,-s],[s,c]] and reflections [[c,s],[s,-c]], cleared of the
  // common denominator q^deg.
  const std::array<std::vector<Polynomial>, 2> branches = {
      std::vector<Polynomial>{nc, -ns, ns, nc}, std::vector<Polynomial>{nc, ns, ns, -nc}};
  for (const auto& images : branches) {
    Polynomial total(1);
    for (const auto& [m, c] : p.terms()) {
      std::size_t dm = 0;
      Polynomial term = Polynomial::constant(1, c);
      for (std::size_t v = 0; v < 4; ++v) {
        dm += m[v];
        if (m[v]) term = term * images[v].pow(m[v]);
      }
      total += term * q.pow(static_cast<unsigned>(deg - dm));
    }
    if (!total.is_zero()) return false;
  }
  for (const auto& point : {std::vector<Rational>{-1, 0, 0, -1}, std::vector<Rational>{-1, 0, 0, 1}})
    if (p.evaluate(point) != 0) return false;
  return true;
}

bool vanishes_on_so3(const Polynomial& p) {
  if (p.nvars() != 9) throw InvalidArgument("SO(3) test expects 9 variables");
  if (p.is_zero()) return true;
  return sphere_reduce(p.substitute(quaternion_rotation())).is_zero();
}

// Relations -----------------------------------------------------------------

bool RelationReport::all_hold() const { return first_failure() == nullptr; }

const RelationCheck* RelationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.holds) return &c;
  return nullptr;
}

void require_relations(const RelationReport& report) {
  if (const RelationCheck* f = report.first_failure())
    throw RelationFailure(f->relation + " fails: " + f->instance);
}

RelationReport check_presentation_relations(
    const TwistedAlgebra& alg, const std::vector<std::vector<TwistedElement>>& a) {
  const std::size_t n = a.size();
  if (n != 2 && n != 3) throw InvalidArgument("images must form a 2 x 2 or 3 x 3 grid");
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("images must form a square grid");
  auto at = [&](std::size_t i, std::size_t j) -> const TwistedElement& { return a[i - 1][j - 1]; };
  RelationReport r;
  auto record = [&](const char* relation, std::string instance, const TwistedElement& e) {
    r.checks.push_back({relation, std::move(instance), alg.is_zero(e)});
  };

  for (int side = 0; side < 2; ++side)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        TwistedElement sum = alg.scalar(Rational(i == j ? -1 : 0));
        for (std::size_t k = 1; k <= n; ++k)
          sum += side == 0 ? alg.mul(at(i, k), at(j, k)) : alg.mul(at(k, i), at(k, j));
        record("orthogonality",
               std::string(side == 0 ? "(A A^T)" : "(A^T A)") + "_" + std::to_string(i) +
                   std::to_string(j) + " = " + (i == j ? "1" : "0"),
               sum);
      }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        record("row-anticommutation",
               gen_name(i, j) + " " + gen_name(i, k) + " + " + gen_name(i, k) + " " + gen_name(i, j),
               alg.mul(at(i, j), at(i, k)) + alg.mul(at(i, k), at(i, j)));
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = i + 1; k <= n; ++k)
        record("column-anticommutation",
               gen_name(i, j) + " " + gen_name(k, j) + " + " + gen_name(k, j) + " " + gen_name(i, j),
               alg.mul(at(i, j), at(k, j)) + alg.mul(at(k, j), at(i, j)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = i + 1; k <= n; ++k)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t l = 1; l <= n; ++l)
          if (j != l)
            record("commutation",
                   gen_name(i, j) + " " + gen_name(k, l) + " - " + gen_name(k, l) + " " +
                       gen_name(i, j),
                   alg.mul(at(i, j), at(k, l)) - alg.mul(at(k, l), at(i, j)));
  if (n == 3) {
    static const PermGroup s3 = PermGroup::symmetric(3);
    TwistedElement sum = alg.scalar(Rational(-1));
    for (const Permutation& t : s3.elements())
      sum += alg.mul(alg.mul(at(1, t(0) + 1), at(2, t(1) + 1)), at(3, t(2) + 1));
    record("permanent", "sum over S3 of a1s(1) a2s(2) a3s(3) = 1", sum);
  }
  return r;
}

RelationReport verify_twisted_presentation(const TwistedAlgebra& alg) {
  const std::size_t n = alg.size();
  std::vector<std::vector<TwistedElement>> gens(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) gens[i - 1].push_back(alg.generator(i, j));
  RelationReport r = check_presentation_relations(alg, gens);
  require_relations(r);
  return r;
}

RelationReport verify_twisted_presentation(TwistedKind kind) {
  return verify_twisted_presentation(TwistedAlgebra(kind));
}

// rho and the normalizer -------------------------------------------------------

IntMatrix rho(const Permutation& x) {
  if (x.degree() != 4) throw InvalidArgument("rho needs a permutation of degree 4");
  static constexpr int u[3][4] = {{1, -1, -1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}};
  IntMatrix m(3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) {
      // <u_k, P_x u_l> with (P_x v)_{x(i)} = v_i; the basis vectors carry 1/2.
      int s = 0;
      for (std::size_t i = 0; i < 4; ++i) s += u[k][x(i)] * u[l][i];
      m(k, l) = s / 4;
    }
  return m;
}

std::vector<IntMatrix> diagonal_klein_matrices() {
  std::vector<IntMatrix> k = {IntMatrix::identity(3), IntMatrix(3, 3, {-1, 0, 0, 0, 1, 0, 0, 0, -1}),
                              IntMatrix(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, -1}),
                              IntMatrix(3, 3, {-1, 0, 0, 0, -1, 0, 0, 0, 1})};
  std::sort(k.begin(), k.end());
  return k;
}

const std::vector<IntMatrix>& o2minus_characters() {
  static const std::vector<IntMatrix> c = [] {
    std::vector<IntMatrix> out;
    for (auto& s : solve_characters(PresentationSpec::o2minus())) out.push_back(s.matrix);
    return out;
  }();
  return c;
}

const std::vector<IntMatrix>& so3minus_characters() {
  static const std::vector<IntMatrix> c = [] {
    std::vector<IntMatrix> out;
    for (auto& s : solve_characters(PresentationSpec::so3minus())) out.push_back(s.matrix);
    return out;
  }();
  return c;
}

namespace {

std::size_t index_in(const std::vector<IntMatrix>& sorted, const IntMatrix& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
  if (it == sorted.end() || *it != m) return PermGroup::npos;
  return static_cast<std::size_t>(it - sorted.begin());
}

const PermGroup& s4() {
  static const PermGroup g = PermGroup::symmetric(4);
  return g;
}

}  // namespace

std::vector<NormalizerEntry> klein_normalizer_so3() {
  const std::vector<IntMatrix> klein = diagonal_klein_matrices();
  std::vector<IntMatrix> nontrivial;
  for (const auto& k : klein)
    if (k != IntMatrix::identity(3)) nontrivial.push_back(k);

  std::vector<NormalizerEntry> out;
  const PermGroup s3 = PermGroup::symmetric(3);
  for (const Permutation& p : s3.elements())
    for (int signs = 0; signs < 8; ++signs) {
      IntMatrix f(3, 3);
      for (std::size_t i = 0; i < 3; ++i) f(i, p(i)) = (signs >> i) & 1 ? -1 : 1;
      if (f.determinant() != 1) continue;
      const IntMatrix ft = f.transpose();
      bool normalizes = true;
      for (const auto& d : klein) normalizes = normalizes && index_in(klein, f * d * ft) != PermGroup::npos;
      if (!normalizes) continue;
      std::vector<std::uint8_t> action;
      for (const auto& t : nontrivial) {
        std::size_t idx = index_in(nontrivial, ft * t * f);
        if (idx == PermGroup::npos)
          throw CountMismatch("conjugation moves a nontrivial Klein element off the set");
        action.push_back(static_cast<std::uint8_t>(idx));
      }
      NormalizerEntry e;
      e.f = f;
      e.klein_action = Permutation::from_images(action);
      out.push_back(std::move(e));
    }
  if (out.size() != 24) throw CountMismatch("normalizer has " + std::to_string(out.size()) + " elements");

  std::set<Permutation> used;
  for (auto& e : out) {
    bool matched = false;
    for (const Permutation& x : s4().elements()) {
      const IntMatrix r = rho(x);
      if (r == e.f || -r == e.f) {
        e.x = x;
        e.sign = r == e.f ? 1 : -1;
        matched = true;
        break;
      }
    }
    if (!matched || !used.insert(e.x).second)
      throw CountMismatch("normalizer element " + e.f.to_string() + " does not match rho(S4)");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.f < b.f; });
  return out;
}

// Automorphisms -----------------------------------------------------------------

AutomorphismReport automorphism_check(const Permutation& x) {
  AutomorphismReport rep;
  rep.x = x;
  rep.rho = rho(x);
  const IntMatrix& p = rep.rho;
  const TwistedAlgebra alg(TwistedKind::SO3Minus);
  std::vector<std::vector<TwistedElement>> b(3, std::vector<TwistedElement>(3, alg.zero()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          if (int c = p(k, i) * p(l, j)) b[i][j] += Rational(c) * alg.generator(k + 1, l + 1);
  rep.relations = check_presentation_relations(alg, b);
  require_relations(rep.relations);

  const auto& chars = so3minus_characters();
  const IntMatrix pt = p.transpose();
  std::vector<std::uint8_t> images;
  for (const IntMatrix& m : chars) {
    IntMatrix induced(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rational v = alg.character_value(b[i][j], m);
        if (v.get_den() != 1 || abs(v) > 1)
          throw CharacterActionMismatch("character value " + v.get_str() + " is not 0, +-1");
        induced(i, j) = static_cast<int>(v.get_num().get_si());
      }
    if (induced != pt * m * p)
      throw CharacterActionMismatch("induced character " + induced.to_string() +
                                    " differs from rho^T M rho");
    const std::size_t idx = index_in(chars, induced);
    if (idx == PermGroup::npos)
      throw CharacterActionMismatch("induced character " + induced.to_string() + " is not a character");
    images.push_back(static_cast<std::uint8_t>(idx));
  }
  try {
    rep.character_action = Permutation::from_images(images);
  } catch (const InvalidArgument&) {
    throw CharacterActionMismatch("induced map on characters is not a bijection");
  }
  return rep;
}

// Embeddings ----------------------------------------------------------------------

std::vector<std::vector<TwistedElement>> phi_images(const Permutation& x) {
  const IntMatrix p = rho(x);
  const TwistedAlgebra alg(TwistedKind::O2Minus);
  std::vector<std::vector<TwistedElement>> block(3, std::vector<TwistedElement>(3, alg.zero()));
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) block[i - 1][j - 1] = alg.generator(i, j);
  block[2][2] = alg.mul(alg.generator(1, 1), alg.generator(2, 2)) +
                alg.mul(alg.generator(1, 2), alg.generator(2, 1));
  std::vector<std::vector<TwistedElement>> out(3, std::vector<TwistedElement>(3, alg.zero()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          if (int c = p(i, k) * p(j, l)) out[i][j] += Rational(c) * block[k][l];
  return out;
}

EmbeddingReport phi_embedding(const Permutation& x) {
  EmbeddingReport rep;
  rep.x = x;
  rep.images = phi_images(x);
  rep.relations = check_presentation_relations(TwistedAlgebra(TwistedKind::O2Minus), rep.images);
  require_relations(rep.relations);
  return rep;
}

EmbeddingImages embedding_character_images() {
  const auto& o2 = o2minus_characters();
  const auto& so3 = so3minus_characters();
  const TwistedAlgebra alg(TwistedKind::O2Minus);
  const std::vector<IntMatrix> klein = diagonal_klein_matrices();

  EmbeddingImages out;
  out.xs = s4().elements();
  std::vector<std::vector<IntMatrix>> per_x;
  for (const Permutation& x : out.xs) {
    const auto images = phi_images(x);
    std::vector<IntMatrix> set;
    for (const IntMatrix& m : o2) {
      IntMatrix n(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          n(i, j) = static_cast<int>(alg.character_value(images[i][j], m).get_num().get_si());
      if (index_in(so3, n) == PermGroup::npos)
        throw NotASubgroup("image " + n.to_string() + " is not a character of SO_-1(3)");
      set.push_back(n);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    per_x.push_back(std::move(set));
  }
  out.distinct = per_x;
  std::sort(out.distinct.begin(), out.distinct.end());
  out.distinct.erase(std::unique(out.distinct.begin(), out.distinct.end()), out.distinct.end());
  for (const auto& set : per_x)
    out.image_of.push_back(static_cast<std::size_t>(
        std::lower_bound(out.distinct.begin(), out.distinct.end(), set) - out.distinct.begin()));

  for (const auto& set : out.distinct) {
    PresentedCharacterGroup g;
    try {
      g = matrix_group(set);
    } catch (const ClosureFailure& e) {
      throw NotASubgroup(std::string("embedding image is not closed: ") + e.what());
    }
    if (!g.type || g.type->tag != GroupType::Tag::D4)
      throw NotASubgroup("embedding image is not of type D4");
    for (const auto& k : klein)
      if (index_in(set, k) == PermGroup::npos)
        throw NotASubgroup("embedding image misses the diagonal Klein matrix " + k.to_string());
    out.types.push_back(*g.type);
  }

  const std::size_t id_image = out.image_of[s4().index_of(Permutation::identity(4))];
  std::vector<Permutation> stab;
  for (std::size_t i = 0; i < out.xs.size(); ++i)
    if (out.image_of[i] == id_image) stab.push_back(out.xs[i]);
  out.stabilizer = PermGroup(4, std::move(stab));

  for (std::size_t a = 0; a < out.distinct.size(); ++a)
    for (std::size_t b = a + 1; b < out.distinct.size(); ++b)
      for (const IntMatrix& n : so3) {
        std::vector<IntMatrix> conj;
        const IntMatrix nt = n.transpose();
        for (const IntMatrix& e : out.distinct[a]) conj.push_back(n * e * nt);
        std::sort(conj.begin(), conj.end());
        if (conj == out.distinct[b]) {
          out.conjugacies.push_back({a, b, n});
          break;
        }
      }
  return out;
}

Permutation character_permutation(const PermGroup& g, const Character& chi) {
  const std::size_t deg = g.degree();
  if (chi.size() != g.order()) throw InvalidArgument("character length differs from |G|");
  std::vector<Rational> m(deg * deg, Rational(0));
  for (std::size_t b = 0; b < g.order(); ++b) {
    const Permutation& h = g.elements()[b];
    for (std::size_t j = 0; j < deg; ++j) m[h(j) * deg + j] += chi[b];
  }
  std::vector<std::uint8_t> images(deg, 0);
  for (std::size_t j = 0; j < deg; ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      const Rational& v = m[i * deg + j];
      if (v == 1) {
        ++ones;
        images[j] = static_cast<std::uint8_t>(i);
      } else if (v != 0) {
        throw InvalidArgument("character matrix entry " + v.get_str() + " is not 0 or 1");
      }
    }
    if (ones != 1) throw InvalidArgument("character matrix is not a permutation matrix");
  }
  return Permutation::from_images(images);
}

GenerationReport generation_counterexample(const CharacterGroup& tau_chars,
                                           const EmbeddingImages& images) {
  GenerationReport rep;
  std::vector<Permutation> perms;
  for (const auto& chi : tau_chars.elements) perms.push_back(character_permutation(s4(), chi));
  rep.tau_characters = PermGroup(4, perms);

  for (std::size_t a = 0; a < images.distinct.size() && !rep.matching_image; ++a) {
    std::vector<Permutation> pre;
    for (const Permutation& x : s4().elements())
      if (index_in(images.distinct[a], rho(x)) != PermGroup::npos) pre.push_back(x);
    std::sort(pre.begin(), pre.end());
    if (pre == rep.tau_characters.elements()) rep.matching_image = a;
  }

  const auto& d = rep.tau_characters.elements();
  std::vector<Permutation> dd(d.begin(), d.end());
  dd.insert(dd.end(), d.begin(), d.end());
  rep.generated_dd = generate(4, dd);
  std::vector<Permutation> ds4(d.begin(), d.end());
  ds4.insert(ds4.end(), s4().elements().begin(), s4().elements().end());
  rep.generated_ds4 = generate(4, ds4);
  return rep;
}

}  // namespace qsym
