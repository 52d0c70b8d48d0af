#include "qsym/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qsym/errors.hpp"

namespace qsym {

Permutation Permutation::identity(std::size_t n) {
  if (n > 255) throw BoundExceeded("permutation degree above 255");
  std::vector<std::uint8_t> images(n);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v])
      throw InvalidArgument("images do not form a bijection");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<std::uint8_t> zero_based;
  zero_based.reserve(images.size());
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size())
      throw InvalidArgument("image out of range");
    zero_based.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return from_images(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t n, std::string_view text) {
  Permutation result = identity(n);
  if (text == "id" || text == "()" || text.empty()) return result;

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in cycle string");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unclosed cycle");
    auto body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    std::vector<std::size_t> points;
    bool separated = body.find_first_of(" ,") != std::string_view::npos;
    if (separated) {
      std::string token;
      std::istringstream in{std::string(body)};
      std::string chunk;
      while (in >> chunk) {
        std::stringstream parts(chunk);
        while (std::getline(parts, token, ','))
          if (!token.empty()) {
            if (!std::all_of(token.begin(), token.end(), [](char c) {
                  return std::isdigit(static_cast<unsigned char>(c));
                }))
              throw ParseError("non-digit in cycle");
            points.push_back(std::stoul(token));
          }
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("non-digit in cycle");
        points.push_back(static_cast<std::size_t>(c - '0'));
      }
    }
    for (auto p : points)
      if (p < 1 || p > n) throw ParseError("cycle point out of range");
    std::set<std::size_t> distinct(points.begin(), points.end());
    if (distinct.size() != points.size())
      throw ParseError("repeated point inside a cycle");
    if (points.size() < 2) continue;

    // The cycle c maps points[i] -> points[i+1]; result := result * c.
    std::vector<std::uint8_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), std::uint8_t{0});
    for (std::size_t i = 0; i < points.size(); ++i)
      cyc[points[i] - 1] =
          static_cast<std::uint8_t>(points[(i + 1) % points.size()] - 1);
    result = compose(result, Permutation(std::move(cyc)));
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  bool wide = images_.size() > 9;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (wide && !first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  std::vector<std::uint8_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<std::uint8_t>(a(b(i)));
  return Permutation::from_images(std::move(images));
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> elements,
                     std::vector<Permutation> generators)
    : degree_(degree),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (const auto& e : elements_)
    if (e.degree() != degree_) throw DegreeMismatch("element degree mismatch");
  if (!contains(Permutation::identity(degree_)))
    throw NotASubgroup("element set lacks the identity");
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (!contains(a * b))
        throw NotASubgroup("element set not closed under composition");
}

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, "(1 2)"));
    std::string cycle = "(";
    for (std::size_t i = 1; i <= n; ++i)
      cycle += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(Permutation::from_cycles(n, cycle));
  }
  return generate(n, gens);
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return npos;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

bool PermGroup::is_abelian() const {
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (a * b != b * a) return false;
  return true;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> sorted,
                     std::vector<Permutation> generators, Closed)
    : degree_(degree),
      elements_(std::move(sorted)),
      generators_(std::move(generators)) {}

PermGroup PermGroup::conjugate_by(const Permutation& g) const {
  std::vector<Permutation> conj;
  conj.reserve(elements_.size());
  auto ginv = g.inverse();
  for (const auto& h : elements_) conj.push_back(g * h * ginv);
  std::vector<Permutation> gens;
  for (const auto& h : generators_) gens.push_back(g * h * ginv);
  std::sort(conj.begin(), conj.end());
  return PermGroup(degree_, std::move(conj), std::move(gens), Closed{});
}

PermGroup generate(std::size_t degree, std::span<const Permutation> gens) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree does not match group degree");

  std::unordered_set<Permutation> seen;
  std::deque<Permutation> frontier;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    auto current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      auto next = g * current;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree, std::move(elements),
                   std::vector<Permutation>(gens.begin(), gens.end()),
                   PermGroup::Closed{});
}

// ---------------------------------------------------------------------------

GroupType GroupType::of(Tag t) {
  GroupType g;
  g.tag = t;
  using T = Tag;
  switch (t) {
    case T::Trivial: g.order = 1; g.profile = {{1, 1}}; break;
    case T::Z2: g.order = 2; g.profile = {{1, 1}, {2, 1}}; break;
    case T::Z3: g.order = 3; g.profile = {{1, 1}, {3, 2}}; break;
    case T::Z4: g.order = 4; g.profile = {{1, 1}, {2, 1}, {4, 2}}; break;
    case T::Klein: g.order = 4; g.profile = {{1, 1}, {2, 3}}; break;
    case T::S3:
      g.order = 6; g.abelian = false; g.profile = {{1, 1}, {2, 3}, {3, 2}};
      break;
    case T::D4:
      g.order = 8; g.abelian = false; g.profile = {{1, 1}, {2, 5}, {4, 2}};
      break;
    case T::Q8:
      g.order = 8; g.abelian = false; g.profile = {{1, 1}, {2, 1}, {4, 6}};
      break;
    case T::Z8: g.order = 8; g.profile = {{1, 1}, {2, 1}, {4, 2}, {8, 4}}; break;
    case T::Z2xZ2xZ2: g.order = 8; g.profile = {{1, 1}, {2, 7}}; break;
    case T::Z2xZ4: g.order = 8; g.profile = {{1, 1}, {2, 3}, {4, 4}}; break;
    case T::A4:
      g.order = 12; g.abelian = false; g.profile = {{1, 1}, {2, 3}, {3, 8}};
      break;
    case T::S4:
      g.order = 24; g.abelian = false;
      g.profile = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
      break;
    case T::Other: break;
  }
  return g;
}

std::string GroupType::name() const {
  using T = Tag;
  switch (tag) {
    case T::Trivial: return "Trivial";
    case T::Z2: return "Z2";
    case T::Z3: return "Z3";
    case T::Z4: return "Z4";
    case T::Klein: return "Klein";
    case T::S3: return "S3";
    case T::D4: return "D4";
    case T::Q8: return "Q8";
    case T::Z8: return "Z8";
    case T::Z2xZ2xZ2: return "Z2xZ2xZ2";
    case T::Z2xZ4: return "Z2xZ4";
    case T::A4: return "A4";
    case T::S4: return "S4";
    case T::Other: break;
  }
  std::ostringstream out;
  out << "Other(order=" << order << (abelian ? ",abelian" : ",nonabelian")
      << ",profile=";
  bool first = true;
  for (auto [ord, count] : profile) {
    out << (first ? "" : "+") << count << "x" << ord;
    first = false;
  }
  out << ")";
  return out.str();
}

bool GroupType::operator==(const GroupType& other) const {
  if (tag != other.tag) return false;
  if (tag != Tag::Other) return true;
  return order == other.order && abelian == other.abelian &&
         profile == other.profile;
}

GroupType isomorphism_type(const PermGroup& g) {
  if (g.order() > 24)
    throw BoundExceeded("isomorphism_type supports groups of order <= 24");

  GroupType out;
  out.order = g.order();
  out.abelian = g.is_abelian();
  for (const auto& e : g.elements()) ++out.profile[e.order()];

  auto count = [&](std::size_t ord) {
    auto it = out.profile.find(ord);
    return it == out.profile.end() ? std::size_t{0} : it->second;
  };
  using T = GroupType::Tag;
  auto finish = [&](T t) {
    GroupType expected = GroupType::of(t);
    if (expected.profile == out.profile && expected.abelian == out.abelian)
      out.tag = t;
    else
      out.tag = T::Other;
    return out;
  };

  switch (out.order) {
    case 1: return finish(T::Trivial);
    case 2: return finish(T::Z2);
    case 3: return finish(T::Z3);
    case 4: return finish(count(4) > 0 ? T::Z4 : T::Klein);
    case 6: return out.abelian ? finish(T::Other) : finish(T::S3);
    case 8:
      if (out.abelian) {
        if (count(8) > 0) return finish(T::Z8);
        if (count(4) > 0) return finish(T::Z2xZ4);
        return finish(T::Z2xZ2xZ2);
      }
      return finish(count(2) == 5 ? T::D4 : T::Q8);
    case 12: return out.abelian ? finish(T::Other) : finish(T::A4);
    case 24: return out.abelian ? finish(T::Other) : finish(T::S4);
    default: out.tag = T::Other; return out;
  }
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

struct IndexedGroup {
  const PermGroup* group;
  std::vector<std::vector<std::size_t>> mul;  // mul[a][b] = index of a*b

  explicit IndexedGroup(const PermGroup& g) : group(&g) {
    const auto& els = g.elements();
    mul.assign(els.size(), std::vector<std::size_t>(els.size()));
    for (std::size_t a = 0; a < els.size(); ++a)
      for (std::size_t b = 0; b < els.size(); ++b)
        mul[a][b] = g.index_of(els[a] * els[b]);
  }

  Mask closure(Mask seed) const {
    // In a finite group closure under products alone yields a subgroup.
    Mask current = seed | Mask{1};  // identity sorts first
    for (;;) {
      Mask next = current;
      for (std::size_t a = 0; a < mul.size(); ++a) {
        if (!(current >> a & 1)) continue;
        for (std::size_t b = 0; b < mul.size(); ++b)
          if (current >> b & 1) next |= Mask{1} << mul[a][b];
      }
      if (next == current) return current;
      current = next;
    }
  }

  PermGroup to_group(Mask m) const {
    std::vector<Permutation> els;
    for (std::size_t i = 0; i < mul.size(); ++i)
      if (m >> i & 1) els.push_back(group->elements()[i]);
    return PermGroup(group->degree(), std::move(els), {}, PermGroup::Closed{});
  }
};

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  if (g.order() > 48)
    throw BoundExceeded("subgroup enumeration supports |G| <= 48");
  IndexedGroup ig(g);

  // Extend every known subgroup by every element outside it; each subgroup is
  // reached (it is generated by finitely many elements added one at a time).
  std::set<Mask> found;
  std::vector<Mask> work{ig.closure(0)};
  found.insert(work.front());
  while (!work.empty()) {
    Mask h = work.back();
    work.pop_back();
    for (std::size_t e = 0; e < g.order(); ++e) {
      if (h >> e & 1) continue;
      Mask k = ig.closure(h | (Mask{1} << e));
      if (found.insert(k).second) work.push_back(k);
    }
  }

  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(ig.to_group(m));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<PermGroup> subgroups_of_type(const PermGroup& g,
                                         const GroupType& t) {
  std::vector<PermGroup> out;
  for (auto& h : all_subgroups(g))
    if (h.order() <= 24 && isomorphism_type(h) == t) out.push_back(std::move(h));
  return out;
}

bool is_characteristic_under_inner(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("H is not contained in G");
  for (const auto& x : g.elements())
    if (!(h.conjugate_by(x) == h)) return false;
  return true;
}

std::optional<Permutation> are_conjugate(const PermGroup& g,
                                         const PermGroup& h1,
                                         const PermGroup& h2) {
  if (!h1.is_subgroup_of(g) || !h2.is_subgroup_of(g))
    throw NotASubgroup("subgroup containment violated");
  if (h1.order() != h2.order()) return std::nullopt;
  for (const auto& x : g.elements())
    if (h1.conjugate_by(x) == h2) return x;
  return std::nullopt;
}

PermGroup regular_action(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  std::vector<Permutation> elements;
  elements.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw InvalidArgument("multiplication table is not square");
    std::vector<std::uint8_t> images(n);
    for (std::size_t b = 0; b < n; ++b)
      images[b] = static_cast<std::uint8_t>(table[a][b]);
    elements.push_back(Permutation::from_images(std::move(images)));
  }
  auto gens = elements;
  return PermGroup(n, std::move(elements), std::move(gens));
}

}  // namespace qsym

std::size_t std::hash<qsym::Permutation>::operator()(
    const qsym::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
  return h;
}
