#include "qsym/poly.hpp"

#include <algorithm>
#include <numeric>

#include "qsym/errors.hpp"

namespace qsym {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max<std::size_t>(d, std::accumulate(m.begin(), m.end(), std::size_t{0}));
  return d;
}

std::size_t Polynomial::degree_in(std::size_t index) const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, m.at(index));
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw InvalidArgument("monomial length differs from variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InvalidArgument("variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InvalidArgument("variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw InvalidArgument("variable counts differ");
  Polynomial out(a.nvars());
  Monomial m(a.nvars());
  Rational c;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned e = unsigned(ma[i]) + mb[i];
        if (e > 255) throw BoundExceeded("exponent overflow");
        m[i] = static_cast<std::uint8_t>(e);
      }
      c = ca * cb;
      out.add_term(m, c);
    }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw InvalidArgument("one image per variable required");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& p : images)
    if (p.nvars() != target) throw InvalidArgument("images use different variable counts");
  // Powers are cached per variable; monomials share them.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t v, std::size_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t v = 0; v < nvars_; ++v)
      if (m[v]) term = term * power(v, m[v]);
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw InvalidArgument("point dimension differs");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      for (std::uint8_t k = 0; k < m[v]; ++k) t *= point[v];
    total += t;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant_term = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string body;
    if (mag != 1 || constant_term) body = mag.get_str();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (!m[v]) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(v);
      if (m[v] > 1) body += "^" + std::to_string(m[v]);
    }
    out += body;
  }
  return out;
}

}  // namespace qsym
