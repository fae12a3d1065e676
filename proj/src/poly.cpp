#include "pauto/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace pauto {

unsigned Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is -inf");
  return value_;
}

Poly::Poly(Cyclotomic c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Poly Poly::monomial(Monomial m, Cyclotomic c) {
  Poly f;
  if (!c.is_zero()) f.terms_.emplace(m, std::move(c));
  return f;
}

void Poly::add_term(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  // Map order is graded, so the last key has maximal total degree.
  return Degree::of(terms_.rbegin()->first.total());
}

unsigned Poly::degree_in_x1() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x1);
  return d;
}

unsigned Poly::degree_in_x2() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x2);
  return d;
}

Cyclotomic Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

bool Poly::is_univariate_in_x2() const {
  for (const auto& [m, c] : terms_)
    if (m.x1 != 0) return false;
  return true;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Poly operator+(const Poly& f, const Poly& g) {
  Poly r = f;
  r += g;
  return r;
}

Poly operator-(const Poly& f, const Poly& g) {
  Poly r = f;
  r -= g;
  return r;
}

Poly operator*(const Poly& f, const Poly& g) {
  Poly r;
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term({mf.x1 + mg.x1, mf.x2 + mg.x2}, cf * cg);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

namespace {

// Powers of one substituted polynomial, filled on demand by squaring.
class PowerCache {
 public:
  explicit PowerCache(const Poly& base) : base_(base) { cache_.emplace(0, Poly(1)); cache_.emplace(1, base); }

  const Poly& get(unsigned e) {
    if (auto it = cache_.find(e); it != cache_.end()) return it->second;
    Poly value = (e % 2 == 0) ? get(e / 2) * get(e / 2) : get(e - 1) * base_;
    return cache_.emplace(e, std::move(value)).first->second;
  }

 private:
  Poly base_;
  std::map<unsigned, Poly> cache_;
};

}  // namespace

Poly Poly::substitute(const Poly& s1, const Poly& s2) const {
  PowerCache p1(s1), p2(s2);
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly term = p1.get(m.x1) * p2.get(m.x2);
    for (const auto& [mt, ct] : term.terms_) r.add_term(mt, c * ct);
  }
  return r;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto var = [&](const char* name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (e > 1) s += '^' + std::to_string(e);
  };
  var("x1", m.x1);
  var("x2", m.x2);
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (m.total() == 0) {
      out << c.to_string();
      continue;
    }
    if (c == Cyclotomic(-1))
      out << '-';
    else if (c.term_count() > 1)
      out << '(' << c.to_string() << ")*";
    else if (!c.is_one())
      out << c.to_string() << '*';
    out << monomial_text(m);
  }
  return out.str();
}

}  // namespace pauto
