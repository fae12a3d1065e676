#include "pauto/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace pauto {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > (std::numeric_limits<std::uint64_t>::max() >> 1) / p)
      throw DomainError("prime power " + std::to_string(p) + "^" + std::to_string(n) +
                        " is too large");
    r *= p;
  }
  return r;
}

std::uint64_t prime_power_totient(std::uint64_t p, unsigned n) {
  if (n == 0) return 1;
  return checked_pow(p, n - 1) * (p - 1);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

using Dense = std::vector<Rational>;

// Folds a vector indexed by exponents mod p^n down to the power basis of
// length phi(p^n), using x^phi = -sum_{t<p-1} x^{t*p^{n-1}}.
Dense reduce_mod_cyclotomic(Dense acc, unsigned p, unsigned n) {
  const std::uint64_t pn = checked_pow(p, n);
  const std::uint64_t step = pn / p;
  const std::uint64_t phi = step * (p - 1);
  for (std::uint64_t e = phi; e < pn; ++e) {
    if (sgn(acc[e]) == 0) continue;
    const std::uint64_t base = e - phi;
    for (unsigned t = 0; t + 1 < p; ++t) acc[base + t * step] -= acc[e];
  }
  acc.resize(phi);
  return acc;
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
void trim(Dense& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Dense poly_sub(const Dense& a, const Dense& b) {
  Dense r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Dense poly_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<Dense, Dense> poly_divmod(Dense a, const Dense& b) {
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

}  // namespace

Cyclotomic Cyclotomic::zeta(unsigned p, unsigned n, long long j) {
  if (n == 0) return Cyclotomic(1);
  require_prime(p);
  const std::uint64_t pn = checked_pow(p, n);
  long long r = j % static_cast<long long>(pn);
  if (r < 0) r += static_cast<long long>(pn);
  Dense acc(pn);
  acc[static_cast<std::size_t>(r)] = 1;
  Cyclotomic out(p, n, reduce_mod_cyclotomic(std::move(acc), p, n));
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::from_coefficients(unsigned p, unsigned n, std::vector<Rational> coeffs) {
  if (n == 0) {
    if (coeffs.size() != 1) throw DomainError("level 0 takes exactly one coefficient");
    return Cyclotomic(coeffs[0]);
  }
  require_prime(p);
  if (coeffs.size() != prime_power_totient(p, n))
    throw DomainError("coefficient vector length does not match phi(p^n)");
  for (auto& c : coeffs) c.canonicalize();
  Cyclotomic out(p, n, std::move(coeffs));
  out.normalize();
  return out;
}

void Cyclotomic::normalize() {
  while (level_ > 0) {
    const unsigned p = prime_;
    if (level_ == 1) {
      if (std::any_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }))
        return;
      coeffs_.resize(1);
      level_ = 0;
      prime_ = 0;
      return;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (i % p != 0 && sgn(coeffs_[i]) != 0) return;
    Dense lower(coeffs_.size() / p);
    for (std::size_t i = 0; i < lower.size(); ++i) lower[i] = std::move(coeffs_[i * p]);
    coeffs_ = std::move(lower);
    --level_;
  }
}

const Rational& Cyclotomic::rational_value() const {
  if (level_ != 0) throw DomainError("value is not rational: " + to_string());
  return coeffs_[0];
}

std::size_t Cyclotomic::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

unsigned common_prime(const Cyclotomic& u, const Cyclotomic& v) {
  if (u.prime() != 0 && v.prime() != 0 && u.prime() != v.prime())
    throw DomainError("mixed primes " + std::to_string(u.prime()) + " and " +
                      std::to_string(v.prime()));
  return u.prime() != 0 ? u.prime() : v.prime();
}

std::vector<Rational> level_raise(const Cyclotomic& u, unsigned p, unsigned n) {
  if (u.level() > n)
    throw DomainError("cannot lower level " + std::to_string(u.level()) + " to " + std::to_string(n));
  if (u.prime() != 0 && u.prime() != p) throw DomainError("level_raise across primes");
  if (n == 0) return u.coefficients();
  require_prime(p);
  Dense out(prime_power_totient(p, n));
  const std::uint64_t stride = checked_pow(p, n - u.level());
  const auto& c = u.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out[i * stride] = c[i];
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic operator+(const Cyclotomic& u, const Cyclotomic& v) {
  const unsigned p = common_prime(u, v);
  if (p == 0) return Cyclotomic(u.coeffs_[0] + v.coeffs_[0]);
  const unsigned n = std::max(u.level_, v.level_);
  Dense a = level_raise(u, p, n);
  const Dense b = level_raise(v, p, n);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  Cyclotomic r(p, n, std::move(a));
  r.normalize();
  return r;
}

Cyclotomic operator-(const Cyclotomic& u, const Cyclotomic& v) { return u + (-v); }

Cyclotomic operator*(const Cyclotomic& u, const Cyclotomic& v) {
  const unsigned p = common_prime(u, v);
  if (u.level_ == 0 || v.level_ == 0) {
    const Cyclotomic& scalar = u.level_ == 0 ? u : v;
    const Cyclotomic& other = u.level_ == 0 ? v : u;
    const Rational& s = scalar.coeffs_[0];
    if (sgn(s) == 0) return Cyclotomic();
    Cyclotomic r = other;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  const unsigned n = std::max(u.level_, v.level_);
  const Dense a = level_raise(u, p, n);
  const Dense b = level_raise(v, p, n);
  const std::uint64_t pn = checked_pow(p, n);
  Dense acc(pn);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      std::size_t e = i + j;
      if (e >= pn) e -= pn;
      acc[e] += a[i] * b[j];
    }
  }
  Cyclotomic r(p, n, reduce_mod_cyclotomic(std::move(acc), p, n));
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (level_ == 0) return Cyclotomic(1 / coeffs_[0]);
  const unsigned p = prime_, n = level_;
  const std::uint64_t pn = checked_pow(p, n);

  if (term_count() == 1) {
    std::size_t i = 0;
    while (sgn(coeffs_[i]) == 0) ++i;
    Dense acc(pn);
    acc[i == 0 ? 0 : pn - i] = 1 / coeffs_[i];
    Cyclotomic r(p, n, reduce_mod_cyclotomic(std::move(acc), p, n));
    r.normalize();
    return r;
  }

  // Extended Euclid: s*u + t*Phi = 1, tracking only the u-cofactor.
  Dense modulus(pn / p * (p - 1) + 1);
  for (unsigned t = 0; t < p; ++t) modulus[t * (pn / p)] = 1;
  Dense r0 = modulus, r1 = coeffs_;
  trim(r1);
  Dense s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, rem] = poly_divmod(r0, r1);
    Dense s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw DomainError("cyclotomic polynomial is not coprime to value");
  }
  const Rational lead = r1[0];
  Dense acc(pn);
  for (std::size_t i = 0; i < s1.size(); ++i) acc[i] = s1[i] / lead;
  Cyclotomic r(p, n, reduce_mod_cyclotomic(std::move(acc), p, n));
  r.normalize();
  return r;
}

Cyclotomic operator/(const Cyclotomic& u, const Cyclotomic& v) { return u * v.inverse(); }

Cyclotomic Cyclotomic::pow(std::uint64_t e) const {
  Cyclotomic result(1), base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Cyclotomic::to_string() const {
  if (level_ == 0) return rational_to_string(coeffs_[0]);
  const std::string root = "z(" + std::to_string(checked_pow(prime_, level_)) + ")";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << rational_to_string(c);
      continue;
    }
    if (c == -1)
      out << '-';
    else if (c != 1)
      out << rational_to_string(c) << '*';
    out << root;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace pauto
