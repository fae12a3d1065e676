#include "pauto/root_of_unity.hpp"

namespace pauto {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw DomainError("not a unit modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

RootOfUnity::RootOfUnity(unsigned p) : p_(p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

RootOfUnity RootOfUnity::from_exponent(unsigned p, unsigned n, std::int64_t j) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const std::uint64_t pn = checked_pow(p, n);
  std::int64_t r = j % static_cast<std::int64_t>(pn);
  if (r < 0) r += static_cast<std::int64_t>(pn);
  auto e = static_cast<std::uint64_t>(r);
  while (n > 0 && e % p == 0) {
    e /= p;
    --n;
  }
  if (n == 0) e = 0;
  return RootOfUnity(p, n, e);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.p_ != b.p_) throw DomainError("mixed primes in root multiplication");
  const unsigned n = std::max(a.n_, b.n_);
  const std::uint64_t pn = checked_pow(a.p_, n);
  const std::uint64_t ja = a.j_ * checked_pow(a.p_, n - a.n_);
  const std::uint64_t jb = b.j_ * checked_pow(b.p_, n - b.n_);
  return RootOfUnity::from_exponent(a.p_, n, static_cast<std::int64_t>((ja + jb) % pn));
}

RootOfUnity RootOfUnity::inverse() const {
  if (n_ == 0) return *this;
  return RootOfUnity(p_, n_, order() - j_);
}

RootOfUnity RootOfUnity::pow(std::uint64_t e) const {
  if (n_ == 0) return *this;
  const std::uint64_t pn = order();
  return from_exponent(p_, n_, static_cast<std::int64_t>(mul_mod(j_, e % pn, pn)));
}

RootOfUnity RootOfUnity::pow_p_power_plus_one(unsigned k) const {
  if (n_ == 0) return *this;
  const std::uint64_t pn = order();
  return pow((pow_mod(p_, k, pn) + 1) % pn);
}

std::string RootOfUnity::to_string() const {
  if (n_ == 0) return "0";
  return std::to_string(j_) + "/" + std::to_string(order());
}

std::optional<ScaledRoot> as_scaled_root(const Cyclotomic& u, unsigned p) {
  if (u.is_zero()) return std::nullopt;
  if (u.prime() != 0 && u.prime() != p) return std::nullopt;
  if (u.is_rational()) {
    const Rational& q = u.rational_value();
    if (p == 2 && sgn(q) < 0) return ScaledRoot{-q, RootOfUnity::from_exponent(2, 1, 1)};
    return ScaledRoot{q, RootOfUnity(p)};
  }
  // u = s * zeta^j forces u * zeta^{-j} rational; zeta^{-j} is a basis shift.
  const unsigned n = u.level();
  const std::uint64_t pn = checked_pow(p, n);
  for (std::uint64_t j = 0; j < pn; ++j) {
    if (j % p == 0) continue;  // u is at minimal level, so its root part is primitive
    const RootOfUnity root = RootOfUnity::from_exponent(p, n, static_cast<std::int64_t>(j));
    const Cyclotomic rest = u * root.inverse().to_field();
    if (!rest.is_rational()) continue;
    Rational s = rest.rational_value();
    if (p == 2 && sgn(s) < 0) return ScaledRoot{-s, root * RootOfUnity::from_exponent(2, 1, 1)};
    return ScaledRoot{s, root};
  }
  return std::nullopt;
}

std::optional<RootOfUnity> as_root_of_unity(const Cyclotomic& u, unsigned p) {
  auto scaled = as_scaled_root(u, p);
  if (!scaled || scaled->scale != 1) return std::nullopt;
  return scaled->root;
}

}  // namespace pauto
