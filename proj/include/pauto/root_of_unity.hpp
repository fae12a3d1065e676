#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pauto/cyclotomic.hpp"

namespace pauto {

/// Element of the Pruefer group C_{p^inf}, stored as the exponent j/p^n in
/// Z[1/p]/Z. Normalized so that either (n = 0, j = 0) or p does not divide j,
/// which makes p^n the exact order.
class RootOfUnity {
 public:
  /// The identity for prime p.
  explicit RootOfUnity(unsigned p);

  /// zeta_{p^n}^j for any integer j, normalized.
  static RootOfUnity from_exponent(unsigned p, unsigned n, std::int64_t j);

  /// The primitive generator zeta_{p^n}.
  static RootOfUnity primitive(unsigned p, unsigned n) { return from_exponent(p, n, 1); }

  unsigned prime() const { return p_; }
  unsigned level() const { return n_; }
  std::uint64_t exponent() const { return j_; }
  std::uint64_t order() const { return checked_pow(p_, n_); }
  bool is_identity() const { return n_ == 0; }

  RootOfUnity inverse() const;
  /// alpha^e for an arbitrary nonnegative exponent given modulo the order.
  RootOfUnity pow(std::uint64_t e) const;
  /// alpha^e where e = p^k + 1, without forming p^k.
  RootOfUnity pow_p_power_plus_one(unsigned k) const;

  /// Realizes the element as zeta_{p^n}^j in Q(zeta_{p^n}).
  Cyclotomic to_field() const { return Cyclotomic::zeta(p_, n_, static_cast<long long>(j_)); }

  /// `j/p^n`, or `0` for the identity.
  std::string to_string() const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  RootOfUnity(unsigned p, unsigned n, std::uint64_t j) : p_(p), n_(n), j_(j) {}

  unsigned p_;
  unsigned n_ = 0;
  std::uint64_t j_ = 0;
};

/// (a * b) mod m without overflow.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
/// Inverse of a unit modulo m.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Recognizes u as a root of unity of p-power order. When u is rational only
/// 1 and (for p = 2) -1 qualify.
std::optional<RootOfUnity> as_root_of_unity(const Cyclotomic& u, unsigned p);

/// Writes u as s * zeta where s is rational and zeta in C_{p^inf}. For p = 2
/// the sign is moved into zeta so that s > 0. Returns nullopt for u = 0 or
/// when no such decomposition exists.
struct ScaledRoot {
  Rational scale;
  RootOfUnity root;
};
std::optional<ScaledRoot> as_scaled_root(const Cyclotomic& u, unsigned p);

}  // namespace pauto
