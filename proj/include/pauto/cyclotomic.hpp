#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pauto {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two values live over different primes, or a level request is
/// inconsistent with the value it is applied to.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

/// p^n, throwing DomainError when the result does not fit in 63 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned n);

/// Euler phi of p^n.
std::uint64_t prime_power_totient(std::uint64_t p, unsigned n);

std::string rational_to_string(const Rational& q);

/// Exact element of Q(zeta_{p^n}).
///
/// The value is sum coeffs[i] * zeta^i over the power basis
/// 1, zeta, ..., zeta^{phi(p^n)-1}, reduced modulo Phi_{p^n}(x) =
/// Phi_p(x^{p^{n-1}}). Values are always stored at their minimal level:
/// an element that lies in Q(zeta_{p^{n-1}}) is rewritten there, and a
/// rational value has level 0 and no prime. Structural comparison of the
/// stored fields is therefore field equality.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_{Rational(0)} {}
  Cyclotomic(Rational q) : coeffs_{std::move(q)} { coeffs_[0].canonicalize(); }
  Cyclotomic(long v) : coeffs_{Rational(v)} {}
  Cyclotomic(int v) : coeffs_{Rational(v)} {}

  /// zeta_{p^n}^j for any integer j.
  static Cyclotomic zeta(unsigned p, unsigned n, long long j = 1);

  /// Builds a value from coefficients at level n (length phi(p^n)). The
  /// result is normalized to its minimal level.
  static Cyclotomic from_coefficients(unsigned p, unsigned n,
                                      std::vector<Rational> coeffs);

  /// 0 for rational values.
  unsigned prime() const { return prime_; }
  unsigned level() const { return level_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return level_ == 0 && sgn(coeffs_[0]) == 0; }
  bool is_one() const { return level_ == 0 && coeffs_[0] == 1; }
  bool is_rational() const { return level_ == 0; }
  /// Requires is_rational().
  const Rational& rational_value() const;
  /// Number of nonzero power-basis coefficients.
  std::size_t term_count() const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(std::uint64_t e) const;

  friend Cyclotomic operator+(const Cyclotomic& u, const Cyclotomic& v);
  friend Cyclotomic operator-(const Cyclotomic& u, const Cyclotomic& v);
  friend Cyclotomic operator*(const Cyclotomic& u, const Cyclotomic& v);
  friend Cyclotomic operator/(const Cyclotomic& u, const Cyclotomic& v);
  Cyclotomic& operator+=(const Cyclotomic& v) { return *this = *this + v; }
  Cyclotomic& operator-=(const Cyclotomic& v) { return *this = *this - v; }
  Cyclotomic& operator*=(const Cyclotomic& v) { return *this = *this * v; }

  friend bool operator==(const Cyclotomic& u, const Cyclotomic& v) {
    return u.level_ == v.level_ && u.prime_ == v.prime_ && u.coeffs_ == v.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& u, const Cyclotomic& v) { return !(u == v); }

  /// Canonical text: terms in increasing power of zeta, e.g. `1 + -3/2*z(8)^3`.
  std::string to_string() const;

 private:
  Cyclotomic(unsigned p, unsigned n, std::vector<Rational> coeffs)
      : prime_(p), level_(n), coeffs_(std::move(coeffs)) {}

  void normalize();

  unsigned prime_ = 0;
  unsigned level_ = 0;
  std::vector<Rational> coeffs_;
};

/// Coefficients of u under the embedding Q(zeta_{p^m}) -> Q(zeta_{p^n}),
/// zeta_{p^m} -> zeta_{p^n}^{p^{n-m}}. Throws DomainError when n is below
/// the level of u or u lives over another prime.
std::vector<Rational> level_raise(const Cyclotomic& u, unsigned p, unsigned n);

/// Common prime of two values; 0 when both are rational. Throws DomainError
/// on mixed primes.
unsigned common_prime(const Cyclotomic& u, const Cyclotomic& v);

}  // namespace pauto
