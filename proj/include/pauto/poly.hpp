#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "pauto/cyclotomic.hpp"

namespace pauto {

struct Monomial {
  unsigned x1 = 0;
  unsigned x2 = 0;

  unsigned total() const { return x1 + x2; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: increasing total degree; within one degree the
/// larger x1 exponent comes first (graded lex with x1 > x2, read upwards).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x1 > b.x1;
  }
};

/// Total degree with an explicit -infinity for the zero polynomial, so that
/// deg(fg) = deg f + deg g holds without special cases.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  static Degree of(unsigned d) { return Degree(d); }

  bool is_minus_infinity() const { return !finite_; }
  unsigned value() const;

  friend Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }
  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  Degree() = default;
  explicit Degree(unsigned d) : finite_(true), value_(d) {}
  bool finite_ = false;
  unsigned value_ = 0;
};

/// Sparse polynomial in x1, x2 over the cyclotomic tower. No stored
/// coefficient is zero.
class Poly {
 public:
  using Terms = std::map<Monomial, Cyclotomic, MonomialOrder>;

  Poly() = default;
  Poly(Cyclotomic c);
  Poly(long c) : Poly(Cyclotomic(c)) {}
  Poly(int c) : Poly(Cyclotomic(c)) {}

  static Poly x1() { return monomial({1, 0}); }
  static Poly x2() { return monomial({0, 1}); }
  static Poly monomial(Monomial m, Cyclotomic c = Cyclotomic(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Degree degree() const;
  unsigned degree_in_x1() const;
  unsigned degree_in_x2() const;
  Cyclotomic coefficient(const Monomial& m) const;
  /// True when every term is free of x1.
  bool is_univariate_in_x2() const;
  /// True for constants (including zero).
  bool is_constant() const;

  Poly operator-() const;
  Poly pow(unsigned e) const;

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g) { return *this += -g; }
  Poly& operator*=(const Poly& g) { return *this = *this * g; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// f(s1, s2).
  Poly substitute(const Poly& s1, const Poly& s2) const;

  /// Canonical text, e.g. `x1 + -2*x2^2`.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Cyclotomic& c);
  Terms terms_;
};

inline Poly substitute(const Poly& f, const Poly& s1, const Poly& s2) { return f.substitute(s1, s2); }
inline Degree poly_degree(const Poly& f) { return f.degree(); }
inline Cyclotomic coefficient_of(const Poly& f, const Monomial& m) { return f.coefficient(m); }

}  // namespace pauto
