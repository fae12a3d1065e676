#pragma once

// Random generators and a floating-point evaluator used as an independent
// oracle for exact results.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "pauto/endo.hpp"
#include "pauto/prufer.hpp"
#include "pauto/root_of_unity.hpp"

namespace pauto::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, int range = 5) {
  Rational q(uniform(rng, -range, range), uniform(rng, 1, 4));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng& rng, int range = 5) {
  Rational q;
  do q = random_rational(rng, range);
  while (sgn(q) == 0);
  return q;
}

/// Sparse random element of Q(zeta_{p^n}) with n <= max_level.
inline Cyclotomic random_cyclotomic(Rng& rng, unsigned p, unsigned max_level, int max_terms = 4) {
  const unsigned n = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_level)));
  const auto pn = static_cast<int>(checked_pow(p, n));
  Cyclotomic u;
  const int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t)
    u += Cyclotomic(random_rational(rng)) * Cyclotomic::zeta(p, n, uniform(rng, 0, pn - 1));
  return u;
}

inline Cyclotomic random_nonzero_cyclotomic(Rng& rng, unsigned p, unsigned max_level) {
  Cyclotomic u;
  do u = random_cyclotomic(rng, p, max_level);
  while (u.is_zero());
  return u;
}

inline RootOfUnity random_root(Rng& rng, unsigned p, unsigned max_level) {
  const unsigned n = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_level)));
  return RootOfUnity::from_exponent(p, n, uniform(rng, 0, static_cast<int>(checked_pow(p, n)) - 1));
}

inline Poly random_poly(Rng& rng, unsigned p, unsigned max_level, int max_terms = 8, int max_degree = 12) {
  Poly f;
  const int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int total = uniform(rng, 0, max_degree);
    const int a = uniform(rng, 0, total);
    f += Poly::monomial({static_cast<unsigned>(a), static_cast<unsigned>(total - a)},
                        random_cyclotomic(rng, p, max_level, 2));
  }
  return f;
}

inline Poly random_x2_poly(Rng& rng, unsigned p, unsigned max_level, int max_terms, int max_degree) {
  Poly g;
  const int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t)
    g += Poly::monomial({0, static_cast<unsigned>(uniform(rng, 0, max_degree))}, random_cyclotomic(rng, p, max_level, 2));
  return g;
}

inline TriangularAffine random_triangular(Rng& rng, unsigned p, unsigned max_level = 1, int max_degree = 4) {
  return TriangularAffine(random_nonzero_cyclotomic(rng, p, max_level), random_x2_poly(rng, p, max_level, 3, max_degree),
                          random_nonzero_cyclotomic(rng, p, max_level), random_cyclotomic(rng, p, max_level, 1));
}

/// Coefficients drawn from a small rational set, zeros included.
inline std::vector<Cyclotomic> random_prefix(Rng& rng, std::size_t length) {
  static const std::vector<Rational> pool{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2),
                                          Rational(-3, 2), Rational(3)};
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < length; ++i) out.emplace_back(pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)]);
  return out;
}

inline std::vector<Cyclotomic> random_nonzero_block(Rng& rng, std::size_t length) {
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < length; ++i) out.emplace_back(random_nonzero_rational(rng, 3));
  return out;
}

/// Numeric value of u with zeta_{p^n} = exp(2 pi i / p^n).
inline std::complex<double> to_complex(const Cyclotomic& u) {
  if (u.is_rational()) return {u.rational_value().get_d(), 0.0};
  const double m = static_cast<double>(checked_pow(u.prime(), u.level()));
  std::complex<double> z = 0;
  const auto& c = u.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    z += c[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / m);
  return z;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

}  // namespace pauto::testing
