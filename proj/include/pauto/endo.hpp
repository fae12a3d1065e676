#pragma once

#include <optional>
#include <string>

#include "pauto/poly.hpp"

namespace pauto {

/// Endomorphism of k[x1, x2] given by the images (x1^psi, x2^psi).
///
/// Maps act from the left to the right: in compose(phi, psi) phi is applied
/// first, so x^(phi psi) = (x^phi)^psi.
struct PlaneEndo {
  Poly f1 = Poly::x1();
  Poly f2 = Poly::x2();

  static PlaneEndo identity() { return {}; }
  friend bool operator==(const PlaneEndo&, const PlaneEndo&) = default;
  /// `(f1, f2)`.
  std::string to_string() const;
};

/// x_i component of the result is phi.f_i(psi.f1, psi.f2).
PlaneEndo compose(const PlaneEndo& phi, const PlaneEndo& psi);

/// theta = (gamma*x1 + g(x2), beta*x2 + beta0) with gamma, beta nonzero.
/// Always an automorphism; the inverse has the same shape.
class TriangularAffine {
 public:
  TriangularAffine() = default;
  /// Throws std::invalid_argument when gamma or beta is zero or g involves x1.
  TriangularAffine(Cyclotomic gamma, Poly g, Cyclotomic beta, Cyclotomic beta0);

  static TriangularAffine identity() { return {}; }
  /// (x1 + g(x2), x2).
  static TriangularAffine shift(Poly g) { return {1, std::move(g), 1, 0}; }

  const Cyclotomic& gamma() const { return gamma_; }
  const Poly& g() const { return g_; }
  const Cyclotomic& beta() const { return beta_; }
  const Cyclotomic& beta0() const { return beta0_; }

  PlaneEndo to_endo() const;
  friend bool operator==(const TriangularAffine&, const TriangularAffine&) = default;

 private:
  Cyclotomic gamma_{1};
  Poly g_;
  Cyclotomic beta_{1};
  Cyclotomic beta0_{0};
};

/// Recognizes (gamma*x1 + g(x2), beta*x2 + beta0).
std::optional<TriangularAffine> as_triangular_affine(const PlaneEndo& psi);

/// Closed form: x2 -> (x2 - beta0)/beta, x1 -> (x1 - g((x2 - beta0)/beta))/gamma.
TriangularAffine ta_inverse(const TriangularAffine& theta);

/// theta^-1 psi theta.
PlaneEndo conjugate(const PlaneEndo& psi, const TriangularAffine& theta);

/// Smallest k <= max_order with psi^k = identity.
std::optional<unsigned> endo_order(const PlaneEndo& psi, unsigned max_order);

/// Both components homogeneous of degree 1.
bool is_linear(const PlaneEndo& psi);
/// f1 = a1*x1 and f2 = a2*x2.
bool is_diagonal(const PlaneEndo& psi);

}  // namespace pauto
