#include "pauto/endo.hpp"

#include <stdexcept>

namespace pauto {

std::string PlaneEndo::to_string() const { return "(" + f1.to_string() + ", " + f2.to_string() + ")"; }

PlaneEndo compose(const PlaneEndo& phi, const PlaneEndo& psi) {
  return {phi.f1.substitute(psi.f1, psi.f2), phi.f2.substitute(psi.f1, psi.f2)};
}

TriangularAffine::TriangularAffine(Cyclotomic gamma, Poly g, Cyclotomic beta, Cyclotomic beta0)
    : gamma_(std::move(gamma)), g_(std::move(g)), beta_(std::move(beta)), beta0_(std::move(beta0)) {
  if (gamma_.is_zero()) throw std::invalid_argument("triangular map needs gamma != 0");
  if (beta_.is_zero()) throw std::invalid_argument("triangular map needs beta != 0");
  if (!g_.is_univariate_in_x2()) throw std::invalid_argument("g must not involve x1");
}

PlaneEndo TriangularAffine::to_endo() const {
  return {Poly::monomial({1, 0}, gamma_) + g_, Poly::monomial({0, 1}, beta_) + Poly(beta0_)};
}

std::optional<TriangularAffine> as_triangular_affine(const PlaneEndo& psi) {
  if (psi.f2.degree() != Degree::of(1) || !psi.f2.is_univariate_in_x2()) return std::nullopt;
  const Cyclotomic gamma = psi.f1.coefficient({1, 0});
  if (gamma.is_zero()) return std::nullopt;
  const Poly g = psi.f1 - Poly::monomial({1, 0}, gamma);
  if (!g.is_univariate_in_x2()) return std::nullopt;
  return TriangularAffine(gamma, g, psi.f2.coefficient({0, 1}), psi.f2.coefficient({0, 0}));
}

TriangularAffine ta_inverse(const TriangularAffine& theta) {
  const Cyclotomic beta_inv = theta.beta().inverse();
  const Cyclotomic gamma_inv = theta.gamma().inverse();
  // x2 -> (x2 - beta0)/beta
  const Poly y2 = Poly::monomial({0, 1}, beta_inv) + Poly(-theta.beta0() * beta_inv);
  const Poly g_inv = -(theta.g().substitute(Poly::x1(), y2) * Poly(gamma_inv));
  return TriangularAffine(gamma_inv, g_inv, beta_inv, -theta.beta0() * beta_inv);
}

PlaneEndo conjugate(const PlaneEndo& psi, const TriangularAffine& theta) {
  return compose(compose(ta_inverse(theta).to_endo(), psi), theta.to_endo());
}

std::optional<unsigned> endo_order(const PlaneEndo& psi, unsigned max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
  const PlaneEndo id = PlaneEndo::identity();
  PlaneEndo power = psi;
  for (unsigned k = 1; k <= max_order; ++k) {
    if (power == id) return k;
    if (k < max_order) power = compose(power, psi);
  }
  return std::nullopt;
}

namespace {

bool homogeneous_linear(const Poly& f) {
  if (f.is_zero()) return false;
  for (const auto& [m, c] : f.terms())
    if (m.total() != 1) return false;
  return true;
}

}  // namespace

bool is_linear(const PlaneEndo& psi) { return homogeneous_linear(psi.f1) && homogeneous_linear(psi.f2); }

bool is_diagonal(const PlaneEndo& psi) {
  return psi.f1.terms().size() == 1 && psi.f1.terms().begin()->first == Monomial{1, 0} &&
         psi.f2.terms().size() == 1 && psi.f2.terms().begin()->first == Monomial{0, 1};
}

}  // namespace pauto
