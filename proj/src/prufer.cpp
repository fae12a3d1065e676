#include "pauto/prufer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pauto {

CoeffSequence::CoeffSequence(unsigned p, std::vector<Cyclotomic> prefix, std::vector<Cyclotomic> tail)
    : p_(p), prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  auto check = [p](const Cyclotomic& c) {
    if (c.prime() != 0 && c.prime() != p)
      throw DomainError("coefficient " + c.to_string() + " is not over prime " + std::to_string(p));
  };
  std::for_each(prefix_.begin(), prefix_.end(), check);
  std::for_each(tail_.begin(), tail_.end(), check);
  if (std::all_of(tail_.begin(), tail_.end(), [](const Cyclotomic& c) { return c.is_zero(); })) tail_.clear();
}

const Cyclotomic& CoeffSequence::coeff(std::size_t k) const {
  static const Cyclotomic zero;
  if (k < prefix_.size()) return prefix_[k];
  if (tail_.empty()) return zero;
  return tail_[(k - prefix_.size()) % tail_.size()];
}

unsigned w_exponent(unsigned p, unsigned k) {
  const std::uint64_t e = checked_pow(p, k) + 1;
  if (e > std::numeric_limits<unsigned>::max()) throw DomainError("exponent p^k + 1 is too large");
  return static_cast<unsigned>(e);
}

PlaneEndo diag(const RootOfUnity& alpha) {
  const Cyclotomic a = alpha.to_field();
  return {Poly::monomial({1, 0}, a), Poly::monomial({0, 1}, a)};
}

TriangularAffine series_truncation(const CoeffSequence& s, unsigned N) {
  Poly g;
  for (unsigned k = 0; k <= N; ++k) g += Poly::monomial({0, w_exponent(s.prime(), k)}, s.coeff(k));
  return TriangularAffine::shift(std::move(g));
}

PlaneEndo conj_closed_form(const CoeffSequence& s, const RootOfUnity& alpha) {
  if (alpha.prime() != s.prime()) throw DomainError("root and sequence use different primes");
  const Cyclotomic a = alpha.to_field();
  Poly f1 = Poly::monomial({1, 0}, a);
  // alpha^(p^k) = 1 once k >= level(alpha).
  for (unsigned k = 0; k < alpha.level(); ++k) {
    const Cyclotomic factor = Cyclotomic(1) - alpha.pow(checked_pow(s.prime(), k)).to_field();
    f1 += Poly::monomial({0, w_exponent(s.prime(), k)}, a * s.coeff(k) * factor);
  }
  return {std::move(f1), Poly::monomial({0, 1}, a)};
}

bool verify_formula(const CoeffSequence& s, const RootOfUnity& alpha, unsigned truncation_bound) {
  const PlaneEndo closed = conj_closed_form(s, alpha);
  const PlaneEndo phi = diag(alpha);
  for (unsigned N = alpha.level(); N <= std::max(alpha.level(), truncation_bound); ++N)
    if (conjugate(phi, series_truncation(s, N)) != closed) return false;
  return true;
}

bool embedding_check(const CoeffSequence& s, const RootOfUnity& alpha, const RootOfUnity& beta) {
  if (alpha.prime() != beta.prime()) throw DomainError("mixed primes in embedding check");
  const PlaneEndo ca = conj_closed_form(s, alpha);
  const PlaneEndo cb = conj_closed_form(s, beta);
  if (conj_closed_form(s, alpha * beta) != compose(ca, cb)) return false;
  for (const auto& [root, image] : {std::pair{alpha, ca}, std::pair{beta, cb}}) {
    const auto order = endo_order(image, static_cast<unsigned>(root.order()));
    if (!order || *order != root.order()) return false;
  }
  return true;
}

}  // namespace pauto
