#pragma once

#include <cstdint>
#include <vector>

#include "pauto/endo.hpp"
#include "pauto/root_of_unity.hpp"

namespace pauto {

/// Coefficients {a_k} of the series x1 + sum a_k x2^(p^k + 1), given as a
/// finite prefix followed either by zeros or by a repeating block.
///
/// A zero tail is the polynomial case: the series map is then an
/// automorphism of k[x1, x2] itself. An all-zero block is stored as a zero
/// tail.
class CoeffSequence {
 public:
  CoeffSequence(unsigned p, std::vector<Cyclotomic> prefix, std::vector<Cyclotomic> tail = {});

  unsigned prime() const { return p_; }
  const std::vector<Cyclotomic>& prefix() const { return prefix_; }
  /// Empty for a zero tail.
  const std::vector<Cyclotomic>& tail() const { return tail_; }
  bool has_zero_tail() const { return tail_.empty(); }

  const Cyclotomic& coeff(std::size_t k) const;

  friend bool operator==(const CoeffSequence&, const CoeffSequence&) = default;

 private:
  unsigned p_;
  std::vector<Cyclotomic> prefix_;
  std::vector<Cyclotomic> tail_;
};

/// Exponent p^k + 1 of w_k = x2^(p^k + 1).
unsigned w_exponent(unsigned p, unsigned k);

/// (alpha*x1, alpha*x2).
PlaneEndo diag(const RootOfUnity& alpha);

/// (x1 + sum_{k <= N} a_k w_k, x2).
TriangularAffine series_truncation(const CoeffSequence& s, unsigned N);

/// a^-1 (alpha x1, alpha x2) a built directly from
/// (alpha*x1 + alpha * sum a_k (1 - alpha^(p^k)) w_k, alpha*x2). Every term
/// with k >= level(alpha) vanishes, so the result is a polynomial map even
/// when the tail of s is nonzero.
PlaneEndo conj_closed_form(const CoeffSequence& s, const RootOfUnity& alpha);

/// Compares the closed form against brute-force conjugation of diag(alpha)
/// by series_truncation(s, N) for every N in [level(alpha), max(level(alpha),
/// truncation_bound)].
bool verify_formula(const CoeffSequence& s, const RootOfUnity& alpha, unsigned truncation_bound = 0);

/// Homomorphism and order check for alpha -> conj_closed_form(s, alpha) on
/// the pair (alpha, beta).
bool embedding_check(const CoeffSequence& s, const RootOfUnity& alpha, const RootOfUnity& beta);

}  // namespace pauto
