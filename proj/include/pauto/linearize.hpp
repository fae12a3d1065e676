#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "pauto/endo.hpp"
#include "pauto/prufer.hpp"

namespace pauto {

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LinearizationProblem {
  /// Expected shape (alpha*x1 + S(x2), alpha*x2) with alpha a root of unity.
  PlaneEndo target;
  /// Largest degree allowed for the g-part of the conjugator.
  unsigned degree_bound = 1;
};

struct Linearization {
  TriangularAffine theta;
  /// conjugate(target, theta); always diagonal.
  PlaneEndo h;
};

struct Obstruction {
  enum class Kind {
    /// alpha^(d-1) = 1 while S_d != 0: no conjugator of any degree.
    resonance,
    /// All monomials are solvable but the forced g needs degree > bound.
    degree_bound,
  };
  Kind kind;
  /// Smallest resonant degree, or for degree_bound the largest forced
  /// degree, which is the least bound that would succeed.
  unsigned degree;
};

using LinearizationResult = std::variant<Linearization, Obstruction>;

/// Searches for theta = (x1 + g(x2), x2) with conjugate(target, theta)
/// diagonal. Matching x2^d coefficients of target*theta = theta*h gives
/// g_d * (alpha^d - alpha) = S_d. The normalization gamma = beta = 1,
/// beta0 = 0 is fixed; a free g_d (resonant, S_d = 0) is set to zero.
///
/// `prime_hint` picks p when alpha is rational (alpha = 1); otherwise p is
/// read from alpha. Throws MalformedInput when the target has the wrong
/// shape.
LinearizationResult solve_linearization(const LinearizationProblem& problem, unsigned prime_hint = 0);

/// Smallest D <= max_degree for which solve_linearization succeeds on
/// conj_closed_form(s, alpha).
std::optional<unsigned> minimal_linearizer_degree(const CoeffSequence& s, const RootOfUnity& alpha,
                                                  unsigned max_degree);

}  // namespace pauto
