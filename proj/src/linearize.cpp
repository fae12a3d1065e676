#include "pauto/linearize.hpp"

#include <map>
#include <stdexcept>

namespace pauto {

namespace {

struct Shape {
  RootOfUnity alpha;
  std::map<unsigned, Cyclotomic> s;  // x2 degree -> S_d
};

Shape check_shape(const PlaneEndo& target, unsigned prime_hint) {
  const Poly& f2 = target.f2;
  if (f2.terms().size() != 1 || f2.terms().begin()->first != Monomial{0, 1})
    throw MalformedInput("second component must be alpha*x2, got " + f2.to_string());
  const Cyclotomic a = f2.terms().begin()->second;

  unsigned p = a.prime();
  if (p == 0) p = prime_hint != 0 ? prime_hint : 2;
  if (prime_hint != 0 && prime_hint != p)
    throw MalformedInput("alpha lives over prime " + std::to_string(p) + ", not " + std::to_string(prime_hint));
  auto alpha = as_root_of_unity(a, p);
  if (!alpha) throw MalformedInput(a.to_string() + " is not a root of unity of " + std::to_string(p) + "-power order");

  const Poly rest = target.f1 - Poly::monomial({1, 0}, a);
  if (!rest.is_univariate_in_x2())
    throw MalformedInput("first component must be alpha*x1 plus a polynomial in x2, got " + target.f1.to_string());

  Shape shape{*alpha, {}};
  for (const auto& [m, c] : rest.terms()) shape.s.emplace(m.x2, c);
  return shape;
}

}  // namespace

LinearizationResult solve_linearization(const LinearizationProblem& problem, unsigned prime_hint) {
  if (problem.degree_bound < 1) throw MalformedInput("degree bound must be at least 1");
  const Shape shape = check_shape(problem.target, prime_hint);
  const Cyclotomic a = shape.alpha.to_field();

  // Resonant monomials are unsolvable regardless of the bound.
  for (const auto& [d, sd] : shape.s)
    if (shape.alpha.pow(d) == shape.alpha)
      return Obstruction{Obstruction::Kind::resonance, d};

  Poly g;
  unsigned top = 0;
  for (const auto& [d, sd] : shape.s) {
    // g_d (alpha^d - alpha) = S_d
    g += Poly::monomial({0, d}, sd / (shape.alpha.pow(d).to_field() - a));
    top = std::max(top, d);
  }
  if (top > problem.degree_bound) return Obstruction{Obstruction::Kind::degree_bound, top};

  TriangularAffine theta = TriangularAffine::shift(std::move(g));
  PlaneEndo h = conjugate(problem.target, theta);
  if (!is_diagonal(h) || h != diag(shape.alpha))
    throw std::logic_error("linearizer failed its composition check for " + problem.target.to_string());
  return Linearization{std::move(theta), std::move(h)};
}

std::optional<unsigned> minimal_linearizer_degree(const CoeffSequence& s, const RootOfUnity& alpha,
                                                  unsigned max_degree) {
  const PlaneEndo target = conj_closed_form(s, alpha);
  for (unsigned D = 1; D <= max_degree; ++D)
    if (std::holds_alternative<Linearization>(solve_linearization({target, D}, s.prime()))) return D;
  return std::nullopt;
}

}  // namespace pauto
