#include <doctest.h>

#include <numeric>

#include "pauto/conjclass.hpp"
#include "support.hpp"

using namespace pauto;
using namespace pauto::testing;

namespace {

const Poly x1 = Poly::x1();
const Poly x2 = Poly::x2();

BinarySequence bits(std::vector<bool> prefix, std::vector<bool> tail) { return {std::move(prefix), std::move(tail)}; }

Cyclotomic q(long n, long d = 1) { return Cyclotomic(Rational(n, d)); }

// b_k = a_k * 2^(2^k + 1) on a finite prefix.
CoeffSequence scaled_by_two(const CoeffSequence& a) {
  std::vector<Cyclotomic> b;
  for (std::size_t k = 0; k < a.prefix().size(); ++k)
    b.push_back(a.prefix()[k] * Cyclotomic(2).pow(w_exponent(2, static_cast<unsigned>(k))));
  return CoeffSequence(2, b);
}

}  // namespace

TEST_CASE("differ_infinitely") {
  const auto ones = bits({}, {true});
  CHECK_FALSE(differ_infinitely(ones, ones));
  CHECK(differ_infinitely(ones, bits({}, {true, false})));
  CHECK_FALSE(differ_infinitely(ones, bits({true, true, true, false, false, false, false, false}, {true})));
  // Same tail phase reached through different preambles.
  CHECK_FALSE(differ_infinitely(bits({}, {true, false}), bits({true, false, true}, {false, true})));
}

TEST_CASE("omega0_family") {
  const auto two = omega0_family(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].period() == 2);
  CHECK(two[1].period() == 3);
  CHECK(differ_infinitely(two[0], two[1]));
  CHECK(eventual_mismatch(two[0], two[1]).period == 6);

  const auto five = omega0_family(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(differ_infinitely(five[i], five[j]));

  CHECK_THROWS_AS(omega0_family(1), std::invalid_argument);
}

TEST_CASE("necessary_condition: reflexive") {
  const CoeffSequence a(2, {q(3), q(0)}, {q(1), q(-2, 3)});
  const auto report = necessary_condition(a, a, 0);
  REQUIRE(report.satisfiable());
  CHECK(*report.beta == Cyclotomic(1));
  CHECK(*report.gamma == Cyclotomic(1));
}

TEST_CASE("necessary_condition: supports differ") {
  const CoeffSequence a(2, {}, {q(1)});
  const CoeffSequence b(2, {}, {q(1), q(0)});
  const auto report = necessary_condition(a, b, 0);
  CHECK_FALSE(report.satisfiable());
  CHECK(report.failing.period == 2);
  CHECK(report.failing.offsets == std::vector<std::size_t>{1});
}

TEST_CASE("necessary_condition: scaling by beta = 2") {
  const CoeffSequence a(2, {q(1), q(1), q(1), q(1)});
  const CoeffSequence b = scaled_by_two(a);
  CHECK(b.coeff(3) == q(512));
  const auto report = necessary_condition(a, b, 0);
  REQUIRE(report.satisfiable());
  CHECK(*report.beta == Cyclotomic(2));
  CHECK(*report.gamma == Cyclotomic(1));
}

TEST_CASE("necessary_condition: nonconstant periodic ratio") {
  const CoeffSequence a(3, {}, {q(1), q(1)});
  const CoeffSequence b(3, {}, {q(1), q(2)});
  const auto report = necessary_condition(a, b, 0);
  CHECK_FALSE(report.satisfiable());
  CHECK(report.failing.offsets == std::vector<std::size_t>{1});
}

TEST_CASE("necessary_condition: finite disagreement moves the start index") {
  const CoeffSequence a(2, {q(1), q(0), q(5)}, {q(1)});
  const CoeffSequence b(2, {q(0), q(7), q(5)}, {q(1)});
  const auto report = necessary_condition(a, b, 0);
  REQUIRE(report.satisfiable());
  CHECK(report.from_index == 2);
}

TEST_CASE("necessary_condition: root-of-unity beta") {
  // b_k = a_k * omega^(p^k+1) with omega = zeta_9, gamma = 1.
  const unsigned p = 3;
  const RootOfUnity omega = RootOfUnity::from_exponent(3, 2, 1);
  const CoeffSequence a(p, {q(1), q(2)}, {q(1)});
  std::vector<Cyclotomic> prefix;
  for (unsigned k = 0; k < 2; ++k) prefix.push_back(a.coeff(k) * omega.pow_p_power_plus_one(k).to_field());
  const CoeffSequence b(p, prefix, {omega.to_field()});
  const auto report = necessary_condition(a, b, 0);
  REQUIRE(report.satisfiable());
  CHECK(report.from_index == 0);
  for (unsigned k = 0; k < 6; ++k)
    CHECK(a.coeff(k) * report.beta->pow(w_exponent(p, k)) == *report.gamma * b.coeff(k));
}

TEST_CASE("necessary_condition: scaling invariance") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const CoeffSequence a(2, random_prefix(rng, 3), random_nonzero_block(rng, 2));
    const Cyclotomic scale = random_nonzero_cyclotomic(rng, 2, 2);
    std::vector<Cyclotomic> prefix, tail;
    for (const auto& v : a.prefix()) prefix.push_back(v * scale);
    for (const auto& v : a.tail()) tail.push_back(v * scale);
    CHECK(necessary_condition(a, CoeffSequence(2, prefix, tail), 0).satisfiable());
  }
}

TEST_CASE("necessary_condition: mixed primes") {
  CHECK_THROWS_AS(necessary_condition(CoeffSequence(2, {q(1)}), CoeffSequence(3, {q(1)}), 0), DomainError);
}

TEST_CASE("verify_subgroup_conjugator") {
  const CoeffSequence a(2, {q(1), q(1)});
  CHECK(verify_subgroup_conjugator(a, a, TriangularAffine::identity(), 3));

  // Exactly one orientation of the scaling works.
  const CoeffSequence b = scaled_by_two(a);
  CHECK(verify_subgroup_conjugator(a, b, TriangularAffine(1, Poly(), 2, 0), 3));
  CHECK_FALSE(verify_subgroup_conjugator(a, b, TriangularAffine(1, Poly(), Cyclotomic(Rational(1, 2)), 0), 3));

  CHECK_FALSE(verify_subgroup_conjugator(CoeffSequence(2, {q(1), q(0)}), CoeffSequence(2, {q(0), q(1)}),
                                         TriangularAffine::identity(), 1));
}

TEST_CASE("constructed conjugate pairs satisfy the necessary condition") {
  Rng rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned p = trial % 2 == 0 ? 2 : 3;
    const std::size_t period = static_cast<std::size_t>(uniform(rng, 1, 3));
    const CoeffSequence a(p, random_prefix(rng, 2), random_nonzero_block(rng, period));
    const RootOfUnity omega = random_root(rng, p, 2);
    const Cyclotomic gamma(random_nonzero_rational(rng));

    // b_k = a_k omega^(p^k+1) / gamma; past level(omega) the factor is omega.
    std::size_t len = a.prefix().size();
    while (len < omega.level()) len += period;
    std::vector<Cyclotomic> prefix, tail;
    for (std::size_t k = 0; k < len; ++k)
      prefix.push_back(a.coeff(k) * omega.pow_p_power_plus_one(static_cast<unsigned>(k)).to_field() / gamma);
    for (std::size_t k = len; k < len + period; ++k) tail.push_back(a.coeff(k) * omega.to_field() / gamma);
    const CoeffSequence b(p, prefix, tail);

    const TriangularAffine theta(gamma, Poly(), omega.to_field(), 0);
    CHECK(verify_subgroup_conjugator(a, b, theta, 3));
    const auto report = necessary_condition(a, b, 0);
    CHECK(report.satisfiable());
    CHECK(report.from_index == 0);
  }
}

TEST_CASE("omega0 pairs: certificates and no small conjugator") {
  Rng rng(43);
  const auto family = omega0_family(5);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const CoeffSequence a = to_coeff_sequence(family[i], 2), b = to_coeff_sequence(family[j], 2);
      CHECK_FALSE(necessary_condition(a, b, 0).satisfiable());
      // Sequence i first differs from sequence j at index i + 2.
      const unsigned levels = static_cast<unsigned>(i) + 3;
      CHECK_FALSE(verify_subgroup_conjugator(a, b, TriangularAffine::identity(), levels));
      for (int trial = 0; trial < 4; ++trial)
        CHECK_FALSE(verify_subgroup_conjugator(a, b, random_triangular(rng, 2, 1, 3), levels));
    }
  }
}
