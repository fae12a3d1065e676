#include <doctest.h>

#include "pauto/cyclotomic.hpp"
#include "pauto/root_of_unity.hpp"
#include "support.hpp"

using namespace pauto;
using namespace pauto::testing;

namespace {

Cyclotomic z(unsigned p, unsigned n, long long j = 1) { return Cyclotomic::zeta(p, n, j); }

}  // namespace

TEST_CASE("addition") {
  const Cyclotomic i = z(2, 2);
  CHECK((Cyclotomic(1) + i) + (Cyclotomic(1) - i) == Cyclotomic(2));
  const Cyclotomic u = Cyclotomic(3) + z(3, 2, 4);
  CHECK(u + Cyclotomic() == u);

  // (zeta_8 + zeta_8^3)^2 = -2, checked exactly and against the numeric value.
  const Cyclotomic s = z(2, 3) + z(2, 3, 3);
  CHECK(s * s == Cyclotomic(-2));
  CHECK(close(to_complex(s) * to_complex(s), {-2.0, 0.0}));
}

TEST_CASE("multiplication") {
  const Cyclotomic i = z(2, 2);
  CHECK((Cyclotomic(1) + i) * (Cyclotomic(1) - i) == Cyclotomic(2));
  Cyclotomic w = z(2, 3);
  w = w * w;
  w = w * w;
  CHECK(w == Cyclotomic(-1));
  CHECK(z(3, 1) * z(3, 1, 2) == Cyclotomic(1));
}

TEST_CASE("inverse") {
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
  CHECK(z(2, 2).inverse() == z(2, 2, 3));
  CHECK(z(2, 2).inverse() == -z(2, 2));

  const Cyclotomic u = Cyclotomic(1) + z(2, 2);
  const Cyclotomic expected = (Cyclotomic(1) - z(2, 2)) * Cyclotomic(Rational(1, 2));
  CHECK(u.inverse() == expected);
  CHECK(u * u.inverse() == Cyclotomic(1));

  CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);
}

TEST_CASE("mixed primes are rejected") {
  CHECK_THROWS_AS(z(2, 2) + z(3, 1), DomainError);
  CHECK_THROWS_AS(z(2, 2) * z(5, 1), DomainError);
  // Rationals mix with any prime.
  CHECK_NOTHROW(z(2, 2) + Cyclotomic(3));
  CHECK_NOTHROW(z(5, 1) * Cyclotomic(3));
}

TEST_CASE("values drop to their minimal level") {
  CHECK(z(2, 2, 2) == Cyclotomic(-1));
  CHECK(z(2, 2, 2).level() == 0);
  CHECK(z(3, 2, 3) == z(3, 1));
  CHECK(z(3, 2, 3).level() == 1);
  CHECK(z(5, 3, 25) == z(5, 1));
  // 1 + zeta_3 + zeta_3^2 = 0
  CHECK((Cyclotomic(1) + z(3, 1) + z(3, 1, 2)).is_zero());
}

TEST_CASE("level_raise") {
  // zeta_2 = -1 sits at level 0; raised to level 2 it reads as zeta_4^2 = -1.
  const std::vector<Rational> minus_one{Rational(-1), Rational(0)};
  CHECK(level_raise(z(2, 1), 2, 2) == minus_one);
  CHECK(level_raise(Cyclotomic(3), 5, 2) == std::vector<Rational>{Rational(3), 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                                                   0,           0, 0, 0, 0, 0, 0, 0, 0, 0});
  // zeta_3 -> zeta_9^3
  std::vector<Rational> zeta9_cubed(6);
  zeta9_cubed[3] = 1;
  CHECK(level_raise(z(3, 1), 3, 2) == zeta9_cubed);

  CHECK_THROWS_AS(level_raise(z(2, 3), 2, 2), DomainError);
  CHECK_THROWS_AS(level_raise(z(3, 1), 2, 2), DomainError);
}

TEST_CASE("level_raise is a ring homomorphism") {
  Rng rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Cyclotomic u = random_cyclotomic(rng, p, 2), v = random_cyclotomic(rng, p, 2);
      const unsigned target = 3;
      const auto ru = level_raise(u, p, target), rv = level_raise(v, p, target);
      std::vector<Rational> sum(ru.size());
      for (std::size_t i = 0; i < ru.size(); ++i) sum[i] = ru[i] + rv[i];
      CHECK(level_raise(u + v, p, target) == sum);
      const Cyclotomic product = Cyclotomic::from_coefficients(p, target, ru) * Cyclotomic::from_coefficients(p, target, rv);
      CHECK(level_raise(u * v, p, target) == level_raise(product, p, target));
    }
  }
}

TEST_CASE("root_to_field") {
  CHECK(RootOfUnity::from_exponent(2, 1, 1).to_field() == Cyclotomic(-1));
  CHECK(RootOfUnity::from_exponent(2, 2, 1).to_field() == z(2, 2));
  CHECK(RootOfUnity(3).to_field() == Cyclotomic(1));
}

TEST_CASE("root_mul") {
  const auto r = [](unsigned p, unsigned n, long long j) { return RootOfUnity::from_exponent(p, n, j); };
  CHECK((r(2, 1, 1) * r(2, 1, 1)).is_identity());
  CHECK(r(2, 2, 1) * r(2, 1, 1) == r(2, 2, 3));
  CHECK(r(3, 2, 1) * r(3, 1, 1) == r(3, 2, 4));
  CHECK_THROWS_AS(r(2, 1, 1) * r(3, 1, 1), DomainError);
  // normalization: 2/4 is stored as 1/2
  CHECK(r(2, 2, 2).level() == 1);
  CHECK(r(2, 2, 2).exponent() == 1);
}

TEST_CASE("root_to_field is a homomorphism and realizes the order") {
  Rng rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const RootOfUnity a = random_root(rng, p, 3), b = random_root(rng, p, 3);
      CHECK((a * b).to_field() == a.to_field() * b.to_field());
      if (a.level() >= 1) {
        CHECK(a.to_field().pow(a.order()) == Cyclotomic(1));
        CHECK(a.to_field().pow(a.order() / p) != Cyclotomic(1));
      }
    }
  }
}

TEST_CASE("recognizing roots of unity") {
  CHECK(as_root_of_unity(Cyclotomic(-1), 2) == RootOfUnity::from_exponent(2, 1, 1));
  CHECK_FALSE(as_root_of_unity(Cyclotomic(-1), 3).has_value());
  CHECK(as_root_of_unity(z(5, 2, 7), 5) == RootOfUnity::from_exponent(5, 2, 7));
  CHECK_FALSE(as_root_of_unity(Cyclotomic(1) + z(2, 2), 2).has_value());

  const auto split = as_scaled_root(Cyclotomic(-3) * z(2, 3, 3), 2);
  REQUIRE(split);
  CHECK(split->scale == 3);
  CHECK(split->root == RootOfUnity::from_exponent(2, 3, 7));
  const auto odd = as_scaled_root(Cyclotomic(-2) * z(3, 1), 3);
  REQUIRE(odd);
  CHECK(odd->scale == -2);
}

TEST_CASE("canonical printing") {
  CHECK(Cyclotomic(Rational(3, 6)).to_string() == "1/2");
  CHECK((Cyclotomic(1) - z(2, 2)).to_string() == "1 + -z(4)");
  CHECK((Cyclotomic(Rational(3, 2)) * z(2, 3, 3)).to_string() == "3/2*z(8)^3");
  CHECK(Cyclotomic().to_string() == "0");
}

TEST_CASE("field laws against the numeric oracle") {
  Rng rng(2024);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Cyclotomic u = random_cyclotomic(rng, p, 3), v = random_cyclotomic(rng, p, 3);
      CHECK(close(to_complex(u * v), to_complex(u) * to_complex(v)));
      CHECK(close(to_complex(u + v), to_complex(u) + to_complex(v)));
      if (!u.is_zero()) CHECK(close(to_complex(u.inverse()) * to_complex(u), {1.0, 0.0}));
    }
  }
}
