#include <doctest.h>

#include <random>

#include "qskein/scalar.hpp"

using namespace qskein;

namespace {
Laurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-6, 6), c(-5, 5), n(0, 4);
  Laurent x;
  for (int i = n(rng); i > 0; --i) x.add_term(e(rng), c(rng));
  return x;
}
}  // namespace

TEST_CASE("laurent arithmetic") {
  CHECK(Laurent::v(2) * Laurent::v(-2) == Laurent(1));
  // (q - q^-1) q = q^2 - 1
  CHECK((Laurent::q(1) - Laurent::q(-1)) * Laurent::q(1) == Laurent::v(8) - Laurent(1));
  CHECK(Laurent::parse("-A^(5/2)") == -Laurent::v(5));
  CHECK(Laurent::parse("A^(1/2)") == Laurent::v(1));
  CHECK((-Laurent::v(5)).str() == "-1*v^5");
  CHECK((Laurent::v(8) - Laurent(1)).str() == "1*v^8 + -1");
  CHECK(Laurent() + Laurent(3) - Laurent(3) == Laurent());
  CHECK(Laurent().is_zero());
}

TEST_CASE("laurent text round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Laurent x = random_laurent(rng);
    CHECK(Laurent::parse(x.str()) == x);
  }
  CHECK(Laurent::parse("q") == Laurent::v(4));
  CHECK(Laurent::parse("A") == Laurent::v(2));
  CHECK_THROWS_AS(Laurent::parse("v^"), ParseError);
}

TEST_CASE("specialization") {
  CHECK(specialize(Laurent::q(2) - Laurent(1), SpecPoint::integers()) == 0);
  CHECK(specialize(Laurent::q(4) - Laurent(1), SpecPoint::integers()) == 0);
  CHECK(specialize(Laurent::v(2) * Laurent(3) + Laurent(5), SpecPoint::prime_field(3)) == 2);
  CHECK_THROWS_AS(SpecPoint::prime_field(4), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Laurent x = random_laurent(rng), y = random_laurent(rng);
    for (auto at : {SpecPoint::integers(), SpecPoint::prime_field(5)}) {
      const mpz_class sx = specialize(x, at), sy = specialize(y, at);
      mpz_class prod = sx * sy, sum = sx + sy;
      if (at.kind == SpecPoint::Kind::PrimeField) {
        prod %= 5;
        sum %= 5;
      }
      CHECK(specialize(x * y, at) == prod);
      CHECK(specialize(x + y, at) == sum);
    }
  }
}

TEST_CASE("fraction normalization") {
  const Laurent v = Laurent::v(1), one = Laurent(1);
  Rational r = frac_normalize(Laurent::v(2) - one, v - one);
  CHECK(r.num() == v + one);
  CHECK(r.den() == one);
  Rational z = frac_normalize(Laurent(), Laurent::v(3));
  CHECK(z.num() == Laurent());
  CHECK(z.den() == one);
  Rational inv = Rational(v + one).inverse();
  CHECK(inv.num() == one);
  CHECK(inv.den() == v + one);
  CHECK_THROWS_AS(frac_normalize(one, Laurent()), std::domain_error);
  // normalizing twice changes nothing
  Rational again = frac_normalize(r.num(), r.den());
  CHECK(again == r);
}

TEST_CASE("rational arithmetic agrees with laurent arithmetic") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Laurent x = random_laurent(rng), y = random_laurent(rng);
    CHECK(Rational(x) + Rational(y) == Rational(x + y));
    CHECK(Rational(x) * Rational(y) == Rational(x * y));
    if (!y.is_zero()) CHECK((Rational(x) * Rational(y)) / Rational(y) == Rational(x));
  }
}
