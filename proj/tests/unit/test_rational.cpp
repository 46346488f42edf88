#include <doctest.h>

#include "contractlab/rational.hpp"
#include "contractlab/rng.hpp"

using namespace contractlab;

TEST_CASE("rationals normalize to canonical form") {
  const Rational r = make_rational(6, -4);
  CHECK(num(r) == -3);
  CHECK(den(r) == 2);
  CHECK(make_rational(3, 6) == make_rational(1, 2));
  CHECK(den(make_rational(0, 7)) == 1);
  CHECK_THROWS_AS(make_rational(1, 0), ParameterError);
}

TEST_CASE("arithmetic stays exact") {
  const Rational third = make_rational(1, 3);
  const Rational sixth = make_rational(1, 6);
  CHECK(third + sixth == make_rational(1, 2));
  CHECK(third - sixth == sixth);
  CHECK(third * sixth == make_rational(1, 18));
  CHECK(third / sixth == Rational(2));

  // no drift over many operations
  Rational acc = 0;
  for (int i = 0; i < 1000; ++i) acc += make_rational(1, 3);
  CHECK(acc == make_rational(1000, 3));
}

TEST_CASE("parse and print round trip") {
  CHECK(parse_rational("1/3") == make_rational(1, 3));
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_to_string(make_rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);

  Rng rng(123);
  for (int i = 0; i < 200; ++i) {
    const Rational r = make_rational(static_cast<long long>(rng.uniform_u64(20001)) - 10000,
                                     1 + static_cast<long long>(rng.uniform_u64(999)));
    CHECK(parse_rational(rational_to_string(r)) == r);
  }
}

TEST_CASE("deterministic rng streams") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
}
