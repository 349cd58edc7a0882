#include "hopf/cyclotomic.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hopf;

TEST_CASE("parse zero") {
  const CycNum x = cyc_parse("0", 1);
  CHECK(x.is_zero());
  CHECK(x.conductor() == 1);
}

TEST_CASE("z^2 reduces to -1 in Q(zeta_4)") {
  const CycNum x = cyc_parse("z^2", 4);
  CHECK(x.is_rational());
  CHECK(x == CycNum(-1, 4));
  CHECK(x.coeffs() == std::vector<Rational>{-1, 0});
}

TEST_CASE("already reduced element of Q(zeta_3)") {
  const CycNum x = cyc_parse("1/2 + 1/2*z", 3);
  REQUIRE(x.coeffs().size() == 2);
  CHECK(x.coeffs()[0] == Rational(1, 2));
  CHECK(x.coeffs()[1] == Rational(1, 2));
}

TEST_CASE("cyc_arith examples") {
  const CycNum z4 = CycNum::zeta(4);
  CHECK(cyc_arith(z4, z4, CycOp::mul) == CycNum(-1, 4));

  std::mt19937_64 rng(7);
  for (int n : {1, 3, 5, 8, 12}) {
    const CycNum x = testing::random_cyc(rng, n);
    CHECK(cyc_arith(x, CycNum::one(n), CycOp::mul) == x);
  }

  const CycNum z3 = CycNum::zeta(3);
  CHECK(cyc_arith(CycNum(1, 3) + z3 + z3 * z3, CycNum::zero(3), CycOp::add).is_zero());
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(cyc_arith(CycNum(1, 5), CycNum::zero(5), CycOp::div), DivisionByZero);
  CHECK_THROWS_AS(CycNum::zero(7).inverse(), DivisionByZero);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 30; ++n) CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("parser grammar") {
  CHECK(cyc_parse("-z", 5) == -CycNum::zeta(5));
  CHECK(cyc_parse("3*z^7", 6) == CycNum(3, 6) * CycNum::zeta(6, 1));
  CHECK(cyc_parse(" 2/4 - 1/2 ", 9).is_zero());
  CHECK(cyc_parse("z^0", 5).is_one());
  CHECK(cyc_parse("1 \xe2\x88\x92 z", 4) == CycNum(1, 4) - CycNum::zeta(4));
  CHECK_THROWS_AS(cyc_parse("", 3), CycParseError);
  CHECK_THROWS_AS(cyc_parse("1/0", 3), CycParseError);
  CHECK_THROWS_AS(cyc_parse("1 + ", 3), CycParseError);
  CHECK_THROWS_AS(cyc_parse("w", 3), CycParseError);
  CHECK_THROWS_AS(cyc_parse("1", 0), ConductorError);
}

TEST_CASE("lifting to a multiple of the conductor") {
  const CycNum z3 = CycNum::zeta(3);
  const CycNum lifted = z3.lifted(6);
  CHECK(lifted.conductor() == 6);
  CHECK(lifted == CycNum::zeta(6, 2));
  CHECK(lifted == z3);
  CHECK_THROWS_AS(z3.lifted(4), ConductorError);
  // mixed conductors meet in the lcm
  const CycNum s = CycNum::zeta(4) + CycNum::zeta(3);
  CHECK(s.conductor() == 12);
  CHECK(testing::close(testing::embed(s), testing::embed(CycNum::zeta(12, 3)) + testing::embed(CycNum::zeta(12, 4))));
}

TEST_CASE("field operations agree with the complex embedding") {
  std::mt19937_64 rng(2024);
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 25; ++trial) {
      const CycNum a = testing::random_cyc(rng, n), b = testing::random_cyc(rng, n);
      const auto ea = testing::embed(a), eb = testing::embed(b);
      CHECK(testing::close(testing::embed(a + b), ea + eb));
      CHECK(testing::close(testing::embed(a - b), ea - eb));
      CHECK(testing::close(testing::embed(a * b), ea * eb));
      if (!b.is_zero()) CHECK(testing::close(testing::embed(a / b), ea / eb));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(99);
  for (int n : {3, 5, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum a = testing::random_cyc(rng, n), b = testing::random_cyc(rng, n), c = testing::random_cyc(rng, n);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CycNum acc = c;
      acc.add_product(a, b);
      CHECK(acc == c + a * b);
    }
  }
}

TEST_CASE("zeta has order n") {
  for (int n = 1; n <= 24; ++n) {
    CycNum p = CycNum::one(n);
    const CycNum z = CycNum::zeta(n);
    for (int k = 1; k < n; ++k) {
      p *= z;
      CHECK_FALSE(p.is_one());
    }
    p *= z;
    CHECK(p.is_one());
  }
}

TEST_CASE("to_string round trips through the parser") {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 3, 4, 7, 10, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum a = testing::random_cyc(rng, n);
      CHECK(cyc_parse(a.to_string(), n) == a);
      CHECK(cyc_parse(a.to_string(), n).to_string() == a.to_string());
    }
  }
  CHECK(CycNum::zero(5).to_string() == "0");
  CHECK(CycNum::zeta(5).to_string() == "z");
  CHECK(cyc_parse("1/2 + 1/2*z", 3).to_string() == "1/2 + 1/2*z");
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(gcd(12, 18) == 6);
  CHECK(lcm(4, 6) == 12);
  CHECK(make_rational(2, -4) == Rational(-1, 2));
}
