#include "algebroid/random.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("addition") {
  CHECK((X() + (-X())).is_zero());
  CHECK(Scalar::exp_line(-1) + Scalar::exp_line(-1) == Scalar(2) * Scalar::exp_line(-1));
  const Scalar inv = X().reciprocal();
  CHECK(inv + inv * inv == (X() + Scalar(1)) * (X() * X()).reciprocal());
  CHECK(format(inv + inv * inv, fixtures::chart(1)) == format(lit("(x+1)/x^2", 1), fixtures::chart(1)));
}

TEST_CASE("multiplication") {
  CHECK(Scalar::exp_line(-1) * Scalar::exp_line(-1) == Scalar::exp_line(-2));
  CHECK(X() * X().reciprocal() == Scalar(1));
  CHECK((X() + Y()) * (X() - Y()) == X() * X() - Y() * Y());
}

TEST_CASE("partial derivatives") {
  CHECK(Scalar::exp_line(-1).derivative(Monomial::kLineSlot) == -Scalar::exp_line(-1));
  CHECK((X() * X() * Y()).derivative(0) == Scalar(2) * X() * Y());
  CHECK(X().reciprocal().derivative(0) == -(X() * X()).reciprocal());
  // band rule with a t-polynomial factor: d_t(t e^{2t}) = (1 + 2t) e^{2t}
  CHECK((T() * Scalar::exp_line(2)).derivative(Monomial::kLineSlot) ==
        (Scalar(1) + Scalar(2) * T()) * Scalar::exp_line(2));
}

TEST_CASE("zero test") {
  CHECK(Scalar().is_zero());
  CHECK((X() * X().reciprocal() - Scalar(1)).is_zero());
  CHECK((Scalar::exp_line(-2) - Scalar::exp_line(-1) * Scalar::exp_line(-1)).is_zero());
  CHECK_FALSE(X().is_zero());
}

TEST_CASE("literal grammar") {
  const Chart c = fixtures::chart(2).with_line();
  CHECK(parse_scalar("3/6", c) == Scalar(mpq_class(1, 2)));
  CHECK(parse_scalar("x^2 - 2*x*y + y^2", c) == (X() - Y()) * (X() - Y()));
  CHECK(parse_scalar("exp(-2*t)*(x + 1)", c) == Scalar::exp_line(-2) * (X() + Scalar(1)));
  CHECK(parse_scalar("  exp( 3 * t ) ", c) == Scalar::exp_line(3));
  CHECK(parse_scalar("1/(1 + x^2)", c) * (Scalar(1) + X() * X()) == Scalar(1));
  CHECK_THROWS_AS(parse_scalar("exp(x*t)", c), ParseError);
  CHECK_THROWS_AS(parse_scalar("w + 1", c), ParseError);
  CHECK_THROWS_AS(parse_scalar("(x + 1", c), ParseError);
  try {
    parse_scalar("x + exp(x*t)", c, 4, 10);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 10);
  }
}

TEST_CASE("format round trip") {
  const Chart c = fixtures::chart(2).with_line();
  RandomSource rng(11, 3);
  for (int n = 0; n < 50; ++n) {
    Scalar s = rng.polynomial(c) * Scalar::exp_line(rng.integer(-2, 2)) + rng.polynomial(c) * T();
    const Scalar d = rng.nonzero_polynomial(c);
    s = s * d.reciprocal();
    CHECK(parse_scalar(format(s, c), c) == s);
  }
}

TEST_CASE("ring axioms and Leibniz on random inputs") {
  const Chart c = fixtures::chart(2);
  RandomSource rng(5, 2);
  for (int n = 0; n < 40; ++n) {
    const Scalar a = rng.polynomial(c) * Scalar::exp_line(rng.integer(-1, 1));
    const Scalar b = rng.polynomial(c) * rng.nonzero_polynomial(c).reciprocal();
    const Scalar e = rng.polynomial(c) + T();
    CHECK(((a * b) * e - a * (b * e)).is_zero());
    CHECK((a * b - b * a).is_zero());
    CHECK((a * (b + e) - a * b - a * e).is_zero());
    CHECK(((a + b) + e - (a + (b + e))).is_zero());
    for (int slot : {0, 1, Monomial::kLineSlot})
      CHECK(((a * b).derivative(slot) - a * b.derivative(slot) - b * a.derivative(slot)).is_zero());
  }
}

TEST_CASE("canonical forms do not depend on construction order") {
  const Scalar a = (X() + Scalar(1)) * (X() - Scalar(1)) * (X() * X() + Scalar(1)).reciprocal();
  const Scalar b = (X() * X() - Scalar(1)) * (Scalar(1) + X() * X()).reciprocal();
  CHECK(a == b);
  CHECK(a.denominator() == b.denominator());
  const Scalar c = (Scalar(2) * X() + Scalar(2)) * (Scalar(4) * X() * X() - Scalar(4)).reciprocal();
  CHECK(c == (Scalar(2) * X() - Scalar(2)).reciprocal());
}

TEST_CASE("reciprocal needs a single band") {
  CHECK(Scalar::exp_line(-1).reciprocal() == Scalar::exp_line(1));
  CHECK_THROWS(Scalar().reciprocal());
  CHECK_THROWS((Scalar::exp_line(1) + Scalar(1)).reciprocal());
}
