#include <doctest.h>

#include <cmath>
#include <complex>

#include "suq2/scalar.hpp"

using namespace suq2;

namespace {

const Scalar q = Scalar::q();
const Scalar qb = Scalar::qbar();

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-12; }

}  // namespace

TEST_CASE("zeta evaluates to q over its conjugate") {
  CHECK(near(Scalar::zeta().evaluate({1.0, 1.0}), {0.0, 1.0}));
  CHECK(Scalar::zeta() == q / qb);
}

TEST_CASE("q times its conjugate is |q|^2") {
  CHECK(near((q * qb).evaluate({0.6, 0.8}), {1.0, 0.0}));
  CHECK(near((q * qb).evaluate({0.5, 0.0}), {0.25, 0.0}));
}

TEST_CASE("evaluation at a pole is an error") {
  Scalar s = Scalar(1) / (Scalar(1) - q * qb);
  CHECK_THROWS_WITH_AS(s.evaluate({0.6, 0.8}), "pole-at-q", ScalarError);
  CHECK(near(s.evaluate({0.5, 0.0}), {4.0 / 3.0, 0.0}));
}

TEST_CASE("conjugation swaps q and its conjugate and conjugates coefficients") {
  Scalar s = Scalar::i() * q.pow(2);
  CHECK(s.conjugate() == -Scalar::i() * qb.pow(2));
  CHECK(Scalar::zeta().conjugate() == Scalar::zeta().inverse());
  CHECK(Scalar::rational(3, 4).conjugate() == Scalar::rational(3, 4));
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_WITH_AS(Scalar(1) / Scalar(0), "zero-divisor", ScalarError);
  CHECK_THROWS_AS(Scalar(0).inverse(), ScalarError);
  CHECK_THROWS_AS(Scalar::rational(1, 0), ScalarError);
}

TEST_CASE("rational functions are kept in lowest terms") {
  Scalar a = (q * q - Scalar(1)) / (q - Scalar(1));
  CHECK(a == q + Scalar(1));
  CHECK(a.is_laurent());
  Scalar b = (q - qb) / (qb - q);
  CHECK(b == Scalar(-1));
  // Monomial denominators are absorbed into negative exponents.
  CHECK((Scalar(1) / q).is_laurent());
  CHECK(!(Scalar(1) / (Scalar(1) - q * qb)).is_laurent());
}

TEST_CASE("powers") {
  CHECK(q.pow(0).is_one());
  CHECK(q.pow(-3) * q.pow(3) == Scalar(1));
  CHECK(Scalar::i().pow(4) == Scalar(1));
  CHECK((q + qb).pow(2) == q * q + Scalar(2) * q * qb + qb * qb);
}

TEST_CASE("rendering") {
  CHECK(Scalar(0).to_string() == "0");
  CHECK(Scalar::rational(1, 2).to_string() == "1/2");
  CHECK(Scalar::zeta().to_string() == "q*qb^-1");
  CHECK((Scalar(1) + Scalar::i()).to_string() == "(1 + i)");
  CHECK((q + qb).needs_parens());
  CHECK(!q.needs_parens());
}
