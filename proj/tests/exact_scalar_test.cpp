#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "lcs/exact_scalar.hpp"

using namespace lcs;

TEST_CASE("like terms combine") {
  ExactScalar x = ExactScalar::sqrt_of(2) + ExactScalar::sqrt_of(2);
  CHECK(x == ExactScalar::sqrt_of(2, 2));
  CHECK((x - ExactScalar::sqrt_of(2, 2)).is_zero());
}

TEST_CASE("radical products reduce to squarefree form") {
  CHECK(ExactScalar::sqrt_of(2) * ExactScalar::sqrt_of(2) == ExactScalar(2));

  // oracle: 6 * 10 = 60 = 2^2 * 15 by trial division
  auto parts = squarefree_decompose(60);
  CHECK(parts.square_root == 2);
  CHECK(parts.squarefree == 15);
  CHECK(ExactScalar::sqrt_of(6) * ExactScalar::sqrt_of(10) ==
        ExactScalar::sqrt_of(15, 2));

  CHECK(ExactScalar::sqrt_of(9) == ExactScalar(3));
  CHECK(ExactScalar::sqrt_of(0) == ExactScalar(0));
}

TEST_CASE("sign determination") {
  CHECK(ExactScalar(0).sign() == 0);
  CHECK((ExactScalar::sqrt_of(2) - ExactScalar(1)).sign() == 1);

  // interval oracle first: sqrt(2) + sqrt(3) = 3.146... > 3
  double approx = std::sqrt(2.0) + std::sqrt(3.0);
  REQUIRE(approx > 3.0);
  ExactScalar x = ExactScalar(3) - ExactScalar::sqrt_of(2) - ExactScalar::sqrt_of(3);
  CHECK(x.sign() == -1);

  // values needing real refinement: sqrt(2)+sqrt(3)-sqrt(5)-0.91 is tiny
  ExactScalar tight = ExactScalar::sqrt_of(2) + ExactScalar::sqrt_of(3) - ExactScalar::sqrt_of(5) -
                      ExactScalar(Rational(91, 100));
  CHECK(tight.sign() == (std::sqrt(2.0) + std::sqrt(3.0) - std::sqrt(5.0) - 0.91 > 0 ? 1 : -1));

  // an exact cancellation across radicands
  ExactScalar zero = ExactScalar::sqrt_of(8) - ExactScalar::sqrt_of(2, 2);
  CHECK(zero.sign() == 0);
}

TEST_CASE("rationality detection") {
  ExactScalar q(Rational(7, 3));
  REQUIRE(q.is_rational());
  CHECK(*q.rational_value() == Rational(7, 3));

  CHECK(!ExactScalar::sqrt_of(5).is_rational());

  // sqrt(b1 b2) * sqrt(b2 b3) * sqrt(b1 b3) for (2, 3, 5): radicand product
  // is 6 * 15 * 10 = 900 = 30^2
  ExactScalar prod = ExactScalar::sqrt_of(2 * 3) * ExactScalar::sqrt_of(3 * 5) *
                     ExactScalar::sqrt_of(2 * 5);
  REQUIRE(prod.is_rational());
  CHECK(*prod.rational_value() == 30);
}

TEST_CASE("field axioms on random elements") {
  testing::Rng rng(7001);
  for (int it = 0; it < 300; ++it) {
    ExactScalar a = testing::random_scalar(rng);
    ExactScalar b = testing::random_scalar(rng);
    ExactScalar c = testing::random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == ExactScalar(0));
    CHECK(a * ExactScalar(1) == a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == ExactScalar(1));
    }
  }
}

TEST_CASE("sign agrees with floating evaluation away from zero") {
  testing::Rng rng(7002);
  int checked = 0;
  while (checked < 10000) {
    ExactScalar x = testing::random_scalar(rng, 4);
    double v = x.approx();
    if (std::abs(v) <= 1e-6) continue;
    ++checked;
    CHECK(x.sign() == (v > 0 ? 1 : -1));
  }
}

TEST_CASE("squares are nonnegative") {
  testing::Rng rng(7003);
  for (int it = 0; it < 500; ++it) {
    ExactScalar x = testing::random_scalar(rng);
    CHECK((x * x).sign() >= 0);
  }
}

TEST_CASE("conjugate norm is rational and vanishes only at zero") {
  testing::Rng rng(7004);
  for (int it = 0; it < 200; ++it) {
    ExactScalar x = testing::random_scalar(rng);
    Rational n = x.conjugate_norm();
    CHECK((n == 0) == x.is_zero());
  }
}

TEST_CASE("inverse of a radical sum") {
  // (1 + sqrt(2))^-1 = sqrt(2) - 1
  ExactScalar x = ExactScalar(1) + ExactScalar::sqrt_of(2);
  CHECK(x.inverse() == ExactScalar::sqrt_of(2) - ExactScalar(1));
  CHECK_THROWS_AS(ExactScalar(0).inverse(), Error);
}

TEST_CASE("rendering") {
  CHECK(ExactScalar(0).to_string() == "0");
  CHECK(ExactScalar(Rational(-7, 2)).to_string() == "-7/2");
  ExactScalar x = ExactScalar(Rational(1, 2)) + ExactScalar::sqrt_of(5, 3);
  CHECK(x.to_string() == "1/2 + 3*sqrt(5)");
}
