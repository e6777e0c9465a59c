#include <random>

#include "doctest.h"
#include "mink3/scalar.hpp"

using mink3::BigRat;
using mink3::Scalar;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar(BigRat(n, d)); }
Scalar rt3(long long an, long long ad, long long bn, long long bd) {
  return Scalar(BigRat(an, ad), BigRat(bn, bd), 3);
}

std::mt19937_64 rng(20240811);

Scalar random_scalar(bool quadratic) {
  std::uniform_int_distribution<int> num(-64, 64);
  std::uniform_int_distribution<int> den(1, 64);
  BigRat a(num(rng), den(rng));
  if (!quadratic) return Scalar(a);
  BigRat b(num(rng), den(rng));
  return Scalar(a, b, 3);
}

}  // namespace

TEST_CASE("rational arithmetic in canonical form") {
  CHECK(q(2, 3) + q(1, 6) == q(5, 6));
  CHECK((q(2, 4)).str() == "1/2");
  CHECK((q(-6, 4)).str() == "-3/2");
  CHECK(q(1) / q(3) == q(1, 3));
  CHECK_THROWS_AS(q(1) / q(0), mink3::InvalidInput);
}

TEST_CASE("quadratic arithmetic closes in Q(sqrt 3)") {
  const Scalar s3 = Scalar::sqrt_of(3);
  // (1 + sqrt3)(1 - sqrt3) = -2
  CHECK((q(1) + s3) * (q(1) - s3) == q(-2));
  // 1 / (1 + sqrt3) = -1/2 + (1/2) sqrt3
  CHECK(q(1) / (q(1) + s3) == rt3(-1, 2, 1, 2));
  // sqrt3 * sqrt3 collapses to the rational 3
  CHECK((s3 * s3).is_rational());
  CHECK(s3 * s3 == q(3));
}

TEST_CASE("field mixing is rejected, Q embeds everywhere") {
  const Scalar s3 = Scalar::sqrt_of(3);
  const Scalar s5 = Scalar::sqrt_of(5);
  CHECK_THROWS_AS(s3 + s5, mink3::FieldMismatch);
  CHECK((q(2) + s3).field() == 3);
  CHECK_THROWS_AS(Scalar(BigRat(0), BigRat(1), 12), mink3::InvalidInput);  // 12 not squarefree
}

TEST_CASE("exact sign and total order") {
  const Scalar s3 = Scalar::sqrt_of(3);
  CHECK((q(1) - s3).sign() == -1);
  CHECK((q(7, 4) - s3).sign() == 1);   // 49/16 > 3
  CHECK(Scalar(0).sign() == 0);
  CHECK(Scalar::cmp(q(7, 4), s3) > 0);
  CHECK(s3 > q(1));
  CHECK(s3 < q(2));
}

TEST_CASE("field axioms on random triples") {
  for (int iter = 0; iter < 200; ++iter) {
    const bool quad = iter % 2 == 0;
    const Scalar a = random_scalar(quad), b = random_scalar(quad), c = random_scalar(quad);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Scalar(0));
    if (!a.is_zero()) CHECK(a / a == Scalar(1));
    CHECK((a * b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("cmp agrees with rational order on rationals") {
  for (int iter = 0; iter < 200; ++iter) {
    const Scalar a = random_scalar(false), b = random_scalar(false);
    const int by_rat = a.rat_part() < b.rat_part() ? -1 : (a.rat_part() == b.rat_part() ? 0 : 1);
    CHECK(Scalar::cmp(a, b) == by_rat);
  }
}

TEST_CASE("string round trip") {
  const Scalar vals[] = {q(0), q(5), q(-7, 3), rt3(0, 1, 1, 1), rt3(1, 2, -1, 3), rt3(-2, 1, 5, 7)};
  for (const Scalar& v : vals) CHECK(Scalar::parse(v.str()) == v);
  CHECK(Scalar::parse("sqrt(3)") == Scalar::sqrt_of(3));
  CHECK(Scalar::parse("-sqrt(3)") == -Scalar::sqrt_of(3));
  CHECK(Scalar::parse("2+sqrt(3)") == q(2) + Scalar::sqrt_of(3));
  CHECK(Scalar::parse("1/2-1/2*sqrt(3)") == rt3(1, 2, -1, 2));
  CHECK_THROWS_AS(Scalar::parse("1//2"), mink3::ParseError);
  CHECK_THROWS_AS(Scalar::parse("1+2+3"), mink3::ParseError);
  CHECK_THROWS_AS(Scalar::parse("sqrt(8)"), mink3::ParseError);
}
