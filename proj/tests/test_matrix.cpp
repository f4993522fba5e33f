#include <doctest/doctest.h>

#include "ihara/matrix.hpp"
#include "ihara/numbers.hpp"

using namespace ihara;

TEST_CASE("matrix arithmetic basics") {
  Matrix<Int> a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2;
  a(1, 0) = 3; a(1, 1) = 4;
  Matrix<Int> b(2, 2);
  b(0, 0) = 0; b(0, 1) = 1;
  b(1, 0) = 1; b(1, 1) = 0;

  const Matrix<Int> sum = a + b;
  CHECK(sum(0, 1) == 3);
  const Matrix<Int> prod = a * b;
  CHECK(prod(0, 0) == 2);
  CHECK(prod(0, 1) == 1);
  CHECK(prod(1, 0) == 4);
  CHECK(prod(1, 1) == 3);

  CHECK(a.trace() == 5);
  CHECK(a.transposed()(0, 1) == 3);
  CHECK(Matrix<Int>::identity(3).trace() == 3);
  CHECK(max_abs_entry(a) == 4);
  CHECK(b.is_symmetric());
  CHECK(!a.is_symmetric());
  CHECK(!b.is_diagonal());
}

TEST_CASE("matrix dimension mismatches are rejected") {
  Matrix<Int> a(2, 3);
  Matrix<Int> b(2, 2);
  CHECK_THROWS(a + b);
  CHECK_THROWS(a * Matrix<Int>(2, 2));
}

TEST_CASE("exact rational inverse") {
  Matrix<Rational> a(3, 3);
  a(0, 0) = 2; a(0, 1) = 1; a(0, 2) = 0;
  a(1, 0) = 1; a(1, 1) = 3; a(1, 2) = 1;
  a(2, 0) = 0; a(2, 1) = 1; a(2, 2) = 2;
  const Matrix<Rational> inv = inverse(a);
  CHECK(a * inv == Matrix<Rational>::identity(3));
  CHECK(inv * a == Matrix<Rational>::identity(3));

  Matrix<Rational> singular(2, 2);
  singular(0, 0) = 1; singular(0, 1) = 2;
  singular(1, 0) = 2; singular(1, 1) = 4;
  CHECK_THROWS(inverse(singular));
}

TEST_CASE("integer to rational and double conversions") {
  Matrix<Int> a(1, 2);
  a(0, 0) = -7; a(0, 1) = 9;
  const Matrix<Rational> r = to_rational(a);
  CHECK(r(0, 0) == Rational(-7));
  const Matrix<double> d = to_double(a);
  CHECK(d(0, 1) == doctest::Approx(9.0));
  CHECK(frobenius_norm(to_double(Matrix<Int>::identity(4))) == doctest::Approx(2.0));
}
