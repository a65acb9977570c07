#include <random>

#include "doctest.h"
#include "strateuler/errors.hpp"
#include "strateuler/integer_matrix.hpp"
#include "support.hpp"

using namespace strateuler;

TEST_CASE("unitriangular inverse") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(support::uniform(rng, 1, 10));
    const auto m = support::random_unitriangular(rng, n);
    const auto c = invert_upper_unitriangular(m);
    CHECK(is_upper_unitriangular(c));
    CHECK(m * c == IntMatrix::identity(n));
    CHECK(c * m == IntMatrix::identity(n));
    CHECK(determinant(c) == 1);
  }
}

TEST_CASE("rejects non-unitriangular input") {
  IntMatrix m = IntMatrix::identity(3);
  m(1, 1) = 2;
  CHECK_THROWS_AS(invert_upper_unitriangular(m), NotUnitriangular);
  IntMatrix lower = IntMatrix::identity(2);
  lower(1, 0) = 1;
  CHECK_THROWS_AS(invert_upper_unitriangular(lower), NotUnitriangular);
}

TEST_CASE("determinant") {
  IntMatrix m(2, 2);
  m(0, 0) = 3;
  m(0, 1) = 8;
  m(1, 0) = 4;
  m(1, 1) = 6;
  CHECK(determinant(m) == -14);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
}

TEST_CASE("overflow is detected") {
  CHECK_THROWS_AS(checked_mul(Int{1} << 40, Int{1} << 40), IntegerOverflow);
  CHECK_THROWS_AS(checked_add(INT64_MAX, Int{1}), IntegerOverflow);
  CHECK(sign_power(3) == -1);
  CHECK(sign_power(0) == 1);
}
