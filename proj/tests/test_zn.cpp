#include <catch2/catch_amalgamated.hpp>

#include "skewbrace/zn.hpp"

using namespace skewbrace;

namespace {

IntMatrix case1(long long p) {
  return IntMatrix::from_rows({{1 + p, -p}, {p, 1 - p}});
}

}  // namespace

TEST_CASE("log_vector sums coordinates") {
  REQUIRE(log_vector({1, -1, 0}) == 0);
  REQUIRE(log_vector({2, 3}) == 5);
}

TEST_CASE("matrix powers of the basic family") {
  // [[1+p,-p],[p,1-p]]^k = [[1+kp,-kp],[kp,1-kp]]
  REQUIRE(matrix_power(case1(1), 3) == IntMatrix::from_rows({{4, -3}, {3, -2}}));
  REQUIRE(matrix_power(case1(2), 0) == IntMatrix::identity(2));
  for (long long p = -4; p <= 4; ++p)
    for (long long k = -4; k <= 4; ++k)
      REQUIRE(matrix_power(case1(p), k) == case1(p * k));
}

TEST_CASE("power is a homomorphism in the exponent") {
  for (long long p = -3; p <= 3; ++p)
    for (long long j = -4; j <= 4; ++j)
      for (long long k = -4; k <= 4; ++k)
        REQUIRE(matrix_power(case1(p), j + k) ==
                mat_mul(matrix_power(case1(p), j), matrix_power(case1(p), k)));
}

TEST_CASE("order-two family member squares to the identity") {
  auto m = IntMatrix::from_rows({{1, 0}, {2, -1}});
  REQUIRE(matrix_power(m, 2) == IntMatrix::identity(2));
}

TEST_CASE("row action matches basis images") {
  // phi(x1) = row 1, phi(x2) = row 2.
  auto m = IntMatrix::from_rows({{1, 0}, {2, -1}});
  REQUIRE(matrix_apply(m, {1, 0}) == ZnVector{1, 0});
  REQUIRE(matrix_apply(m, {0, 1}) == ZnVector{2, -1});
  REQUIRE(matrix_apply(m, {3, -2}) == ZnVector{Int(3) - 4, Int(2)});
}

TEST_CASE("unimodular inverse is exact") {
  auto m = IntMatrix::from_rows({{2, -1}, {1, 0}});
  REQUIRE(mat_mul(m, mat_inverse(m)) == IntMatrix::identity(2));
  REQUIRE(mat_mul(mat_inverse(m), m) == IntMatrix::identity(2));
  auto big = IntMatrix::from_rows({{1, 2, 0}, {0, 1, 3}, {0, 0, 1}});
  REQUIRE(mat_mul(big, mat_inverse(big)) == IntMatrix::identity(3));
  REQUIRE_THROWS_AS(mat_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), Error);
  REQUIRE_THROWS_AS(matrix_power(IntMatrix::from_rows({{2, 0}, {0, 1}}), -1), Error);
}

TEST_CASE("negative powers act as exact inverses") {
  auto m = case1(2);
  auto v = ZnVector{5, -3};
  REQUIRE(matrix_apply(matrix_power(m, -3), matrix_apply(matrix_power(m, 3), v)) == v);
}

TEST_CASE("large exponents stay exact") {
  // Entries grow linearly with k in this family; spot-check a big power.
  auto m = case1(3);
  Int k = Int("1000000000000");
  auto mk = matrix_power(m, k);
  REQUIRE(mk.at(0, 0) == 1 + 3 * k);
  REQUIRE(mk.at(1, 0) == 3 * k);
}
