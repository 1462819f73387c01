#include <catch2/catch_amalgamated.hpp>

#include "skewbrace/free_word.hpp"

using namespace skewbrace;

namespace {
const FreeWord x = FreeWord::generator(0);
const FreeWord y = FreeWord::generator(1);
}  // namespace

TEST_CASE("cancellation across the seam") {
  // (x y) (y^-1 x) = x^2
  auto w = word_mul(word_mul(x, y), word_mul(word_inv(y), x));
  REQUIRE(w == FreeWord::generator(0, 2));
}

TEST_CASE("two-sided inverses") {
  auto u = word_from_string("x1^2*x2^-1*x1^3");
  REQUIRE(word_mul(u, word_inv(u)).is_identity());
  REQUIRE(word_mul(word_inv(u), u).is_identity());
}

TEST_CASE("manual reduction (x y^-1)(y x) = x^2") {
  auto w = word_mul(word_mul(x, word_inv(y)), word_mul(y, x));
  REQUIRE(w == FreeWord::generator(0, 2));
}

TEST_CASE("word powers reduce correctly") {
  auto u = word_mul(x, y);  // xy
  REQUIRE(word_pow(u, 0).is_identity());
  REQUIRE(word_pow(u, 2) == word_from_string("x1*x2*x1*x2"));
  REQUIRE(word_pow(u, -1) == word_from_string("x2^-1*x1^-1"));
  // (x y x^-1)^3 collapses to x y^3 x^-1
  auto c = word_mul(word_mul(x, y), word_inv(x));
  REQUIRE(word_pow(c, 3) == word_from_string("x1*x2^3*x1^-1"));
}

TEST_CASE("endomorphism substitution") {
  GenImages swap = {y, x};
  REQUIRE(apply_endomorphism(word_mul(x, word_inv(y)), swap) ==
          word_mul(y, word_inv(x)));

  GenImages invert = {word_inv(x), word_inv(y)};
  REQUIRE(apply_endomorphism(word_mul(x, y), invert) ==
          word_mul(word_inv(x), word_inv(y)));

  // inner automorphism by a: b -> a^-1 b a
  auto a = word_mul(x, y);
  GenImages inner = {word_conjugate(x, a), word_conjugate(y, a)};
  REQUIRE(apply_endomorphism(y, inner) == word_conjugate(y, a));

  REQUIRE_THROWS_AS(apply_endomorphism(FreeWord::generator(5), swap), Error);
}

TEST_CASE("substitution is multiplicative on random pairs") {
  GenImages theta = {word_mul(x, y), word_inv(y)};  // an endomorphism of F2
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 1000; ++i) {
    auto u = random_word(rng, 2, 8);
    auto v = random_word(rng, 2, 8);
    REQUIRE(apply_endomorphism(word_mul(u, v), theta) ==
            word_mul(apply_endomorphism(u, theta), apply_endomorphism(v, theta)));
  }
}

TEST_CASE("logarithm is additive and kills commutators") {
  REQUIRE(word_log(word_commutator(x, y)) == 0);
  REQUIRE(word_log(word_from_string("x1^2*x2^-1")) == 1);
  Rng rng(kDefaultSeed + 1);
  for (int i = 0; i < 200; ++i) {
    auto u = random_word(rng, 3, 6);
    auto v = random_word(rng, 3, 6);
    REQUIRE(word_log(word_mul(u, v)) == word_log(u) + word_log(v));
    REQUIRE(word_log(word_inv(u)) == -word_log(u));
  }
}

TEST_CASE("string round trip") {
  for (const char* s : {"1", "x1", "x2^-1", "x1^2*x2^-1", "x3*x1^-4*x3^2"}) {
    auto w = word_from_string(s);
    REQUIRE(word_to_string(w) == s);
  }
  REQUIRE_THROWS_AS(word_from_string("x0"), Error);
  REQUIRE_THROWS_AS(word_from_string("y1"), Error);
}

TEST_CASE("random words are reduced") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    auto w = random_word(rng, 2, 6);
    for (std::size_t k = 0; k < w.syl.size(); ++k) {
      REQUIRE(w.syl[k].exp != 0);
      if (k) REQUIRE(w.syl[k].gen != w.syl[k - 1].gen);
    }
  }
}
