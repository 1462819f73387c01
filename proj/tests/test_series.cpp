#include <catch2/catch_amalgamated.hpp>

#include "skewbrace/brace.hpp"
#include "skewbrace/series.hpp"

using namespace skewbrace;

namespace {
TruncatedSeries X(int i, int n = 2, int cap = 3) {
  return TruncatedSeries::variable(i, n, cap);
}
}  // namespace

TEST_CASE("ring arithmetic in non-commuting variables") {
  auto x1 = X(0), x2 = X(1);
  SECTION("variables do not commute") {
    REQUIRE(series_mul(x1, x2) != series_mul(x2, x1));
    REQUIRE(series_mul(x1, x2).coefficient({0, 1}) == 1);
  }
  SECTION("(X1+X2)^2 expands to all four degree-2 words") {
    auto s = series_add(x1, x2);
    auto sq = series_mul(s, s);
    REQUIRE(sq.coefficient({0, 0}) == 1);
    REQUIRE(sq.coefficient({0, 1}) == 1);
    REQUIRE(sq.coefficient({1, 0}) == 1);
    REQUIRE(sq.coefficient({1, 1}) == 1);
    REQUIRE(sq.terms.size() == 4);
  }
  SECTION("multiplying by zero annihilates") {
    REQUIRE(series_mul(x1, TruncatedSeries::zero(2, 3)).is_zero());
  }
  SECTION("associativity and distributivity on random samples") {
    auto sample = series_sampler(2, 4);
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 300; ++i) {
      auto a = sample(rng), b = sample(rng), c = sample(rng);
      REQUIRE(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
      REQUIRE(series_mul(a, series_add(b, c)) ==
              series_add(series_mul(a, b), series_mul(a, c)));
    }
  }
  SECTION("mismatched truncations are rejected") {
    REQUIRE_THROWS_AS(series_add(X(0, 2, 3), X(0, 2, 4)), Error);
    REQUIRE_THROWS_AS(series_mul(X(0, 2, 3), X(0, 3, 3)), Error);
  }
}

TEST_CASE("adjoint circle operation") {
  auto x1 = X(0), x2 = X(1);
  SECTION("X1 o X2 = X1 + X2 + X1X2 and zero is neutral") {
    auto r = adjoint_circ(x1, x2);
    REQUIRE(r == series_add(series_add(x1, x2), series_mul(x1, x2)));
    auto zero = TruncatedSeries::zero(2, 3);
    REQUIRE(adjoint_circ(zero, x1) == x1);
    REQUIRE(adjoint_circ(x1, zero) == x1);
  }
  SECTION("associativity, exact and sampled") {
    REQUIRE(adjoint_circ(adjoint_circ(x1, x2), X(0)) ==
            adjoint_circ(x1, adjoint_circ(x2, X(0))));
    for (int n_vars : {2, 3})
      for (int cap : {2, 3, 4}) {
        auto sample = series_sampler(n_vars, cap);
        Rng rng(kDefaultSeed + cap);
        for (int i = 0; i < 500; ++i) {
          auto a = sample(rng), b = sample(rng), c = sample(rng);
          REQUIRE(adjoint_circ(adjoint_circ(a, b), c) ==
                  adjoint_circ(a, adjoint_circ(b, c)));
        }
      }
  }
  SECTION("constant terms are rejected") {
    TruncatedSeries bad{2, 3, {{{}, 1}}};
    REQUIRE_THROWS_AS(adjoint_circ(bad, x1), Error);
  }
}

TEST_CASE("adjoint inverses") {
  SECTION("inverse of a variable is the alternating geometric series") {
    auto inv = adjoint_inverse(X(0, 2, 3));
    REQUIRE(inv.coefficient({0}) == -1);
    REQUIRE(inv.coefficient({0, 0}) == 1);
    REQUIRE(inv.coefficient({0, 0, 0}) == -1);
    REQUIRE(inv.terms.size() == 3);
  }
  SECTION("inverse of zero is zero") {
    REQUIRE(adjoint_inverse(TruncatedSeries::zero(2, 4)).is_zero());
  }
  SECTION("two-sided inverse law on 200 random elements at cap 4") {
    auto sample = series_sampler(2, 4);
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 200; ++i) {
      auto a = sample(rng);
      REQUIRE(adjoint_circ(a, adjoint_inverse(a)).is_zero());
      REQUIRE(adjoint_circ(adjoint_inverse(a), a).is_zero());
    }
  }
}

TEST_CASE("two-sided brace axioms") {
  for (int cap : {2, 3, 4}) {
    auto v = check_two_sided_brace(2, cap, 500, kDefaultSeed);
    INFO(v.witness);
    REQUIRE(v);
  }
  SECTION("degenerate b = c = 0") {
    auto a = X(0, 2, 3);
    auto zero = TruncatedSeries::zero(2, 3);
    REQUIRE(adjoint_circ(a, series_add(zero, zero)) == adjoint_circ(a, zero));
  }
  SECTION("the defining brace identity holds with addition as the dot") {
    SeriesBrace br{2, 3};
    auto sample = series_sampler(2, 3);
    REQUIRE(check_brace_axiom_sampled(br, sample, 500, kDefaultSeed));
    REQUIRE(check_two_sided_brace(2, 3, 500, kDefaultSeed));
  }
}

TEST_CASE("truncation commutes with the operations") {
  auto sample = series_sampler(2, 5);
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 200; ++i) {
    auto a = sample(rng), b = sample(rng);
    for (int d : {2, 3, 4}) {
      auto ta = series_truncate(a, d), tb = series_truncate(b, d);
      REQUIRE(series_truncate(series_add(a, b), d) == series_add(ta, tb));
      REQUIRE(series_truncate(series_mul(a, b), d) == series_mul(ta, tb));
      REQUIRE(series_truncate(adjoint_circ(a, b), d) == adjoint_circ(ta, tb));
      REQUIRE(series_truncate(adjoint_inverse(a), d) == adjoint_inverse(ta));
    }
  }
}

TEST_CASE("magnus images") {
  const auto x = FreeWord::generator(0), y = FreeWord::generator(1);
  SECTION("generators, identity, inverse law") {
    REQUIRE(magnus_image(x, 2, 3) == X(0));
    REQUIRE(magnus_image(FreeWord::identity(), 2, 3).is_zero());
    REQUIRE(magnus_image(word_mul(x, word_inv(x)), 2, 3).is_zero());
  }
  SECTION("commutator image at cap 2 sees the non-commutativity") {
    auto img = magnus_image(word_commutator(x, y), 2, 2);
    REQUIRE(img.coefficient({0, 1}) == 1);
    REQUIRE(img.coefficient({1, 0}) == -1);
    REQUIRE_FALSE(img.is_zero());
  }
  SECTION("multiplicative on 1000 random word pairs") {
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 1000; ++i) {
      auto u = random_word(rng, 2, 4);
      auto v = random_word(rng, 2, 4);
      REQUIRE(magnus_image(word_mul(u, v), 2, 4) ==
              adjoint_circ(magnus_image(u, 2, 4), magnus_image(v, 2, 4)));
    }
  }
}

TEST_CASE("free subgroup witness") {
  SECTION("short words at cap 2") {
    auto v = free_subgroup_witness(2, 2);
    INFO(v.witness);
    REQUIRE(v);
  }
  SECTION("xy and yx separate") {
    REQUIRE(magnus_image(word_mul(FreeWord::generator(0), FreeWord::generator(1)), 2, 2) !=
            magnus_image(word_mul(FreeWord::generator(1), FreeWord::generator(0)), 2, 2));
  }
  SECTION("all 161 reduced words of length <= 4 separate at cap 4") {
    REQUIRE(all_reduced_words(2, 4).size() == 161);
    auto v = free_subgroup_witness(4, 4);
    INFO(v.witness);
    REQUIRE(v);
  }
  SECTION("cap below the length is refused") {
    REQUIRE_THROWS_AS(free_subgroup_witness(2, 3), Error);
  }
}

TEST_CASE("the adjoint brace is not symmetric") {
  // Witness at cap 3: a = -2 X1, b = 2 X1 + 3 X2^3 gives
  // b-bar o (a + b) o a-bar = 4 X1^2, which does not annihilate the ideal.
  SeriesBrace br{2, 3};
  auto a = series_neg(series_add(X(0), X(0)));
  TruncatedSeries b = TruncatedSeries::zero(2, 3);
  detail::series_accumulate(b, {0}, 2);
  detail::series_accumulate(b, {1, 1, 1}, 3);
  auto t = br.circ(br.circ(br.circ_inverse(b), series_add(a, b)), br.circ_inverse(a));
  TruncatedSeries expect = TruncatedSeries::zero(2, 3);
  detail::series_accumulate(expect, {0, 0}, 4);
  REQUIRE(t == expect);
  REQUIRE_FALSE(br.kernel_contains(t));
  auto v = is_symmetric_sampled(br, series_sampler(2, 3), 2000, kDefaultSeed,
                                [&](const TruncatedSeries& s) { return br.kernel_contains(s); });
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.witness.find("routes disagree") == std::string::npos);
}
